#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "steklov/boundary.hpp"
#include "steklov/errors.hpp"
#include "steklov/mode_basis.hpp"

using namespace steklov;

namespace {

constexpr SymmetryClass kClasses[] = {SymmetryClass::I, SymmetryClass::II,
                                      SymmetryClass::III, SymmetryClass::IV};
constexpr Family kFamilies[] = {Family::XDominant, Family::YDominant};

SteklovMode mode(SymmetryClass c, Family f, int j, double alpha = 1.0) {
  return resolve(ModeId::separated(c, f, j), alpha);
}

// Every separated mode j = 1..jmax on the rectangle, plus xy on the square.
std::vector<SteklovMode> sample_modes(double alpha, int jmax) {
  std::vector<SteklovMode> out;
  for (SymmetryClass c : kClasses) {
    for (Family f : kFamilies) {
      for (int j = 1; j <= jmax; ++j) out.push_back(mode(c, f, j, alpha));
    }
  }
  if (alpha == 1.0) out.push_back(resolve(ModeId::xy(), 1.0));
  return out;
}

double max_abs_on_boundary(const SteklovMode& m) {
  const Rectangle rect(m.alpha);
  double best = 0.0;
  for (int k = 0; k < 400; ++k) {
    const auto p = BoundaryPoint::from_arclength(rect, rect.perimeter() * k / 400.0);
    best = std::max(best, std::abs(boundary_trace(m, p)));
  }
  return best;
}

}  // namespace

TEST(Eigenvalue, PublishedValues) {
  EXPECT_NEAR(eigenvalue(SymmetryClass::I, Family::XDominant, 2.36502037, 1.0), 2.32363775,
              1e-8);
  EXPECT_NEAR(eigenvalue(SymmetryClass::I, Family::XDominant, 18.0641578, 1.0), 18.0641578,
              1e-6);
}

TEST(Eigenvalue, HyperbolicFactorDecides) {
  const double nu = 1.7;
  const double a = 0.5;
  EXPECT_DOUBLE_EQ(eigenvalue(SymmetryClass::I, Family::XDominant, nu, a), nu * std::tanh(nu));
  EXPECT_DOUBLE_EQ(eigenvalue(SymmetryClass::III, Family::XDominant, nu, a),
                   nu * std::tanh(nu));
  EXPECT_DOUBLE_EQ(eigenvalue(SymmetryClass::I, Family::YDominant, nu, a),
                   nu * std::tanh(nu * a));
  EXPECT_NEAR(eigenvalue(SymmetryClass::II, Family::XDominant, nu, a), nu / std::tanh(nu),
              1e-14);
  EXPECT_NEAR(eigenvalue(SymmetryClass::III, Family::YDominant, nu, a),
              nu / std::tanh(nu * a), 1e-14);
}

TEST(ModeBasis, ConstantAndXyModes) {
  const SteklovMode c = resolve(ModeId::constant(), 0.3);
  EXPECT_EQ(c.nu, 0.0);
  EXPECT_EQ(c.delta, 0.0);
  EXPECT_EQ(c.scale, 1.0);
  EXPECT_EQ(evaluate(c, 0.2, -0.1), 1.0);

  const SteklovMode xy = resolve(ModeId::xy(), 1.0);
  EXPECT_EQ(xy.delta, 1.0);
  EXPECT_NEAR(xy.norm_sq, 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(xy.scale * xy.scale * xy.norm_sq, 1.0, 1e-15);
  EXPECT_THROW(resolve(ModeId::xy(), 0.5), InvalidModeError);
}

TEST(ModeBasis, InvalidIndex) {
  EXPECT_THROW(resolve(ModeId::separated(SymmetryClass::I, Family::XDominant, 0), 1.0),
               InvalidModeError);
}

TEST(ModeBasis, ScaleInvariant) {
  for (const SteklovMode& m : sample_modes(0.5, 5)) {
    EXPECT_NEAR(m.scale * m.scale * m.norm_sq, 1.0, 1e-14);
    EXPECT_GT(m.delta, 0.0);
  }
}

TEST(ModeBasis, CenterValuesOnSquare) {
  EXPECT_NEAR(evaluate(mode(SymmetryClass::I, Family::XDominant, 1), 0, 0),
              0.36925720669337599, 1e-12);
  EXPECT_NEAR(evaluate(mode(SymmetryClass::I, Family::XDominant, 6), 0, 0),
              5.7134174480992734e-8, 1e-18);
  for (SymmetryClass c : {SymmetryClass::II, SymmetryClass::III, SymmetryClass::IV}) {
    for (Family f : kFamilies) {
      EXPECT_EQ(evaluate(mode(c, f, 2, 0.75), 0.0, 0.0), 0.0);
    }
  }
}

TEST(ModeBasis, CenterSquaredIsEightCoefficient) {
  const SteklovMode m = mode(SymmetryClass::I, Family::XDominant, 1);
  const double c1 = 1.0 / normalization_integral(SymmetryClass::I, Family::XDominant, m.nu, 1.0);
  EXPECT_NEAR(std::pow(evaluate(m, 0, 0), 2), 8.0 * c1, 1e-15);
}

TEST(ModeBasis, TraceAtRightEdgeMidpoint) {
  const SteklovMode m = mode(SymmetryClass::I, Family::XDominant, 1);
  const auto p = BoundaryPoint::on_edge(Rectangle(1.0), Edge::Right, 0.0);
  EXPECT_NEAR(boundary_trace(m, p), m.scale * std::cosh(m.nu), 1e-13);
  EXPECT_NEAR(boundary_trace(m, p), 1.98258, 1e-4);
}

TEST(ModeBasis, EvenSymmetryOfClassOneTrace) {
  const Rectangle rect(0.6);
  const SteklovMode m = mode(SymmetryClass::I, Family::YDominant, 3, 0.6);
  for (double x : {0.1, 0.4, 0.93}) {
    EXPECT_EQ(boundary_trace(m, BoundaryPoint::on_edge(rect, Edge::Top, x)),
              boundary_trace(m, BoundaryPoint::on_edge(rect, Edge::Top, -x)));
  }
}

TEST(ModeBasis, EvaluateRejectsOutsidePoints) {
  const SteklovMode m = mode(SymmetryClass::I, Family::XDominant, 1, 0.5);
  EXPECT_THROW(evaluate(m, 0.0, 0.6), DomainError);
  EXPECT_THROW(evaluate(m, 1.01, 0.0), DomainError);
  EXPECT_NO_THROW(evaluate(m, 1.0, 0.5));
}

TEST(NormalizationIntegral, SquareClassOne) {
  EXPECT_NEAR(normalization_integral(SymmetryClass::I, Family::XDominant, 2.365020372431352, 1.0),
              1.0 / 0.017043860586874324, 1e-9);
  EXPECT_NEAR(
      1.0 / normalization_integral(SymmetryClass::I, Family::XDominant, 5.4978039190008355, 1.0),
      3.3548186237871175e-5, 1e-14);
}

TEST(NormalizationIntegral, ClassThreeAgainstOracle) {
  EXPECT_NEAR(normalization_integral(SymmetryClass::III, Family::XDominant, 3.7, 0.5),
              674.27175361536897, 674.27 * 1e-12);
}

TEST(NormalizationIntegral, ClosedFormsMatchQuadrature) {
  // Every class and family at an off-root nu: the closed forms only
  // integrate squared products and do not need the determining equation.
  for (double alpha : {0.3, 0.8, 1.0}) {
    const Rectangle rect(alpha);
    const QuadratureSpec spec{64, 8};
    for (SymmetryClass c : kClasses) {
      for (Family f : kFamilies) {
        const double nu = 2.9;
        const SteklovMode m = make_mode(ModeId::separated(c, f, 1), alpha, nu);
        const double unnormalized_sq =
            inner_product(BoundaryFunction::trace_of(m), BoundaryFunction::trace_of(m), rect, spec) /
            (m.scale * m.scale) * rect.perimeter();
        EXPECT_NEAR(normalization_integral(c, f, nu, alpha) / unnormalized_sq, 1.0, 1e-12)
            << to_string(c) << to_string(f) << " alpha=" << alpha;
      }
    }
  }
}

TEST(NormalizationIntegral, LogPathBeyondOverflow) {
  EXPECT_THROW(normalization_integral(SymmetryClass::I, Family::XDominant, 400.0, 1.0),
               OverflowError);
  const double log_i =
      log_normalization_integral(SymmetryClass::I, Family::XDominant, 400.0, 1.0);
  EXPECT_TRUE(std::isfinite(log_i));
  // I = 2 cosh^2(nu) [1 + sinc(2 nu)] + cos^2(nu) [2 + sinh(2 nu) / nu] with
  // cosh^2(nu) = e^{2 nu} / 4 and sinh(2 nu) = e^{2 nu} / 2 to double precision.
  const double nu = 400.0;
  const double shifted = 0.5 * (1.0 + std::sin(2 * nu) / (2 * nu)) +
                         std::pow(std::cos(nu), 2) / (2 * nu);
  EXPECT_NEAR(log_i, 2 * nu + std::log(shifted), 1e-12 * 2 * nu);
  EXPECT_NEAR(log_normalization_integral(SymmetryClass::II, Family::YDominant, 5.0, 0.5),
              std::log(normalization_integral(SymmetryClass::II, Family::YDominant, 5.0, 0.5)),
              1e-13);
}

TEST(ModeBasis, HighFrequencyModesStayFinite) {
  for (double alpha : {1.0, 0.5}) {
    const Rectangle rect(alpha);
    for (SymmetryClass c : kClasses) {
      for (Family f : kFamilies) {
        // nu around 700 in both families.
        const int j = f == Family::XDominant ? static_cast<int>(222 * alpha) : 222;
        const SteklovMode m = mode(c, f, j, alpha);
        EXPECT_GT(m.nu, 600.0);
        EXPECT_TRUE(std::isfinite(m.log_norm_sq));
        EXPECT_TRUE(std::isfinite(m.amplitude));
        const double v = evaluate(m, 1.0, 0.3 * alpha);
        EXPECT_TRUE(std::isfinite(v));
        EXPECT_TRUE(std::isfinite(evaluate(m, 0.99, -0.97 * alpha)));
        const BoundaryRule rule(rect, QuadratureSpec::for_frequency(m.nu));
        const auto tr = BoundaryFunction::trace_of(m);
        EXPECT_NEAR(inner_product(tr, tr, rule), 1.0, 1e-9)
            << to_string(c) << to_string(f) << " alpha=" << alpha;
      }
    }
  }
}

TEST(ModeBasis, HarmonicByFiniteDifferences) {
  std::mt19937_64 rng(7);
  for (double alpha : {1.0, 0.5}) {
    std::uniform_real_distribution<double> ux(-0.999, 0.999);
    std::uniform_real_distribution<double> uy(-0.999 * alpha, 0.999 * alpha);
    for (const SteklovMode& m : sample_modes(alpha, 3)) {
      const double peak = max_abs_on_boundary(m);
      const double h = 1e-4;
      for (int k = 0; k < 100; ++k) {
        const double x = ux(rng);
        const double y = uy(rng);
        const double lap = (evaluate(m, x + h, y) + evaluate(m, x - h, y) +
                            evaluate(m, x, y + h) + evaluate(m, x, y - h) -
                            4.0 * evaluate(m, x, y)) /
                           (h * h);
        EXPECT_LT(std::abs(lap), 1e-5 * std::max(1.0, m.nu * m.nu) * peak);
      }
    }
  }
}

TEST(ModeBasis, GradientMatchesFiniteDifferences) {
  for (const SteklovMode& m : sample_modes(0.7, 2)) {
    const double x = 0.31;
    const double y = -0.22;
    const double h = 1e-6;
    const Gradient g = gradient(m, x, y);
    EXPECT_NEAR(g.dx, (evaluate(m, x + h, y) - evaluate(m, x - h, y)) / (2 * h),
                1e-6 * (1 + std::abs(g.dx)));
    EXPECT_NEAR(g.dy, (evaluate(m, x, y + h) - evaluate(m, x, y - h)) / (2 * h),
                1e-6 * (1 + std::abs(g.dy)));
  }
}

TEST(ModeBasis, SteklovPropertyOnEveryEdge) {
  std::mt19937_64 rng(11);
  for (double alpha : {1.0, 0.5, 0.25}) {
    const Rectangle rect(alpha);
    std::uniform_real_distribution<double> us(0.0, rect.perimeter());
    for (const SteklovMode& m : sample_modes(alpha, 4)) {
      const double peak = max_abs_on_boundary(m);
      for (int k = 0; k < 100; ++k) {
        const auto p = BoundaryPoint::from_arclength(rect, us(rng));
        if (p.is_corner()) continue;
        EXPECT_NEAR(normal_derivative(m, p), m.delta * boundary_trace(m, p),
                    1e-9 * (1 + m.delta) * peak);
      }
    }
  }
}

TEST(ModeBasis, NormalDerivativeSpecialCases) {
  const Rectangle sq(1.0);
  const SteklovMode c = resolve(ModeId::constant(), 1.0);
  const SteklovMode xy = resolve(ModeId::xy(), 1.0);
  const auto p = BoundaryPoint::on_edge(sq, Edge::Right, 0.4);
  EXPECT_EQ(normal_derivative(c, p), 0.0);
  EXPECT_NEAR(normal_derivative(xy, p) / boundary_trace(xy, p), 1.0, 1e-15);
  const auto corner = BoundaryPoint::on_edge(sq, Edge::Top, 1.0);
  EXPECT_THROW(normal_derivative(xy, corner), DomainError);
}

TEST(ModeBasis, ScalingLaw) {
  // u(x, y) = s(x / L, y / L) on L G_alpha has D_n u = (delta / L) u.
  const double L = 2.5;
  const double alpha = 0.6;
  for (const SteklovMode& m : sample_modes(alpha, 2)) {
    const auto u = [&](double x, double y) { return evaluate(m, x / L, y / L); };
    const double yb = 0.37 * L * alpha;
    const double h = 1e-5 * L;
    // One-sided second-order difference at x = L.
    const double dn = (3 * u(L, yb) - 4 * u(L - h, yb) + u(L - 2 * h, yb)) / (2 * h);
    EXPECT_NEAR(dn, (m.delta / L) * u(L, yb), 1e-6 * (1 + m.delta) * (1 + std::abs(u(L, yb))));
  }
}

TEST(ModeBasis, OrthonormalAcrossClasses) {
  const Rectangle rect(0.5);
  const auto modes = sample_modes(0.5, 4);
  double nu_max = 0;
  for (const auto& m : modes) nu_max = std::max(nu_max, m.nu);
  const BoundaryRule rule(rect, QuadratureSpec::for_frequency(nu_max));
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (std::size_t k = i; k < modes.size(); ++k) {
      const double ip = inner_product(BoundaryFunction::trace_of(modes[i]),
                                      BoundaryFunction::trace_of(modes[k]), rule);
      EXPECT_NEAR(ip, i == k ? 1.0 : 0.0, 1e-9) << i << "," << k;
    }
  }
}

TEST(ModeEnumeration, FirstModesOrder) {
  const auto modes = first_modes(Rectangle(1.0), 25);
  ASSERT_EQ(modes.size(), 25u);
  EXPECT_NEAR(modes[0].delta, 0.688252742336, 1e-11);
  EXPECT_EQ(modes[0].id, ModeId::separated(SymmetryClass::III, Family::XDominant, 1));
  EXPECT_EQ(modes[1].id, ModeId::separated(SymmetryClass::IV, Family::YDominant, 1));
  EXPECT_EQ(modes[2].id, ModeId::xy());
  for (std::size_t i = 1; i < modes.size(); ++i) {
    EXPECT_TRUE(spectral_less(modes[i - 1], modes[i]));
    EXPECT_LE(modes[i - 1].delta, modes[i].delta);
  }
}

TEST(ModeEnumeration, FilterRestrictsClasses) {
  const auto modes = first_modes(Rectangle(1.0), 6, kDefaultRootTol,
                                 ClassFilter::only(SymmetryClass::I));
  ASSERT_EQ(modes.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(modes[i].id.symmetry, SymmetryClass::I);
    EXPECT_EQ(modes[i].id.index, static_cast<int>(i / 2) + 1);
  }
  const auto no_xy = first_modes(Rectangle(1.0), 4, kDefaultRootTol,
                                 ClassFilter::only(SymmetryClass::III));
  for (const auto& m : no_xy) EXPECT_EQ(m.id.kind, ModeKind::Separated);
}

TEST(ModeEnumeration, CentralModes) {
  const auto modes = central_modes(Rectangle(0.5), 3);
  ASSERT_EQ(modes.size(), 6u);
  int x = 0;
  int y = 0;
  for (const auto& m : modes) {
    EXPECT_EQ(m.id.symmetry, SymmetryClass::I);
    (m.id.family == Family::XDominant ? x : y)++;
  }
  EXPECT_EQ(x, 3);
  EXPECT_EQ(y, 3);
  EXPECT_TRUE(std::is_sorted(modes.begin(), modes.end(), spectral_less));
}
