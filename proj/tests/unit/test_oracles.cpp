// Cross-checks against independent implementations: Boost TOMS 748 on the
// raw determining equations, adaptive Gauss-Kronrod for boundary integrals,
// and values frozen from tests/oracles/mpmath_oracle.py (40 digits).

#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <numbers>

#include "steklov/boundary.hpp"
#include "steklov/mode_basis.hpp"

using namespace steklov;

namespace {

constexpr double kPi = std::numbers::pi;

double toms748(const std::function<double(double)>& f, double lo, double hi) {
  boost::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (a + b);
}

double gk(const std::function<double(double)>& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-14);
}

// Integral of f^2 over the boundary of (-1,1) x (-alpha,alpha).
double boundary_square_integral(const std::function<double(double, double)>& f, double alpha) {
  const auto sq = [&](double x, double y) { return f(x, y) * f(x, y); };
  return gk([&](double t) { return sq(1, t) + sq(-1, t); }, -alpha, alpha) +
         gk([&](double t) { return sq(t, alpha) + sq(t, -alpha); }, -1, 1);
}

struct Frozen {
  double nu;
  double delta;
  double center;
  double c;
};

// mpmath, 40 digits.
constexpr Frozen kSquare[] = {
    {2.365020372431352, 2.3236377534317227, 0.36925720669337599, 0.017043860586874324},
    {5.4978039190008355, 5.4976194683688258, 0.016382475084765714, 3.3548186237871175e-5},
    {8.6393798286997407, 8.63937928739407, 0.00070798650142552374, 6.2655610775094141e-8},
    {11.780972451020228, 11.780972449641786, 3.0594873674497918e-5, 1.1700578689481072e-10},
    {14.922565104551627, 14.922565104548367, 1.3221243704918014e-6, 2.1850160638104275e-13},
    {18.064157758141311, 18.064157758141304, 5.7134174480992734e-8, 4.0803923670306517e-16},
};

}  // namespace

TEST(Oracle, SquareClassOneAgainstMpmath) {
  for (int j = 1; j <= 6; ++j) {
    const Frozen& f = kSquare[j - 1];
    const auto m = resolve(ModeId::separated(SymmetryClass::I, Family::XDominant, j), 1.0);
    EXPECT_NEAR(m.nu, f.nu, 2e-15 * f.nu) << j;
    EXPECT_NEAR(m.delta, f.delta, 4e-15 * f.delta) << j;
    EXPECT_NEAR(evaluate(m, 0, 0), f.center, 1e-13 * f.center) << j;
    EXPECT_NEAR(1.0 / normalization_integral(SymmetryClass::I, Family::XDominant, m.nu, 1.0), f.c,
                1e-13 * f.c)
        << j;
  }
}

TEST(Oracle, CothAndTanhFormsAgainstMpmath) {
  const auto iii = resolve(ModeId::separated(SymmetryClass::III, Family::XDominant, 1), 1.0);
  EXPECT_NEAR(iii.nu, 0.93755203435598058, 1e-15);
  const auto iv = resolve(ModeId::separated(SymmetryClass::IV, Family::XDominant, 1), 1.0);
  EXPECT_NEAR(iv.nu, 2.3470455664870873, 1e-14);
  EXPECT_NEAR(iv.delta, 2.390389205105817, 1e-14);
  const auto ii = resolve(ModeId::separated(SymmetryClass::II, Family::YDominant, 1), 1.0);
  EXPECT_NEAR(ii.nu, 3.9266023120479188, 1e-14);
  EXPECT_NEAR(ii.delta, 3.9296545067801838, 1e-14);
}

TEST(Oracle, RectangleRootsAgainstToms748) {
  // Raw equations, bracketed only by the sign of the residual on a sampled
  // grid between consecutive tangent poles.
  for (double alpha : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const auto gx = [alpha](double v) { return std::tan(v * alpha) + std::tanh(v); };
    const auto gy = [alpha](double v) { return std::tan(v) + std::tanh(v * alpha); };
    for (int j = 1; j <= 10; ++j) {
      const double x_ref = toms748(gx, ((j - 0.5) * kPi + 1e-9) / alpha, j * kPi / alpha);
      const double y_ref = toms748(gy, (j - 0.5) * kPi + 1e-9, j * kPi);
      EXPECT_NEAR(solve_nu({SymmetryClass::I, Family::XDominant, alpha}, j), x_ref,
                  4e-15 * x_ref);
      EXPECT_NEAR(solve_nu({SymmetryClass::I, Family::YDominant, alpha}, j), y_ref,
                  4e-15 * y_ref);
    }
  }
  EXPECT_NEAR(solve_nu({SymmetryClass::I, Family::XDominant, 0.5}, 1), 4.7125503273453953, 1e-14);
  EXPECT_NEAR(solve_nu({SymmetryClass::I, Family::YDominant, 0.5}, 1), 2.4428863005195862, 1e-14);
}

TEST(Oracle, ClassThreeNormalizationAgainstMpmath) {
  // cosh(nu x) sin(nu y) at nu = 3.7, alpha = 1/2.
  EXPECT_NEAR(normalization_integral(SymmetryClass::III, Family::XDominant, 3.7, 0.5),
              674.27175361536897, 1e-10 * 674.27);
}

TEST(Oracle, NormalizationAgainstGaussKronrod) {
  const std::function<double(double)> hyp[] = {[](double v) { return std::cosh(v); },
                                               [](double v) { return std::sinh(v); }};
  const std::function<double(double)> trig[] = {[](double v) { return std::cos(v); },
                                                [](double v) { return std::sin(v); }};
  const SymmetryClass classes[] = {SymmetryClass::I, SymmetryClass::II, SymmetryClass::III,
                                   SymmetryClass::IV};
  for (double alpha : {0.2, 0.5, 1.0}) {
    for (SymmetryClass c : classes) {
      const bool even_x = c == SymmetryClass::I || c == SymmetryClass::III;
      const bool even_y = c == SymmetryClass::I || c == SymmetryClass::IV;
      for (double nu : {0.8, 4.1, 11.3}) {
        const auto fx = [&](double x, double y) {
          return hyp[even_x ? 0 : 1](nu * x) * trig[even_y ? 0 : 1](nu * y);
        };
        const auto fy = [&](double x, double y) {
          return trig[even_x ? 0 : 1](nu * x) * hyp[even_y ? 0 : 1](nu * y);
        };
        const double ix = boundary_square_integral(fx, alpha);
        const double iy = boundary_square_integral(fy, alpha);
        EXPECT_NEAR(normalization_integral(c, Family::XDominant, nu, alpha) / ix, 1.0, 1e-10)
            << to_string(c) << " X alpha=" << alpha << " nu=" << nu;
        EXPECT_NEAR(normalization_integral(c, Family::YDominant, nu, alpha) / iy, 1.0, 1e-10)
            << to_string(c) << " Y alpha=" << alpha << " nu=" << nu;
      }
    }
  }
}

TEST(Oracle, PrintedClassOneFormOnlyAgreesOnTheSquare) {
  // The corrected second bracket carries sinh(2 nu); reading it as
  // sinh(2 nu alpha) is indistinguishable at alpha = 1 only.
  const auto literal = [](double a, double nu) {
    return 2 * a * std::pow(std::cosh(nu), 2) * (1 + std::sin(2 * nu * a) / (2 * nu * a)) +
           std::pow(std::cos(nu * a), 2) * (2 + std::sinh(2 * nu * a) / nu);
  };
  const double nu1 = solve_nu({SymmetryClass::I, Family::XDominant, 0.5}, 1);
  const double exact = normalization_integral(SymmetryClass::I, Family::XDominant, nu1, 0.5);
  EXPECT_NEAR(exact, 3100.4119721627286, 1e-10 * 3100.4);
  EXPECT_NEAR(literal(0.5, nu1), 2448.6257042538141, 1e-9 * 2448.6);
  EXPECT_GT(std::abs(literal(0.5, nu1) / exact - 1.0), 0.1);
  const double nu_sq = kSquare[0].nu;
  EXPECT_NEAR(literal(1.0, nu_sq) /
                  normalization_integral(SymmetryClass::I, Family::XDominant, nu_sq, 1.0),
              1.0, 1e-14);
}

TEST(Oracle, QuadratureCoefficientAgainstMpmath) {
  const auto m = resolve(ModeId::separated(SymmetryClass::I, Family::XDominant, 1), 1.0);
  const auto h = BoundaryFunction::analytic("x2-y2", [](double x, double y) { return x * x - y * y; });
  EXPECT_NEAR(coefficient(h, m), 0.50567935251392007, 1e-14);
}
