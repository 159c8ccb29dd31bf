#include "steklov/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "steklov/errors.hpp"
#include "steklov/parallel.hpp"

namespace steklov {

std::string_view to_string(ProblemKind k) noexcept {
  switch (k) {
    case ProblemKind::Dirichlet:
      return "dirichlet";
    case ProblemKind::Robin:
      return "robin";
    case ProblemKind::Neumann:
      return "neumann";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureSpec spec_for(const std::vector<SteklovMode>& modes, int order) {
  double nu_max = 0.0;
  for (const SteklovMode& m : modes) nu_max = std::max(nu_max, m.nu);
  return QuadratureSpec::for_frequency(nu_max, order);
}

// Projects data onto the given modes; coefficients are <h, s~_j>.
SteklovExpansion project(const BoundaryFunction& h, double alpha,
                         std::vector<SteklovMode> modes, int order) {
  const Rectangle rect(alpha);
  std::sort(modes.begin(), modes.end(), spectral_less);
  SteklovExpansion e;
  e.alpha = alpha;
  e.quadrature = spec_for(modes, order);
  const BoundaryRule rule(rect, e.quadrature);
  e.mean_term = mean(h, rule);
  e.data_norm = mean_l2_norm(h, rule);
  e.terms.resize(modes.size());
  parallel_for(modes.size(), [&](std::size_t i) {
    e.terms[i] = {modes[i], coefficient(h, modes[i], rule)};
  });
  return e;
}

std::vector<SteklovMode> leading_modes(double alpha, int M,
                                       const ExpansionOptions& opts) {
  if (M < 0) throw DomainError("truncation M must be non-negative");
  return first_modes(Rectangle(alpha), M, opts.root_tol, opts.classes);
}

// Largest k such that class I indices 1..k of the family are present.
int contiguous_class_one(const SteklovExpansion& e, Family f) {
  std::vector<int> idx;
  for (const ExpansionTerm& term : e.terms) {
    const ModeId& id = term.mode.id;
    if (id.kind == ModeKind::Separated && id.symmetry == SymmetryClass::I &&
        id.family == f) {
      idx.push_back(id.index);
    }
  }
  std::sort(idx.begin(), idx.end());
  int k = 0;
  for (int j : idx) {
    if (j == k + 1) {
      k = j;
    } else if (j > k + 1) {
      break;
    }
  }
  return k;
}

double class_one_nu(Family f, int j, double alpha, double tol) {
  return solve_nu({SymmetryClass::I, f, alpha}, j, tol);
}

// Sum over excluded class I modes of |s~(0,0)|, per unit data norm.
double dirichlet_tail(double alpha, int m_x, int m_y, double tol) {
  if (alpha == 1.0) {
    const int m = std::min(m_x, m_y);
    if (m >= 3) return 0.41 * std::exp(-class_one_nu(Family::XDominant, m, 1.0, tol));
    return 9.06 * std::exp(-class_one_nu(Family::XDominant, m + 1, 1.0, tol)) /
           (1.0 - std::exp(-kPi));
  }
  // s~(0,0)^2 = 4(1+alpha) c with c bounded by the rectangle coefficient
  // bounds, and nu_j >= (j - 1/4) pi / a for the class I windows.
  const double k1 = std::sqrt(4.0 * (1.0 + alpha) * 2.56 / alpha);
  const double k2 = std::sqrt(4.0 * (1.0 + alpha) * 2.56);
  const double x_tail = k1 * std::exp(-(m_x + 0.75) * kPi / alpha) /
                        (1.0 - std::exp(-kPi / alpha));
  const double y_tail = k2 * std::exp(-alpha * (m_y + 0.75) * kPi) /
                        (1.0 - std::exp(-alpha * kPi));
  return x_tail + y_tail;
}

double robin_weight(double delta, double t) { return (1.0 - t) * delta + t; }

}  // namespace

SteklovExpansion expand_on_modes(const BoundaryFunction& h, double alpha,
                                 std::vector<SteklovMode> modes,
                                 int quad_order) {
  for (const SteklovMode& m : modes) {
    if (m.alpha != alpha) {
      throw DomainError("mode resolved on a different rectangle");
    }
  }
  return project(h, alpha, std::move(modes), quad_order);
}

SteklovExpansion expand_dirichlet(const BoundaryFunction& h, double alpha,
                                  int M, const ExpansionOptions& opts) {
  return project(h, alpha, leading_modes(alpha, M, opts), opts.quad_order);
}

SteklovExpansion expand_central(const BoundaryFunction& h, double alpha,
                                int m, const ExpansionOptions& opts) {
  if (m < 0) throw DomainError("central truncation m must be non-negative");
  return project(h, alpha, central_modes(Rectangle(alpha), m, opts.root_tol),
                 opts.quad_order);
}

double evaluate_interior(const SteklovExpansion& e, double x, double y) {
  if (!Rectangle(e.alpha).contains(x, y)) {
    throw DomainError("evaluation point is outside the rectangle");
  }
  double sum = e.mean_term;
  for (const ExpansionTerm& term : e.terms) {
    sum += term.coefficient * evaluate(term.mode, x, y);
  }
  return sum;
}

CentralValueResult central_value(const SteklovExpansion& e, double root_tol) {
  CentralValueResult r;
  r.M = e.truncation();
  r.value = e.mean_term;
  for (const ExpansionTerm& term : e.terms) {
    const ModeId& id = term.mode.id;
    if (id.kind == ModeKind::Separated && id.symmetry == SymmetryClass::I) {
      r.value += term.coefficient * evaluate(term.mode, 0.0, 0.0);
    }
  }
  r.m_x = contiguous_class_one(e, Family::XDominant);
  r.m_y = contiguous_class_one(e, Family::YDominant);
  r.m = std::min(r.m_x, r.m_y);
  r.data_norm = e.data_norm;
  if (!std::isfinite(e.data_norm)) {
    r.bound = std::numeric_limits<double>::infinity();
    return r;
  }
  double tail = dirichlet_tail(e.alpha, r.m_x, r.m_y, root_tol);
  if (e.kind != ProblemKind::Dirichlet) {
    // (1-t) delta + t increases with delta, so the first excluded mode of
    // each family carries the smallest divisor.
    const auto first_excluded = [&](Family f, int m) {
      return resolve(ModeId::separated(SymmetryClass::I, f, m + 1), e.alpha,
                     root_tol)
          .delta;
    };
    const double w = std::min(robin_weight(first_excluded(Family::XDominant, r.m_x), e.t),
                              robin_weight(first_excluded(Family::YDominant, r.m_y), e.t));
    tail /= w;
  }
  r.bound = tail * e.data_norm;
  return r;
}

SteklovExpansion apply_robin(SteklovExpansion e, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("Robin weight t must lie in (0, 1]");
  }
  if (e.kind != ProblemKind::Dirichlet) {
    throw DomainError("Robin conversion needs a Dirichlet expansion");
  }
  e.kind = t == 1.0 ? ProblemKind::Dirichlet : ProblemKind::Robin;
  e.t = t;
  e.mean_term /= t;
  for (ExpansionTerm& term : e.terms) {
    term.coefficient /= robin_weight(term.mode.delta, t);
  }
  return e;
}

SteklovExpansion apply_neumann(SteklovExpansion e) {
  if (e.kind != ProblemKind::Dirichlet) {
    throw DomainError("Neumann conversion needs a Dirichlet expansion");
  }
  const double tolerance = 1e-9 * (1.0 + e.data_norm);
  if (std::abs(e.mean_term) > tolerance) {
    throw IncompatibleDataError(
        "incompatible data: Neumann data must have zero boundary mean (mean " +
        std::to_string(e.mean_term) + ")");
  }
  e.kind = ProblemKind::Neumann;
  e.t = 0.0;
  e.mean_term = 0.0;
  for (ExpansionTerm& term : e.terms) term.coefficient /= term.mode.delta;
  return e;
}

SteklovExpansion solve_robin(const BoundaryFunction& eta, double alpha,
                             double t, int M, const ExpansionOptions& opts) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("Robin weight t must lie in (0, 1]");
  }
  return apply_robin(expand_dirichlet(eta, alpha, M, opts), t);
}

SteklovExpansion solve_neumann(const BoundaryFunction& eta, double alpha,
                               int M, const ExpansionOptions& opts) {
  return apply_neumann(expand_dirichlet(eta, alpha, M, opts));
}

EnergyTail energy_tail(const SteklovExpansion& e) {
  EnergyTail r;
  r.total = e.mean_term * e.mean_term;
  const std::size_t n = e.terms.size();
  const std::size_t tail_start = n - (n + 4) / 5;
  double tail = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ExpansionTerm& term = e.terms[i];
    const double energy = (1.0 + term.mode.delta) * term.coefficient * term.coefficient;
    r.total += energy;
    if (i >= tail_start) tail += energy;
  }
  r.tail_ratio = r.total > 0.0 ? tail / r.total : 0.0;
  return r;
}

}  // namespace steklov
