#pragma once

// Truncated Steklov expansions of boundary data, interior evaluation,
// certified central values and Robin/Neumann solves.

#include <string_view>
#include <vector>

#include "steklov/boundary.hpp"
#include "steklov/mode_basis.hpp"

namespace steklov {

enum class ProblemKind { Dirichlet, Robin, Neumann };

std::string_view to_string(ProblemKind k) noexcept;

struct ExpansionTerm {
  SteklovMode mode;
  double coefficient = 0.0;
};

struct SteklovExpansion {
  double alpha = 1.0;
  ProblemKind kind = ProblemKind::Dirichlet;
  /// Robin weight; 1 for Dirichlet and 0 for Neumann.
  double t = 1.0;
  double mean_term = 0.0;
  /// Ascending delta order.
  std::vector<ExpansionTerm> terms;
  /// Mean L2 boundary norm of the data (h or eta).
  double data_norm = 0.0;
  QuadratureSpec quadrature;

  int truncation() const noexcept { return static_cast<int>(terms.size()); }
};

struct ExpansionOptions {
  int quad_order = 32;
  double root_tol = kDefaultRootTol;
  ClassFilter classes = ClassFilter::all();
};

/// First M non-constant modes in global delta order.
SteklovExpansion expand_dirichlet(const BoundaryFunction& h, double alpha,
                                  int M, const ExpansionOptions& opts = {});

/// Dirichlet expansion against an explicit mode list (sorted on entry).
SteklovExpansion expand_on_modes(const BoundaryFunction& h, double alpha,
                                 std::vector<SteklovMode> modes,
                                 int quad_order = 32);

/// Class I modes j = 1..m of both families: the m-th central-value
/// approximation.
SteklovExpansion expand_central(const BoundaryFunction& h, double alpha,
                                int m, const ExpansionOptions& opts = {});

/// mean_term + sum of coefficient * mode value. DomainError outside the
/// closed rectangle.
double evaluate_interior(const SteklovExpansion& e, double x, double y);

struct CentralValueResult {
  double value = 0.0;
  /// Number of non-constant terms.
  int M = 0;
  /// Class I indices 1..m are present in both families.
  int m = 0;
  int m_x = 0;
  int m_y = 0;
  /// Certified radius for |h(0,0) - value|; +inf when no bound applies.
  double bound = 0.0;
  double data_norm = 0.0;
};

/// Center value from the class I terms, with an error certificate.
///
/// Square: 0.41 exp(-nu_m) |h| for m >= 3, otherwise the summed tail
/// 9.06 exp(-nu_{m+1}) / (1 - exp(-pi)) |h|. Rectangles: the tail of the
/// coefficient bounds summed over the excluded indices of each family. For
/// Robin and Neumann data the tail is further divided by the smallest
/// (1-t) delta + t among excluded modes.
CentralValueResult central_value(const SteklovExpansion& e,
                                 double root_tol = kDefaultRootTol);

/// Solves (1-t) D_n h + t h = eta, 0 < t <= 1. At t = 1 this is the
/// Dirichlet expansion of eta and is labelled as such.
SteklovExpansion solve_robin(const BoundaryFunction& eta, double alpha,
                             double t, int M,
                             const ExpansionOptions& opts = {});

/// Mean-zero solution of D_n h = eta. IncompatibleDataError when
/// |mean(eta)| > 1e-9 (1 + |eta|).
SteklovExpansion solve_neumann(const BoundaryFunction& eta, double alpha,
                               int M, const ExpansionOptions& opts = {});

/// Converts a Dirichlet expansion of eta in place of data into the Robin
/// or Neumann solution on the same modes.
SteklovExpansion apply_robin(SteklovExpansion dirichlet, double t);
SteklovExpansion apply_neumann(SteklovExpansion dirichlet);

struct EnergyTail {
  /// sum of (1 + delta) c^2, including the mean term.
  double total = 0.0;
  /// Share of the total carried by the last fifth of the terms.
  double tail_ratio = 0.0;
};

EnergyTail energy_tail(const SteklovExpansion& e);

}  // namespace steklov
