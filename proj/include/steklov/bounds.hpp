#pragma once

// Explicit coefficient and central-value decay bounds, and reproduction of
// the published reference tables for the square.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steklov/root_solver.hpp"

namespace steklov {

enum class BoundKind {
  SquareCj,           // c_j < 2.56 exp(-2 nu_j)
  SquareCenterEig,    // s~_1j(0,0) < 4.53 exp(-nu_j)
  RectC1jStrong,      // c_1j < (2.56 / alpha) exp(-2 nu_j^(1))
  RectC1jSmallAlpha,  // c_1j < 4 nu_j^(1) exp(-2 alpha nu_j^(1))
  RectC2j,            // c_2j < 2.56 exp(-2 alpha nu_j^(2))
};

std::string_view to_string(BoundKind k) noexcept;

/// One bound instance. Values are also kept as logarithms: for large j the
/// actual coefficient underflows while the comparison stays meaningful.
struct DecayBound {
  BoundKind kind;
  double alpha;
  int j;
  double nu;
  double bound_value;
  double actual_value;
  double log_bound;
  double log_actual;

  bool strict() const noexcept;
};

/// c_j = 1 / I(1, nu_j) and s~_1j(0,0) for j = 1..j_max.
std::vector<DecayBound> check_square_bounds(int j_max,
                                            double tol = kDefaultRootTol);

/// Both bounds on c_1j and the bound on c_2j, 0 < alpha < 1.
std::vector<DecayBound> check_rect_bounds(double alpha, int j_max,
                                          double tol = kDefaultRootTol);

/// alpha nu2_j < nu2_j < alpha nu1_j < nu1_j.
struct OrderingRecord {
  double alpha;
  int j;
  double alpha_nu2;
  double nu2;
  double alpha_nu1;
  double nu1;

  bool holds() const noexcept {
    return alpha_nu2 < nu2 && nu2 < alpha_nu1 && alpha_nu1 < nu1;
  }
};

std::vector<OrderingRecord> check_rect_ordering(double alpha, int j_max,
                                                double tol = kDefaultRootTol);

/// Square central-value error coefficient for m class I indices per family:
/// 0.41 exp(-nu_m).
double central_error_coefficient(int m, double tol = kDefaultRootTol);
/// Summed-tail form 9.06 exp(-nu_{m+1}) / (1 - exp(-pi)).
double central_tail_coefficient(int m, double tol = kDefaultRootTol);

struct TableEntry {
  std::string table;  // "1".."4"
  std::string name;   // e.g. "nu_3"
  double computed;
  std::optional<double> published;
  double rel_dev;
  double tolerance;
  /// Informational rows are reported but never fail the run.
  bool informational = false;

  bool pass() const noexcept;
};

struct TablesReport {
  std::vector<TableEntry> entries;

  bool all_pass() const noexcept;
  std::vector<const TableEntry*> failures() const;
};

/// Recomputes the four reference tables for the square.
TablesReport reproduce_tables(double tol = kDefaultRootTol);

/// CSV: table,name,computed,published,rel_dev,tolerance,status.
void write_csv(const TablesReport& r, std::ostream& out);
void write_text(const TablesReport& r, std::ostream& out);

}  // namespace steklov
