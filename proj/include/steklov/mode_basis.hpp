#pragma once

// Resolved harmonic Steklov modes of the rectangle (-1,1) x (-alpha,alpha).
//
// Separated modes are products of one trigonometric and one hyperbolic
// factor, e.g. cosh(nu x) cos(nu y) for (I, XDominant). The eigenvalue is
// taken pointwise, D_n s = delta * s on every edge, and modes are scaled so
// that their boundary mean square equals one.
//
// Hyperbolic factors are evaluated relative to exp(nu L), L being the half
// length along the hyperbolic coordinate, so evaluation stays finite for
// nu far beyond the range where cosh(nu)^2 overflows.

#include <cstdint>
#include <vector>

#include "steklov/boundary_point.hpp"
#include "steklov/rectangle.hpp"
#include "steklov/root_solver.hpp"

namespace steklov {

enum class ModeKind { Constant, XY, Separated };

struct ModeId {
  ModeKind kind = ModeKind::Constant;
  SymmetryClass symmetry = SymmetryClass::I;
  Family family = Family::XDominant;
  int index = 0;

  static ModeId constant() { return {}; }
  static ModeId xy() { return {ModeKind::XY, SymmetryClass::II, Family::XDominant, 0}; }
  static ModeId separated(SymmetryClass c, Family f, int j) {
    return {ModeKind::Separated, c, f, j};
  }

  friend bool operator==(const ModeId&, const ModeId&) = default;
};

struct SteklovMode {
  ModeId id;
  double alpha = 1.0;
  /// Zero for the constant and xy modes.
  double nu = 0.0;
  /// Steklov eigenvalue, D_n s = delta s on the boundary.
  double delta = 0.0;
  /// Boundary mean square of the unnormalized profile. +inf when it is not
  /// representable; log_norm_sq is always finite.
  double norm_sq = 1.0;
  double log_norm_sq = 0.0;
  /// 1 / sqrt(norm_sq); 0 when norm_sq overflows.
  double scale = 1.0;
  /// scale * exp(nu * L): multiplier for the exp-shifted hyperbolic factor.
  double amplitude = 1.0;
};

/// delta for a separated mode with parameter nu > 0.
double eigenvalue(SymmetryClass c, Family f, double nu, double alpha);

/// Integral of s^2 over the whole boundary for the unnormalized profile.
/// Throws OverflowError when the value is not a finite double; use
/// log_normalization_integral for large nu.
double normalization_integral(SymmetryClass c, Family f, double nu,
                              double alpha);
double log_normalization_integral(SymmetryClass c, Family f, double nu,
                                  double alpha);

/// Builds the mode for a known nu without solving for it.
SteklovMode make_mode(const ModeId& id, double alpha, double nu);

/// Solves for nu as needed. Throws InvalidModeError for xy off the square.
SteklovMode resolve(const ModeId& id, double alpha,
                    double tol = kDefaultRootTol);

/// Boundary-normalized eigenfunction value; DomainError outside the closed
/// rectangle.
double evaluate(const SteklovMode& mode, double x, double y);

struct Gradient {
  double dx;
  double dy;
};
Gradient gradient(const SteklovMode& mode, double x, double y);

double boundary_trace(const SteklovMode& mode, const BoundaryPoint& p);

/// Outward normal derivative from the analytic gradient. DomainError at
/// the four vertices.
double normal_derivative(const SteklovMode& mode, const BoundaryPoint& p);

/// Bit set over symmetry classes used to restrict mode enumeration.
class ClassFilter {
 public:
  static ClassFilter all() { return ClassFilter(0xF); }
  static ClassFilter only(SymmetryClass c) { return ClassFilter(bit(c)); }
  ClassFilter with(SymmetryClass c) const { return ClassFilter(mask_ | bit(c)); }
  bool contains(SymmetryClass c) const { return (mask_ & bit(c)) != 0; }
  bool empty() const { return mask_ == 0; }
  static ClassFilter none() { return ClassFilter(0); }

 private:
  explicit ClassFilter(std::uint8_t mask) : mask_(mask) {}
  static std::uint8_t bit(SymmetryClass c) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }
  std::uint8_t mask_;
};

/// The first `count` non-constant modes in ascending delta order, ties
/// broken by (class, family, index). The xy mode sorts as class II index 0.
std::vector<SteklovMode> first_modes(const Rectangle& rect, int count,
                                     double tol = kDefaultRootTol,
                                     ClassFilter classes = ClassFilter::all());

/// Class I modes j = 1..m of both families, ascending delta.
std::vector<SteklovMode> central_modes(const Rectangle& rect, int m,
                                       double tol = kDefaultRootTol);

/// Strict weak order used for mode lists.
bool spectral_less(const SteklovMode& a, const SteklovMode& b);

}  // namespace steklov
