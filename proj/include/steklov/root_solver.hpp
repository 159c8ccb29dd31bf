#pragma once

// Positive roots of the determining equations for separated harmonic
// Steklov eigenfunctions on the rectangle (-1,1) x (-alpha,alpha).
//
// Every equation has the form tan(nu * a) = g(nu) where a = alpha for the
// x-dominant family (hyperbolic factor in x) and a = 1 for the y-dominant
// family, and g is one of +-tanh(nu * b), +-coth(nu * b) with b the other
// length. Roots are located inside analytically known windows of the
// tangent branch and refined on the equivalent pole-free phase equation
//
//   nu * a - atan(g(nu)) = k * pi,
//
// which is continuous and strictly increasing on each window.

#include <string_view>

namespace steklov {

enum class SymmetryClass { I, II, III, IV };
enum class Family { XDominant, YDominant };

std::string_view to_string(SymmetryClass c) noexcept;
std::string_view to_string(Family f) noexcept;

/// One of the eight determining equations for a fixed aspect ratio.
struct DeterminingEquation {
  SymmetryClass symmetry;
  Family family;
  double alpha;
};

inline constexpr double kDefaultRootTol = 1e-12;
/// Relative distance to a tangent pole below which residual() refuses to
/// evaluate.
inline constexpr double kPoleGuard = 1e-8;

/// Left minus right side of the determining equation, e.g.
/// tan(nu alpha) + tanh(nu) for (I, XDominant). Throws PoleProximityError
/// near a tangent pole and DomainError for nu <= 0.
double residual(const DeterminingEquation& eq, double nu);

struct Bracket {
  double lo;
  double hi;
};

/// Interval containing exactly the j-th strictly positive root (j >= 1) and
/// no tangent pole in its interior.
Bracket bracket(const DeterminingEquation& eq, int j);

/// The j-th strictly positive root, localized to within tol.
/// Throws NonConvergenceError when tol is below what double precision can
/// resolve at that root or the iteration budget runs out.
double solve_nu(const DeterminingEquation& eq, int j,
                double tol = kDefaultRootTol);

namespace detail {

/// Pole-free phase nu*a - atan(g(nu)); roots are where it equals k*pi.
double phase(const DeterminingEquation& eq, double nu);
double phase_derivative(const DeterminingEquation& eq, double nu);
/// The multiple of pi the phase attains at the j-th root.
int phase_level(const DeterminingEquation& eq, int j);

}  // namespace detail

}  // namespace steklov
