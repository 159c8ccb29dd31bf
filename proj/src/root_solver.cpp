#include "steklov/root_solver.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxIterations = 200;

enum class Hyperbolic { Tanh, Coth };

// tan(nu * a) = sign * h(nu * b)
struct Form {
  double a;
  double b;
  int sign;
  Hyperbolic h;
};

Form form_of(const DeterminingEquation& eq) {
  const bool x_dominant = eq.family == Family::XDominant;
  Form f{x_dominant ? eq.alpha : 1.0, x_dominant ? 1.0 : eq.alpha, -1,
         Hyperbolic::Tanh};
  switch (eq.symmetry) {
    case SymmetryClass::I:
      f.sign = -1;
      f.h = Hyperbolic::Tanh;
      break;
    case SymmetryClass::II:
      f.sign = +1;
      f.h = Hyperbolic::Tanh;
      break;
    case SymmetryClass::III:
      f.sign = x_dominant ? +1 : -1;
      f.h = Hyperbolic::Coth;
      break;
    case SymmetryClass::IV:
      f.sign = x_dominant ? -1 : +1;
      f.h = Hyperbolic::Coth;
      break;
  }
  return f;
}

// +tanh with a < b: the phase first decreases, so the first strictly
// positive root sits past the phase minimum rather than at a pi multiple
// above zero.
bool has_dipping_phase(const Form& f) {
  return f.sign > 0 && f.h == Hyperbolic::Tanh && f.a < f.b;
}

void check_equation(const DeterminingEquation& eq) {
  if (!(eq.alpha > 0.0 && eq.alpha <= 1.0)) {
    throw DomainError("determining equation needs 0 < alpha <= 1");
  }
}

}  // namespace

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::I:
      return "I";
    case SymmetryClass::II:
      return "II";
    case SymmetryClass::III:
      return "III";
    case SymmetryClass::IV:
      return "IV";
  }
  return "?";
}

std::string_view to_string(Family f) noexcept {
  return f == Family::XDominant ? "X" : "Y";
}

double residual(const DeterminingEquation& eq, double nu) {
  check_equation(eq);
  if (!(nu > 0.0)) {
    throw DomainError("determining equation residual needs nu > 0");
  }
  const Form f = form_of(eq);
  const double theta = nu * f.a;
  const double pole = (std::floor(theta / kPi) + 0.5) * kPi;
  const double nearest = std::abs(theta - pole) < std::abs(theta - (pole - kPi))
                             ? pole
                             : pole - kPi;
  if (nearest > 0.0 && std::abs(theta - nearest) < kPoleGuard * nearest) {
    throw PoleProximityError("nu = " + std::to_string(nu) +
                             " is within the pole guard of tan; shrink the "
                             "bracket");
  }
  const double t = std::tanh(nu * f.b);
  const double g = f.h == Hyperbolic::Tanh ? t : 1.0 / t;
  return std::tan(theta) - f.sign * g;
}

namespace detail {

double phase(const DeterminingEquation& eq, double nu) {
  const Form f = form_of(eq);
  const double a_tanh = std::atan(std::tanh(nu * f.b));
  const double atan_g =
      f.h == Hyperbolic::Tanh ? a_tanh : 0.5 * kPi - a_tanh;
  return nu * f.a - f.sign * atan_g;
}

double phase_derivative(const DeterminingEquation& eq, double nu) {
  const Form f = form_of(eq);
  // d/dnu atan(tanh(nu b)) = b / cosh(2 nu b)
  const double d = f.b / std::cosh(2.0 * nu * f.b);
  const int s = f.h == Hyperbolic::Tanh ? f.sign : -f.sign;
  return f.a - s * d;
}

int phase_level(const DeterminingEquation& eq, int j) {
  const Form f = form_of(eq);
  if (f.h == Hyperbolic::Coth) {
    return f.sign > 0 ? j - 1 : j;
  }
  if (f.sign < 0) return j;
  return has_dipping_phase(f) ? j - 1 : j;
}

}  // namespace detail

Bracket bracket(const DeterminingEquation& eq, int j) {
  check_equation(eq);
  if (j < 1) throw DomainError("root index must be >= 1");
  const Form f = form_of(eq);
  const double jj = static_cast<double>(j);
  double lo = 0.0;  // in theta = nu * a
  double hi = 0.0;
  if (f.h == Hyperbolic::Tanh && f.sign < 0) {
    lo = (jj - 0.5) * kPi;
    hi = jj * kPi;
  } else if (f.h == Hyperbolic::Tanh && !has_dipping_phase(f)) {
    lo = jj * kPi;
    hi = (jj + 0.5) * kPi;
  } else if (f.h == Hyperbolic::Tanh) {
    if (j == 1) {
      // Phase minimum: a = b / cosh(2 nu b).
      const double nu_min = std::acosh(f.b / f.a) / (2.0 * f.b);
      return {nu_min, 0.5 * kPi / f.a};
    }
    lo = (jj - 1.0) * kPi;
    hi = (jj - 0.5) * kPi;
  } else if (f.sign > 0) {
    lo = (jj - 1.0) * kPi + 0.25 * kPi;
    hi = (jj - 0.5) * kPi;
  } else {
    lo = (jj - 0.5) * kPi;
    hi = (jj - 0.25) * kPi;
  }
  return {lo / f.a, hi / f.a};
}

double solve_nu(const DeterminingEquation& eq, int j, double tol) {
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  Bracket br = bracket(eq, j);
  const double target = detail::phase_level(eq, j) * kPi;
  auto f = [&](double nu) { return detail::phase(eq, nu) - target; };

  const double resolution =
      2.0 * (std::nextafter(br.hi, INFINITY) - br.hi);
  if (tol < resolution) {
    throw NonConvergenceError("root tolerance " + std::to_string(tol) +
                              " is below double resolution near nu = " +
                              std::to_string(br.hi));
  }

  double lo = br.lo;
  double hi = br.hi;
  const double newton_width = 1e-6 * hi;
  int iter = 0;
  while (hi - lo > 2.0 * tol && hi - lo > newton_width) {
    const double mid = 0.5 * (lo + hi);
    const double value = f(mid);
    if (value == 0.0) return mid;
    if (value < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (++iter > kMaxIterations) break;
  }
  if (hi - lo <= 2.0 * tol) return 0.5 * (lo + hi);

  double nu = 0.5 * (lo + hi);
  for (; iter < kMaxIterations; ++iter) {
    const double value = f(nu);
    if (value == 0.0) return nu;
    if (value < 0.0) {
      lo = nu;
    } else {
      hi = nu;
    }
    const double slope = detail::phase_derivative(eq, nu);
    double next = nu - value / slope;
    if (!(slope > 0.0) || !(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - nu) <= tol) return next;
    nu = next;
  }
  throw NonConvergenceError("root iteration budget exhausted for j = " +
                            std::to_string(j));
}

}  // namespace steklov
