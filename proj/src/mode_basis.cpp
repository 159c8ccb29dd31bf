#include "steklov/mode_basis.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

enum class Hyper { Cosh, Sinh };
enum class Trig { Cos, Sin };

// s(x, y) = hyper(nu * th) * trig(nu * tt), with th the hyperbolic
// coordinate (x for XDominant) and tt the trigonometric one.
struct Shape {
  Hyper hyper;
  Trig trig;
  double hyper_half;  // half-length along the hyperbolic coordinate
  double trig_half;
  bool hyper_in_x;
};

Shape shape_of(SymmetryClass c, Family f, double alpha) {
  const bool even_x = c == SymmetryClass::I || c == SymmetryClass::III;
  const bool even_y = c == SymmetryClass::I || c == SymmetryClass::IV;
  if (f == Family::XDominant) {
    return {even_x ? Hyper::Cosh : Hyper::Sinh, even_y ? Trig::Cos : Trig::Sin,
            1.0, alpha, true};
  }
  return {even_y ? Hyper::Cosh : Hyper::Sinh, even_x ? Trig::Cos : Trig::Sin,
          alpha, 1.0, false};
}

// Above this nu * L the hyperbolic factors are built from exponentials.
constexpr double kDirectHyperLimit = 300.0;

// hyper(nu t) * exp(-nu L), |t| <= L
double shifted_hyper(Hyper h, double nu, double t, double half) {
  const double u = nu * half;
  if (u < kDirectHyperLimit) {
    const double v = h == Hyper::Cosh ? std::cosh(nu * t) : std::sinh(nu * t);
    return v * std::exp(-u);
  }
  const double near = std::exp(nu * (std::abs(t) - half));
  const double far = std::exp(-nu * (std::abs(t) + half));
  if (h == Hyper::Cosh) return 0.5 * (near + far);
  return std::copysign(0.5 * (near - far), t);
}

double trig(Trig k, double nu, double t) {
  return k == Trig::Cos ? std::cos(nu * t) : std::sin(nu * t);
}

double trig_derivative(Trig k, double nu, double t) {
  return k == Trig::Cos ? -nu * std::sin(nu * t) : nu * std::cos(nu * t);
}

Hyper derivative_of(Hyper h) { return h == Hyper::Cosh ? Hyper::Sinh : Hyper::Cosh; }

// 1 - sin(z)/z
double one_minus_sinc(double z) {
  if (std::abs(z) < 0.5) {
    const double z2 = z * z;
    return z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0 * (1.0 - z2 / 72.0)));
  }
  return 1.0 - std::sin(z) / z;
}

// sinh(z)/z - 1
double shc_minus_one(double z) {
  const double z2 = z * z;
  double term = z2 / 6.0;
  double sum = term;
  for (int k = 2; k < 30 && term > 1e-17 * sum; ++k) {
    term *= z2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

// Integral over (-L, L) of trig(nu t)^2.
double trig_square_integral(Trig k, double nu, double half) {
  const double z = 2.0 * nu * half;
  if (k == Trig::Cos) return half * (2.0 - one_minus_sinc(z));
  return half * one_minus_sinc(z);
}

// exp(-2 nu L) times the integral over (-L, L) of hyper(nu t)^2.
double shifted_hyper_square_integral(Hyper h, double nu, double half) {
  const double u = nu * half;
  const double e2 = std::exp(-2.0 * u);
  const double tail = -std::expm1(-4.0 * u) / (4.0 * u);  // (1-e^{-4u})/(4u)
  if (h == Hyper::Cosh) return half * (e2 + tail);
  if (u < 0.5) return half * shc_minus_one(2.0 * u) * e2;
  return half * (tail - e2);
}

// exp(-2 nu L_h) times the boundary integral of s^2.
double shifted_boundary_integral(const Shape& s, double nu) {
  const double u = nu * s.hyper_half;
  const double edge_hyper =
      s.hyper == Hyper::Cosh ? 0.5 * (1.0 + std::exp(-2.0 * u))
                             : -0.5 * std::expm1(-2.0 * u);
  const double edge_trig = trig(s.trig, nu, s.trig_half);
  return 2.0 * edge_hyper * edge_hyper *
             trig_square_integral(s.trig, nu, s.trig_half) +
         2.0 * edge_trig * edge_trig *
             shifted_hyper_square_integral(s.hyper, nu, s.hyper_half);
}

void check_nu(double nu) {
  if (!(nu > 0.0)) throw DomainError("separated modes need nu > 0");
}

void check_point(const SteklovMode& mode, double x, double y) {
  if (!(std::abs(x) <= 1.0 && std::abs(y) <= mode.alpha)) {
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") is outside the closed rectangle");
  }
}

}  // namespace

double eigenvalue(SymmetryClass c, Family f, double nu, double alpha) {
  check_nu(nu);
  const Shape s = shape_of(c, f, alpha);
  const double t = std::tanh(nu * s.hyper_half);
  return s.hyper == Hyper::Cosh ? nu * t : nu / t;
}

double normalization_integral(SymmetryClass c, Family f, double nu,
                              double alpha) {
  check_nu(nu);
  const Shape s = shape_of(c, f, alpha);
  const double value = shifted_boundary_integral(s, nu) *
                       std::exp(2.0 * nu * s.hyper_half);
  if (!std::isfinite(value)) {
    throw OverflowError("boundary integral overflows at nu = " +
                        std::to_string(nu) +
                        "; use log_normalization_integral");
  }
  return value;
}

double log_normalization_integral(SymmetryClass c, Family f, double nu,
                                  double alpha) {
  check_nu(nu);
  const Shape s = shape_of(c, f, alpha);
  return std::log(shifted_boundary_integral(s, nu)) + 2.0 * nu * s.hyper_half;
}

SteklovMode make_mode(const ModeId& id, double alpha, double nu) {
  const Rectangle rect(alpha);
  SteklovMode m;
  m.id = id;
  m.alpha = alpha;
  switch (id.kind) {
    case ModeKind::Constant:
      return m;
    case ModeKind::XY:
      if (!rect.is_square()) {
        throw InvalidModeError("the xy mode exists only on the square");
      }
      m.delta = 1.0;
      m.norm_sq = 1.0 / 3.0;
      m.log_norm_sq = std::log(m.norm_sq);
      m.scale = std::sqrt(3.0);
      m.amplitude = m.scale;
      return m;
    case ModeKind::Separated:
      break;
  }
  if (id.index < 1) throw InvalidModeError("separated mode index must be >= 1");
  check_nu(nu);
  const Shape s = shape_of(id.symmetry, id.family, alpha);
  const double shifted = shifted_boundary_integral(s, nu) / rect.perimeter();
  const double shift = nu * s.hyper_half;
  m.nu = nu;
  m.delta = eigenvalue(id.symmetry, id.family, nu, alpha);
  m.log_norm_sq = std::log(shifted) + 2.0 * shift;
  m.norm_sq = shifted * std::exp(2.0 * shift);
  m.amplitude = 1.0 / std::sqrt(shifted);
  m.scale = m.amplitude * std::exp(-shift);
  return m;
}

SteklovMode resolve(const ModeId& id, double alpha, double tol) {
  if (id.kind != ModeKind::Separated) return make_mode(id, alpha, 0.0);
  if (id.index < 1) throw InvalidModeError("separated mode index must be >= 1");
  const double nu = solve_nu({id.symmetry, id.family, alpha}, id.index, tol);
  return make_mode(id, alpha, nu);
}

double evaluate(const SteklovMode& mode, double x, double y) {
  check_point(mode, x, y);
  switch (mode.id.kind) {
    case ModeKind::Constant:
      return 1.0;
    case ModeKind::XY:
      return mode.amplitude * x * y;
    case ModeKind::Separated:
      break;
  }
  const Shape s = shape_of(mode.id.symmetry, mode.id.family, mode.alpha);
  const double th = s.hyper_in_x ? x : y;
  const double tt = s.hyper_in_x ? y : x;
  return mode.amplitude * shifted_hyper(s.hyper, mode.nu, th, s.hyper_half) *
         trig(s.trig, mode.nu, tt);
}

Gradient gradient(const SteklovMode& mode, double x, double y) {
  check_point(mode, x, y);
  switch (mode.id.kind) {
    case ModeKind::Constant:
      return {0.0, 0.0};
    case ModeKind::XY:
      return {mode.amplitude * y, mode.amplitude * x};
    case ModeKind::Separated:
      break;
  }
  const double nu = mode.nu;
  const Shape s = shape_of(mode.id.symmetry, mode.id.family, mode.alpha);
  const double th = s.hyper_in_x ? x : y;
  const double tt = s.hyper_in_x ? y : x;
  const double h = shifted_hyper(s.hyper, nu, th, s.hyper_half);
  const double dh = nu * shifted_hyper(derivative_of(s.hyper), nu, th, s.hyper_half);
  const double g = trig(s.trig, nu, tt);
  const double dg = trig_derivative(s.trig, nu, tt);
  const double along_hyper = mode.amplitude * dh * g;
  const double along_trig = mode.amplitude * h * dg;
  if (s.hyper_in_x) return {along_hyper, along_trig};
  return {along_trig, along_hyper};
}

double boundary_trace(const SteklovMode& mode, const BoundaryPoint& p) {
  return evaluate(mode, p.x(), p.y());
}

double normal_derivative(const SteklovMode& mode, const BoundaryPoint& p) {
  if (p.is_corner()) {
    throw DomainError("the outward normal is undefined at a vertex");
  }
  const Gradient g = gradient(mode, p.x(), p.y());
  return g.dx * p.normal_x() + g.dy * p.normal_y();
}

bool spectral_less(const SteklovMode& a, const SteklovMode& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.id.kind != b.id.kind && (a.id.kind == ModeKind::Constant ||
                                 b.id.kind == ModeKind::Constant)) {
    return a.id.kind == ModeKind::Constant;
  }
  if (a.id.symmetry != b.id.symmetry) return a.id.symmetry < b.id.symmetry;
  if (a.id.family != b.id.family) return a.id.family < b.id.family;
  return a.id.index < b.id.index;
}

std::vector<SteklovMode> first_modes(const Rectangle& rect, int count,
                                     double tol, ClassFilter classes) {
  std::vector<SteklovMode> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));

  auto greater = [](const SteklovMode& a, const SteklovMode& b) {
    return spectral_less(b, a);
  };
  std::priority_queue<SteklovMode, std::vector<SteklovMode>, decltype(greater)>
      heads(greater);
  for (SymmetryClass c : {SymmetryClass::I, SymmetryClass::II,
                          SymmetryClass::III, SymmetryClass::IV}) {
    if (!classes.contains(c)) continue;
    for (Family f : {Family::XDominant, Family::YDominant}) {
      heads.push(resolve(ModeId::separated(c, f, 1), rect.alpha(), tol));
    }
  }
  if (rect.is_square() && classes.contains(SymmetryClass::II)) {
    heads.push(resolve(ModeId::xy(), rect.alpha(), tol));
  }
  while (static_cast<int>(out.size()) < count && !heads.empty()) {
    SteklovMode next = heads.top();
    heads.pop();
    if (next.id.kind == ModeKind::Separated) {
      ModeId succ = next.id;
      ++succ.index;
      heads.push(resolve(succ, rect.alpha(), tol));
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<SteklovMode> central_modes(const Rectangle& rect, int m,
                                       double tol) {
  std::vector<SteklovMode> out;
  for (int j = 1; j <= m; ++j) {
    for (Family f : {Family::XDominant, Family::YDominant}) {
      out.push_back(resolve(ModeId::separated(SymmetryClass::I, f, j),
                            rect.alpha(), tol));
    }
  }
  std::sort(out.begin(), out.end(), spectral_less);
  return out;
}

}  // namespace steklov
