#include "steklov/builtins.hpp"

#include <charconv>
#include <cmath>

#include "steklov/errors.hpp"

namespace steklov {

BoundaryFunction HarmonicBuiltin::trace() const {
  return BoundaryFunction::analytic(name, value);
}

namespace {

using Value = std::function<double(double, double)>;
using Grad = std::function<Gradient(double, double)>;

double parse_param(const std::string& spec, const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw FormatError("bad parameter in builtin '" + spec + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"const", "x", "y", "xy", "x2-y2", "x3-3xy2", "3x2y-y3",
          "x4-6x2y2+y4", "x3y-xy3", "coshcos", "coscosh", "sinhsin",
          "sinsinh"};
}

HarmonicBuiltin parse_builtin(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const bool has_param = colon != std::string::npos;
  const double p = has_param ? parse_param(spec, spec.substr(colon + 1)) : 1.0;
  const auto plain = [&](Value v, Grad g) {
    if (has_param) throw FormatError("builtin '" + name + "' takes no parameter");
    return HarmonicBuiltin{spec, std::move(v), std::move(g)};
  };

  if (name == "const") {
    if (!has_param) throw FormatError("builtin 'const' needs a value, e.g. const:7");
    return {spec, [p](double, double) { return p; },
            [](double, double) { return Gradient{0.0, 0.0}; }};
  }
  if (name == "x") {
    return plain([](double x, double) { return x; },
                 [](double, double) { return Gradient{1.0, 0.0}; });
  }
  if (name == "y") {
    return plain([](double, double y) { return y; },
                 [](double, double) { return Gradient{0.0, 1.0}; });
  }
  if (name == "xy") {
    return plain([](double x, double y) { return x * y; },
                 [](double x, double y) { return Gradient{y, x}; });
  }
  if (name == "x2-y2") {
    return plain([](double x, double y) { return x * x - y * y; },
                 [](double x, double y) { return Gradient{2 * x, -2 * y}; });
  }
  if (name == "x3-3xy2") {
    return plain([](double x, double y) { return x * x * x - 3 * x * y * y; },
                 [](double x, double y) {
                   return Gradient{3 * x * x - 3 * y * y, -6 * x * y};
                 });
  }
  if (name == "3x2y-y3") {
    return plain([](double x, double y) { return 3 * x * x * y - y * y * y; },
                 [](double x, double y) {
                   return Gradient{6 * x * y, 3 * x * x - 3 * y * y};
                 });
  }
  if (name == "x4-6x2y2+y4") {
    return plain(
        [](double x, double y) {
          return x * x * x * x - 6 * x * x * y * y + y * y * y * y;
        },
        [](double x, double y) {
          return Gradient{4 * x * x * x - 12 * x * y * y,
                          4 * y * y * y - 12 * x * x * y};
        });
  }
  if (name == "x3y-xy3") {
    return plain([](double x, double y) { return x * x * x * y - x * y * y * y; },
                 [](double x, double y) {
                   return Gradient{3 * x * x * y - y * y * y,
                                   x * x * x - 3 * x * y * y};
                 });
  }
  if (name == "coshcos") {
    return {spec, [p](double x, double y) { return std::cosh(p * x) * std::cos(p * y); },
            [p](double x, double y) {
              return Gradient{p * std::sinh(p * x) * std::cos(p * y),
                              -p * std::cosh(p * x) * std::sin(p * y)};
            }};
  }
  if (name == "coscosh") {
    return {spec, [p](double x, double y) { return std::cos(p * x) * std::cosh(p * y); },
            [p](double x, double y) {
              return Gradient{-p * std::sin(p * x) * std::cosh(p * y),
                              p * std::cos(p * x) * std::sinh(p * y)};
            }};
  }
  if (name == "sinhsin") {
    return {spec, [p](double x, double y) { return std::sinh(p * x) * std::sin(p * y); },
            [p](double x, double y) {
              return Gradient{p * std::cosh(p * x) * std::sin(p * y),
                              p * std::sinh(p * x) * std::cos(p * y)};
            }};
  }
  if (name == "sinsinh") {
    return {spec, [p](double x, double y) { return std::sin(p * x) * std::sinh(p * y); },
            [p](double x, double y) {
              return Gradient{p * std::cos(p * x) * std::sinh(p * y),
                              p * std::sin(p * x) * std::cosh(p * y)};
            }};
  }
  throw FormatError("unknown builtin '" + spec + "'");
}

}  // namespace steklov
