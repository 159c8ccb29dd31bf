#pragma once

// Catalog of harmonic functions with closed forms, used as self-checking
// boundary data:
//
//   const:c  x  y  xy  x2-y2  x3-3xy2  3x2y-y3  x4-6x2y2+y4  x3y-xy3
//   coshcos:nu  coscosh:nu  sinhsin:nu  sinsinh:nu   (nu defaults to 1)
//
// coshcos:nu is cosh(nu x) cos(nu y); coscosh:nu is cos(nu x) cosh(nu y).

#include <functional>
#include <string>
#include <vector>

#include "steklov/boundary.hpp"

namespace steklov {

struct HarmonicBuiltin {
  std::string name;
  std::function<double(double, double)> value;
  std::function<Gradient(double, double)> gradient;

  BoundaryFunction trace() const;
};

/// Parses NAME[:param]; FormatError for unknown names or bad parameters.
HarmonicBuiltin parse_builtin(const std::string& spec);

/// Catalog names without parameters.
std::vector<std::string> builtin_names();

}  // namespace steklov
