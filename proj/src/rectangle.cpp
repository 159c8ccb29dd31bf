#include "steklov/rectangle.hpp"

#include <cmath>
#include <string>

#include "steklov/errors.hpp"

namespace steklov {

Rectangle::Rectangle(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("aspect ratio must satisfy 0 < alpha <= 1, got " +
                      std::to_string(alpha) +
                      " (rotate and rescale the rectangle instead)");
  }
}

bool Rectangle::contains(double x, double y) const noexcept {
  return std::abs(x) <= 1.0 && std::abs(y) <= alpha_;
}

}  // namespace steklov
