#pragma once

namespace steklov {

/// The rectangle G = (-1,1) x (-alpha, alpha) with 0 < alpha <= 1.
class Rectangle {
 public:
  /// Throws DomainError unless 0 < alpha <= 1.
  explicit Rectangle(double alpha);

  double alpha() const noexcept { return alpha_; }
  double perimeter() const noexcept { return 4.0 * (1.0 + alpha_); }
  bool is_square() const noexcept { return alpha_ == 1.0; }

  /// Closed-rectangle membership.
  bool contains(double x, double y) const noexcept;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  double alpha_;
};

}  // namespace steklov
