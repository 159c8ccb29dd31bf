#pragma once

#include <span>
#include <vector>

namespace steklov {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  /// order >= 1; nodes ascending.
  explicit GaussLegendre(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Shared rule for an order, built once per process.
  static const GaussLegendre& cached(int order);

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace steklov
