#pragma once

// Functions on the boundary of the rectangle and their mean-normalized
// inner products
//
//   <u, v> = |dG|^{-1} * integral over dG of u v dsigma,
//
// evaluated by composite Gauss-Legendre quadrature edge by edge. Gauss
// nodes are interior to their panels, so corner values are never needed.

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steklov/boundary_point.hpp"
#include "steklov/mode_basis.hpp"
#include "steklov/rectangle.hpp"

namespace steklov {

struct QuadratureSpec {
  int order = 32;
  int panels_per_edge = 4;

  /// max(4, ceil(nu_max / pi)) panels per edge.
  static QuadratureSpec for_frequency(double nu_max, int order = 32);

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

/// Composite Gauss-Legendre nodes on every edge, stored edge by edge in
/// counterclockwise order.
class BoundaryRule {
 public:
  struct Node {
    BoundaryPoint point;
    double weight;  // includes the panel Jacobian, not the 1/|dG| factor
  };

  BoundaryRule(const Rectangle& rect, const QuadratureSpec& spec);

  const Rectangle& rectangle() const noexcept { return rect_; }
  const QuadratureSpec& spec() const noexcept { return spec_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const Node> edge_nodes(Edge e) const noexcept;

  /// |dG|^{-1} times the boundary integral of f, per-edge sums added in
  /// fixed edge order.
  template <class F>
  double mean_of(F&& f) const {
    double total = 0.0;
    for (Edge e : kEdges) {
      double edge_sum = 0.0;
      for (const Node& n : edge_nodes(e)) edge_sum += n.weight * f(n.point);
      total += edge_sum;
    }
    return total / rect_.perimeter();
  }

 private:
  Rectangle rect_;
  QuadratureSpec spec_;
  std::vector<Node> nodes_;
  std::size_t per_edge_;
};

struct Sample {
  double arclength;
  double value;
};

/// Data given on the boundary, either by an evaluation rule or by samples
/// against arc length. Immutable and cheap to copy.
class BoundaryFunction {
 public:
  using PlaneRule = std::function<double(double x, double y)>;
  using PointRule = std::function<double(const BoundaryPoint&)>;

  static BoundaryFunction analytic(std::string name, PlaneRule rule);
  static BoundaryFunction on_boundary(std::string name, PointRule rule);
  static BoundaryFunction constant(double c);
  static BoundaryFunction trace_of(const SteklovMode& mode);

  /// Piecewise cubic per edge (natural spline through that edge's samples,
  /// linear beyond the outermost ones); nothing is interpolated across a
  /// vertex. Arc lengths must increase strictly in [0, perimeter) with at
  /// least two samples per edge (SampledDomainError otherwise).
  static BoundaryFunction sampled(const Rectangle& rect,
                                  std::vector<Sample> samples);

  double operator()(const BoundaryPoint& p) const;

  const std::string& name() const noexcept { return name_; }
  bool is_sampled() const noexcept { return sampled_alpha_.has_value(); }
  /// Aspect ratio sampled data was recorded on.
  std::optional<double> sampled_alpha() const noexcept { return sampled_alpha_; }

 private:
  BoundaryFunction(std::string name, PointRule rule,
                   std::optional<double> sampled_alpha);

  std::string name_;
  std::shared_ptr<const PointRule> rule_;
  std::optional<double> sampled_alpha_;
};

/// CSV with header `arclength,value`; `#` lines are comments.
BoundaryFunction read_sampled_csv(const Rectangle& rect, std::istream& in);
BoundaryFunction load_sampled_csv(const Rectangle& rect, const std::string& path);

double inner_product(const BoundaryFunction& u, const BoundaryFunction& v,
                     const BoundaryRule& rule);
double inner_product(const BoundaryFunction& u, const BoundaryFunction& v,
                     const Rectangle& rect, const QuadratureSpec& spec = {});

double mean(const BoundaryFunction& u, const BoundaryRule& rule);
double mean(const BoundaryFunction& u, const Rectangle& rect,
            const QuadratureSpec& spec = {});

/// sqrt(<u, u>).
double mean_l2_norm(const BoundaryFunction& u, const BoundaryRule& rule);

/// <u, s~> against the mode's boundary trace.
double coefficient(const BoundaryFunction& u, const SteklovMode& mode,
                   const BoundaryRule& rule);
/// Panels chosen from the mode's frequency.
double coefficient(const BoundaryFunction& u, const SteklovMode& mode,
                   int order = 32);

}  // namespace steklov
