#pragma once

#include <string_view>

#include "steklov/rectangle.hpp"

namespace steklov {

/// Edges of the rectangle in counterclockwise order starting from x = 1.
enum class Edge {
  Right,   // x = 1,      t = y in [-alpha, alpha]
  Top,     // y = alpha,  t = x in [-1, 1]
  Left,    // x = -1,     t = y in [-alpha, alpha]
  Bottom,  // y = -alpha, t = x in [-1, 1]
};

inline constexpr Edge kEdges[] = {Edge::Right, Edge::Top, Edge::Left,
                                  Edge::Bottom};

std::string_view to_string(Edge e) noexcept;

/// A point on the boundary, identified by its edge and the Cartesian
/// coordinate t that runs along that edge.
///
/// Arc length starts at the vertex (1, -alpha) and runs counterclockwise:
/// up the right edge, leftward along the top, down the left edge, rightward
/// along the bottom.
class BoundaryPoint {
 public:
  /// Throws DomainError if t is outside the edge's range.
  static BoundaryPoint on_edge(const Rectangle& rect, Edge edge, double t);
  /// s in [0, perimeter); vertices belong to the edge that starts there.
  static BoundaryPoint from_arclength(const Rectangle& rect, double s);

  Edge edge() const noexcept { return edge_; }
  double t() const noexcept { return t_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double alpha() const noexcept { return alpha_; }

  /// Half-length of the edge the point lies on.
  double edge_half_length() const noexcept;
  /// Distance travelled along the edge from its starting vertex.
  double edge_arclength() const noexcept;
  double arclength() const noexcept;
  bool is_corner() const noexcept;

  /// Outward unit normal components.
  double normal_x() const noexcept;
  double normal_y() const noexcept;

 private:
  BoundaryPoint(Edge edge, double t, double alpha);

  Edge edge_;
  double t_;
  double alpha_;
  double x_;
  double y_;
};

}  // namespace steklov
