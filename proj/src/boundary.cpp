#include "steklov/boundary.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "steklov/errors.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

// --- BoundaryPoint -------------------------------------------------------

std::string_view to_string(Edge e) noexcept {
  switch (e) {
    case Edge::Right:
      return "right";
    case Edge::Top:
      return "top";
    case Edge::Left:
      return "left";
    case Edge::Bottom:
      return "bottom";
  }
  return "?";
}

namespace {

double half_length(Edge e, double alpha) {
  return e == Edge::Right || e == Edge::Left ? alpha : 1.0;
}

double edge_offset(Edge e, double alpha) {
  switch (e) {
    case Edge::Right:
      return 0.0;
    case Edge::Top:
      return 2.0 * alpha;
    case Edge::Left:
      return 2.0 * alpha + 2.0;
    case Edge::Bottom:
      return 4.0 * alpha + 2.0;
  }
  return 0.0;
}

// t as a function of the distance r from the edge's starting vertex.
double t_from_edge_arclength(Edge e, double alpha, double r) {
  switch (e) {
    case Edge::Right:
      return r - alpha;
    case Edge::Top:
      return 1.0 - r;
    case Edge::Left:
      return alpha - r;
    case Edge::Bottom:
      return r - 1.0;
  }
  return 0.0;
}

}  // namespace

BoundaryPoint::BoundaryPoint(Edge edge, double t, double alpha)
    : edge_(edge), t_(t), alpha_(alpha) {
  switch (edge) {
    case Edge::Right:
      x_ = 1.0;
      y_ = t;
      break;
    case Edge::Top:
      x_ = t;
      y_ = alpha;
      break;
    case Edge::Left:
      x_ = -1.0;
      y_ = t;
      break;
    case Edge::Bottom:
      x_ = t;
      y_ = -alpha;
      break;
  }
}

BoundaryPoint BoundaryPoint::on_edge(const Rectangle& rect, Edge edge,
                                     double t) {
  if (!(std::abs(t) <= half_length(edge, rect.alpha()))) {
    throw DomainError("edge coordinate " + std::to_string(t) +
                      " is outside the " + std::string(to_string(edge)) +
                      " edge");
  }
  return BoundaryPoint(edge, t, rect.alpha());
}

BoundaryPoint BoundaryPoint::from_arclength(const Rectangle& rect, double s) {
  const double a = rect.alpha();
  if (!(s >= 0.0 && s < rect.perimeter())) {
    throw DomainError("arc length " + std::to_string(s) +
                      " is outside [0, perimeter)");
  }
  Edge edge = Edge::Bottom;
  for (Edge e : {Edge::Right, Edge::Top, Edge::Left}) {
    if (s < edge_offset(e, a) + 2.0 * half_length(e, a)) {
      edge = e;
      break;
    }
  }
  double t = t_from_edge_arclength(edge, a, s - edge_offset(edge, a));
  const double h = half_length(edge, a);
  t = std::clamp(t, -h, h);
  return BoundaryPoint(edge, t, a);
}

double BoundaryPoint::edge_half_length() const noexcept {
  return half_length(edge_, alpha_);
}

double BoundaryPoint::edge_arclength() const noexcept {
  switch (edge_) {
    case Edge::Right:
      return t_ + alpha_;
    case Edge::Top:
      return 1.0 - t_;
    case Edge::Left:
      return alpha_ - t_;
    case Edge::Bottom:
      return t_ + 1.0;
  }
  return 0.0;
}

double BoundaryPoint::arclength() const noexcept {
  return edge_offset(edge_, alpha_) + edge_arclength();
}

bool BoundaryPoint::is_corner() const noexcept {
  return std::abs(t_) == edge_half_length();
}

double BoundaryPoint::normal_x() const noexcept {
  return edge_ == Edge::Right ? 1.0 : edge_ == Edge::Left ? -1.0 : 0.0;
}

double BoundaryPoint::normal_y() const noexcept {
  return edge_ == Edge::Top ? 1.0 : edge_ == Edge::Bottom ? -1.0 : 0.0;
}

// --- Quadrature ----------------------------------------------------------

QuadratureSpec QuadratureSpec::for_frequency(double nu_max, int order) {
  const int panels =
      std::max(4, static_cast<int>(std::ceil(nu_max / std::numbers::pi)));
  return {order, panels};
}

BoundaryRule::BoundaryRule(const Rectangle& rect, const QuadratureSpec& spec)
    : rect_(rect), spec_(spec) {
  if (spec.order < 2) throw DomainError("quadrature order must be >= 2");
  if (spec.panels_per_edge < 1) throw DomainError("need at least one panel");
  const GaussLegendre& gl = GaussLegendre::cached(spec.order);
  per_edge_ = static_cast<std::size_t>(spec.order) *
              static_cast<std::size_t>(spec.panels_per_edge);
  nodes_.reserve(4 * per_edge_);
  for (Edge e : kEdges) {
    const double h = half_length(e, rect.alpha());
    const double width = 2.0 * h / spec.panels_per_edge;
    for (int p = 0; p < spec.panels_per_edge; ++p) {
      const double lo = -h + p * width;
      const double mid = lo + 0.5 * width;
      for (int i = 0; i < spec.order; ++i) {
        const double t = mid + 0.5 * width * gl.nodes()[static_cast<std::size_t>(i)];
        nodes_.push_back({BoundaryPoint::on_edge(rect, e, t),
                          0.5 * width * gl.weights()[static_cast<std::size_t>(i)]});
      }
    }
  }
}

std::span<const BoundaryRule::Node> BoundaryRule::edge_nodes(
    Edge e) const noexcept {
  const auto k = static_cast<std::size_t>(e);
  return std::span<const Node>(nodes_).subspan(k * per_edge_, per_edge_);
}

// --- BoundaryFunction ----------------------------------------------------

BoundaryFunction::BoundaryFunction(std::string name, PointRule rule,
                                   std::optional<double> sampled_alpha)
    : name_(std::move(name)),
      rule_(std::make_shared<const PointRule>(std::move(rule))),
      sampled_alpha_(sampled_alpha) {}

BoundaryFunction BoundaryFunction::analytic(std::string name, PlaneRule rule) {
  return BoundaryFunction(
      std::move(name),
      [f = std::move(rule)](const BoundaryPoint& p) { return f(p.x(), p.y()); },
      std::nullopt);
}

BoundaryFunction BoundaryFunction::on_boundary(std::string name,
                                               PointRule rule) {
  return BoundaryFunction(std::move(name), std::move(rule), std::nullopt);
}

BoundaryFunction BoundaryFunction::constant(double c) {
  return BoundaryFunction(
      "const:" + std::to_string(c), [c](const BoundaryPoint&) { return c; },
      std::nullopt);
}

BoundaryFunction BoundaryFunction::trace_of(const SteklovMode& mode) {
  return BoundaryFunction(
      "mode-trace",
      [mode](const BoundaryPoint& p) { return boundary_trace(mode, p); },
      std::nullopt);
}

namespace {

// Natural cubic spline in the distance from the edge's starting vertex.
class EdgeSpline {
 public:
  EdgeSpline(std::vector<double> r, std::vector<double> v)
      : r_(std::move(r)), v_(std::move(v)), m_(r_.size(), 0.0) {
    const std::size_t n = r_.size();
    if (n < 3) return;
    // Thomas algorithm for interior second derivatives.
    std::vector<double> diag(n, 0.0);
    std::vector<double> rhs(n, 0.0);
    std::vector<double> upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = r_[i] - r_[i - 1];
      const double h1 = r_[i + 1] - r_[i];
      const double lower = h0 / 6.0;
      diag[i] = (h0 + h1) / 3.0;
      upper[i] = h1 / 6.0;
      rhs[i] = (v_[i + 1] - v_[i]) / h1 - (v_[i] - v_[i - 1]) / h0;
      if (i > 1) {
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
      }
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
    }
  }

  double operator()(double r) const {
    const std::size_t n = r_.size();
    if (r <= r_.front()) return v_.front() + slope(0, true) * (r - r_.front());
    if (r >= r_.back()) return v_.back() + slope(n - 2, false) * (r - r_.back());
    const auto it = std::upper_bound(r_.begin(), r_.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - r_.begin()) - 1;
    const double h = r_[i + 1] - r_[i];
    const double a = (r_[i + 1] - r) / h;
    const double b = (r - r_[i]) / h;
    return a * v_[i] + b * v_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
  }

 private:
  // Spline derivative at the left (at_left) or right end of segment i.
  double slope(std::size_t i, bool at_left) const {
    const double h = r_[i + 1] - r_[i];
    const double secant = (v_[i + 1] - v_[i]) / h;
    if (at_left) return secant - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return secant + h * (m_[i] + 2.0 * m_[i + 1]) / 6.0;
  }

  std::vector<double> r_;
  std::vector<double> v_;
  std::vector<double> m_;
};

}  // namespace

BoundaryFunction BoundaryFunction::sampled(const Rectangle& rect,
                                           std::vector<Sample> samples) {
  const double a = rect.alpha();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double s = samples[i].arclength;
    if (!(s >= 0.0 && s < rect.perimeter())) {
      throw SampledDomainError("sample arc length " + std::to_string(s) +
                               " is outside [0, perimeter)");
    }
    if (i > 0 && !(s > samples[i - 1].arclength)) {
      throw SampledDomainError("sample arc lengths must increase strictly");
    }
  }
  std::vector<EdgeSpline> splines;
  for (Edge e : kEdges) {
    const double start = edge_offset(e, a);
    const double end = start + 2.0 * half_length(e, a);
    std::vector<double> r;
    std::vector<double> v;
    for (const Sample& s : samples) {
      if (s.arclength >= start && s.arclength < end) {
        r.push_back(s.arclength - start);
        v.push_back(s.value);
      }
    }
    if (r.size() < 2) {
      throw SampledDomainError("sampled data needs at least two samples on the " +
                               std::string(to_string(e)) + " edge");
    }
    splines.emplace_back(std::move(r), std::move(v));
  }
  return BoundaryFunction(
      "sampled",
      [splines = std::move(splines)](const BoundaryPoint& p) {
        return splines[static_cast<std::size_t>(p.edge())](p.edge_arclength());
      },
      a);
}

double BoundaryFunction::operator()(const BoundaryPoint& p) const {
  return (*rule_)(p);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view field, int line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line) + ": '" +
                      std::string(field) + "' is not a finite number");
  }
  return value;
}

}  // namespace

BoundaryFunction read_sampled_csv(const Rectangle& rect, std::istream& in) {
  std::vector<Sample> samples;
  std::string raw;
  bool header_seen = false;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!header_seen) {
      const auto comma = text.find(',');
      if (comma == std::string_view::npos ||
          trim(text.substr(0, comma)) != "arclength" ||
          trim(text.substr(comma + 1)) != "value") {
        throw FormatError("line " + std::to_string(line) +
                          ": expected header 'arclength,value'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      throw FormatError("line " + std::to_string(line) +
                        ": expected two comma-separated fields");
    }
    const double s = parse_number(text.substr(0, comma), line);
    const double v = parse_number(text.substr(comma + 1), line);
    if (!(s >= 0.0 && s < rect.perimeter())) {
      throw FormatError("line " + std::to_string(line) + ": arc length " +
                        std::to_string(s) + " is outside [0, 4(1+alpha))");
    }
    if (!samples.empty() && !(s > samples.back().arclength)) {
      throw FormatError("line " + std::to_string(line) +
                        ": arc lengths must increase strictly");
    }
    samples.push_back({s, v});
  }
  if (!header_seen) throw FormatError("missing header 'arclength,value'");
  return BoundaryFunction::sampled(rect, std::move(samples));
}

BoundaryFunction load_sampled_csv(const Rectangle& rect,
                                  const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open boundary data file '" + path + "'");
  return read_sampled_csv(rect, in);
}

// --- Inner products ------------------------------------------------------

namespace {

void check_compatible(const BoundaryFunction& u, const BoundaryRule& rule) {
  if (u.is_sampled() && *u.sampled_alpha() != rule.rectangle().alpha()) {
    throw SampledDomainError("sampled data was recorded on a different rectangle");
  }
}

}  // namespace

double inner_product(const BoundaryFunction& u, const BoundaryFunction& v,
                     const BoundaryRule& rule) {
  check_compatible(u, rule);
  check_compatible(v, rule);
  return rule.mean_of([&](const BoundaryPoint& p) { return u(p) * v(p); });
}

double inner_product(const BoundaryFunction& u, const BoundaryFunction& v,
                     const Rectangle& rect, const QuadratureSpec& spec) {
  return inner_product(u, v, BoundaryRule(rect, spec));
}

double mean(const BoundaryFunction& u, const BoundaryRule& rule) {
  check_compatible(u, rule);
  return rule.mean_of([&](const BoundaryPoint& p) { return u(p) * 1.0; });
}

double mean(const BoundaryFunction& u, const Rectangle& rect,
            const QuadratureSpec& spec) {
  return mean(u, BoundaryRule(rect, spec));
}

double mean_l2_norm(const BoundaryFunction& u, const BoundaryRule& rule) {
  return std::sqrt(inner_product(u, u, rule));
}

double coefficient(const BoundaryFunction& u, const SteklovMode& mode,
                   const BoundaryRule& rule) {
  check_compatible(u, rule);
  if (mode.alpha != rule.rectangle().alpha()) {
    throw DomainError("mode and quadrature live on different rectangles");
  }
  return rule.mean_of(
      [&](const BoundaryPoint& p) { return u(p) * boundary_trace(mode, p); });
}

double coefficient(const BoundaryFunction& u, const SteklovMode& mode,
                   int order) {
  const Rectangle rect(mode.alpha);
  return coefficient(u, mode,
                     BoundaryRule(rect, QuadratureSpec::for_frequency(mode.nu, order)));
}

}  // namespace steklov
