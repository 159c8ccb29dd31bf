#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "steklov/errors.hpp"
#include "steklov/mode_basis.hpp"
#include "steklov/parallel.hpp"

namespace steklov {

std::string_view to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::SquareCj:
      return "square_cj";
    case BoundKind::SquareCenterEig:
      return "square_center";
    case BoundKind::RectC1jStrong:
      return "rect_c1j";
    case BoundKind::RectC1jSmallAlpha:
      return "rect_c1j_small_alpha";
    case BoundKind::RectC2j:
      return "rect_c2j";
  }
  return "?";
}

bool DecayBound::strict() const noexcept {
  return std::isfinite(log_actual) && log_actual < log_bound;
}

namespace {

struct ClassOne {
  double nu;
  double log_c;       // log(1 / integral of s^2 over the boundary)
  double log_center;  // log s~(0,0)
};

ClassOne class_one(Family f, int j, double alpha, double tol) {
  const SteklovMode m =
      resolve(ModeId::separated(SymmetryClass::I, f, j), alpha, tol);
  const double log_perimeter = std::log(Rectangle(alpha).perimeter());
  return {m.nu, -(m.log_norm_sq + log_perimeter), -0.5 * m.log_norm_sq};
}

DecayBound record(BoundKind kind, double alpha, int j, double nu,
                  double log_bound, double log_actual) {
  return {kind,           alpha, j, nu, std::exp(log_bound), std::exp(log_actual),
          log_bound, log_actual};
}

void check_j_max(int j_max) {
  if (j_max < 1) throw DomainError("j_max must be at least 1");
}

}  // namespace

std::vector<DecayBound> check_square_bounds(int j_max, double tol) {
  check_j_max(j_max);
  std::vector<DecayBound> out(2 * static_cast<std::size_t>(j_max));
  parallel_for(static_cast<std::size_t>(j_max), [&](std::size_t i) {
    const int j = static_cast<int>(i) + 1;
    const ClassOne c = class_one(Family::XDominant, j, 1.0, tol);
    out[2 * i] = record(BoundKind::SquareCj, 1.0, j, c.nu,
                        std::log(2.56) - 2.0 * c.nu, c.log_c);
    out[2 * i + 1] = record(BoundKind::SquareCenterEig, 1.0, j, c.nu,
                            std::log(4.53) - c.nu, c.log_center);
  });
  return out;
}

std::vector<DecayBound> check_rect_bounds(double alpha, int j_max, double tol) {
  check_j_max(j_max);
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("rectangle bounds need 0 < alpha < 1");
  }
  std::vector<DecayBound> out(3 * static_cast<std::size_t>(j_max));
  parallel_for(static_cast<std::size_t>(j_max), [&](std::size_t i) {
    const int j = static_cast<int>(i) + 1;
    const ClassOne x = class_one(Family::XDominant, j, alpha, tol);
    const ClassOne y = class_one(Family::YDominant, j, alpha, tol);
    out[3 * i] = record(BoundKind::RectC1jStrong, alpha, j, x.nu,
                        std::log(2.56 / alpha) - 2.0 * x.nu, x.log_c);
    out[3 * i + 1] = record(BoundKind::RectC1jSmallAlpha, alpha, j, x.nu,
                            std::log(4.0 * x.nu) - 2.0 * alpha * x.nu, x.log_c);
    out[3 * i + 2] = record(BoundKind::RectC2j, alpha, j, y.nu,
                            std::log(2.56) - 2.0 * alpha * y.nu, y.log_c);
  });
  return out;
}

std::vector<OrderingRecord> check_rect_ordering(double alpha, int j_max,
                                                double tol) {
  check_j_max(j_max);
  std::vector<OrderingRecord> out;
  for (int j = 1; j <= j_max; ++j) {
    const double nu1 = solve_nu({SymmetryClass::I, Family::XDominant, alpha}, j, tol);
    const double nu2 = solve_nu({SymmetryClass::I, Family::YDominant, alpha}, j, tol);
    out.push_back({alpha, j, alpha * nu2, nu2, alpha * nu1, nu1});
  }
  return out;
}

double central_error_coefficient(int m, double tol) {
  if (m < 1) throw DomainError("m must be at least 1");
  return 0.41 * std::exp(-solve_nu({SymmetryClass::I, Family::XDominant, 1.0}, m, tol));
}

double central_tail_coefficient(int m, double tol) {
  if (m < 0) throw DomainError("m must be non-negative");
  return 9.06 *
         std::exp(-solve_nu({SymmetryClass::I, Family::XDominant, 1.0}, m + 1, tol)) /
         (1.0 - std::exp(-std::numbers::pi));
}

// --- Tables ----------------------------------------------------------------

bool TableEntry::pass() const noexcept {
  return informational || (std::isfinite(rel_dev) && rel_dev <= tolerance);
}

bool TablesReport::all_pass() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const TableEntry& e) { return e.pass(); });
}

std::vector<const TableEntry*> TablesReport::failures() const {
  std::vector<const TableEntry*> out;
  for (const TableEntry& e : entries) {
    if (!e.pass()) out.push_back(&e);
  }
  return out;
}

namespace {

constexpr double kNu[] = {2.36502037, 5.49780392, 8.63937983,
                          11.7809725, 14.9225651, 18.0641578};
constexpr double kDeltaNu[] = {3.13278355, 3.14157591, 3.14159262, 3.14159265,
                               3.14159265};
constexpr double kDelta[] = {2.32363775, 5.49761947, 8.63937929,
                             11.7809724, 14.9225651, 18.0641578};
constexpr double kCenter[] = {0.36925721, 0.016382475, 7.079865e-4,
                              3.0594874e-5, 1.3221244e-6, 5.7134174e-8};
constexpr double kC[] = {1.7043861e-2,    3.35481862e-5,   6.26556108e-8,
                         1.17005787e-10, 2.18501606e-13, 4.08039237e-16};
constexpr double kRatio[] = {1.9683443e-3, 1.8676303e-3, 1.8674431e-3,
                             1.8674427e-3, 1.8674427e-3};
// Published relative-error coefficients and the unit of their last digit.
constexpr double kCentralCoeff[] = {0.039, 1.7e-3, 7.26e-5};
constexpr double kCentralUnit[] = {1e-3, 1e-4, 1e-7};

TableEntry entry(std::string table, std::string name, double computed,
                 double published, double tolerance) {
  return {std::move(table), std::move(name), computed, published,
          std::abs(computed - published) / std::abs(published), tolerance};
}

}  // namespace

TablesReport reproduce_tables(double tol) {
  constexpr int n = 6;
  std::vector<SteklovMode> modes(n);
  parallel_for(n, [&](std::size_t i) {
    modes[i] = resolve(ModeId::separated(SymmetryClass::I, Family::XDominant,
                                         static_cast<int>(i) + 1),
                       1.0, tol);
  });
  const double perimeter = Rectangle(1.0).perimeter();
  const auto c_of = [&](const SteklovMode& m) { return 1.0 / (m.norm_sq * perimeter); };
  const auto idx = [](int j) { return std::to_string(j); };

  TablesReport r;
  auto& e = r.entries;
  for (int j = 1; j <= n; ++j) {
    e.push_back(entry("1", "nu_" + idx(j), modes[j - 1].nu, kNu[j - 1], 5e-8));
  }
  for (int j = 2; j <= n; ++j) {
    e.push_back(entry("1", "dnu_" + idx(j), modes[j - 1].nu - modes[j - 2].nu,
                      kDeltaNu[j - 2], 5e-8));
  }
  for (int j = 1; j <= n; ++j) {
    e.push_back(entry("1", "delta_" + idx(j), modes[j - 1].delta, kDelta[j - 1], 5e-8));
  }
  for (int j = 1; j <= n; ++j) {
    e.push_back(entry("2", "s1_" + idx(j) + "(0,0)",
                      evaluate(modes[j - 1], 0.0, 0.0), kCenter[j - 1], 1e-6));
  }
  for (int j = 1; j <= n; ++j) {
    e.push_back(entry("3", "c_" + idx(j), c_of(modes[j - 1]), kC[j - 1], 1e-6));
  }
  for (int j = 2; j <= n; ++j) {
    e.push_back(entry("3", "c_" + idx(j) + "/c_" + idx(j - 1),
                      c_of(modes[j - 1]) / c_of(modes[j - 2]), kRatio[j - 2], 1e-6));
  }
  for (int m = 1; m <= 3; ++m) {
    const double published = kCentralCoeff[m - 1];
    const double tolerance = std::max(1e-2, kCentralUnit[m - 1] / published);
    e.push_back(entry("4", "C_" + idx(m) + "*exp(-nu_" + idx(m) + ")",
                      0.41 * std::exp(-modes[m - 1].nu), published, tolerance));
  }
  for (int m = 1; m <= 3; ++m) {
    TableEntry t = entry("4", "tail_" + idx(m),
                         9.06 * std::exp(-modes[m].nu) /
                             (1.0 - std::exp(-std::numbers::pi)),
                         kCentralCoeff[m - 1], 1e-2);
    t.informational = true;
    e.push_back(std::move(t));
  }
  return r;
}

namespace {

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string status_of(const TableEntry& e) {
  if (e.informational) return "info";
  return e.pass() ? "ok" : "FAIL";
}

}  // namespace

void write_csv(const TablesReport& r, std::ostream& out) {
  out << "table,name,computed,published,rel_dev,tolerance,status\n";
  for (const TableEntry& e : r.entries) {
    out << e.table << ',' << e.name << ',' << format("%.17g", e.computed) << ','
        << (e.published ? format("%.17g", *e.published) : "") << ','
        << format("%.17g", e.rel_dev) << ',' << format("%.17g", e.tolerance)
        << ',' << status_of(e) << '\n';
  }
}

void write_text(const TablesReport& r, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-22s %16s %16s %10s %10s  %s\n",
                "table", "name", "computed", "published", "rel_dev", "tol",
                "status");
  out << line;
  for (const TableEntry& e : r.entries) {
    std::snprintf(line, sizeof line, "%-5s %-22s %16.9g %16s %10.2e %10.1e  %s\n",
                  e.table.c_str(), e.name.c_str(), e.computed,
                  e.published ? format("%.9g", *e.published).c_str() : "-",
                  e.rel_dev, e.tolerance, status_of(e).c_str());
    out << line;
  }
  const auto failed = r.failures();
  out << (failed.empty() ? "all entries within tolerance\n"
                         : std::to_string(failed.size()) + " entries out of tolerance\n");
}

}  // namespace steklov
