#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "steklov/bounds.hpp"
#include "steklov/builtins.hpp"
#include "steklov/errors.hpp"
#include "steklov/expansion.hpp"
#include "steklov/expansion_io.hpp"
#include "steklov/parallel.hpp"

namespace steklov::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  double alpha = 1.0;
  int M = 12;
  int jmax = 6;
  std::string classes = "all";
  int quad_order = 32;
  double root_tol = kDefaultRootTol;
  std::string format = "text";
  std::string out_path;
  std::string data;
  std::string builtin;
  std::string mode = "dirichlet";
  std::optional<double> t;
  std::string eval;
};

std::string num9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string class_label(const ModeId& id) {
  return id.kind == ModeKind::XY ? "XY" : std::string(to_string(id.symmetry));
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--alpha", c.alpha, "Aspect ratio, 0 < alpha <= 1")
      ->capture_default_str();
  sub->add_option("--quad-order", c.quad_order, "Gauss-Legendre nodes per panel")
      ->check(CLI::Range(2, 512))
      ->capture_default_str();
  sub->add_option("--root-tol", c.root_tol, "Root tolerance on nu")
      ->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write results to this file");
}

void add_data(CLI::App* sub, Config& c) {
  auto* data = sub->add_option("--data", c.data,
                               "Boundary samples, CSV with header arclength,value");
  auto* builtin = sub->add_option("--builtin", c.builtin,
                                  "Builtin harmonic data NAME[:param]");
  data->excludes(builtin);
}

void validate_common(const Config& c) {
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) {
    throw UsageError("--alpha must satisfy 0 < alpha <= 1; rotate and rescale "
                     "the rectangle so that its longer side is (-1, 1)");
  }
  if (!(c.root_tol > 0.0)) throw UsageError("--root-tol must be positive");
}

ClassFilter parse_classes(const std::string& text) {
  if (text == "all") return ClassFilter::all();
  ClassFilter f = ClassFilter::none();
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "I") {
      f = f.with(SymmetryClass::I);
    } else if (tok == "II") {
      f = f.with(SymmetryClass::II);
    } else if (tok == "III") {
      f = f.with(SymmetryClass::III);
    } else if (tok == "IV") {
      f = f.with(SymmetryClass::IV);
    } else {
      throw UsageError("--classes takes 'all' or a comma list of I, II, III, IV");
    }
  }
  if (f.empty()) throw UsageError("--classes selects no class");
  return f;
}

struct Point {
  double x;
  double y;
};

std::vector<Point> parse_points(const std::string& text, const Rectangle& rect) {
  std::vector<Point> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    Point p{};
    try {
      std::size_t used = 0;
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      const std::string xs = item.substr(0, comma);
      const std::string ys = item.substr(comma + 1);
      p.x = std::stod(xs, &used);
      if (used != xs.size()) throw std::invalid_argument(xs);
      p.y = std::stod(ys, &used);
      if (used != ys.size()) throw std::invalid_argument(ys);
    } catch (const std::logic_error&) {
      throw UsageError("--eval expects \"x,y;x,y;...\", got '" + item + "'");
    }
    if (!rect.contains(p.x, p.y)) {
      throw UsageError("--eval point (" + item + ") is outside the rectangle");
    }
    out.push_back(p);
  }
  return out;
}

struct DataSource {
  BoundaryFunction fn;
  std::optional<HarmonicBuiltin> builtin;
};

DataSource load_data(const Config& c, const Rectangle& rect) {
  if (c.builtin.empty() && c.data.empty()) {
    throw UsageError("boundary data required: pass --builtin NAME or --data FILE");
  }
  if (!c.builtin.empty()) {
    try {
      HarmonicBuiltin b = parse_builtin(c.builtin);
      BoundaryFunction fn = b.trace();
      return {std::move(fn), std::move(b)};
    } catch (const FormatError& e) {
      throw UsageError(e.what());
    }
  }
  return {load_sampled_csv(rect, c.data), std::nullopt};
}

ExpansionOptions options_of(const Config& c) {
  ExpansionOptions o;
  o.quad_order = c.quad_order;
  o.root_tol = c.root_tol;
  return o;
}

// Applies --mode/--t to a Dirichlet expansion of the data.
SteklovExpansion apply_mode(const Config& c, SteklovExpansion e) {
  if (c.mode == "robin") return apply_robin(std::move(e), *c.t);
  if (c.mode == "neumann") return apply_neumann(std::move(e));
  return e;
}

void validate_mode(Config& c) {
  if (c.mode == "robin") {
    if (!c.t) throw UsageError("--mode robin needs --t in (0, 1]");
    if (!(*c.t > 0.0 && *c.t <= 1.0)) throw UsageError("--t must lie in (0, 1]");
  } else if (c.t) {
    throw UsageError("--t applies only to --mode robin");
  }
}

// --- spectrum ---------------------------------------------------------------

int cmd_spectrum(const Config& c, std::ostream& out) {
  const Rectangle rect(c.alpha);
  const ClassFilter filter = parse_classes(c.classes);
  if (c.jmax < 1) throw UsageError("--jmax must be at least 1");
  std::vector<ModeId> ids;
  if (rect.is_square() && filter.contains(SymmetryClass::II)) ids.push_back(ModeId::xy());
  for (SymmetryClass s : {SymmetryClass::I, SymmetryClass::II, SymmetryClass::III,
                          SymmetryClass::IV}) {
    if (!filter.contains(s)) continue;
    for (Family f : {Family::XDominant, Family::YDominant}) {
      for (int j = 1; j <= c.jmax; ++j) ids.push_back(ModeId::separated(s, f, j));
    }
  }
  std::vector<SteklovMode> modes(ids.size());
  parallel_for(ids.size(), [&](std::size_t i) {
    modes[i] = resolve(ids[i], c.alpha, c.root_tol);
  });
  std::sort(modes.begin(), modes.end(), spectral_less);

  if (c.format == "json") {
    Json doc;
    doc["alpha"] = c.alpha;
    Json rows = Json::array();
    for (const SteklovMode& m : modes) {
      rows.push_back({{"class", class_label(m.id)},
                      {"family", std::string(to_string(m.id.family))},
                      {"index", m.id.index},
                      {"nu", m.nu},
                      {"delta", m.delta},
                      {"norm_sq", m.norm_sq},
                      {"log_norm_sq", m.log_norm_sq},
                      {"scale", m.scale}});
    }
    doc["modes"] = std::move(rows);
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "class,family,index,nu,delta,norm_sq,log_norm_sq,scale\n";
    for (const SteklovMode& m : modes) {
      out << class_label(m.id) << ',' << to_string(m.id.family) << ','
          << m.id.index << ',' << num17(m.nu) << ',' << num17(m.delta) << ','
          << num17(m.norm_sq) << ',' << num17(m.log_norm_sq) << ','
          << num17(m.scale) << '\n';
    }
  } else {
    char line[200];
    std::snprintf(line, sizeof line, "%-5s %-6s %5s %16s %16s %16s %16s\n", "class",
                  "family", "j", "nu", "delta", "norm_sq", "scale");
    out << line;
    for (const SteklovMode& m : modes) {
      std::snprintf(line, sizeof line, "%-5s %-6s %5d %16.9g %16.9g %16.9g %16.9g\n",
                    class_label(m.id).c_str(),
                    std::string(to_string(m.id.family)).c_str(), m.id.index, m.nu,
                    m.delta, m.norm_sq, m.scale);
      out << line;
    }
  }
  return kOk;
}

// --- central ----------------------------------------------------------------

int cmd_central(Config& c, std::ostream& out) {
  const Rectangle rect(c.alpha);
  validate_mode(c);
  if (c.M < 0) throw UsageError("--m must be non-negative");
  const DataSource data = load_data(c, rect);
  const SteklovExpansion e =
      apply_mode(c, expand_central(data.fn, c.alpha, c.M, options_of(c)));
  const CentralValueResult r = central_value(e, c.root_tol);

  std::vector<std::pair<std::string, double>> fields = {
      {"value", r.value}, {"bound", r.bound}, {"data_norm", r.data_norm}};
  if (data.builtin && c.mode == "dirichlet") {
    const double exact = data.builtin->value(0.0, 0.0);
    fields.push_back({"exact", exact});
    fields.push_back({"error", std::abs(exact - r.value)});
  }
  const std::vector<std::pair<std::string, int>> counts = {
      {"M", r.M}, {"m", r.m}, {"m_x", r.m_x}, {"m_y", r.m_y}};

  if (c.format == "json") {
    Json doc;
    doc["alpha"] = c.alpha;
    doc["kind"] = std::string(to_string(e.kind));
    if (e.kind == ProblemKind::Robin) doc["t"] = e.t;
    for (const auto& [k, v] : fields) doc[k] = v;
    for (const auto& [k, v] : counts) doc[k] = v;
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::string head = "alpha,kind,t";
    std::string row = num17(c.alpha) + ',' + std::string(to_string(e.kind)) + ',' + num17(e.t);
    for (const auto& [k, v] : fields) {
      head += ',' + k;
      row += ',' + num17(v);
    }
    for (const auto& [k, v] : counts) {
      head += ',' + k;
      row += ',' + std::to_string(v);
    }
    out << head << '\n' << row << '\n';
  } else {
    out << "kind       " << to_string(e.kind) << '\n';
    if (e.kind == ProblemKind::Robin) out << "t          " << num9(e.t) << '\n';
    for (const auto& [k, v] : fields) {
      out << k << std::string(11 - std::min<std::size_t>(k.size(), 10), ' ') << num9(v)
          << '\n';
    }
    for (const auto& [k, v] : counts) {
      out << k << std::string(11 - std::min<std::size_t>(k.size(), 10), ' ') << v << '\n';
    }
  }
  return kOk;
}

// --- solve ------------------------------------------------------------------

int cmd_solve(Config& c, std::ostream& out) {
  const Rectangle rect(c.alpha);
  validate_mode(c);
  if (c.M < 0) throw UsageError("--m must be non-negative");
  const std::vector<Point> points = parse_points(c.eval, rect);
  const DataSource data = load_data(c, rect);
  const SteklovExpansion e =
      apply_mode(c, expand_dirichlet(data.fn, c.alpha, c.M, options_of(c)));
  std::vector<double> values;
  for (const Point& p : points) values.push_back(evaluate_interior(e, p.x, p.y));

  if (c.format == "json") {
    Json doc;
    doc["expansion"] = Json::parse(to_json(e));
    Json vals = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      vals.push_back({{"x", points[i].x}, {"y", points[i].y}, {"value", values[i]}});
    }
    doc["values"] = std::move(vals);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  if (c.format == "csv") {
    out << "class,family,index,nu,delta,coefficient\n";
    out << "const,,0,0,0," << num17(e.mean_term) << '\n';
    for (const ExpansionTerm& t : e.terms) {
      out << class_label(t.mode.id) << ',' << to_string(t.mode.id.family) << ','
          << t.mode.id.index << ',' << num17(t.mode.nu) << ','
          << num17(t.mode.delta) << ',' << num17(t.coefficient) << '\n';
    }
    if (!points.empty()) {
      out << "\nx,y,value\n";
      for (std::size_t i = 0; i < points.size(); ++i) {
        out << num17(points[i].x) << ',' << num17(points[i].y) << ','
            << num17(values[i]) << '\n';
      }
    }
    return kOk;
  }
  out << "kind       " << to_string(e.kind) << '\n';
  if (e.kind == ProblemKind::Robin) out << "t          " << num9(e.t) << '\n';
  out << "alpha      " << num9(e.alpha) << '\n'
      << "M          " << e.truncation() << '\n'
      << "mean_term  " << num9(e.mean_term) << '\n'
      << "data_norm  " << num9(e.data_norm) << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-6s %5s %16s %16s %16s\n", "class", "family",
                "j", "nu", "delta", "coefficient");
  out << line;
  for (const ExpansionTerm& t : e.terms) {
    std::snprintf(line, sizeof line, "%-5s %-6s %5d %16.9g %16.9g %16.9g\n",
                  class_label(t.mode.id).c_str(),
                  std::string(to_string(t.mode.id.family)).c_str(), t.mode.id.index,
                  t.mode.nu, t.mode.delta, t.coefficient);
    out << line;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "h(" << num9(points[i].x) << ", " << num9(points[i].y)
        << ") = " << num9(values[i]) << '\n';
  }
  return kOk;
}

// --- tables -----------------------------------------------------------------

int cmd_tables(const Config& c, std::ostream& out, std::ostream& err) {
  const TablesReport report = reproduce_tables(c.root_tol);
  if (c.format == "json") {
    Json rows = Json::array();
    for (const TableEntry& e : report.entries) {
      Json row = {{"table", e.table},      {"name", e.name},
                  {"computed", e.computed}};
      row["published"] = e.published ? Json(*e.published) : Json(nullptr);
      row["rel_dev"] = e.rel_dev;
      row["tolerance"] = e.tolerance;
      row["status"] = e.informational ? "info" : e.pass() ? "ok" : "FAIL";
      rows.push_back(std::move(row));
    }
    Json doc;
    doc["entries"] = std::move(rows);
    doc["all_pass"] = report.all_pass();
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    write_csv(report, out);
  } else {
    write_text(report, out);
  }
  const auto failed = report.failures();
  for (const TableEntry* e : failed) {
    err << "table " << e->table << ' ' << e->name << ": computed "
        << num9(e->computed) << ", published " << num9(*e->published)
        << ", relative deviation " << num9(e->rel_dev) << " > " << num9(e->tolerance)
        << '\n';
  }
  return failed.empty() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic Steklov eigenfunctions of rectangles", "steklov"};
  app.require_subcommand(1);
  Config c;

  auto* spectrum = app.add_subcommand("spectrum", "List eigen-parameters and eigenvalues");
  add_common(spectrum, c);
  spectrum->add_option("--classes", c.classes, "all, or a comma list of I, II, III, IV")
      ->capture_default_str();
  spectrum->add_option("--jmax", c.jmax, "Indices per class and family")
      ->capture_default_str();

  auto* central = app.add_subcommand("central", "Certified central value of harmonic data");
  add_common(central, c);
  add_data(central, c);
  central->add_option("--m", c.M, "Class I indices per family")->capture_default_str();
  central->add_option("--mode", c.mode, "Boundary condition")
      ->check(CLI::IsMember({"dirichlet", "robin", "neumann"}))
      ->capture_default_str();
  central->add_option("--t", c.t, "Robin weight in (0, 1]");

  auto* solve = app.add_subcommand("solve", "Expand data and solve a boundary problem");
  add_common(solve, c);
  add_data(solve, c);
  solve->add_option("--m", c.M, "Number of non-constant modes")->capture_default_str();
  solve->add_option("--mode", c.mode, "Boundary condition")
      ->check(CLI::IsMember({"dirichlet", "robin", "neumann"}))
      ->capture_default_str();
  solve->add_option("--t", c.t, "Robin weight in (0, 1]");
  solve->add_option("--eval", c.eval, "Evaluation points \"x,y;x,y;...\"");

  auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
  add_common(tables, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  std::ostream& sink = c.out_path.empty() ? out : buffer;
  int code = kOk;
  try {
    validate_common(c);
    if (*spectrum) {
      code = cmd_spectrum(c, sink);
    } else if (*central) {
      code = cmd_central(c, sink);
    } else if (*solve) {
      code = cmd_solve(c, sink);
    } else {
      code = cmd_tables(c, sink, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write '" << c.out_path << "'\n";
      return kFailure;
    }
  }
  return code;
}

}  // namespace steklov::cli
