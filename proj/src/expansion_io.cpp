#include "steklov/expansion_io.hpp"

#include <cmath>
#include <limits>
#include <json.hpp>

#include "steklov/errors.hpp"

namespace steklov {

using Json = nlohmann::ordered_json;

namespace {

std::string class_label(const ModeId& id) {
  return id.kind == ModeKind::XY ? "XY" : std::string(to_string(id.symmetry));
}

ModeId parse_id(const std::string& cls, const std::string& family, int index) {
  if (cls == "XY") {
    if (index != 0) throw FormatError("xy mode must have index 0");
    return ModeId::xy();
  }
  SymmetryClass c;
  if (cls == "I") {
    c = SymmetryClass::I;
  } else if (cls == "II") {
    c = SymmetryClass::II;
  } else if (cls == "III") {
    c = SymmetryClass::III;
  } else if (cls == "IV") {
    c = SymmetryClass::IV;
  } else {
    throw FormatError("unknown symmetry class '" + cls + "'");
  }
  Family f;
  if (family == "X") {
    f = Family::XDominant;
  } else if (family == "Y") {
    f = Family::YDominant;
  } else {
    throw FormatError("unknown family '" + family + "'");
  }
  if (index < 1) throw FormatError("mode index must be positive");
  return ModeId::separated(c, f, index);
}

ProblemKind parse_kind(const std::string& s) {
  if (s == "dirichlet") return ProblemKind::Dirichlet;
  if (s == "robin") return ProblemKind::Robin;
  if (s == "neumann") return ProblemKind::Neumann;
  throw FormatError("unknown expansion kind '" + s + "'");
}

}  // namespace

std::string to_json(const SteklovExpansion& e, int indent) {
  Json doc;
  doc["alpha"] = e.alpha;
  doc["kind"] = std::string(to_string(e.kind));
  if (e.kind == ProblemKind::Robin) doc["t"] = e.t;
  doc["mean_term"] = e.mean_term;
  doc["data_norm"] = e.data_norm;
  doc["quadrature_order"] = e.quadrature.order;
  doc["panels_per_edge"] = e.quadrature.panels_per_edge;
  Json terms = Json::array();
  for (const ExpansionTerm& term : e.terms) {
    const ModeId& id = term.mode.id;
    terms.push_back({{"class", class_label(id)},
                     {"family", std::string(to_string(id.family))},
                     {"index", id.index},
                     {"nu", term.mode.nu},
                     {"delta", term.mode.delta},
                     {"coefficient", term.coefficient}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump(indent);
}

SteklovExpansion expansion_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    SteklovExpansion e;
    e.alpha = doc.at("alpha").get<double>();
    Rectangle rect(e.alpha);  // validates alpha
    e.kind = parse_kind(doc.at("kind").get<std::string>());
    switch (e.kind) {
      case ProblemKind::Dirichlet:
        e.t = 1.0;
        break;
      case ProblemKind::Robin:
        e.t = doc.at("t").get<double>();
        if (!(e.t > 0.0 && e.t <= 1.0)) throw FormatError("t must lie in (0, 1]");
        break;
      case ProblemKind::Neumann:
        e.t = 0.0;
        break;
    }
    e.mean_term = doc.at("mean_term").get<double>();
    e.data_norm = doc.contains("data_norm")
                      ? doc["data_norm"].get<double>()
                      : std::numeric_limits<double>::infinity();
    e.quadrature.order = doc.at("quadrature_order").get<int>();
    if (doc.contains("panels_per_edge")) {
      e.quadrature.panels_per_edge = doc["panels_per_edge"].get<int>();
    }
    for (const Json& t : doc.at("terms")) {
      const ModeId id = parse_id(t.at("class").get<std::string>(),
                                 t.at("family").get<std::string>(),
                                 t.at("index").get<int>());
      const double nu = t.at("nu").get<double>();
      if (id.kind == ModeKind::Separated && !(nu > 0.0)) {
        throw FormatError("mode parameter nu must be positive");
      }
      SteklovMode mode = make_mode(id, e.alpha, nu);
      const double delta = t.at("delta").get<double>();
      if (std::abs(mode.delta - delta) > 1e-12 * (1.0 + std::abs(delta))) {
        throw FormatError("stored delta does not match the mode's nu");
      }
      e.terms.push_back({std::move(mode), t.at("coefficient").get<double>()});
    }
    return e;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("malformed expansion JSON: ") + ex.what());
  } catch (const DomainError& ex) {
    throw FormatError(std::string("invalid expansion: ") + ex.what());
  } catch (const InvalidModeError& ex) {
    throw FormatError(std::string("invalid expansion: ") + ex.what());
  }
}

}  // namespace steklov
