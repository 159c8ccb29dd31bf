#pragma once

// JSON form of an expansion:
//
//   {"alpha", "kind", "t" (robin only), "mean_term", "data_norm",
//    "quadrature_order", "panels_per_edge",
//    "terms": [{"class", "family", "index", "nu", "delta", "coefficient"}]}
//
// Numbers are written in shortest round-trip form, so reading a document
// back yields bit-identical doubles. Modes are rebuilt from the stored nu.

#include <string>
#include <string_view>

#include "steklov/expansion.hpp"

namespace steklov {

std::string to_json(const SteklovExpansion& e, int indent = 2);

/// FormatError on malformed documents or inconsistent mode data.
SteklovExpansion expansion_from_json(std::string_view text);

}  // namespace steklov
