#pragma once

#include "harbourne/arrangement.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace harbourne {

/// JSON arrangement document:
///
///   {
///     "label": "hirzebruch-gauss",            optional, default ""
///     "surface": "abelian",                   "P2" | "abelian"
///     "ordinary": true,                       optional, default true
///     "components": [{"genus": 1, "self_intersection": 0, "count": 4}],
///     "spectrum": {"4": 1},                   decimal multiplicity -> count
///     "c_square_override": 12                 optional; integer or decimal string
///   }
///
/// Unknown keys are rejected. Syntax and schema problems raise ParseError;
/// hard invariant failures raise ValidationError.
struct ParsedDocument {
  Arrangement arrangement;
  std::vector<std::string> warnings;
};

ParsedDocument parse_document(std::string_view text);

/// Canonical document for `arr`: fixed key order, two-space indent, trailing
/// newline. parse_document(emit_document(a)).arrangement == a.
std::string emit_document(const Arrangement& arr);

}  // namespace harbourne
