#include "harbourne/document.hpp"

#include "harbourne/error.hpp"

#include "json.hpp"

#include <charconv>
#include <limits>
#include <set>

namespace harbourne {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorKind::ParseError, message);
}

void reject_unknown(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) parse_fail("unknown field '" + key + "' in " + where);
  }
}

std::int64_t as_int64(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      parse_fail(where + " is out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!value.is_number_integer()) parse_fail(where + " must be an integer");
  return value.get<std::int64_t>();
}

int parse_multiplicity(const std::string& key) {
  const bool canonical = !key.empty() && key.front() != '0' &&
                         key.find_first_not_of("0123456789") == std::string::npos;
  int k = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
  if (!canonical || ec != std::errc() || ptr != key.data() + key.size()) {
    parse_fail("spectrum key '" + key + "' is not a decimal multiplicity");
  }
  if (k < 2) parse_fail("spectrum key '" + key + "': multiplicity must be >= 2");
  return k;
}

BigInt parse_big_integer(const json& value) {
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text.find('/') != std::string::npos) parse_fail("c_square_override must be an integer");
    return Rat::parse(text).num();
  }
  return BigInt(as_int64(value, "c_square_override"));
}

}  // namespace

ParsedDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("document must be a JSON object");
  reject_unknown(doc, {"label", "surface", "ordinary", "components", "spectrum", "c_square_override"},
                 "document");

  Arrangement arr;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) parse_fail("label must be a string");
    arr.label = doc["label"].get<std::string>();
  }

  if (!doc.contains("surface") || !doc["surface"].is_string()) {
    parse_fail("surface is required and must be \"P2\" or \"abelian\"");
  }
  const auto surface = doc["surface"].get<std::string>();
  if (surface == "P2") {
    arr.surface = Surface::ProjectivePlane;
  } else if (surface == "abelian") {
    arr.surface = Surface::AbelianSurface;
  } else {
    parse_fail("surface must be \"P2\" or \"abelian\", got \"" + surface + "\"");
  }

  if (doc.contains("ordinary")) {
    if (!doc["ordinary"].is_boolean()) parse_fail("ordinary must be a boolean");
    arr.ordinary = doc["ordinary"].get<bool>();
  }

  if (!doc.contains("components") || !doc["components"].is_array()) {
    parse_fail("components is required and must be an array");
  }
  for (const auto& item : doc["components"]) {
    if (!item.is_object()) parse_fail("each component must be an object");
    reject_unknown(item, {"genus", "self_intersection", "count"}, "component");
    for (const char* key : {"genus", "self_intersection", "count"}) {
      if (!item.contains(key)) parse_fail(std::string("component is missing '") + key + "'");
    }
    arr.components.push_back({as_int64(item["genus"], "genus"),
                              as_int64(item["self_intersection"], "self_intersection"),
                              as_int64(item["count"], "count")});
  }

  if (!doc.contains("spectrum") || !doc["spectrum"].is_object()) {
    parse_fail("spectrum is required and must be an object");
  }
  for (const auto& [key, value] : doc["spectrum"].items()) {
    const int k = parse_multiplicity(key);
    const auto count = as_int64(value, "spectrum count for '" + key + "'");
    if (count < 0) parse_fail("spectrum count for '" + key + "' must be >= 0");
    try {
      arr.spectrum.add(k, count);
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  }

  if (doc.contains("c_square_override")) {
    arr.c_square_override = parse_big_integer(doc["c_square_override"]);
  }

  const auto report = validate(arr);
  if (!report.ok()) throw Error(ErrorKind::ValidationError, report.errors.front());
  return {std::move(arr), report.warnings};
}

std::string emit_document(const Arrangement& arr) {
  ordered_json doc;
  doc["label"] = arr.label;
  doc["surface"] = to_string(arr.surface);
  doc["ordinary"] = arr.ordinary;
  doc["components"] = ordered_json::array();
  for (const auto& c : arr.components) {
    ordered_json item;
    item["genus"] = c.genus;
    item["self_intersection"] = c.self_intersection;
    item["count"] = c.count;
    doc["components"].push_back(std::move(item));
  }
  doc["spectrum"] = ordered_json::object();
  for (const auto& [k, t] : arr.spectrum.counts()) doc["spectrum"][std::to_string(k)] = t;
  if (arr.c_square_override) {
    const BigInt& v = *arr.c_square_override;
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      doc["c_square_override"] = static_cast<std::int64_t>(v);
    } else {
      doc["c_square_override"] = v.str();
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace harbourne
