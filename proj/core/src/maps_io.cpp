#include "pullback/maps_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pullback/complex_io.hpp"
#include "pullback/error.hpp"

namespace pullback {
namespace {

using nlohmann::json;

json parse_document(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

void require_exact_keys(const json& obj, const std::set<std::string>& keys, std::string_view where) {
  if (!obj.is_object()) throw InputError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!keys.count(key)) throw InputError(std::string(where) + ": unknown field '" + key + "'");
  }
  for (const auto& key : keys) {
    if (!obj.contains(key)) throw InputError(std::string(where) + ": missing field '" + key + "'");
  }
}

Complex coefficient(const json& item, std::string_view where) {
  if (item.is_number()) return {item.get<double>(), 0.0};
  if (item.is_string()) return parse_complex(item.get<std::string>());
  throw InputError(std::string(where) + ": coefficients must be numbers or \"re,im\" strings");
}

ComplexPoly coefficient_list(const json& list, std::string_view where) {
  if (!list.is_array() || list.empty()) {
    throw InputError(std::string(where) + ": expected a non-empty coefficient list");
  }
  ComplexVector coeffs;
  for (const auto& item : list) coeffs.push_back(coefficient(item, where));
  return ComplexPoly(std::move(coeffs));
}

RationalMap map_from_json(const json& obj, std::string_view where) {
  require_exact_keys(obj, {"num", "den"}, where);
  ComplexPoly num = coefficient_list(obj["num"], std::string(where) + ".num");
  ComplexPoly den = coefficient_list(obj["den"], std::string(where) + ".den");
  if (den.is_zero()) throw InputError(std::string(where) + ": zero denominator");
  return RationalMap(std::move(num), std::move(den));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RationalMap parse_rational_map(std::string_view json_text) {
  return map_from_json(parse_document(json_text, "map"), "map");
}

RationalMap load_rational_map(const std::string& path) {
  return parse_rational_map(read_file(path));
}

DecompositionInstance parse_decomposition(std::string_view json_text) {
  const json doc = parse_document(json_text, "maps");
  require_exact_keys(doc, {"s", "g", "A"}, "maps");
  DecompositionInstance out{map_from_json(doc["s"], "s"), map_from_json(doc["g"], "g"), {}};
  if (!doc["A"].is_array()) throw InputError("maps: 'A' must be a list of points");
  for (const auto& item : doc["A"]) {
    if (item.is_number()) {
      out.marked.emplace_back(item.get<double>());
    } else if (item.is_string()) {
      out.marked.push_back(parse_sphere_point(item.get<std::string>()));
    } else {
      throw InputError("maps: points of 'A' must be numbers, \"re,im\" or \"inf\"");
    }
  }
  return out;
}

DecompositionInstance load_decomposition(const std::string& path) {
  return parse_decomposition(read_file(path));
}

}  // namespace pullback
