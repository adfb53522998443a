#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pullback/error.hpp"
#include "pullback/portrait.hpp"

namespace pullback {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  std::string_view where) {
  if (!obj.is_object()) throw InputError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError(std::string(where) + ": unknown field '" + key + "'");
    }
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) {
      throw InputError(std::string(where) + ": missing field '" + key + "'");
    }
  }
}

}  // namespace

RamificationPortrait parse_portrait(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("portrait: malformed JSON: ") + e.what());
  }
  require_keys(doc, {"degree", "polynomial", "points"}, "portrait");
  if (!doc["degree"].is_number_integer()) throw InputError("portrait: 'degree' must be an integer");
  if (!doc["polynomial"].is_boolean()) throw InputError("portrait: 'polynomial' must be a boolean");
  if (!doc["points"].is_array()) throw InputError("portrait: 'points' must be a list");

  std::vector<MarkedPoint> points;
  for (const auto& item : doc["points"]) {
    require_keys(item, {"label", "image", "multiplicity"}, "portrait point");
    if (!item["label"].is_string() || !item["image"].is_string()) {
      throw InputError("portrait point: 'label' and 'image' must be strings");
    }
    if (!item["multiplicity"].is_number_integer()) {
      throw InputError("portrait point: 'multiplicity' must be an integer");
    }
    points.push_back({item["label"].get<std::string>(), item["image"].get<std::string>(),
                      item["multiplicity"].get<int>()});
  }
  return RamificationPortrait(doc["degree"].get<int>(), doc["polynomial"].get<bool>(),
                              std::move(points));
}

RamificationPortrait load_portrait(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open portrait file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_portrait(buf.str());
}

std::string portrait_to_json(const RamificationPortrait& portrait) {
  json doc;
  doc["degree"] = portrait.degree();
  doc["polynomial"] = portrait.is_polynomial();
  doc["points"] = json::array();
  for (const auto& p : portrait.points()) {
    doc["points"].push_back(
        {{"label", p.label}, {"image", p.image_label}, {"multiplicity", p.multiplicity}});
  }
  return doc.dump(2);
}

}  // namespace pullback
