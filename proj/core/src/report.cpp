#include "biunary/report.hpp"

#include <json.hpp>

namespace biunary {
namespace {

nlohmann::ordered_json record(const CheckReport& r,
                              std::span<const std::string> names) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["holds"] = r.holds;
  if (r.witness) {
    auto labels = nlohmann::ordered_json::array();
    for (Element x : *r.witness) labels.push_back(format_element(names, x));
    j["witness"] = labels;
    j["witness_indices"] = *r.witness;
    j["component"] = r.failed_component;
    j["part"] = r.part;
    j["lhs"] = format_element(names, r.lhs);
    j["rhs"] = format_element(names, r.rhs);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace

std::string format_element(std::span<const std::string> names, Element x) {
  if (x == kUndefined) return "undefined";
  if (x == kUnknown) return "unknown";
  return x < names.size() ? names[x] : std::to_string(x);
}

std::string format_tuple(std::span<const std::string> names, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += format_element(names, t[i]);
  }
  return s + ")";
}

std::string to_text(const CheckReport& r, std::span<const std::string> names) {
  if (r.holds) return r.law + " holds";
  std::string s = r.law + " fails at " + format_tuple(names, *r.witness);
  if (!r.failed_component.empty() && r.failed_component != r.law)
    s += " in " + r.failed_component;
  s += " [part " + std::to_string(r.part) + ": " + format_element(names, r.lhs) +
       " vs " + format_element(names, r.rhs) + "]";
  return s;
}

std::string to_json(const std::vector<CheckReport>& reports,
                    std::span<const std::string> names) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(record(r, names));
  return arr.dump(2);
}

std::string to_text(const Classification& c, std::span<const std::string> names) {
  std::string s;
  if (c.precat_failure)
    s += "not a precat-semigroup: " + to_text(*c.precat_failure, names) + "\n";
  for (const auto& [id, yes] : c.classes)
    s += std::string(tag(id)) + (yes ? " yes\n" : " no\n");
  return s;
}

std::string to_json(const Classification& c, std::span<const std::string> names) {
  nlohmann::ordered_json j;
  j["precat"] = !c.precat_failure.has_value();
  if (c.precat_failure) j["precat_failure"] = record(*c.precat_failure, names);
  nlohmann::ordered_json classes;
  for (const auto& [id, yes] : c.classes) classes[std::string(tag(id))] = yes;
  j["classes"] = classes;
  return j.dump(2);
}

std::string to_text(const CategoryClassification& c) {
  std::string s;
  for (const auto& [id, yes] : c.classes)
    s += std::string(tag(id)) + (yes ? " yes\n" : " no\n");
  return s;
}

std::string to_json(const CategoryClassification& c) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json classes;
  for (const auto& [id, yes] : c.classes) classes[std::string(tag(id))] = yes;
  j["classes"] = classes;
  return j.dump(2);
}

}  // namespace biunary
