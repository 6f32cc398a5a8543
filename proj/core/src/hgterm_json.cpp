#include <json.hpp>

#include "markovwz/hgterm.hpp"

namespace markovwz::hg {

namespace {

using nlohmann::json;

json rationals(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.str());
  return arr;
}

std::vector<Rational> read_rationals(const json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

json parse_object(const std::string& text) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ParseError("spec JSON must be an object");
    return j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid spec JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const HGSpec& spec) {
  json j;
  j["upper"] = rationals(spec.upper);
  j["lower"] = rationals(spec.lower);
  j["z"] = spec.z.str();
  return j.dump();
}

std::string to_json(const BHGSpec& spec) {
  json j;
  j["upper"] = rationals(spec.upper);
  j["lower"] = rationals(spec.lower);
  j["q"] = spec.q.str();
  j["z"] = spec.z.str();
  return j.dump();
}

HGSpec hg_spec_from_json(const std::string& text) {
  const json j = parse_object(text);
  HGSpec spec;
  spec.upper = read_rationals(j, "upper");
  spec.lower = read_rationals(j, "lower");
  spec.z = j.contains("z") ? Rational::parse(j.at("z").get<std::string>()) : Rational(1);
  return spec;
}

BHGSpec bhg_spec_from_json(const std::string& text) {
  const json j = parse_object(text);
  if (!j.contains("q")) throw ParseError("basic hypergeometric spec requires \"q\"");
  BHGSpec spec;
  spec.upper = read_rationals(j, "upper");
  spec.lower = read_rationals(j, "lower");
  spec.q = Rational::parse(j.at("q").get<std::string>());
  spec.z = j.contains("z") ? Rational::parse(j.at("z").get<std::string>()) : Rational(1);
  return spec;
}

}  // namespace markovwz::hg
