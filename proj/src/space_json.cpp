#include "hyperdyn/space_json.hpp"

#include <set>

namespace hyperdyn {

namespace {

void require_keys(const Json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!required.count(key) && !optional.count(key))
      throw InputError(where + ": unknown field \"" + key + "\"");
  for (const auto& key : required)
    if (!obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
}

Rational rational_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": rationals must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

ChainGenerator generator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError("generator: missing kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "logistic") {
    require_keys(j, {"kind", "p", "q"}, {}, "logistic generator");
    return ChainGenerator::logistic(rational_field(j.at("p"), "generator p"),
                                    rational_field(j.at("q"), "generator q"));
  }
  if (kind == "harmonic") {
    require_keys(j, {"kind", "a", "b"}, {}, "harmonic generator");
    return ChainGenerator::harmonic(rational_field(j.at("a"), "generator a"),
                                    rational_field(j.at("b"), "generator b"));
  }
  if (kind == "explicit_head") {
    require_keys(j, {"kind", "head", "tail"}, {}, "explicit_head generator");
    if (!j.at("head").is_array()) throw InputError("explicit_head: head must be an array");
    std::vector<Rational> head;
    for (const auto& v : j.at("head")) head.push_back(rational_field(v, "generator head"));
    return ChainGenerator::explicit_head(std::move(head), generator_from_json(j.at("tail")));
  }
  throw InputError("generator: unknown kind \"" + kind + "\"");
}

Json generator_to_json(const ChainGenerator& gen) {
  Json j;
  switch (gen.kind()) {
    case ChainGenerator::Kind::Logistic:
      j["kind"] = "logistic";
      j["p"] = gen.first_param().str();
      j["q"] = gen.second_param().str();
      break;
    case ChainGenerator::Kind::Harmonic:
      j["kind"] = "harmonic";
      j["a"] = gen.first_param().str();
      j["b"] = gen.second_param().str();
      break;
    case ChainGenerator::Kind::ExplicitHead: {
      j["kind"] = "explicit_head";
      Json head = Json::array();
      for (const Rational& v : gen.head()) head.push_back(v.str());
      j["head"] = std::move(head);
      j["tail"] = generator_to_json(gen.tail());
      break;
    }
  }
  return j;
}

SymbolicSystem parse_space(const Json& doc) {
  require_keys(doc, {"limits", "limit_perm", "chains"}, {}, "space document");
  if (!doc.at("limits").is_array()) throw InputError("limits must be an array");
  if (!doc.at("limit_perm").is_object()) throw InputError("limit_perm must be an object");
  if (!doc.at("chains").is_array()) throw InputError("chains must be an array");

  std::vector<LimitPoint> limits;
  for (const auto& l : doc.at("limits")) {
    require_keys(l, {"id", "value"}, {}, "limit point");
    if (!l.at("id").is_string()) throw InputError("limit id must be a string");
    limits.push_back({l.at("id").get<std::string>(), rational_field(l.at("value"), "limit value")});
  }

  std::map<std::string, std::string> perm;
  for (const auto& [from, to] : doc.at("limit_perm").items()) {
    if (!to.is_string()) throw InputError("limit_perm values must be limit ids");
    perm[from] = to.get<std::string>();
  }

  std::vector<OrbitChain> chains;
  for (const auto& c : doc.at("chains")) {
    if (!c.is_object() || !c.contains("kind") || !c.at("kind").is_string())
      throw InputError("chain: missing kind");
    OrbitChain ch;
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "bi_infinite") {
      require_keys(c, {"id", "kind", "alpha", "omega", "generator"}, {}, "bi_infinite chain");
      ch.kind = OrbitChain::Kind::BiInfinite;
      ch.id = c.at("id").get<std::string>();
      ch.alpha_id = c.at("alpha").get<std::string>();
      ch.omega_id = c.at("omega").get<std::string>();
      ch.generator = generator_from_json(c.at("generator"));
    } else if (kind == "periodic") {
      require_keys(c, {"id", "kind", "cycle"}, {}, "periodic chain");
      ch.kind = OrbitChain::Kind::Periodic;
      ch.id = c.at("id").get<std::string>();
      if (!c.at("cycle").is_array()) throw InputError("periodic chain cycle must be an array");
      for (const auto& v : c.at("cycle")) ch.cycle.push_back(rational_field(v, "cycle point"));
    } else {
      throw InputError("chain: unknown kind \"" + kind + "\"");
    }
    chains.push_back(std::move(ch));
  }

  return SymbolicSystem(std::move(limits), std::move(perm), std::move(chains));
}

SymbolicSystem parse_space_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_space(doc);
}

Json space_to_json(const SymbolicSystem& system) {
  Json j;
  Json limits = Json::array();
  for (const auto& lp : system.limits())
    limits.push_back(Json{{"id", lp.id}, {"value", lp.value.str()}});
  j["limits"] = std::move(limits);
  Json perm = Json::object();
  for (const auto& lp : system.limits()) perm[lp.id] = system.limit_perm().at(lp.id);
  j["limit_perm"] = std::move(perm);
  Json chains = Json::array();
  for (const auto& ch : system.chains()) {
    Json c;
    c["id"] = ch.id;
    if (ch.kind == OrbitChain::Kind::BiInfinite) {
      c["kind"] = "bi_infinite";
      c["alpha"] = ch.alpha_id;
      c["omega"] = ch.omega_id;
      c["generator"] = generator_to_json(*ch.generator);
    } else {
      c["kind"] = "periodic";
      Json cyc = Json::array();
      for (const Rational& v : ch.cycle) cyc.push_back(v.str());
      c["cycle"] = std::move(cyc);
    }
    chains.push_back(std::move(c));
  }
  j["chains"] = std::move(chains);
  return j;
}

Json point_set_to_json(const PointSet& s) {
  Json arr = Json::array();
  for (const Rational& v : s) arr.push_back(v.str());
  return arr;
}

PointSet point_set_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("point set must be a JSON array of \"p/q\" strings");
  std::vector<Rational> pts;
  for (const auto& v : j) pts.push_back(rational_field(v, "point set"));
  return PointSet(std::move(pts));
}

}  // namespace hyperdyn
