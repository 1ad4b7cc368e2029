#include "hyperdyn/reports.hpp"

#include <sstream>

#include "hyperdyn/space_json.hpp"

namespace hyperdyn {

using Json = nlohmann::ordered_json;

namespace {

const char* class_name(StabilityClass c) {
  switch (c) {
    case StabilityClass::Attractor: return "attractor";
    case StabilityClass::Repeller: return "repeller";
    case StabilityClass::BothIsolated: return "both_isolated";
    case StabilityClass::Neither: return "neither";
  }
  return "?";
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["result"] = v.hyper_expansive ? "hyper_expansive" : "not";
  if (v.delta) j["delta"] = v.delta->str();
  if (v.reason) {
    Json r;
    if (v.reason->kind == VerdictReason::Kind::NonHyperbolicPeriodic)
      r["non_hyperbolic_periodic"] = v.reason->point.str();
    else
      r["infinitely_many_orbits"] = true;
    j["reason"] = std::move(r);
  }
  Json omega = Json::array();
  for (const Rational& x : v.omega_set) omega.push_back(x.str());
  j["omega"] = std::move(omega);
  j["orbit_count"] = v.orbit_count;
  return j;
}

Json classification_to_json(const SymbolicSystem& system) {
  Json arr = Json::array();
  for (const PointRef& p : system.periodic_points()) {
    FixedPointClass cls = classify_periodic_point(system, p);
    Json e;
    e["point"] = system.value(p).str();
    e["class"] = class_name(cls.label);
    if (cls.gamma) e["gamma"] = cls.gamma->str();
    if (cls.label == StabilityClass::Neither) {
      e["alpha_chain"] = cls.alpha_chain_id;
      e["omega_chain"] = cls.omega_chain_id;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

Json system_report(const SymbolicSystem& system) {
  Json j = verdict_to_json(hyper_expansive_verdict(system));
  j["periodic_classification"] = classification_to_json(system);
  return j;
}

Json tree_report(const SpaceTree& tree) {
  AdmissibilityReport adm = admits_hyper_expansive(tree);
  OrdinalDescriptor d = limit_degree(tree);
  Json j;
  j["admits_hyper_expansive"] = adm.admits;
  if (adm.card_acu)
    j["card_acu"] = adm.card_acu->convert_to<long long>();
  else
    j["card_acu"] = "infinite";
  j["limit_degree"] = d.finite;
  j["admits_expansive"] = admits_expansive_kp(d);
  return j;
}

Json separation_report_to_json(const SeparationReport& rep) {
  Json j;
  j["M"] = rep.M;
  j["N"] = rep.N;
  j["nested_only"] = rep.nested_only;
  j["c"] = rep.c.str();
  j["witness"] = Json{{"A", point_set_to_json(rep.witness_A)}, {"B", point_set_to_json(rep.witness_B)}};
  j["pairs"] = rep.pairs_examined;
  return j;
}

Json invariant_sets_to_json(const SymbolicSystem& system, const std::vector<InvariantSubset>& sets) {
  Json arr = Json::array();
  for (const InvariantSubset& s : sets) {
    Json e;
    Json lims = Json::array();
    for (int i : s.limit_indices) lims.push_back(system.limits()[i].id);
    Json chs = Json::array();
    for (int c : s.chain_indices) chs.push_back(system.chains()[c].id);
    e["limits"] = std::move(lims);
    e["chains"] = std::move(chs);
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string system_to_dot(const SymbolicSystem& system) {
  std::ostringstream out;
  out << "digraph space {\n";
  out << "  rankdir=LR;\n";
  std::map<int, char> limit_tag;
  for (int i = 0; i < static_cast<int>(system.limits().size()); ++i) {
    FixedPointClass cls = classify_periodic_point(system, {PointRef::Kind::Limit, i, 0});
    char tag = 'N';
    if (cls.label == StabilityClass::Attractor) tag = 'A';
    if (cls.label == StabilityClass::Repeller) tag = 'R';
    limit_tag[i] = tag;
    out << "  \"" << system.limits()[i].id << "\" [shape=doublecircle, label=\""
        << system.limits()[i].value.str() << " (" << tag << ")\"];\n";
  }
  for (int i = 0; i < static_cast<int>(system.limits().size()); ++i)
    out << "  \"" << system.limits()[i].id << "\" -> \"" << system.limits()[system.perm(i)].id
        << "\";\n";
  for (int c = 0; c < static_cast<int>(system.chains().size()); ++c) {
    const OrbitChain& ch = system.chains()[c];
    if (ch.kind == OrbitChain::Kind::Periodic) {
      for (size_t j = 0; j < ch.cycle.size(); ++j) {
        out << "  \"" << ch.id << ":" << j << "\" [label=\"" << ch.cycle[j].str() << "\"];\n";
      }
      for (size_t j = 0; j < ch.cycle.size(); ++j)
        out << "  \"" << ch.id << ":" << j << "\" -> \"" << ch.id << ":"
            << (j + 1) % ch.cycle.size() << "\";\n";
      continue;
    }
    out << "  \"" << ch.id << ":alpha\" [label=\"...\", shape=plaintext];\n";
    for (long long k = -3; k <= 3; ++k)
      out << "  \"" << ch.id << ":" << k << "\" [label=\""
          << ch.generator->chain_point(k).str() << "\"];\n";
    out << "  \"" << ch.id << ":omega\" [label=\"...\", shape=plaintext];\n";
    const OrbitChain& img = system.chains()[system.route(c)];
    out << "  \"" << ch.id << ":alpha\" -> \"" << img.id << ":-3\";\n";
    for (long long k = -3; k < 3; ++k)
      out << "  \"" << ch.id << ":" << k << "\" -> \"" << img.id << ":" << k + 1 << "\";\n";
    out << "  \"" << ch.id << ":3\" -> \"" << img.id << ":omega\";\n";
    out << "  \"" << ch.id << ":alpha\" -> \"" << ch.alpha_id << "\" [style=dashed, arrowhead=none];\n";
    out << "  \"" << ch.id << ":omega\" -> \"" << ch.omega_id << "\" [style=dashed, arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperdyn
