#pragma once

#include <json.hpp>

#include "hyperdyn/dynamics.hpp"
#include "hyperdyn/oracle.hpp"
#include "hyperdyn/tree.hpp"

namespace hyperdyn {

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json classification_to_json(const SymbolicSystem& system);

/// Verdict + per-point classification, the `analyze` output for systems.
nlohmann::ordered_json system_report(const SymbolicSystem& system);

/// {"admits_hyper_expansive", "card_acu", "limit_degree", "admits_expansive"},
/// the `analyze` output for trees.
nlohmann::ordered_json tree_report(const SpaceTree& tree);

nlohmann::ordered_json separation_report_to_json(const SeparationReport& rep);

nlohmann::ordered_json invariant_sets_to_json(const SymbolicSystem& system,
                                              const std::vector<InvariantSubset>& sets);

/// DOT digraph of the map action: limit points as double circles labeled with
/// their stability class, chain points for indices -3..3 with ellipsis nodes
/// at both ends, periodic cycles as plain cycles. Node order is deterministic.
std::string system_to_dot(const SymbolicSystem& system);

}  // namespace hyperdyn
