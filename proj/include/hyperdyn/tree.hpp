#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperdyn/generator.hpp"
#include "hyperdyn/point_set.hpp"

namespace hyperdyn {

struct TreeNode;

/// An infinite sequence of child nodes attached to a tree node, converging to
/// the node's value from the declared side.
///
/// Children with index <= materialized_to are stored explicitly (indices may
/// skip values deduplicated against an endpoint). Children beyond
/// materialized_to exist as points (value = gen.term(index)) and carry no
/// explicit structure; tail_survive records how many successive derived-set
/// passes those tail children survive. Cofinally many tail children share
/// this count, which is what derived-set retention and the limit degree
/// depend on.
struct TreeSeq {
  enum class Side { Left, Right };
  Side side = Side::Right;
  ChainGenerator gen;
  BigInt materialized_to = 0;
  std::vector<std::pair<BigInt, TreeNode>> children;  // ascending index
  int tail_survive = 0;
};

struct TreeNode {
  Rational value;
  std::vector<TreeSeq> attached;
};

/// Finite-rank recursive description of a countable compact subset of the
/// line: finitely many roots, each with finitely-described attached sequences.
struct SpaceTree {
  std::vector<TreeNode> roots;
};

bool tree_is_empty(const SpaceTree& t);
/// True iff the realized point set is infinite (equivalently: any sequence
/// is present anywhere in the tree).
bool tree_is_infinite(const SpaceTree& t);
/// Number of nodes when the realized set is finite.
BigInt tree_node_count(const SpaceTree& t);

/// Realized window: every node value, plus per sequence its children with the
/// window_m smallest indices (explicit children first, then bare tail points
/// when the window exceeds the materialization). Checks that realized values
/// are pairwise distinct.
PointSet realize_tree(const SpaceTree& t, const BigInt& window_m);

/// The set of accumulation points, as a tree. A node survives iff it has at
/// least one attached sequence (its children converge to it); a surviving
/// node keeps a sequence iff infinitely many of that sequence's children
/// themselves survive, otherwise the sequence is dropped and any surviving
/// children are lifted to top-level roots. Survival is evaluated against the
/// input tree, then the output is rebuilt from the surviving points.
SpaceTree derived_set(const SpaceTree& t);

/// Finite{k} or the marker for the parametric adjacent-example family, whose
/// degree is the first infinite ordinal.
struct OrdinalDescriptor {
  bool omega_family = false;
  long long finite = 0;

  static OrdinalDescriptor Finite(long long k) { return {false, k}; }
  static OrdinalDescriptor OmegaFamily() { return {true, 0}; }
  friend bool operator==(const OrdinalDescriptor& x, const OrdinalDescriptor& y) {
    return x.omega_family == y.omega_family && (x.omega_family || x.finite == y.finite);
  }
};

/// Largest lambda with the lambda-th derived set nonempty (the 0th derived
/// set is the space itself, so finite nonempty trees have degree 0).
OrdinalDescriptor limit_degree(const SpaceTree& t);

struct AdmissibilityReport {
  bool admits = false;
  std::optional<BigInt> card_acu;  // nullopt = infinite
};

/// True iff the realized space is finite, or its accumulation set is finite
/// with at least two points.
AdmissibilityReport admits_hyper_expansive(const SpaceTree& t);

/// A countable compact space carries an expansive homeomorphism iff its limit
/// degree is not a limit ordinal.
bool admits_expansive_kp(const OrdinalDescriptor& d);

struct AdjacentExample {
  SpaceTree tree;
  int depth = 0;
  BigInt tail = 0;
  std::vector<std::pair<Rational, Rational>> stage_windows;
};

/// Stage-built adjacent-gap refinement family: stage 0 is {0} together with
/// the harmonic chain 1/m; each later stage n (window [0, 1/n]) fills every
/// adjacent gap of the current set inside the window with a harmonic sequence
/// accumulating at the gap's left endpoint. Each sequence materializes `tail`
/// terms.
AdjacentExample build_adjacent_example(int depth, const BigInt& tail);

/// Exact membership of a value in the realized (infinite) point set.
bool tree_contains_value(const SpaceTree& t, const Rational& x);

/// Exact metric accumulation test, independent of derived_set's structural
/// rules: decides whether a realized point x is an accumulation point of the
/// realized set by producing a witness within every probe radius 2^-j,
/// j <= probe_bits, or by certifying an exact positive lower bound on the
/// distance from x to every other realized point (unmaterialized tail
/// structure is bounded through gap-width arguments using the build depth).
class TreeMetricOracle {
 public:
  TreeMetricOracle(const SpaceTree& t, int build_depth);
  bool accumulates_at(const Rational& x, int probe_bits) const;

 private:
  struct SeqInfo {
    Rational anchor;
    ChainGenerator gen;
    BigInt mat_to;
    bool structured_tail = false;  // tail children carry their own sequences
    Rational zone_lo, zone_hi;     // hull of all unmaterialized mass
  };
  std::vector<Rational> sorted_values_;
  std::vector<SeqInfo> seqs_;
  std::map<Rational, std::vector<size_t>> seqs_by_anchor_;
  std::vector<size_t> by_zone_lo_, by_zone_hi_;  // seq indices sorted by zone edge
  int build_depth_;
};

/// Tree JSON:
///   {"roots":[node,...]}    (a bare node object is also accepted)
/// node = {"value":"p/q","attached":[seq,...]}
/// seq  = {"side":"left"|"right","generator":{...},"truncate_at":N,
///         "child_template":node|null}                       (uniform form)
///      | {... same ..., "children":[{"m":N,"node":node},...],
///         "tail_survive":N}                                 (explicit form)
/// In the uniform form the template's generator parameters are read in local
/// coordinates: 0 is the child's value, 1 is its outer sibling.
SpaceTree tree_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json tree_to_json(const SpaceTree& t);

}  // namespace hyperdyn
