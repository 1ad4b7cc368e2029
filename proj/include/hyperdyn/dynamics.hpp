#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/system.hpp"

namespace hyperdyn {

enum class StabilityClass { Attractor, Repeller, BothIsolated, Neither };

/// Classification of a periodic point. Attractors and repellers carry a basin
/// radius witness; a Neither point carries one chain escaping it forward and
/// one feeding it, which is exactly what rules hyper-expansiveness out.
struct FixedPointClass {
  StabilityClass label = StabilityClass::BothIsolated;
  std::optional<Rational> gamma;  // half the gap to the nearest other periodic point
  std::string alpha_chain_id, omega_chain_id;  // Neither witness
};

struct VerdictReason {
  enum class Kind { NonHyperbolicPeriodic, InfinitelyManyOrbits };
  // InfinitelyManyOrbits is reserved: finitely generated systems always have
  // finitely many orbits, so concrete inputs can never produce it.
  Kind kind = Kind::NonHyperbolicPeriodic;
  Rational point;
};

struct Verdict {
  bool hyper_expansive = false;
  std::optional<Rational> delta;
  std::optional<VerdictReason> reason;
  std::vector<Rational> omega_set;  // all periodic points, ascending
  long long orbit_count = 0;
};

/// Fixed limit points p_1 < ... < p_n with one logistic chain per gap; chains
/// in odd gaps move right, chains in even gaps move left, so p_j is a
/// repeller for odd j and an attractor for even j.
SymbolicSystem build_theorem2_system(const std::vector<Rational>& limit_values);

/// The space {0} united with {1/m : m >= 1} and the index-translation map
/// y_k -> y_(k+1) along the single chain y_k = 1/(2k) for k >= 1,
/// y_k = 1/(1-2k) for k <= 0. Expansive but not hyper-expansive: the fixed
/// point 0 is approached in both time directions.
SymbolicSystem build_translation_example();

/// Finite space given as disjoint periodic cycles.
SymbolicSystem build_finite_system(const std::vector<std::vector<Rational>>& cycles);

FixedPointClass classify_periodic_point(const SymbolicSystem& system, const PointRef& p);

Verdict hyper_expansive_verdict(const SymbolicSystem& system);

/// min(delta_1, delta_2): delta_1 is half the smallest gap between periodic
/// points (backward iteration expels every chain from such a ball), delta_2
/// the smallest isolation radius over the wandering-orbit representatives at
/// chain index 0. Errors unless the verdict is hyper-expansive.
Rational expansive_delta(const SymbolicSystem& system);

/// A closed invariant subset, symbolically: limit indices plus whole chains.
struct InvariantSubset {
  std::vector<int> limit_indices;
  std::vector<int> chain_indices;

  friend bool operator==(const InvariantSubset& a, const InvariantSubset& b) {
    return a.limit_indices == b.limit_indices && a.chain_indices == b.chain_indices;
  }
};

/// Every closed f-invariant subset: unions of limit cycles, periodic chains,
/// and bi-infinite routing cycles taken with their anchor cycles (closure).
/// Errors when more than `cap` distinct sets exist.
std::vector<InvariantSubset> compact_invariant_sets(const SymbolicSystem& system, size_t cap);

/// Number of fixed points of the k-th power of the full 2-shift, by explicit
/// enumeration of binary k-words. Grows as 2^k, so the shift has unboundedly
/// many compact invariant sets and cannot be hyper-expansive.
long long shift_periodic_count(int k);

/// Smallest n such that {x, fx, ..., f^n x} is eps-dense in the periodic
/// orbit of x (strict inequality); always at most period - 1.
long long eps_dense_segment(const SymbolicSystem& system, const PointRef& x, const Rational& eps);

/// Half the minimum pairwise distance among periodic points, when there are
/// at least two of them.
std::optional<Rational> periodic_gap_half(const SymbolicSystem& system);

}  // namespace hyperdyn
