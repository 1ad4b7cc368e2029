#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperdyn/dynamics.hpp"
#include "hyperdyn/system.hpp"

namespace hyperdyn {

struct SeparationReport {
  int M = 0;
  long long N = 0;
  bool nested_only = true;
  Rational c;
  PointSet witness_A, witness_B;
  unsigned long long pairs_examined = 0;
};

/// sup over |n| <= N of the Hausdorff distance between the n-th images of A
/// and B. Images are taken pointwise through the symbolic map and may leave
/// any window; coordinates stay exact. Every point must belong to the space.
Rational orbit_separation(const SymbolicSystem& system, const PointSet& A, const PointSet& B,
                          long long N);

/// Transit horizon N(M): the smallest N >= M such that every window chain
/// point is inside the absorption ball of its forward anchor after N steps
/// and of its backward anchor after N backward steps, and stays there. The
/// ball radius is half the minimum periodic gap; with a single periodic point
/// it falls back to half the closest representative-to-anchor distance.
long long auto_horizon(const SymbolicSystem& system, int M);

/// Hard cap on oracle window sizes; HYPERDYN_MAX_WINDOW may lower it.
int window_bound();

/// Minimum over pairs of distinct nonempty window subsets (only nested pairs
/// A strictly inside B when nested_only) of orbit_separation(A, B, N).
/// Deterministic witness: window points ascending by coordinate are bits
/// 0..|W|-1 of a mask; pairs are ordered by (B, A) as unsigned integers and
/// the first pair attaining the minimum wins.
SeparationReport separation_constant(const SymbolicSystem& system, int M, long long N,
                                     bool nested_only);

/// separation_constant over a schedule, in order.
std::vector<SeparationReport> separation_curve(
    const SymbolicSystem& system, const std::vector<std::pair<int, long long>>& schedule,
    bool nested_only);

}  // namespace hyperdyn
