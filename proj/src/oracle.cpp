#include "hyperdyn/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

namespace hyperdyn {

Rational orbit_separation(const SymbolicSystem& system, const PointSet& A, const PointSet& B,
                          long long N) {
  if (A.empty() || B.empty()) throw InputError("empty compact set");
  if (N < 0) throw InputError("horizon must be >= 0");
  std::vector<PointRef> refs_a, refs_b;
  for (const Rational& x : A) refs_a.push_back(system.require_member(x));
  for (const Rational& x : B) refs_b.push_back(system.require_member(x));

  auto image_set = [&](const std::vector<PointRef>& refs, long long n) {
    std::vector<Rational> vals;
    vals.reserve(refs.size());
    for (const PointRef& r : refs) vals.push_back(system.value(system.shifted(r, n)));
    return PointSet(std::move(vals));
  };
  Rational sup = 0;
  for (long long n = -N; n <= N; ++n)
    sup = max(sup, hausdorff_distance(image_set(refs_a, n), image_set(refs_b, n)));
  return sup;
}

long long auto_horizon(const SymbolicSystem& system, int M) {
  if (M < 1) throw InputError("window parameter must be >= 1");
  bool any_chain = false;
  for (const auto& ch : system.chains())
    if (ch.kind == OrbitChain::Kind::BiInfinite) any_chain = true;
  if (!any_chain) return 0;

  std::optional<Rational> radius = periodic_gap_half(system);
  if (!radius) {
    // single periodic point: scale off the representatives instead
    for (const auto& ch : system.chains()) {
      if (ch.kind != OrbitChain::Kind::BiInfinite) continue;
      Rational rep = ch.generator->chain_point(0);
      Rational d = min(dist(rep, ch.generator->chain_neg_limit()),
                       dist(rep, ch.generator->chain_pos_limit()));
      if (!radius || d < *radius) radius = d;
    }
    *radius = *radius / Rational(2);
  }

  long long horizon = M;
  for (const auto& ch : system.chains()) {
    if (ch.kind != OrbitChain::Kind::BiInfinite) continue;
    long long fwd = ch.generator->forward_absorb_index(*radius);
    long long bwd = ch.generator->backward_absorb_index(*radius);
    horizon = std::max(horizon, fwd + M);   // from window index -M up to fwd
    horizon = std::max(horizon, M - bwd);   // from window index M down to bwd
  }
  return horizon;
}

int window_bound() {
  constexpr int kHardCap = 16;
  if (const char* env = std::getenv("HYPERDYN_MAX_WINDOW")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, kHardCap));
  }
  return kHardCap;
}

namespace {

// Exact orbit data reduced to integers: every point reachable from the window
// within the horizon gets an id, and all pairwise distances are ranked so the
// pair scan compares ints only.
struct OrbitTable {
  int n_window = 0;
  long long N = 0;
  std::vector<Rational> window_values;       // ascending, bit order
  std::vector<std::vector<int32_t>> traj;    // [window index][n + N] -> universe id
  std::vector<int32_t> dist_rank;            // universe_size^2, row-major
  std::vector<Rational> dists;               // rank -> exact distance
  size_t universe = 0;

  int32_t rank(int32_t i, int32_t j) const { return dist_rank[i * universe + j]; }
};

OrbitTable build_orbit_table(const SymbolicSystem& system, const Window& w, long long N) {
  OrbitTable t;
  t.n_window = static_cast<int>(w.entries.size());
  t.N = N;
  std::map<Rational, int32_t> ids;  // value -> universe id (the map is injective)
  std::vector<Rational> values;
  auto id_of = [&](const Rational& v) {
    auto [it, fresh] = ids.emplace(v, static_cast<int32_t>(values.size()));
    if (fresh) values.push_back(v);
    return it->second;
  };
  t.traj.resize(w.entries.size());
  for (size_t i = 0; i < w.entries.size(); ++i) {
    t.window_values.push_back(w.entries[i].value);
    t.traj[i].resize(2 * N + 1);
    PointRef r = system.shifted(w.entries[i].ref, -N);
    for (long long n = -N; n <= N; ++n) {
      t.traj[i][n + N] = id_of(system.value(r));
      r = system.forward(r);
    }
  }
  t.universe = values.size();
  std::vector<Rational> uniq;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = 0; j < values.size(); ++j) uniq.push_back(dist(values[i], values[j]));
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  t.dists = uniq;
  t.dist_rank.resize(values.size() * values.size());
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = 0; j < values.size(); ++j) {
      Rational d = dist(values[i], values[j]);
      auto it = std::lower_bound(uniq.begin(), uniq.end(), d);
      t.dist_rank[i * values.size() + j] = static_cast<int32_t>(it - uniq.begin());
    }
  return t;
}

// Directed Hausdorff rank from the points of `from_mask` to those of
// `to_mask` at time step slot; stops early once the running max cannot stay
// under `stop_at`.
int32_t directed_rank(const OrbitTable& t, uint32_t from_mask, uint32_t to_mask, size_t slot,
                      int32_t stop_at) {
  int32_t worst = 0;
  for (uint32_t rem = from_mask; rem;) {
    int i = __builtin_ctz(rem);
    rem &= rem - 1;
    int32_t ti = t.traj[i][slot];
    int32_t best = std::numeric_limits<int32_t>::max();
    for (uint32_t r2 = to_mask; r2;) {
      int j = __builtin_ctz(r2);
      r2 &= r2 - 1;
      best = std::min(best, t.rank(ti, t.traj[j][slot]));
      if (best <= worst) break;  // cannot raise the max any more
    }
    worst = std::max(worst, best);
    if (worst >= stop_at) return worst;
  }
  return worst;
}

PointSet mask_to_set(const OrbitTable& t, uint32_t mask) {
  std::vector<Rational> pts;
  for (uint32_t rem = mask; rem;) {
    int i = __builtin_ctz(rem);
    rem &= rem - 1;
    pts.push_back(t.window_values[i]);
  }
  return PointSet(std::move(pts));
}

}  // namespace

SeparationReport separation_constant(const SymbolicSystem& system, int M, long long N,
                                     bool nested_only) {
  Window w = realize_window(system, M);
  const int n = static_cast<int>(w.entries.size());
  if (n > window_bound())
    throw ResourceError("window has " + std::to_string(n) + " points, bound is " +
                        std::to_string(window_bound()));
  if (n < 2) throw InputError("window too small to form subset pairs");
  if (N < 0) throw InputError("horizon must be >= 0");

  OrbitTable t = build_orbit_table(system, w, N);

  // time slots ordered 0, +1, -1, +2, -2, ...: separation usually shows up
  // near the middle, which lets most pairs abandon after one step
  std::vector<size_t> slots;
  slots.push_back(N);
  for (long long d = 1; d <= N; ++d) {
    slots.push_back(N + d);
    slots.push_back(N - d);
  }

  int32_t best = std::numeric_limits<int32_t>::max();
  uint32_t best_a = 0, best_b = 0;
  unsigned long long pairs = 0;

  auto consider = [&](uint32_t A, uint32_t B) {
    ++pairs;
    int32_t sup = 0;
    for (size_t slot : slots) {
      sup = std::max(sup, directed_rank(t, B & ~A, A, slot, best));
      if (!nested_only) sup = std::max(sup, directed_rank(t, A & ~B, B, slot, best));
      if (sup >= best) return;  // cannot attain a new minimum, and ties keep
                                // the earlier witness
    }
    if (sup < best) {
      best = sup;
      best_a = A;
      best_b = B;
    }
  };

  const uint32_t full = (n >= 32) ? ~0U : ((1U << n) - 1);
  if (nested_only) {
    for (uint32_t B = 1; B <= full; ++B) {
      // submasks of B in increasing order
      for (uint32_t A = (0 - B) & B; A != B; A = (A - B) & B) consider(A, B);
    }
  } else {
    for (uint32_t B = 2; B <= full; ++B)
      for (uint32_t A = 1; A < B; ++A) consider(A, B);
  }

  SeparationReport rep;
  rep.M = M;
  rep.N = N;
  rep.nested_only = nested_only;
  rep.c = t.dists[best];
  rep.witness_A = mask_to_set(t, best_a);
  rep.witness_B = mask_to_set(t, best_b);
  rep.pairs_examined = pairs;
  return rep;
}

std::vector<SeparationReport> separation_curve(
    const SymbolicSystem& system, const std::vector<std::pair<int, long long>>& schedule,
    bool nested_only) {
  std::vector<SeparationReport> out;
  for (const auto& [M, N] : schedule) out.push_back(separation_constant(system, M, N, nested_only));
  return out;
}

}  // namespace hyperdyn
