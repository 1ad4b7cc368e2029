#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/generator.hpp"
#include "hyperdyn/point_set.hpp"

namespace hyperdyn {

/// Accumulation point of the space; the only non-isolated points.
struct LimitPoint {
  std::string id;
  Rational value;
};

/// One orbit worth of isolated points.
///  - BiInfinite: an injective Z-indexed chain converging to the alpha anchor
///    backward and the omega anchor forward; the map shifts k -> k+1 (routing
///    through the chain image when limit points are permuted).
///  - Periodic: a finite cycle of isolated points rotated by the map.
struct OrbitChain {
  enum class Kind { BiInfinite, Periodic };

  std::string id;
  Kind kind = Kind::BiInfinite;
  // BiInfinite only:
  std::string alpha_id, omega_id;
  std::optional<ChainGenerator> generator;
  // Periodic only:
  std::vector<Rational> cycle;
};

/// Reference to a point of the space: either a limit point or the k-th point
/// of a chain (cycle position for periodic chains).
struct PointRef {
  enum class Kind { Limit, ChainPoint };
  Kind kind = Kind::Limit;
  int owner = 0;     // index into limits() or chains()
  long long k = 0;   // chain coordinate; unused for limits

  friend bool operator==(const PointRef& a, const PointRef& b) {
    return a.kind == b.kind && a.owner == b.owner && (a.kind == Kind::Limit || a.k == b.k);
  }
  friend bool operator<(const PointRef& a, const PointRef& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.owner != b.owner) return a.owner < b.owner;
    return a.kind == Kind::ChainPoint && a.k < b.k;
  }
};

/// A rank-one countable compact subset of the line together with a
/// homeomorphism: finitely many limit points, a permutation of them, and
/// symbolic chains of isolated points threaded between them.
///
/// Immutable after construction; every operation is a pure function.
class SymbolicSystem {
 public:
  /// Validates all structural invariants; throws InputError on violation.
  SymbolicSystem(std::vector<LimitPoint> limits, std::map<std::string, std::string> limit_perm,
                 std::vector<OrbitChain> chains);

  const std::vector<LimitPoint>& limits() const { return limits_; }
  const std::map<std::string, std::string>& limit_perm() const { return perm_by_id_; }
  const std::vector<OrbitChain>& chains() const { return chains_; }

  int limit_index(const std::string& id) const;
  int chain_index(const std::string& id) const;

  /// Image of limit i under the permutation (and its inverse).
  int perm(int i) const { return perm_[i]; }
  int perm_inv(int i) const { return perm_inv_[i]; }
  /// Image chain of bi-infinite chain c (identity unless the permutation
  /// moves its anchors); inverse likewise.
  int route(int c) const { return route_[c]; }
  int route_inv(int c) const { return route_inv_[c]; }

  Rational value(const PointRef& p) const;
  PointRef forward(const PointRef& p) const;
  PointRef backward(const PointRef& p) const;
  PointRef shifted(PointRef p, long long n) const;

  /// Exact membership test against the full infinite space.
  std::optional<PointRef> locate(const Rational& x) const;
  /// locate() that throws InputError("point not in X") instead.
  PointRef require_member(const Rational& x) const;

  bool is_periodic(const PointRef& p) const;
  /// Orbit of a periodic point, in iteration order starting at p.
  std::vector<PointRef> periodic_orbit(const PointRef& p) const;

  /// Cycles of the limit permutation, each sorted to start at its smallest
  /// index; deterministic order.
  std::vector<std::vector<int>> limit_cycles() const;
  /// Cycles of the bi-infinite chain routing, same conventions.
  std::vector<std::vector<int>> chain_route_cycles() const;

  /// All periodic points (limit points and periodic-chain points), ascending.
  std::vector<PointRef> periodic_points() const;

  int alpha_index(int chain) const { return chain_alpha_[chain]; }
  int omega_index(int chain) const { return chain_omega_[chain]; }

 private:
  void validate_window_scale() const;

  std::vector<LimitPoint> limits_;
  std::map<std::string, std::string> perm_by_id_;
  std::vector<OrbitChain> chains_;
  std::map<std::string, int> limit_by_id_;
  std::map<std::string, int> chain_by_id_;
  std::vector<int> perm_, perm_inv_;
  std::vector<int> route_, route_inv_;
  std::vector<int> chain_alpha_, chain_omega_;  // -1 for periodic chains
};

/// Finite exact realization of a system: all limit values, all periodic-chain
/// points, and bi-infinite chain points with |k| <= M, together with the map
/// table (images may leave the window; they stay exact).
struct WindowEntry {
  PointRef ref;
  Rational value;
  PointRef image_ref;
  Rational image;
};

struct Window {
  int M = 0;
  std::vector<WindowEntry> entries;  // ascending by value

  PointSet points() const;
  std::optional<size_t> find_value(const Rational& x) const;
};

Window realize_window(const SymbolicSystem& system, int M);

/// Exact distance from an isolated point to the nearest other point of the
/// full infinite space. Errors with "not isolated" on limit points.
Rational isolation_radius(const SymbolicSystem& system, const PointRef& x);

}  // namespace hyperdyn
