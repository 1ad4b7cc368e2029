#include "hyperdyn/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperdyn {

SymbolicSystem build_theorem2_system(const std::vector<Rational>& limit_values) {
  if (limit_values.size() < 2) throw InputError("need at least two limit values");
  for (size_t i = 1; i < limit_values.size(); ++i)
    if (!(limit_values[i - 1] < limit_values[i]))
      throw InputError("limit values must be strictly increasing");
  std::vector<LimitPoint> limits;
  std::map<std::string, std::string> perm;
  for (size_t i = 0; i < limit_values.size(); ++i) {
    std::string id = "p" + std::to_string(i + 1);
    limits.push_back({id, limit_values[i]});
    perm[id] = id;
  }
  std::vector<OrbitChain> chains;
  for (size_t j = 1; j < limit_values.size(); ++j) {  // gap j between p_j and p_(j+1)
    OrbitChain ch;
    ch.id = "g" + std::to_string(j);
    ch.kind = OrbitChain::Kind::BiInfinite;
    const std::string left = "p" + std::to_string(j);
    const std::string right = "p" + std::to_string(j + 1);
    if (j % 2 == 1) {  // odd gap: shift moves right, the left endpoint repels
      ch.alpha_id = left;
      ch.omega_id = right;
      ch.generator = ChainGenerator::logistic(limit_values[j - 1], limit_values[j]);
    } else {  // even gap: shift moves left
      ch.alpha_id = right;
      ch.omega_id = left;
      ch.generator = ChainGenerator::logistic(limit_values[j], limit_values[j - 1]);
    }
    chains.push_back(std::move(ch));
  }
  return SymbolicSystem(std::move(limits), std::move(perm), std::move(chains));
}

SymbolicSystem build_translation_example() {
  std::vector<LimitPoint> limits{{"zero", Rational(0)}};
  std::map<std::string, std::string> perm{{"zero", "zero"}};
  OrbitChain ch;
  ch.id = "c";
  ch.kind = OrbitChain::Kind::BiInfinite;
  ch.alpha_id = "zero";
  ch.omega_id = "zero";
  ch.generator = ChainGenerator::harmonic(Rational(0), Rational(1));
  std::vector<OrbitChain> chains{std::move(ch)};
  return SymbolicSystem(std::move(limits), std::move(perm), std::move(chains));
}

SymbolicSystem build_finite_system(const std::vector<std::vector<Rational>>& cycles) {
  if (cycles.empty()) throw InputError("finite system needs at least one cycle");
  std::vector<OrbitChain> chains;
  for (size_t i = 0; i < cycles.size(); ++i) {
    OrbitChain ch;
    ch.id = "k" + std::to_string(i + 1);
    ch.kind = OrbitChain::Kind::Periodic;
    ch.cycle = cycles[i];
    chains.push_back(std::move(ch));
  }
  return SymbolicSystem({}, {}, std::move(chains));
}

std::optional<Rational> periodic_gap_half(const SymbolicSystem& system) {
  auto pts = system.periodic_points();
  if (pts.size() < 2) return std::nullopt;
  Rational best = system.value(pts[1]) - system.value(pts[0]);
  for (size_t i = 2; i < pts.size(); ++i)
    best = min(best, system.value(pts[i]) - system.value(pts[i - 1]));
  return best / Rational(2);
}

namespace {

std::optional<Rational> gamma_of(const SymbolicSystem& system, const PointRef& p) {
  const Rational v = system.value(p);
  std::optional<Rational> best;
  for (const PointRef& q : system.periodic_points()) {
    if (q == p) continue;
    Rational d = dist(system.value(q), v);
    if (!best || d < *best) best = d;
  }
  if (!best) return std::nullopt;
  return *best / Rational(2);
}

}  // namespace

FixedPointClass classify_periodic_point(const SymbolicSystem& system, const PointRef& p) {
  if (!system.is_periodic(p)) throw InputError("not periodic");
  FixedPointClass out;
  if (p.kind == PointRef::Kind::ChainPoint) {
    out.label = StabilityClass::BothIsolated;
    out.gamma = gamma_of(system, p);
    return out;
  }
  // limit point: look at the chains anchored along its permutation cycle,
  // under the period power of the map
  std::set<int> cycle;
  for (int i = p.owner; !cycle.count(i); i = system.perm(i)) cycle.insert(i);
  std::string alpha_witness, omega_witness;
  for (int c = 0; c < static_cast<int>(system.chains().size()); ++c) {
    if (system.chains()[c].kind != OrbitChain::Kind::BiInfinite) continue;
    if (cycle.count(system.alpha_index(c)) && alpha_witness.empty())
      alpha_witness = system.chains()[c].id;
    if (cycle.count(system.omega_index(c)) && omega_witness.empty())
      omega_witness = system.chains()[c].id;
  }
  if (!alpha_witness.empty() && !omega_witness.empty()) {
    out.label = StabilityClass::Neither;
    out.alpha_chain_id = alpha_witness;
    out.omega_chain_id = omega_witness;
  } else if (!alpha_witness.empty()) {
    out.label = StabilityClass::Repeller;
    out.gamma = gamma_of(system, p);
  } else {
    // validation guarantees at least one anchored chain, so this is omega-only
    out.label = StabilityClass::Attractor;
    out.gamma = gamma_of(system, p);
  }
  return out;
}

Verdict hyper_expansive_verdict(const SymbolicSystem& system) {
  Verdict v;
  for (const PointRef& p : system.periodic_points()) v.omega_set.push_back(system.value(p));
  v.orbit_count = static_cast<long long>(system.limit_cycles().size()) +
                  static_cast<long long>(system.chain_route_cycles().size());
  for (const auto& ch : system.chains())
    if (ch.kind == OrbitChain::Kind::Periodic) ++v.orbit_count;
  for (const PointRef& p : system.periodic_points()) {
    FixedPointClass cls = classify_periodic_point(system, p);
    if (cls.label == StabilityClass::Neither) {
      v.hyper_expansive = false;
      v.reason = VerdictReason{VerdictReason::Kind::NonHyperbolicPeriodic, system.value(p)};
      return v;
    }
  }
  v.hyper_expansive = true;
  v.delta = expansive_delta(system);
  return v;
}

Rational expansive_delta(const SymbolicSystem& system) {
  for (const PointRef& p : system.periodic_points())
    if (classify_periodic_point(system, p).label == StabilityClass::Neither)
      throw InputError("system is not hyper-expansive");
  std::optional<Rational> delta = periodic_gap_half(system);
  for (const auto& cycle : system.chain_route_cycles()) {
    PointRef rep{PointRef::Kind::ChainPoint, cycle.front(), 0};
    Rational r = isolation_radius(system, rep);
    if (!delta || r < *delta) delta = r;
  }
  // a single fixed point alone: any positive constant works
  return delta ? *delta : Rational(1);
}

std::vector<InvariantSubset> compact_invariant_sets(const SymbolicSystem& system, size_t cap) {
  // building blocks: limit cycles, periodic chains, and bi-infinite routing
  // cycles closed up with their anchors
  std::vector<InvariantSubset> units;
  for (const auto& cyc : system.limit_cycles()) {
    InvariantSubset u;
    u.limit_indices = cyc;
    std::sort(u.limit_indices.begin(), u.limit_indices.end());
    units.push_back(std::move(u));
  }
  for (int c = 0; c < static_cast<int>(system.chains().size()); ++c)
    if (system.chains()[c].kind == OrbitChain::Kind::Periodic)
      units.push_back({{}, {c}});
  for (const auto& cyc : system.chain_route_cycles()) {
    InvariantSubset u;
    std::set<int> lims;
    for (int c : cyc) {
      lims.insert(system.alpha_index(c));
      lims.insert(system.omega_index(c));
    }
    // anchors of a routing cycle are closed under the permutation already
    u.limit_indices.assign(lims.begin(), lims.end());
    u.chain_indices = cyc;
    std::sort(u.chain_indices.begin(), u.chain_indices.end());
    units.push_back(std::move(u));
  }
  if (units.size() > 24) throw ResourceError("too many invariant-set building blocks");

  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<InvariantSubset> out;
  for (size_t mask = 1; mask < (size_t{1} << units.size()); ++mask) {
    std::set<int> lims, chs;
    for (size_t u = 0; u < units.size(); ++u) {
      if (!(mask & (size_t{1} << u))) continue;
      lims.insert(units[u].limit_indices.begin(), units[u].limit_indices.end());
      chs.insert(units[u].chain_indices.begin(), units[u].chain_indices.end());
    }
    InvariantSubset s;
    s.limit_indices.assign(lims.begin(), lims.end());
    s.chain_indices.assign(chs.begin(), chs.end());
    if (seen.insert({s.limit_indices, s.chain_indices}).second) {
      out.push_back(std::move(s));
      if (out.size() > cap)
        throw ResourceError("cap exceeded: at least " + std::to_string(out.size()) +
                            " compact invariant sets");
    }
  }
  std::sort(out.begin(), out.end(), [](const InvariantSubset& a, const InvariantSubset& b) {
    size_t sa = a.limit_indices.size() + a.chain_indices.size();
    size_t sb = b.limit_indices.size() + b.chain_indices.size();
    if (sa != sb) return sa < sb;
    if (a.limit_indices != b.limit_indices) return a.limit_indices < b.limit_indices;
    return a.chain_indices < b.chain_indices;
  });
  return out;
}

long long shift_periodic_count(int k) {
  if (k < 1 || k > 20) throw InputError("shift word length must be in 1..20");
  long long count = 0;
  for (unsigned long long word = 0; word < (1ULL << k); ++word) {
    // the bi-infinite periodic extension of the word, shifted k times, must
    // reproduce itself position by position
    bool fixed = true;
    for (int i = 0; i < k; ++i) {
      unsigned bit_here = (word >> (i % k)) & 1U;
      unsigned bit_shifted = (word >> ((i + k) % k)) & 1U;
      if (bit_here != bit_shifted) fixed = false;
    }
    if (fixed) ++count;
  }
  return count;
}

long long eps_dense_segment(const SymbolicSystem& system, const PointRef& x, const Rational& eps) {
  if (eps.sign() <= 0) throw InputError("eps must be positive");
  std::vector<PointRef> orbit = system.periodic_orbit(x);  // errors when x is not periodic
  std::vector<Rational> targets;
  for (const PointRef& y : orbit) targets.push_back(system.value(y));
  std::vector<Rational> visited;
  PointRef cur = x;
  for (long long n = 0; n < static_cast<long long>(orbit.size()); ++n) {
    visited.push_back(system.value(cur));
    bool dense = true;
    for (const Rational& y : targets) {
      bool covered = false;
      for (const Rational& v : visited)
        if (dist(v, y) < eps) {
          covered = true;
          break;
        }
      if (!covered) {
        dense = false;
        break;
      }
    }
    if (dense) return n;
    cur = system.forward(cur);
  }
  throw std::logic_error("orbit segment never became dense");  // unreachable
}

}  // namespace hyperdyn
