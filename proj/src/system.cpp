#include "hyperdyn/system.hpp"

#include <algorithm>
#include <set>

namespace hyperdyn {

namespace {

// Closed hull of the values a chain can take; used to skip exact
// cross-membership scans for chains that cannot meet.
std::pair<Rational, Rational> chain_hull(const OrbitChain& c) {
  if (c.kind == OrbitChain::Kind::Periodic) {
    Rational lo = c.cycle.front(), hi = c.cycle.front();
    for (const Rational& v : c.cycle) {
      lo = min(lo, v);
      hi = max(hi, v);
    }
    return {lo, hi};
  }
  const ChainGenerator* g = &*c.generator;
  std::vector<Rational> bounds;
  while (g->kind() == ChainGenerator::Kind::ExplicitHead) {
    for (const Rational& v : g->head()) bounds.push_back(v);
    g = &g->tail();
  }
  bounds.push_back(g->first_param());
  bounds.push_back(g->second_param());
  Rational lo = bounds.front(), hi = bounds.front();
  for (const Rational& v : bounds) {
    lo = min(lo, v);
    hi = max(hi, v);
  }
  return {lo, hi};
}

}  // namespace

SymbolicSystem::SymbolicSystem(std::vector<LimitPoint> limits,
                               std::map<std::string, std::string> limit_perm,
                               std::vector<OrbitChain> chains)
    : limits_(std::move(limits)), perm_by_id_(std::move(limit_perm)), chains_(std::move(chains)) {
  for (size_t i = 0; i < limits_.size(); ++i) {
    const auto& lp = limits_[i];
    if (lp.id.empty()) throw InputError("limit point with empty id");
    if (!limit_by_id_.emplace(lp.id, static_cast<int>(i)).second)
      throw InputError("duplicate limit id \"" + lp.id + "\"");
    if (i > 0 && !(limits_[i - 1].value < lp.value))
      throw InputError("limit values must be strictly increasing");
  }

  // permutation: total on limit ids, bijective
  perm_.assign(limits_.size(), -1);
  perm_inv_.assign(limits_.size(), -1);
  if (perm_by_id_.size() != limits_.size())
    throw InputError("limit_perm must mention every limit id exactly once");
  for (const auto& [from, to] : perm_by_id_) {
    auto fi = limit_by_id_.find(from);
    auto ti = limit_by_id_.find(to);
    if (fi == limit_by_id_.end() || ti == limit_by_id_.end())
      throw InputError("limit_perm refers to unknown limit id");
    perm_[fi->second] = ti->second;
    if (perm_inv_[ti->second] != -1) throw InputError("limit_perm is not a bijection");
    perm_inv_[ti->second] = fi->second;
  }

  chain_alpha_.assign(chains_.size(), -1);
  chain_omega_.assign(chains_.size(), -1);
  for (size_t c = 0; c < chains_.size(); ++c) {
    const auto& ch = chains_[c];
    if (ch.id.empty()) throw InputError("chain with empty id");
    if (!chain_by_id_.emplace(ch.id, static_cast<int>(c)).second)
      throw InputError("duplicate chain id \"" + ch.id + "\"");
    if (ch.kind == OrbitChain::Kind::BiInfinite) {
      if (!ch.generator) throw InputError("bi-infinite chain \"" + ch.id + "\" needs a generator");
      if (!ch.cycle.empty()) throw InputError("bi-infinite chain \"" + ch.id + "\" must not carry a cycle");
      auto ai = limit_by_id_.find(ch.alpha_id);
      auto oi = limit_by_id_.find(ch.omega_id);
      if (ai == limit_by_id_.end() || oi == limit_by_id_.end())
        throw InputError("chain \"" + ch.id + "\" anchored at unknown limit id");
      chain_alpha_[c] = ai->second;
      chain_omega_[c] = oi->second;
      // declared anchors must match the generator's analytic limits
      if (ch.generator->chain_neg_limit() != limits_[ai->second].value ||
          ch.generator->chain_pos_limit() != limits_[oi->second].value)
        throw InputError("chain \"" + ch.id + "\": declared anchor does not match the generator limit");
    } else {
      if (ch.cycle.empty()) throw InputError("periodic chain \"" + ch.id + "\" needs a nonempty cycle");
      if (ch.generator || !ch.alpha_id.empty() || !ch.omega_id.empty())
        throw InputError("periodic chain \"" + ch.id + "\" must carry only a cycle");
      std::set<Rational> seen(ch.cycle.begin(), ch.cycle.end());
      if (seen.size() != ch.cycle.size())
        throw InputError("periodic chain \"" + ch.id + "\" has repeated points");
    }
  }

  // every limit point must actually accumulate a chain
  {
    std::vector<bool> anchored(limits_.size(), false);
    for (size_t c = 0; c < chains_.size(); ++c)
      if (chains_[c].kind == OrbitChain::Kind::BiInfinite)
        anchored[chain_alpha_[c]] = anchored[chain_omega_[c]] = true;
    for (size_t i = 0; i < limits_.size(); ++i)
      if (!anchored[i])
        throw InputError("limit point \"" + limits_[i].id + "\" accumulates no chain");
  }

  // chain routing: group bi-infinite chains by anchor pair, map groups through
  // the limit permutation, match members in sorted-id order
  route_.resize(chains_.size());
  route_inv_.assign(chains_.size(), -1);
  {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (size_t c = 0; c < chains_.size(); ++c) {
      if (chains_[c].kind == OrbitChain::Kind::Periodic) {
        route_[c] = static_cast<int>(c);
        route_inv_[c] = static_cast<int>(c);
        continue;
      }
      groups[{chain_alpha_[c], chain_omega_[c]}].push_back(static_cast<int>(c));
    }
    auto by_id = [this](int x, int y) { return chains_[x].id < chains_[y].id; };
    for (auto& [key, members] : groups) std::sort(members.begin(), members.end(), by_id);
    for (const auto& [key, members] : groups) {
      std::pair<int, int> image{perm_[key.first], perm_[key.second]};
      auto it = groups.find(image);
      if (it == groups.end() || it->second.size() != members.size())
        throw InputError("limit_perm is inconsistent with the chain structure at its anchors");
      for (size_t i = 0; i < members.size(); ++i) {
        route_[members[i]] = it->second[i];
        if (route_inv_[it->second[i]] != -1)
          throw InputError("ambiguous chain routing");
        route_inv_[it->second[i]] = members[i];
      }
    }
  }

  validate_window_scale();
}

int SymbolicSystem::limit_index(const std::string& id) const {
  auto it = limit_by_id_.find(id);
  if (it == limit_by_id_.end()) throw InputError("unknown limit id \"" + id + "\"");
  return it->second;
}

int SymbolicSystem::chain_index(const std::string& id) const {
  auto it = chain_by_id_.find(id);
  if (it == chain_by_id_.end()) throw InputError("unknown chain id \"" + id + "\"");
  return it->second;
}

Rational SymbolicSystem::value(const PointRef& p) const {
  if (p.kind == PointRef::Kind::Limit) return limits_[p.owner].value;
  const OrbitChain& c = chains_[p.owner];
  if (c.kind == OrbitChain::Kind::Periodic) {
    long long L = static_cast<long long>(c.cycle.size());
    long long i = ((p.k % L) + L) % L;
    return c.cycle[static_cast<size_t>(i)];
  }
  return c.generator->chain_point(p.k);
}

PointRef SymbolicSystem::forward(const PointRef& p) const {
  if (p.kind == PointRef::Kind::Limit) return {PointRef::Kind::Limit, perm_[p.owner], 0};
  const OrbitChain& c = chains_[p.owner];
  if (c.kind == OrbitChain::Kind::Periodic) {
    long long L = static_cast<long long>(c.cycle.size());
    return {PointRef::Kind::ChainPoint, p.owner, (p.k + 1) % L};
  }
  return {PointRef::Kind::ChainPoint, route_[p.owner], p.k + 1};
}

PointRef SymbolicSystem::backward(const PointRef& p) const {
  if (p.kind == PointRef::Kind::Limit) return {PointRef::Kind::Limit, perm_inv_[p.owner], 0};
  const OrbitChain& c = chains_[p.owner];
  if (c.kind == OrbitChain::Kind::Periodic) {
    long long L = static_cast<long long>(c.cycle.size());
    return {PointRef::Kind::ChainPoint, p.owner, ((p.k - 1) % L + L) % L};
  }
  return {PointRef::Kind::ChainPoint, route_inv_[p.owner], p.k - 1};
}

PointRef SymbolicSystem::shifted(PointRef p, long long n) const {
  for (; n > 0; --n) p = forward(p);
  for (; n < 0; ++n) p = backward(p);
  return p;
}

std::optional<PointRef> SymbolicSystem::locate(const Rational& x) const {
  for (size_t i = 0; i < limits_.size(); ++i)
    if (limits_[i].value == x) return PointRef{PointRef::Kind::Limit, static_cast<int>(i), 0};
  for (size_t c = 0; c < chains_.size(); ++c) {
    const OrbitChain& ch = chains_[c];
    if (ch.kind == OrbitChain::Kind::Periodic) {
      for (size_t j = 0; j < ch.cycle.size(); ++j)
        if (ch.cycle[j] == x)
          return PointRef{PointRef::Kind::ChainPoint, static_cast<int>(c),
                          static_cast<long long>(j)};
    } else if (auto k = ch.generator->chain_index_of(x)) {
      return PointRef{PointRef::Kind::ChainPoint, static_cast<int>(c), *k};
    }
  }
  return std::nullopt;
}

PointRef SymbolicSystem::require_member(const Rational& x) const {
  auto p = locate(x);
  if (!p) throw InputError("point not in X: " + x.str());
  return *p;
}

bool SymbolicSystem::is_periodic(const PointRef& p) const {
  if (p.kind == PointRef::Kind::Limit) return true;
  return chains_[p.owner].kind == OrbitChain::Kind::Periodic;
}

std::vector<PointRef> SymbolicSystem::periodic_orbit(const PointRef& p) const {
  if (!is_periodic(p)) throw InputError("not periodic");
  std::vector<PointRef> orbit{p};
  for (PointRef q = forward(p); !(q == p); q = forward(q)) orbit.push_back(q);
  return orbit;
}

namespace {
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}
}  // namespace

std::vector<std::vector<int>> SymbolicSystem::limit_cycles() const { return cycles_of(perm_); }

std::vector<std::vector<int>> SymbolicSystem::chain_route_cycles() const {
  std::vector<std::vector<int>> out;
  for (auto& cyc : cycles_of(route_))
    if (chains_[cyc.front()].kind == OrbitChain::Kind::BiInfinite) out.push_back(cyc);
  return out;
}

std::vector<PointRef> SymbolicSystem::periodic_points() const {
  std::vector<PointRef> out;
  for (size_t i = 0; i < limits_.size(); ++i)
    out.push_back({PointRef::Kind::Limit, static_cast<int>(i), 0});
  for (size_t c = 0; c < chains_.size(); ++c)
    if (chains_[c].kind == OrbitChain::Kind::Periodic)
      for (size_t j = 0; j < chains_[c].cycle.size(); ++j)
        out.push_back({PointRef::Kind::ChainPoint, static_cast<int>(c), static_cast<long long>(j)});
  std::sort(out.begin(), out.end(),
            [this](const PointRef& a, const PointRef& b) { return value(a) < value(b); });
  return out;
}

void SymbolicSystem::validate_window_scale() const {
  // Disjointness of the realized pieces. Limit/cycle collisions are checked
  // exactly against every generator; chain-vs-chain overlap is checked by
  // exact membership of sampled indices (full symbolic disjointness for
  // arbitrary generator pairs is out of reach, see README).
  for (size_t i = 0; i < limits_.size(); ++i) {
    for (size_t c = 0; c < chains_.size(); ++c) {
      const OrbitChain& ch = chains_[c];
      if (ch.kind == OrbitChain::Kind::Periodic) {
        for (const Rational& v : ch.cycle)
          if (v == limits_[i].value)
            throw InputError("overlap: cycle of \"" + ch.id + "\" meets limit \"" + limits_[i].id + "\"");
      } else if (ch.generator->chain_index_of(limits_[i].value)) {
        throw InputError("overlap: chain \"" + ch.id + "\" passes through limit \"" + limits_[i].id + "\"");
      }
    }
  }
  static const long long kProbes[] = {64, 128, 512, 4096};
  for (size_t c1 = 0; c1 < chains_.size(); ++c1) {
    for (size_t c2 = c1 + 1; c2 < chains_.size(); ++c2) {
      auto h1 = chain_hull(chains_[c1]);
      auto h2 = chain_hull(chains_[c2]);
      if (h1.second < h2.first || h2.second < h1.first) continue;
      auto points_of = [this](size_t c) {
        std::vector<Rational> pts;
        const OrbitChain& ch = chains_[c];
        if (ch.kind == OrbitChain::Kind::Periodic) {
          pts = ch.cycle;
        } else {
          for (long long k = -32; k <= 32; ++k) pts.push_back(ch.generator->chain_point(k));
          for (long long k : kProbes) {
            pts.push_back(ch.generator->chain_point(k));
            pts.push_back(ch.generator->chain_point(-k));
          }
        }
        return pts;
      };
      auto member_of = [this](size_t c, const Rational& x) {
        const OrbitChain& ch = chains_[c];
        if (ch.kind == OrbitChain::Kind::Periodic)
          return std::find(ch.cycle.begin(), ch.cycle.end(), x) != ch.cycle.end();
        return ch.generator->chain_index_of(x).has_value();
      };
      for (const Rational& x : points_of(c1))
        if (member_of(c2, x))
          throw InputError("overlap: chains \"" + chains_[c1].id + "\" and \"" + chains_[c2].id +
                           "\" share the point " + x.str());
    }
  }

  Window w = realize_window(*this, 16);
  for (size_t i = 1; i < w.entries.size(); ++i)
    if (!(w.entries[i - 1].value < w.entries[i].value))
      throw InputError("overlap: realized window repeats the point " + w.entries[i].value.str());
}

PointSet Window::points() const {
  std::vector<Rational> vals;
  vals.reserve(entries.size());
  for (const auto& e : entries) vals.push_back(e.value);
  return PointSet(std::move(vals));
}

std::optional<size_t> Window::find_value(const Rational& x) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), x,
                             [](const WindowEntry& e, const Rational& v) { return e.value < v; });
  if (it == entries.end() || !(it->value == x)) return std::nullopt;
  return static_cast<size_t>(it - entries.begin());
}

Window realize_window(const SymbolicSystem& system, int M) {
  if (M < 1) throw InputError("window parameter must be >= 1");
  Window w;
  w.M = M;
  auto add = [&](const PointRef& ref) {
    WindowEntry e;
    e.ref = ref;
    e.value = system.value(ref);
    e.image_ref = system.forward(ref);
    e.image = system.value(e.image_ref);
    w.entries.push_back(std::move(e));
  };
  for (int i = 0; i < static_cast<int>(system.limits().size()); ++i)
    add({PointRef::Kind::Limit, i, 0});
  for (int c = 0; c < static_cast<int>(system.chains().size()); ++c) {
    const OrbitChain& ch = system.chains()[c];
    if (ch.kind == OrbitChain::Kind::Periodic) {
      for (long long j = 0; j < static_cast<long long>(ch.cycle.size()); ++j)
        add({PointRef::Kind::ChainPoint, c, j});
    } else {
      for (long long k = -M; k <= M; ++k) add({PointRef::Kind::ChainPoint, c, k});
    }
  }
  std::sort(w.entries.begin(), w.entries.end(),
            [](const WindowEntry& a, const WindowEntry& b) { return a.value < b.value; });
  return w;
}

Rational isolation_radius(const SymbolicSystem& system, const PointRef& x) {
  if (x.kind == PointRef::Kind::Limit) throw InputError("not isolated");
  const Rational val = system.value(x);
  std::optional<Rational> best;
  auto offer = [&](const Rational& v) {
    if (v == val) return;
    Rational d = dist(v, val);
    if (!best || d < *best) best = d;
  };
  for (const auto& lp : system.limits()) offer(lp.value);
  for (int c = 0; c < static_cast<int>(system.chains().size()); ++c) {
    const OrbitChain& ch = system.chains()[c];
    if (ch.kind == OrbitChain::Kind::Periodic) {
      for (const Rational& v : ch.cycle) offer(v);
    } else {
      for (const BigInt& m : ch.generator->nearest_nat_indices(val)) offer(ch.generator->term(m));
    }
  }
  if (!best) throw InputError("space has a single point");
  return *best;
}

}  // namespace hyperdyn
