#include "hyperdyn/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hyperdyn {

using Json = nlohmann::ordered_json;

namespace {

template <typename F>
void for_each_node(const TreeNode& n, F&& f) {
  f(n);
  for (const TreeSeq& s : n.attached)
    for (const auto& [idx, child] : s.children) for_each_node(child, f);
}

template <typename F>
void for_each_node(const SpaceTree& t, F&& f) {
  for (const TreeNode& r : t.roots) for_each_node(r, f);
}

}  // namespace

bool tree_is_empty(const SpaceTree& t) { return t.roots.empty(); }

bool tree_is_infinite(const SpaceTree& t) {
  bool any_seq = false;
  for_each_node(t, [&](const TreeNode& n) { any_seq = any_seq || !n.attached.empty(); });
  return any_seq;
}

BigInt tree_node_count(const SpaceTree& t) {
  if (tree_is_infinite(t)) throw InputError("tree has infinitely many points");
  BigInt count = 0;
  for_each_node(t, [&](const TreeNode&) { ++count; });
  return count;
}

namespace {

void collect_realized(const TreeNode& n, const BigInt& window_m, std::vector<Rational>& out) {
  out.push_back(n.value);
  for (const TreeSeq& s : n.attached) {
    BigInt taken = 0;
    for (const auto& [idx, child] : s.children) {
      if (taken >= window_m) break;
      collect_realized(child, window_m, out);
      ++taken;
    }
    // beyond the materialization the sequence still has points
    for (BigInt idx = s.materialized_to + 1; taken < window_m; ++idx, ++taken)
      out.push_back(s.gen.term(idx));
  }
}

}  // namespace

PointSet realize_tree(const SpaceTree& t, const BigInt& window_m) {
  if (window_m < 1) throw InputError("window parameter must be >= 1");
  std::vector<Rational> vals;
  for (const TreeNode& r : t.roots) collect_realized(r, window_m, vals);
  const size_t before = vals.size();
  PointSet out(std::move(vals));
  if (out.size() != before) throw InputError("tree realization repeats a point");
  return out;
}

namespace {

struct DeriveResult {
  std::optional<TreeNode> node;
  std::vector<TreeNode> lifted;
};

// Survival is decided against the input node; the rebuilt node keeps a
// sequence only while infinitely many of its children survive, which is
// carried by the tail. Finitely many survivors of a dropped sequence remain
// points of the derived set and are lifted to the top level.
DeriveResult derive_node(const TreeNode& n) {
  DeriveResult r;
  if (n.attached.empty()) return r;
  TreeNode out;
  out.value = n.value;
  for (const TreeSeq& s : n.attached) {
    std::vector<std::pair<BigInt, TreeNode>> kids;
    for (const auto& [idx, child] : s.children) {
      DeriveResult cr = derive_node(child);
      for (auto& l : cr.lifted) r.lifted.push_back(std::move(l));
      if (cr.node) kids.emplace_back(idx, std::move(*cr.node));
    }
    if (s.tail_survive >= 1) {
      TreeSeq kept;
      kept.side = s.side;
      kept.gen = s.gen;
      kept.materialized_to = s.materialized_to;
      kept.children = std::move(kids);
      kept.tail_survive = s.tail_survive - 1;
      out.attached.push_back(std::move(kept));
    } else {
      for (auto& [idx, kid] : kids) r.lifted.push_back(std::move(kid));
    }
  }
  r.node = std::move(out);
  return r;
}

}  // namespace

SpaceTree derived_set(const SpaceTree& t) {
  SpaceTree out;
  for (const TreeNode& root : t.roots) {
    DeriveResult r = derive_node(root);
    if (r.node) out.roots.push_back(std::move(*r.node));
    for (auto& l : r.lifted) out.roots.push_back(std::move(l));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const TreeNode& a, const TreeNode& b) { return a.value < b.value; });
  return out;
}

OrdinalDescriptor limit_degree(const SpaceTree& t) {
  if (tree_is_empty(t)) throw InputError("empty tree");
  SpaceTree cur = t;
  long long lambda = 0;
  while (true) {
    SpaceTree next = derived_set(cur);
    if (tree_is_empty(next)) break;
    cur = std::move(next);
    ++lambda;
  }
  return OrdinalDescriptor::Finite(lambda);
}

AdmissibilityReport admits_hyper_expansive(const SpaceTree& t) {
  SpaceTree acu = derived_set(t);
  AdmissibilityReport r;
  if (tree_is_infinite(acu)) {
    r.admits = false;
    r.card_acu = std::nullopt;
  } else {
    BigInt n = tree_node_count(acu);
    r.card_acu = n;
    r.admits = (n == 0) || (n >= 2);
  }
  return r;
}

bool admits_expansive_kp(const OrdinalDescriptor& d) { return !d.omega_family; }

AdjacentExample build_adjacent_example(int depth, const BigInt& tail) {
  if (depth < 0 || depth > 6) throw InputError("adjacent example: depth must be in 0..6");
  if (tail < 1 || tail > 64) throw InputError("adjacent example: tail must be in 1..64");
  constexpr size_t kNodeCap = 2'000'000;

  struct BuildSeq {
    int stage;
    Rational anchor;
    ChainGenerator gen;
    BigInt first_index, mat_to;
    std::vector<std::pair<BigInt, Rational>> children;
  };
  std::vector<BuildSeq> seqs;
  std::map<Rational, std::vector<size_t>> seqs_at;  // anchor value -> seq indices
  std::set<Rational> points;

  auto add_seq = [&](int stage, const Rational& a, const Rational& b, const BigInt& first_index) {
    BuildSeq s;
    s.stage = stage;
    s.anchor = a;
    s.gen = ChainGenerator::harmonic(a, b);
    s.first_index = first_index;
    s.mat_to = first_index + tail - 1;
    for (BigInt m = first_index; m <= s.mat_to; ++m) {
      Rational v = s.gen.term(m);
      s.children.emplace_back(m, v);
      if (!points.insert(v).second)
        throw std::logic_error("adjacent build produced a repeated point " + v.str());
    }
    if (points.size() > kNodeCap) throw ResourceError("resource bound exceeded");
    seqs_at[a].push_back(seqs.size());
    seqs.push_back(std::move(s));
  };

  points.insert(Rational(0));
  add_seq(0, Rational(0), Rational(1), BigInt(1));

  AdjacentExample out;
  out.depth = depth;
  out.tail = tail;
  for (int n = 1; n <= depth; ++n) {
    Rational hi(BigInt(1), BigInt(n));
    out.stage_windows.emplace_back(Rational(0), hi);
    // unmaterialized mass of every existing sequence lives in these zones;
    // gaps meeting a zone are not truly adjacent in the infinite set
    std::vector<std::pair<Rational, Rational>> frontiers;
    for (const BuildSeq& s : seqs)
      frontiers.emplace_back(s.anchor, s.gen.term(s.mat_to));
    std::vector<Rational> pts(points.begin(), points.upper_bound(hi));
    std::vector<std::pair<Rational, Rational>> gaps;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      bool hidden = false;
      for (const auto& [lo, fhi] : frontiers)
        if (pts[i] < fhi && lo < pts[i + 1]) {
          hidden = true;
          break;
        }
      if (!hidden) gaps.emplace_back(pts[i], pts[i + 1]);
    }
    // term(1) of an inserted sequence equals the right endpoint, an existing
    // point; deduplicated by starting at index 2
    for (const auto& [a, b] : gaps) add_seq(n, a, b, BigInt(2));
  }

  // tail children of a sequence accumulate at its anchor; stage n' reaches
  // cofinally many of them exactly when anchor < 1/n'
  auto tail_survive_of = [&](const BuildSeq& s) {
    int count = 0;
    for (int n = s.stage + 1; n <= depth; ++n)
      if (s.anchor < Rational(BigInt(1), BigInt(n))) ++count;
    return count;
  };

  std::function<TreeNode(const Rational&)> make_node = [&](const Rational& v) {
    TreeNode node;
    node.value = v;
    auto it = seqs_at.find(v);
    if (it != seqs_at.end()) {
      for (size_t si : it->second) {
        const BuildSeq& s = seqs[si];
        TreeSeq ts;
        ts.side = TreeSeq::Side::Right;
        ts.gen = s.gen;
        ts.materialized_to = s.mat_to;
        ts.tail_survive = tail_survive_of(s);
        for (const auto& [m, cv] : s.children) ts.children.emplace_back(m, make_node(cv));
        node.attached.push_back(std::move(ts));
      }
    }
    return node;
  };

  out.tree.roots.push_back(make_node(Rational(0)));
  return out;
}

bool tree_contains_value(const SpaceTree& t, const Rational& x) {
  bool found = false;
  for_each_node(t, [&](const TreeNode& n) {
    if (n.value == x) found = true;
    for (const TreeSeq& s : n.attached) {
      auto m = s.gen.nat_index_of(x);
      if (m && *m > s.materialized_to) found = true;  // unmaterialized tail point
    }
  });
  return found;
}

TreeMetricOracle::TreeMetricOracle(const SpaceTree& t, int build_depth)
    : build_depth_(build_depth) {
  for_each_node(t, [&](const TreeNode& n) {
    sorted_values_.push_back(n.value);
    for (const TreeSeq& s : n.attached) {
      SeqInfo info;
      info.anchor = n.value;
      info.gen = s.gen;
      info.mat_to = s.materialized_to;
      info.structured_tail = s.tail_survive >= 1;
      Rational edge = s.gen.term(s.materialized_to >= 1 ? s.materialized_to : BigInt(1));
      info.zone_lo = min(info.anchor, edge);
      info.zone_hi = max(info.anchor, edge);
      seqs_by_anchor_[info.anchor].push_back(seqs_.size());
      seqs_.push_back(std::move(info));
    }
  });
  std::sort(sorted_values_.begin(), sorted_values_.end());
  by_zone_lo_.resize(seqs_.size());
  by_zone_hi_.resize(seqs_.size());
  for (size_t i = 0; i < seqs_.size(); ++i) by_zone_lo_[i] = by_zone_hi_[i] = i;
  std::sort(by_zone_lo_.begin(), by_zone_lo_.end(),
            [&](size_t a, size_t b) { return seqs_[a].zone_lo < seqs_[b].zone_lo; });
  std::sort(by_zone_hi_.begin(), by_zone_hi_.end(),
            [&](size_t a, size_t b) { return seqs_[a].zone_hi < seqs_[b].zone_hi; });
}

bool TreeMetricOracle::accumulates_at(const Rational& x, int probe_bits) const {
  // Accumulation witnesses: x anchors a sequence, whose tail enters every
  // probe ball around x.
  if (auto it = seqs_by_anchor_.find(x); it != seqs_by_anchor_.end()) {
    for (size_t si : it->second) {
      const SeqInfo& s = seqs_[si];
      for (int j = 0; j <= probe_bits; ++j) {
        Rational eps = pow2(-j);
        BigInt m = s.gen.nat_absorb_index(eps);
        if (m <= s.mat_to) m = s.mat_to + 1;  // pick a point that is always realized
        Rational witness = s.gen.term(m);
        if (!(dist(witness, x) < eps) || witness == x)
          throw std::logic_error("accumulation witness failed at " + x.str());
      }
    }
    return true;
  }

  // Otherwise certify a positive lower bound on the distance to every other
  // realized point.
  std::optional<Rational> bound;
  auto offer = [&](const Rational& d) {
    if (!bound || d < *bound) bound = d;
  };
  {  // nearest materialized value
    auto it = std::lower_bound(sorted_values_.begin(), sorted_values_.end(), x);
    if (it != sorted_values_.end() && *it == x) {
      if (std::next(it) != sorted_values_.end()) offer(dist(*std::next(it), x));
      if (it != sorted_values_.begin()) offer(dist(*std::prev(it), x));
    } else {
      throw InputError("accumulation oracle queried with a non-realized point " + x.str());
    }
  }
  if (!bound) return false;  // single-point tree

  // Sequences whose unmaterialized zone could come closer than the bound.
  auto consider = [&](const SeqInfo& s) {
    // nearest unmaterialized tail term, exactly
    std::vector<BigInt> cand = s.gen.nearest_nat_indices(x);
    cand.push_back(s.mat_to + 1);
    for (const BigInt& m : cand) {
      if (m <= s.mat_to) continue;
      Rational v = s.gen.term(m);
      if (v == x) throw std::logic_error("window point coincides with a tail term");
      offer(dist(v, x));
    }
    if (!s.structured_tail) return;
    // nested insertions below the tail stay inside (zone_lo, zone_hi); at
    // build depth d they keep a gap of at least width/2^d from each edge
    if (x <= s.zone_lo || x >= s.zone_hi) {
      Rational edge_gap = x <= s.zone_lo ? s.zone_lo - x : x - s.zone_hi;
      if (edge_gap.sign() > 0) {
        offer(edge_gap);
      } else {
        Rational w = s.gen.term(s.mat_to) - s.gen.term(s.mat_to + 1);
        offer(w.abs() * pow2(-build_depth_));
      }
    } else {
      throw InputError("accumulation oracle cannot resolve a point inside an unmaterialized zone");
    }
  };
  // A zone overlapping the current bound ball must have an edge inside it:
  // a zone containing x would have tripped the resolve error above.
  const Rational ball_lo = x - *bound, ball_hi = x + *bound;
  auto scan = [&](const std::vector<size_t>& order, auto edge_of) {
    auto lo = std::lower_bound(order.begin(), order.end(), ball_lo,
                               [&](size_t i, const Rational& v) { return edge_of(seqs_[i]) < v; });
    for (auto it = lo; it != order.end() && !(edge_of(seqs_[*it]) > ball_hi); ++it)
      consider(seqs_[*it]);
  };
  scan(by_zone_lo_, [](const SeqInfo& s) -> const Rational& { return s.zone_lo; });
  scan(by_zone_hi_, [](const SeqInfo& s) -> const Rational& { return s.zone_hi; });
  if (bound->sign() <= 0) throw std::logic_error("non-positive isolation bound");
  return false;
}

namespace {

int template_survival(const Json& tmpl);

Rational json_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": rationals must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

void check_keys(const Json& obj, const std::set<std::string>& required,
                const std::set<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, _] : obj.items())
    if (!required.count(key) && !optional.count(key))
      throw InputError(where + ": unknown field \"" + key + "\"");
  for (const auto& key : required)
    if (!obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
}

ChainGenerator tree_generator_from_json(const Json& j);

// Template generator parameters are local: 0 is the child value, 1 the outer
// sibling. Remap onto the concrete frame.
ChainGenerator remap_generator(const ChainGenerator& local, const Rational& child,
                               const Rational& outer) {
  Rational span = outer - child;
  auto remap = [&](const Rational& r) { return child + r * span; };
  switch (local.kind()) {
    case ChainGenerator::Kind::Harmonic:
      return ChainGenerator::harmonic(remap(local.first_param()), remap(local.second_param()));
    case ChainGenerator::Kind::Logistic:
      return ChainGenerator::logistic(remap(local.first_param()), remap(local.second_param()));
    case ChainGenerator::Kind::ExplicitHead: {
      std::vector<Rational> head;
      for (const Rational& v : local.head()) head.push_back(remap(v));
      return ChainGenerator::explicit_head(std::move(head), remap_generator(local.tail(), child, outer));
    }
  }
  throw std::logic_error("unreachable");
}

TreeSeq::Side side_from_string(const std::string& s, const std::string& where) {
  if (s == "left") return TreeSeq::Side::Left;
  if (s == "right") return TreeSeq::Side::Right;
  throw InputError(where + ": side must be \"left\" or \"right\"");
}

TreeNode node_from_json(const Json& j, int depth_guard);

// Expand a uniform child template at concrete frame (value, outer). A null or
// absent template yields a leaf. Children whose value collides with the outer
// sibling are deduplicated away.
TreeNode expand_template(const Json& tmpl, const Rational& value, const Rational& outer,
                         int depth_guard) {
  TreeNode node;
  node.value = value;
  if (tmpl.is_null()) return node;
  if (depth_guard <= 0) throw InputError("tree template nests too deep");
  check_keys(tmpl, {}, {"value", "attached"}, "child_template");
  if (!tmpl.contains("attached")) return node;
  if (value == outer) return node;  // degenerate frame, e.g. first harmonic term
  for (const Json& js : tmpl.at("attached")) {
    check_keys(js, {"side", "generator", "truncate_at"}, {"child_template"}, "template sequence");
    TreeSeq seq;
    seq.side = side_from_string(js.at("side").get<std::string>(), "template sequence");
    ChainGenerator gen = remap_generator(tree_generator_from_json(js.at("generator")), value, outer);
    seq.gen = gen;
    if (!(gen.seq_limit() == value))
      throw InputError("template sequence does not converge to its node");
    if (!js.at("truncate_at").is_number_integer())
      throw InputError("truncate_at must be a positive integer");
    BigInt truncate = js.at("truncate_at").get<long long>();
    if (truncate < 1) throw InputError("truncate_at must be >= 1");
    seq.materialized_to = truncate;
    const Json sub = js.contains("child_template") ? js.at("child_template") : Json(nullptr);
    seq.tail_survive = template_survival(sub);
    Rational prev;  // outer sibling of child m is term(m-1); term(0) falls back to the frame edge
    for (BigInt m = 1; m <= truncate; ++m) {
      Rational v = gen.term(m);
      Rational child_outer = (m == 1) ? gen.second_param() : prev;
      prev = v;
      if (v == outer) continue;  // deduplicated against the existing sibling
      seq.children.emplace_back(m, expand_template(sub, v, child_outer, depth_guard - 1));
    }
    node.attached.push_back(std::move(seq));
  }
  return node;
}

int template_survival(const Json& tmpl) {
  if (tmpl.is_null() || !tmpl.contains("attached") || tmpl.at("attached").empty()) return 0;
  int best = 0;
  for (const Json& js : tmpl.at("attached")) {
    const Json sub = js.contains("child_template") ? js.at("child_template") : Json(nullptr);
    best = std::max(best, template_survival(sub));
  }
  return 1 + best;
}

ChainGenerator tree_generator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError("generator: missing kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "harmonic") {
    check_keys(j, {"kind", "a", "b"}, {}, "harmonic generator");
    return ChainGenerator::harmonic(json_rational(j.at("a"), "generator a"),
                                    json_rational(j.at("b"), "generator b"));
  }
  if (kind == "logistic") {
    check_keys(j, {"kind", "p", "q"}, {}, "logistic generator");
    return ChainGenerator::logistic(json_rational(j.at("p"), "generator p"),
                                    json_rational(j.at("q"), "generator q"));
  }
  if (kind == "explicit_head") {
    check_keys(j, {"kind", "head", "tail"}, {}, "explicit_head generator");
    std::vector<Rational> head;
    for (const auto& v : j.at("head")) head.push_back(json_rational(v, "generator head"));
    return ChainGenerator::explicit_head(std::move(head), tree_generator_from_json(j.at("tail")));
  }
  throw InputError("generator: unknown kind \"" + kind + "\"");
}

TreeSeq seq_from_json(const Json& js, const Rational& node_value, int depth_guard) {
  check_keys(js, {"side", "generator", "truncate_at"},
             {"child_template", "children", "tail_survive"}, "tree sequence");
  if (js.contains("children") && js.contains("child_template"))
    throw InputError("tree sequence: give either children or child_template, not both");
  TreeSeq seq;
  seq.side = side_from_string(js.at("side").get<std::string>(), "tree sequence");
  seq.gen = tree_generator_from_json(js.at("generator"));
  if (!(seq.gen.seq_limit() == node_value))
    throw InputError("tree sequence does not converge to its node value");
  Rational probe = seq.gen.term(seq.gen.kind() == ChainGenerator::Kind::Logistic ? BigInt(0) : BigInt(1));
  bool above = probe > node_value;
  if (above != (seq.side == TreeSeq::Side::Right))
    throw InputError("tree sequence side does not match its generator");
  if (!js.at("truncate_at").is_number_integer())
    throw InputError("truncate_at must be a positive integer");
  BigInt truncate = js.at("truncate_at").get<long long>();
  if (truncate < 1) throw InputError("truncate_at must be >= 1");
  seq.materialized_to = truncate;
  if (js.contains("children")) {
    if (!js.contains("tail_survive") || !js.at("tail_survive").is_number_integer() ||
        js.at("tail_survive").get<long long>() < 0)
      throw InputError("explicit children require a nonnegative tail_survive count");
    seq.tail_survive = js.at("tail_survive").get<int>();
    BigInt prev = 0;
    for (const Json& c : js.at("children")) {
      check_keys(c, {"m", "node"}, {}, "tree child");
      if (!c.at("m").is_number_integer() || c.at("m").get<long long>() < 1)
        throw InputError("tree child: m must be a positive integer");
      BigInt m = c.at("m").get<long long>();
      if (m <= prev) throw InputError("tree children must have strictly increasing indices");
      if (m > seq.materialized_to) throw InputError("tree child index beyond truncate_at");
      prev = m;
      TreeNode child = node_from_json(c.at("node"), depth_guard - 1);
      if (!(child.value == seq.gen.term(m)))
        throw InputError("tree child value does not equal its generator term");
      seq.children.emplace_back(m, std::move(child));
    }
  } else {
    const Json tmpl = js.contains("child_template") ? js.at("child_template") : Json(nullptr);
    seq.tail_survive = template_survival(tmpl);
    Rational prev;
    for (BigInt m = 1; m <= truncate; ++m) {
      Rational v = seq.gen.term(m);
      Rational child_outer = (m == 1) ? seq.gen.second_param() : prev;
      prev = v;
      seq.children.emplace_back(m, expand_template(tmpl, v, child_outer, depth_guard - 1));
    }
  }
  return seq;
}

TreeNode node_from_json(const Json& j, int depth_guard) {
  if (depth_guard <= 0) throw InputError("tree nests too deep");
  check_keys(j, {"value"}, {"attached"}, "tree node");
  TreeNode node;
  node.value = json_rational(j.at("value"), "tree node value");
  if (j.contains("attached")) {
    if (!j.at("attached").is_array()) throw InputError("attached must be an array");
    for (const Json& js : j.at("attached")) node.attached.push_back(seq_from_json(js, node.value, depth_guard));
  }
  return node;
}

}  // namespace

SpaceTree tree_from_json(const Json& doc) {
  constexpr int kMaxDepth = 24;
  SpaceTree t;
  if (doc.is_object() && doc.contains("roots")) {
    check_keys(doc, {"roots"}, {"stage_windows", "depth", "tail"}, "tree document");
    if (!doc.at("roots").is_array()) throw InputError("roots must be an array");
    for (const Json& r : doc.at("roots")) t.roots.push_back(node_from_json(r, kMaxDepth));
  } else {
    t.roots.push_back(node_from_json(doc, kMaxDepth));
  }
  realize_tree(t, 8);  // window-scale distinctness check
  return t;
}

namespace {

Json node_to_json(const TreeNode& n) {
  Json j;
  j["value"] = n.value.str();
  Json seqs = Json::array();
  for (const TreeSeq& s : n.attached) {
    Json js;
    js["side"] = s.side == TreeSeq::Side::Left ? "left" : "right";
    Json gen;
    switch (s.gen.kind()) {
      case ChainGenerator::Kind::Harmonic:
        gen = Json{{"kind", "harmonic"}, {"a", s.gen.first_param().str()}, {"b", s.gen.second_param().str()}};
        break;
      case ChainGenerator::Kind::Logistic:
        gen = Json{{"kind", "logistic"}, {"p", s.gen.first_param().str()}, {"q", s.gen.second_param().str()}};
        break;
      case ChainGenerator::Kind::ExplicitHead: {
        // flatten: explicit-head generators do not occur in emitted trees
        throw std::logic_error("explicit_head sequences are not serialized in trees");
      }
    }
    js["generator"] = std::move(gen);
    js["truncate_at"] = s.materialized_to.convert_to<long long>();
    Json kids = Json::array();
    for (const auto& [m, child] : s.children)
      kids.push_back(Json{{"m", m.convert_to<long long>()}, {"node", node_to_json(child)}});
    js["children"] = std::move(kids);
    js["tail_survive"] = s.tail_survive;
    seqs.push_back(std::move(js));
  }
  j["attached"] = std::move(seqs);
  return j;
}

}  // namespace

Json tree_to_json(const SpaceTree& t) {
  Json j;
  Json roots = Json::array();
  for (const TreeNode& r : t.roots) roots.push_back(node_to_json(r));
  j["roots"] = std::move(roots);
  return j;
}

}  // namespace hyperdyn
