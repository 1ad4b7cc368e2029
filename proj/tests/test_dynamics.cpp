#include <doctest.h>

#include "hyperdyn/dynamics.hpp"
#include "hyperdyn/space_json.hpp"

using namespace hyperdyn;

namespace {
Rational rat(const char* s) { return Rational::parse(s); }

StabilityClass classify_at(const SymbolicSystem& s, const char* value) {
  return classify_periodic_point(s, s.require_member(rat(value))).label;
}
}  // namespace

TEST_CASE("theorem2 construction: orientation and classification") {
  SymbolicSystem s = build_theorem2_system({rat("0"), rat("1")});
  PointRef half = s.require_member(rat("1/2"));
  CHECK(s.value(s.forward(half)).str() == "2/3");
  CHECK(classify_at(s, "0") == StabilityClass::Repeller);
  CHECK(classify_at(s, "1") == StabilityClass::Attractor);
  FixedPointClass zero = classify_periodic_point(s, s.require_member(rat("0")));
  CHECK(zero.gamma == rat("1/2"));

  SymbolicSystem s3 = build_theorem2_system({rat("0"), rat("1/2"), rat("1")});
  CHECK(classify_at(s3, "0") == StabilityClass::Repeller);
  CHECK(classify_at(s3, "1/2") == StabilityClass::Attractor);  // both gaps feed it
  CHECK(classify_at(s3, "1") == StabilityClass::Repeller);

  CHECK_THROWS_AS(build_theorem2_system({rat("1"), rat("0")}), InputError);
  CHECK_THROWS_AS(build_theorem2_system({rat("0")}), InputError);
}

TEST_CASE("translation example: enumeration and the Neither witness") {
  SymbolicSystem s = build_translation_example();
  CHECK(s.value({PointRef::Kind::ChainPoint, 0, 0}).str() == "1");
  CHECK(s.value({PointRef::Kind::ChainPoint, 0, 1}).str() == "1/2");
  CHECK(s.value({PointRef::Kind::ChainPoint, 0, -1}).str() == "1/3");
  FixedPointClass cls = classify_periodic_point(s, s.require_member(rat("0")));
  CHECK(cls.label == StabilityClass::Neither);
  CHECK(cls.alpha_chain_id == "c");
  CHECK(cls.omega_chain_id == "c");
  CHECK_THROWS_WITH_AS(classify_periodic_point(s, s.require_member(rat("1/2"))), "not periodic",
                       InputError);
}

TEST_CASE("verdicts") {
  Verdict good = hyper_expansive_verdict(build_theorem2_system({rat("0"), rat("1")}));
  CHECK(good.hyper_expansive);
  CHECK(good.delta == rat("1/6"));
  CHECK(good.omega_set == std::vector<Rational>{rat("0"), rat("1")});
  CHECK(good.orbit_count == 3);

  Verdict bad = hyper_expansive_verdict(build_translation_example());
  CHECK(!bad.hyper_expansive);
  REQUIRE(bad.reason.has_value());
  CHECK(bad.reason->kind == VerdictReason::Kind::NonHyperbolicPeriodic);
  CHECK(bad.reason->point == rat("0"));
  CHECK(bad.omega_set == std::vector<Rational>{rat("0")});
  CHECK(bad.orbit_count == 2);

  Verdict finite = hyper_expansive_verdict(build_finite_system({{rat("0"), rat("1")}}));
  CHECK(finite.hyper_expansive);
  CHECK(finite.delta == rat("1/2"));
  CHECK(classify_at(build_finite_system({{rat("0"), rat("1")}}), "0") ==
        StabilityClass::BothIsolated);
}

TEST_CASE("expansive delta combines the periodic gap and isolation radii") {
  CHECK(expansive_delta(build_theorem2_system({rat("0"), rat("1")})) == rat("1/6"));
  CHECK(expansive_delta(build_theorem2_system({rat("0"), rat("1/2"), rat("1")})) == rat("1/12"));
  CHECK(expansive_delta(build_finite_system({{rat("0"), rat("1")}})) == rat("1/2"));
  CHECK_THROWS_WITH_AS(expansive_delta(build_translation_example()),
                       "system is not hyper-expansive", InputError);
}

TEST_CASE("compact invariant sets") {
  SymbolicSystem t2 = build_theorem2_system({rat("0"), rat("1")});
  auto sets = compact_invariant_sets(t2, 100);
  REQUIRE(sets.size() == 4);
  // {0}, {1}, {0,1}, X
  CHECK(sets[0].limit_indices == std::vector<int>{0});
  CHECK(sets[0].chain_indices.empty());
  CHECK(sets[1].limit_indices == std::vector<int>{1});
  CHECK(sets[2].limit_indices == std::vector<int>{0, 1});
  CHECK(sets[2].chain_indices.empty());
  CHECK(sets[3].limit_indices == std::vector<int>{0, 1});
  CHECK(sets[3].chain_indices == std::vector<int>{0});

  auto tr_sets = compact_invariant_sets(build_translation_example(), 100);
  REQUIRE(tr_sets.size() == 2);
  CHECK(tr_sets[0].limit_indices == std::vector<int>{0});
  CHECK(tr_sets[0].chain_indices.empty());
  CHECK(tr_sets[1].chain_indices == std::vector<int>{0});

  // a 2-cycle plus a fixed point
  auto fin = compact_invariant_sets(build_finite_system({{rat("0"), rat("1")}, {rat("5")}}), 100);
  CHECK(fin.size() == 3);

  CHECK_THROWS_AS(compact_invariant_sets(t2, 2), ResourceError);
}

TEST_CASE("invariant sets are pointwise invariant in windows") {
  for (const SymbolicSystem& s :
       {build_theorem2_system({rat("0"), rat("1")}), build_translation_example()}) {
    auto sets = compact_invariant_sets(s, 100);
    Window w = realize_window(s, 8);
    for (const auto& set : sets) {
      auto member = [&](const PointRef& r) {
        if (r.kind == PointRef::Kind::Limit)
          return std::find(set.limit_indices.begin(), set.limit_indices.end(), r.owner) !=
                 set.limit_indices.end();
        return std::find(set.chain_indices.begin(), set.chain_indices.end(), r.owner) !=
               set.chain_indices.end();
      };
      for (const auto& e : w.entries) {
        if (!member(e.ref)) continue;
        for (long long n = -16; n <= 16; ++n) CHECK(member(s.shifted(e.ref, n)));
      }
      // structural fixed point of the induced map: chains route within the
      // set, limits permute within it, anchors are included
      for (int c : set.chain_indices) {
        CHECK(member({PointRef::Kind::ChainPoint, s.route(c), 0}));
        if (s.chains()[c].kind == OrbitChain::Kind::BiInfinite) {
          CHECK(member({PointRef::Kind::Limit, s.alpha_index(c), 0}));
          CHECK(member({PointRef::Kind::Limit, s.omega_index(c), 0}));
        }
      }
      for (int l : set.limit_indices) CHECK(member({PointRef::Kind::Limit, s.perm(l), 0}));
    }
  }
}

TEST_CASE("translation map is expansive on points with constant 1/2") {
  // any two distinct points separate by at least 1/2 by the time one of them
  // visits y_0 = 1; brute force over window pairs with horizon 2M
  SymbolicSystem s = build_translation_example();
  for (int M : {2, 4}) {
    Window w = realize_window(s, M);
    for (size_t i = 0; i < w.entries.size(); ++i) {
      for (size_t j = i + 1; j < w.entries.size(); ++j) {
        Rational best = 0;
        for (long long n = -2 * M; n <= 2 * M; ++n) {
          Rational d = dist(s.value(s.shifted(w.entries[i].ref, n)),
                            s.value(s.shifted(w.entries[j].ref, n)));
          best = max(best, d);
        }
        CHECK(best >= rat("1/2"));
      }
    }
  }
}

TEST_CASE("shift periodic counts by enumeration") {
  CHECK(shift_periodic_count(1) == 2);
  CHECK(shift_periodic_count(3) == 8);
  CHECK(shift_periodic_count(10) == 1024);
  CHECK_THROWS_AS(shift_periodic_count(0), InputError);
  CHECK_THROWS_AS(shift_periodic_count(21), InputError);
}

TEST_CASE("eps-dense orbit segments") {
  SymbolicSystem fixed = build_finite_system({{rat("3")}});
  CHECK(eps_dense_segment(fixed, fixed.require_member(rat("3")), rat("1/100")) == 0);

  SymbolicSystem cyc = build_finite_system({{rat("0"), rat("1")}});
  PointRef zero = cyc.require_member(rat("0"));
  CHECK(eps_dense_segment(cyc, zero, rat("1/4")) == 1);
  CHECK(eps_dense_segment(cyc, zero, rat("2")) == 0);
  CHECK_THROWS_AS(eps_dense_segment(cyc, zero, rat("0")), InputError);

  SymbolicSystem tr = build_translation_example();
  CHECK_THROWS_WITH_AS(eps_dense_segment(tr, tr.require_member(rat("1")), rat("1")),
                       "not periodic", InputError);
}

TEST_CASE("non-wandering flags match exact window recurrence") {
  // balls around isolated points shrink to the singleton, so window
  // recurrence is exact revisiting; limit points revisit through their cycle
  for (const SymbolicSystem& s :
       {build_theorem2_system({rat("0"), rat("1")}), build_translation_example(),
        build_finite_system({{rat("0"), rat("1")}, {rat("5")}})}) {
    Verdict v = hyper_expansive_verdict(s);
    Window w = realize_window(s, 4);
    for (const auto& e : w.entries) {
      bool recurrent = false;
      for (long long n = 1; n <= 16 && !recurrent; ++n)
        if (s.shifted(e.ref, n) == e.ref) recurrent = true;
      bool in_omega = std::find(v.omega_set.begin(), v.omega_set.end(), e.value) !=
                      v.omega_set.end();
      CHECK(recurrent == in_omega);
    }
  }
}

TEST_CASE("classification is stable under powers via cycles") {
  // swapped pair of one-limit copies: the period-2 analysis sees both chains
  const char* doc = R"({
    "limits": [{"id": "a", "value": "0"}, {"id": "b", "value": "10"}],
    "limit_perm": {"a": "b", "b": "a"},
    "chains": [
      {"id": "c1", "kind": "bi_infinite", "alpha": "a", "omega": "a",
       "generator": {"kind": "harmonic", "a": "0", "b": "1"}},
      {"id": "c2", "kind": "bi_infinite", "alpha": "b", "omega": "b",
       "generator": {"kind": "harmonic", "a": "10", "b": "11"}}
    ]
  })";
  SymbolicSystem s = parse_space_text(doc);
  CHECK(classify_at(s, "0") == StabilityClass::Neither);
  CHECK(classify_at(s, "10") == StabilityClass::Neither);
  Verdict v = hyper_expansive_verdict(s);
  CHECK(!v.hyper_expansive);
  CHECK(v.orbit_count == 2);  // one limit 2-cycle, one routed chain pair
}
