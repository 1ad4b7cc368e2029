#include <doctest.h>

#include "hyperdyn/point_set.hpp"
#include "hyperdyn/tree.hpp"
#include "test_support.hpp"

using namespace hyperdyn;
using testsupport::hausdorff_by_threshold_bisection;
using testsupport::random_point_set;
using testsupport::random_subset;

namespace {
PointSet ps(std::initializer_list<const char*> vals) {
  std::vector<Rational> pts;
  for (const char* v : vals) pts.push_back(Rational::parse(v));
  return PointSet(std::move(pts));
}
}  // namespace

TEST_CASE("hausdorff distance on worked examples") {
  CHECK(hausdorff_distance(ps({"0", "1/2"}), ps({"0", "1/2"})).str() == "0");
  CHECK(hausdorff_distance(ps({"0"}), ps({"0", "1"})).str() == "1");
  // directed 0->B gives 1/3, B->A gives 1/2
  CHECK(hausdorff_distance(ps({"0", "1/2"}), ps({"1/3", "1"})).str() == "1/2");
  CHECK(directed_hausdorff(ps({"0", "1/2"}), ps({"1/3", "1"})).str() == "1/3");
  CHECK(directed_hausdorff(ps({"1/3", "1"}), ps({"0", "1/2"})).str() == "1/2");
  CHECK_THROWS_WITH_AS(hausdorff_distance(PointSet{}, ps({"0"})), "empty compact set", InputError);
}

TEST_CASE("min gap and adjacent pairs") {
  CHECK(min_gap(ps({"0", "1/2", "1"})).str() == "1/2");
  CHECK(min_gap(ps({"1/3", "1/2", "1"})).str() == "1/6");
  CHECK(min_gap(ps({"0", "1"})).str() == "1");
  CHECK_THROWS_WITH_AS(min_gap(ps({"0"})), "gap undefined", InputError);

  // truncation artifact: the window of the one-limit space shows a pair at
  // the accumulation side that the infinite space does not have
  auto pairs = adjacent_pairs(realize_tree(build_adjacent_example(0, 8).tree, 3));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].first.str() == "0");
  CHECK(pairs[0].second.str() == "1/3");
  CHECK(pairs[1].first.str() == "1/3");
  CHECK(pairs[1].second.str() == "1/2");
  CHECK(pairs[2].first.str() == "1/2");
  CHECK(pairs[2].second.str() == "1");
  CHECK(adjacent_pairs(ps({"0", "1"})).size() == 1);
  CHECK(adjacent_pairs(ps({"7"})).empty());
}

TEST_CASE("metric axioms hold exactly on random sets") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 300; ++round) {
    PointSet a = random_point_set(rng, 12, 64);
    PointSet b = random_point_set(rng, 12, 64);
    PointSet c = random_point_set(rng, 12, 64);
    Rational ab = hausdorff_distance(a, b);
    Rational ba = hausdorff_distance(b, a);
    Rational ac = hausdorff_distance(a, c);
    Rational cb = hausdorff_distance(c, b);
    CHECK(ab == ba);
    CHECK(ab.sign() >= 0);
    CHECK((ab.is_zero() == (a == b)));
    CHECK(ab <= ac + cb);
    // enlarging one side toward the other never increases the distance
    CHECK(hausdorff_distance(a, b.union_with(a)) <= ab);
  }
}

TEST_CASE("directed distance is monotone along nested triples") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    PointSet c = random_point_set(rng, 12, 64);
    PointSet b = random_subset(rng, c);
    PointSet a = random_subset(rng, b);
    CHECK(a.subset_of(b));
    CHECK(b.subset_of(c));
    CHECK(directed_hausdorff(b, a) <= directed_hausdorff(c, a));
    CHECK(hausdorff_distance(a, b) == directed_hausdorff(b, a));
  }
}

TEST_CASE("max-min form agrees with the threshold-bisection evaluation") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    PointSet a = random_point_set(rng, 10, 32);
    PointSet b = random_point_set(rng, 10, 32);
    CHECK(hausdorff_distance(a, b) == hausdorff_by_threshold_bisection(a, b));
  }
}
