#include "hyperdyn/point_set.hpp"

#include <algorithm>

namespace hyperdyn {

PointSet::PointSet(std::vector<Rational> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

bool PointSet::subset_of(const PointSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(),
                       points_.end());
}

PointSet PointSet::union_with(const PointSet& other) const {
  std::vector<Rational> merged;
  merged.reserve(points_.size() + other.points_.size());
  std::merge(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
             std::back_inserter(merged));
  return PointSet(std::move(merged));
}

Rational directed_hausdorff(const PointSet& from, const PointSet& to) {
  if (from.empty() || to.empty()) throw InputError("empty compact set");
  Rational worst = 0;
  for (const Rational& x : from) {
    // nearest neighbor in a sorted list
    auto it = std::lower_bound(to.begin(), to.end(), x);
    Rational best = (it != to.end()) ? dist(*it, x) : dist(*std::prev(it), x);
    if (it != to.begin()) best = min(best, dist(*std::prev(it), x));
    if (best > worst) worst = best;
  }
  return worst;
}

Rational hausdorff_distance(const PointSet& a, const PointSet& b) {
  return max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

Rational min_gap(const PointSet& a) {
  if (a.size() < 2) throw InputError("gap undefined");
  Rational best = a[1] - a[0];
  for (size_t i = 2; i < a.size(); ++i) best = min(best, a[i] - a[i - 1]);
  return best;
}

std::vector<std::pair<Rational, Rational>> adjacent_pairs(const PointSet& a) {
  std::vector<std::pair<Rational, Rational>> out;
  for (size_t i = 0; i + 1 < a.size(); ++i) out.emplace_back(a[i], a[i + 1]);
  return out;
}

}  // namespace hyperdyn
