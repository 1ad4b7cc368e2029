#pragma once

#include <utility>
#include <vector>

#include "hyperdyn/rational.hpp"

namespace hyperdyn {

/// Finite set of points on the line, kept strictly sorted with no duplicates.
/// Models a compact subset of the ambient space at window scale.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts and deduplicates (set semantics).
  explicit PointSet(std::vector<Rational> points);

  bool empty() const { return points_.empty(); }
  size_t size() const { return points_.size(); }
  const Rational& operator[](size_t i) const { return points_[i]; }
  const std::vector<Rational>& values() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Rational& x) const;
  bool subset_of(const PointSet& other) const;
  PointSet union_with(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Rational> points_;
};

/// max over `from` of the distance to the nearest point of `to`.
Rational directed_hausdorff(const PointSet& from, const PointSet& to);

/// Hausdorff distance between two nonempty finite sets. For finite sets the
/// open-ball infimum form equals this closed max-min value, because the
/// candidate thresholds form the finite set of pairwise distances.
Rational hausdorff_distance(const PointSet& a, const PointSet& b);

/// Smallest gap between consecutive points; requires at least two points.
Rational min_gap(const PointSet& a);

/// Consecutive sorted pairs. Empty when |a| < 2. On a window realization this
/// is truncation-relative: the infinite space may have no adjacent pair at an
/// accumulation side even though the window does.
std::vector<std::pair<Rational, Rational>> adjacent_pairs(const PointSet& a);

}  // namespace hyperdyn
