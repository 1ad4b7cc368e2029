#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hyperdyn/rational.hpp"

namespace hyperdyn {

/// Closed-form producer of an infinite injective sequence of exact rationals.
///
/// Three kinds:
///  - Harmonic{a,b}: term(m) = a + (b-a)/m for m >= 1; strictly monotone,
///    converging to a, all terms in the half-open interval between a and b.
///  - Logistic{p,q}: term(k) = p + (q-p) * 2^k/(1+2^k) for k in Z; strictly
///    monotone between p and q, -> p as k -> -inf and -> q as k -> +inf.
///  - ExplicitHead{head, tail}: finitely many listed terms followed by the
///    tail generator.
///
/// Inside a bi-infinite orbit chain the one-sided kinds (harmonic,
/// explicit_head) are lifted to Z-indexing by the zigzag bijection
/// k>=1 -> m=2k, k<=0 -> m=1-2k, so both ends of the chain converge to the
/// same value; the logistic kind indexes Z directly.
class ChainGenerator {
 public:
  enum class Kind { Harmonic, Logistic, ExplicitHead };

  ChainGenerator() : kind_(Kind::Harmonic), a_(0), b_(1) {}  // placeholder harmonic 1/m

  static ChainGenerator harmonic(Rational a, Rational b);
  static ChainGenerator logistic(Rational p, Rational q);
  static ChainGenerator explicit_head(std::vector<Rational> head, ChainGenerator tail);

  Kind kind() const { return kind_; }
  const Rational& first_param() const { return a_; }   // harmonic a / logistic p
  const Rational& second_param() const { return b_; }  // harmonic b / logistic q
  const std::vector<Rational>& head() const { return head_; }
  const ChainGenerator& tail() const { return *tail_; }

  bool one_sided() const { return kind_ != Kind::Logistic; }

  /// Natural-index term; m >= 1 for one-sided kinds, any integer for logistic.
  Rational term(const BigInt& m) const;

  /// Limit of term(m) as m -> +inf (sequence-in-a-tree reading).
  Rational seq_limit() const;

  /// Z-indexed chain term (zigzag lift for one-sided kinds).
  Rational chain_point(long long k) const;
  /// Limit of chain_point(k) as k -> -inf / +inf.
  Rational chain_neg_limit() const;
  Rational chain_pos_limit() const;

  /// Exact membership: natural index m with term(m) == x, if any.
  std::optional<BigInt> nat_index_of(const Rational& x) const;
  /// Exact membership under chain (Z) indexing.
  std::optional<long long> chain_index_of(const Rational& x) const;

  /// Natural indices whose terms are candidates for "nearest term to x".
  /// Guaranteed superset of the argmin whenever a nearest term exists; may be
  /// empty when the infimum distance is approached only toward a limit.
  std::vector<BigInt> nearest_nat_indices(const Rational& x) const;

  /// Smallest k0 such that |chain_point(k) - chain_pos_limit()| < delta for
  /// every k >= k0.
  long long forward_absorb_index(const Rational& delta) const;
  /// Largest k1 such that |chain_point(k) - chain_neg_limit()| < delta for
  /// every k <= k1.
  long long backward_absorb_index(const Rational& delta) const;

  /// Smallest m0 >= 1 with |term(m) - seq_limit()| < delta for all m >= m0.
  BigInt nat_absorb_index(const Rational& delta) const;

  friend bool operator==(const ChainGenerator& x, const ChainGenerator& y);

 private:
  Kind kind_ = Kind::Harmonic;
  Rational a_, b_;
  std::vector<Rational> head_;
  std::shared_ptr<const ChainGenerator> tail_;
};

/// Zigzag bijection Z -> N+ used to thread one-sided generators through a
/// bi-infinite chain.
inline BigInt zigzag_nat(long long k) {
  return k >= 1 ? BigInt(2 * k) : BigInt(1 - 2 * k);
}
/// Inverse of zigzag_nat.
std::optional<long long> zigzag_int(const BigInt& m);

}  // namespace hyperdyn
