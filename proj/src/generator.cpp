#include "hyperdyn/generator.hpp"

#include <limits>

namespace hyperdyn {

namespace {
constexpr long long kUnboundedIndex = 1LL << 40;  // stands in for +/- infinity

long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw ResourceError("chain index out of range");
  return v.convert_to<long long>();
}

// 2^k/(1+2^k) exactly, any integer k.
Rational sigmoid(const BigInt& k) {
  if (k >= 0) {
    BigInt p = BigInt(1) << static_cast<unsigned>(to_ll(k));
    return Rational(p, p + 1);
  }
  BigInt p = BigInt(1) << static_cast<unsigned>(to_ll(-k));
  return Rational(BigInt(1), p + 1);
}
}  // namespace

std::optional<long long> zigzag_int(const BigInt& m) {
  if (m < 1) return std::nullopt;
  if (m % 2 == 0) return to_ll(m / 2);
  return to_ll((1 - m) / 2);
}

ChainGenerator ChainGenerator::harmonic(Rational a, Rational b) {
  if (a == b) throw InputError("harmonic generator requires a != b");
  ChainGenerator g;
  g.kind_ = Kind::Harmonic;
  g.a_ = std::move(a);
  g.b_ = std::move(b);
  return g;
}

ChainGenerator ChainGenerator::logistic(Rational p, Rational q) {
  if (p == q) throw InputError("logistic generator requires p != q");
  ChainGenerator g;
  g.kind_ = Kind::Logistic;
  g.a_ = std::move(p);
  g.b_ = std::move(q);
  return g;
}

ChainGenerator ChainGenerator::explicit_head(std::vector<Rational> head, ChainGenerator tail) {
  if (head.empty()) throw InputError("explicit_head generator requires a nonempty head");
  ChainGenerator g;
  g.kind_ = Kind::ExplicitHead;
  g.head_ = std::move(head);
  g.tail_ = std::make_shared<const ChainGenerator>(std::move(tail));
  return g;
}

Rational ChainGenerator::term(const BigInt& m) const {
  switch (kind_) {
    case Kind::Harmonic:
      if (m < 1) throw InputError("harmonic index must be >= 1");
      return a_ + (b_ - a_) / Rational(m);
    case Kind::Logistic:
      return a_ + (b_ - a_) * sigmoid(m);
    case Kind::ExplicitHead: {
      if (m < 1) throw InputError("explicit_head index must be >= 1");
      BigInt h = static_cast<long long>(head_.size());
      if (m <= h) return head_[static_cast<size_t>(to_ll(m)) - 1];
      return tail_->term(m - h);
    }
  }
  throw std::logic_error("unreachable");
}

Rational ChainGenerator::seq_limit() const {
  switch (kind_) {
    case Kind::Harmonic: return a_;
    case Kind::Logistic: return b_;
    case Kind::ExplicitHead: return tail_->seq_limit();
  }
  throw std::logic_error("unreachable");
}

Rational ChainGenerator::chain_point(long long k) const {
  if (kind_ == Kind::Logistic) return term(BigInt(k));
  return term(zigzag_nat(k));
}

Rational ChainGenerator::chain_neg_limit() const {
  return kind_ == Kind::Logistic ? a_ : seq_limit();
}

Rational ChainGenerator::chain_pos_limit() const {
  return kind_ == Kind::Logistic ? b_ : seq_limit();
}

std::optional<BigInt> ChainGenerator::nat_index_of(const Rational& x) const {
  switch (kind_) {
    case Kind::Harmonic: {
      if (x == a_) return std::nullopt;
      Rational m = (b_ - a_) / (x - a_);
      if (!m.is_integer() || m.sign() <= 0) return std::nullopt;
      return m.numerator();
    }
    case Kind::Logistic: {
      Rational r = (x - a_) / (b_ - a_);
      if (r.sign() <= 0 || r >= 1) return std::nullopt;
      auto k = log2_exact(r / (Rational(1) - r));
      if (!k) return std::nullopt;
      return BigInt(*k);
    }
    case Kind::ExplicitHead: {
      for (size_t i = 0; i < head_.size(); ++i)
        if (head_[i] == x) return BigInt(static_cast<long long>(i + 1));
      auto t = tail_->nat_index_of(x);
      if (!t || *t < 1) return std::nullopt;
      return *t + static_cast<long long>(head_.size());
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<long long> ChainGenerator::chain_index_of(const Rational& x) const {
  auto m = nat_index_of(x);
  if (!m) return std::nullopt;
  if (kind_ == Kind::Logistic) return to_ll(*m);
  return zigzag_int(*m);
}

std::vector<BigInt> ChainGenerator::nearest_nat_indices(const Rational& x) const {
  std::vector<BigInt> out;
  switch (kind_) {
    case Kind::Harmonic: {
      if (x == a_) return out;  // infimum approached at the limit, no nearest term
      Rational q = (b_ - a_) / (x - a_);
      if (q.sign() <= 0) return out;  // x beyond the limit a: the anchor dominates
      out.push_back(1);
      BigInt f = floor_of(q);
      for (BigInt m = f - 1; m <= f + 2; ++m)
        if (m >= 1) out.push_back(m);
      return out;
    }
    case Kind::Logistic: {
      Rational r = (x - a_) / (b_ - a_);
      if (r.sign() <= 0 || r >= 1) return out;  // anchors dominate every term
      Rational t = r / (Rational(1) - r);
      long long hint = static_cast<long long>(boost::multiprecision::msb(t.numerator())) -
                       static_cast<long long>(boost::multiprecision::msb(t.denominator()));
      for (long long k = hint - 2; k <= hint + 2; ++k) out.push_back(BigInt(k));
      return out;
    }
    case Kind::ExplicitHead: {
      for (size_t i = 0; i < head_.size(); ++i) out.push_back(BigInt(static_cast<long long>(i + 1)));
      for (const BigInt& t : tail_->nearest_nat_indices(x))
        if (t >= 1) out.push_back(t + static_cast<long long>(head_.size()));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

BigInt ChainGenerator::nat_absorb_index(const Rational& delta) const {
  if (delta.sign() <= 0) throw InputError("absorption radius must be positive");
  switch (kind_) {
    case Kind::Harmonic: {
      // |term(m) - a| = |b-a|/m < delta  <=>  m > |b-a|/delta
      return floor_of((b_ - a_).abs() / delta) + 1;
    }
    case Kind::Logistic: {
      // |term(m) - q| = |q-p|/(1+2^m) < delta
      Rational c = (b_ - a_).abs() / delta - 1;
      if (c.sign() <= 0) return 1;
      long long hint = static_cast<long long>(boost::multiprecision::msb(c.numerator())) -
                       static_cast<long long>(boost::multiprecision::msb(c.denominator()));
      long long k = hint - 2;
      while (!(pow2(k) > c)) ++k;
      return BigInt(k < 1 ? 1 : k);
    }
    case Kind::ExplicitHead: {
      BigInt h = static_cast<long long>(head_.size());
      BigInt m0 = h + tail_->nat_absorb_index(delta);
      Rational lim = seq_limit();
      while (m0 > 1 && dist(term(m0 - 1), lim) < delta) --m0;
      return m0;
    }
  }
  throw std::logic_error("unreachable");
}

long long ChainGenerator::forward_absorb_index(const Rational& delta) const {
  if (delta.sign() <= 0) throw InputError("absorption radius must be positive");
  if (kind_ == Kind::Logistic) {
    // |term(k) - q| = |q-p|/(1+2^k) < delta for all k beyond the threshold
    Rational c = (b_ - a_).abs() / delta - 1;
    if (c.sign() <= 0) return -kUnboundedIndex;
    long long hint = static_cast<long long>(boost::multiprecision::msb(c.numerator())) -
                     static_cast<long long>(boost::multiprecision::msb(c.denominator()));
    long long k = hint - 2;
    while (!(pow2(k) > c)) ++k;
    return k;
  }
  BigInt m0 = nat_absorb_index(delta);
  if (m0 <= 1) return -kUnboundedIndex;
  // forward indices map to even naturals m = 2k
  return to_ll((m0 + 1) / 2) < 1 ? 1 : to_ll((m0 + 1) / 2);
}

long long ChainGenerator::backward_absorb_index(const Rational& delta) const {
  if (delta.sign() <= 0) throw InputError("absorption radius must be positive");
  if (kind_ == Kind::Logistic) {
    // |term(k) - p| = |q-p| * 2^k/(1+2^k) < delta for all k at or below the threshold
    Rational s = delta / (b_ - a_).abs();
    if (s >= 1) return kUnboundedIndex;
    Rational c = s / (Rational(1) - s);  // need 2^k < c
    long long hint = static_cast<long long>(boost::multiprecision::msb(c.numerator())) -
                     static_cast<long long>(boost::multiprecision::msb(c.denominator()));
    long long k = hint + 2;
    while (!(pow2(k) < c)) --k;
    return k;
  }
  BigInt m0 = nat_absorb_index(delta);
  if (m0 <= 1) return kUnboundedIndex;
  // backward indices map to odd naturals m = 1-2k
  BigInt k1 = floor_of(Rational(1 - m0, 2));
  return to_ll(k1) > 0 ? 0 : to_ll(k1);
}

bool operator==(const ChainGenerator& x, const ChainGenerator& y) {
  if (x.kind_ != y.kind_) return false;
  switch (x.kind_) {
    case ChainGenerator::Kind::Harmonic:
    case ChainGenerator::Kind::Logistic:
      return x.a_ == y.a_ && x.b_ == y.b_;
    case ChainGenerator::Kind::ExplicitHead:
      return x.head_ == y.head_ && *x.tail_ == *y.tail_;
  }
  return false;
}

}  // namespace hyperdyn
