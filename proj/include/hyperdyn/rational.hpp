#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hyperdyn {

using BigInt = boost::multiprecision::cpp_int;

/// Malformed or contract-violating input. CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource bound was exceeded. CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational value, always stored reduced with positive denominator.
/// All coordinates and distances in this library are Rationals; there is no
/// floating point anywhere in the decision paths.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p". The denominator, when present, must be positive.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  /// Serializes as "p/q" with "/q" omitted when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.v_ + y.v_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.v_ - y.v_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.v_ * y.v_); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

 private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(Backing v) : v_(std::move(v)) {}
  Backing v_;
};

inline const Rational& min(const Rational& x, const Rational& y) { return y < x ? y : x; }
inline const Rational& max(const Rational& x, const Rational& y) { return x < y ? y : x; }
inline Rational dist(const Rational& x, const Rational& y) { return (x - y).abs(); }

/// Largest integer <= x.
BigInt floor_of(const Rational& x);
/// Smallest integer >= x.
BigInt ceil_of(const Rational& x);

/// 2^k as an exact rational, k may be negative.
Rational pow2(long long k);

/// If x == 2^k for some integer k, returns k.
std::optional<long long> log2_exact(const Rational& x);

}  // namespace hyperdyn
