#include "hyperdyn/rational.hpp"

#include <cctype>

namespace hyperdyn {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  // cpp_rational reduces but insists on a positive denominator argument
  if (den < 0)
    v_ = Backing(-num, -den);
  else
    v_ = Backing(num, den);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw InputError("division by zero");
  return Rational(Rational::Backing(x.v_ / y.v_));
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) throw InputError("malformed rational: \"" + text + "\"");
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-')
    throw InputError("malformed rational: \"" + text + "\"");
  BigInt d(den);
  if (d == 0) throw InputError("malformed rational: \"" + text + "\"");
  return Rational(BigInt(num), d);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  BigInt d = denominator();
  if (d != 1) {
    out += '/';
    out += d.str();
  }
  return out;
}

BigInt floor_of(const Rational& x) {
  BigInt n = x.numerator(), d = x.denominator();
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt ceil_of(const Rational& x) {
  BigInt n = x.numerator(), d = x.denominator();
  BigInt q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

Rational pow2(long long k) {
  if (k >= 0) return Rational(BigInt(1) << static_cast<unsigned>(k));
  return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(-k));
}

std::optional<long long> log2_exact(const Rational& x) {
  if (x.sign() <= 0) return std::nullopt;
  BigInt n = x.numerator(), d = x.denominator();
  auto power_of_two = [](const BigInt& v) -> std::optional<long long> {
    if (v <= 0) return std::nullopt;
    unsigned bit = boost::multiprecision::msb(v);
    if ((BigInt(1) << bit) != v) return std::nullopt;
    return static_cast<long long>(bit);
  };
  if (d == 1) {
    auto k = power_of_two(n);
    if (!k) return std::nullopt;
    return *k;
  }
  if (n == 1) {
    auto k = power_of_two(d);
    if (!k) return std::nullopt;
    return -*k;
  }
  return std::nullopt;  // reduced fraction: mixed num/den can't be 2^k
}

}  // namespace hyperdyn
