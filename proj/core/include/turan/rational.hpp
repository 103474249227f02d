#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "turan/errors.hpp"

namespace turan {

/// Exact fraction on int64 with 128-bit intermediates. Always stored in
/// lowest terms with a positive denominator, so equality is bitwise and
/// ordering is exact. All densities and threshold exponents are Rationals;
/// floating point enters only in the probability/simulation layers.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InputError("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const { return double(num_) / double(den_); }

  Rational reciprocal() const {
    if (num_ == 0) throw InputError("reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InputError("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Serialized form used in all JSON/CSV outputs, e.g. "5/2", "2/1".
  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a/b" and plain integers "a".
  static Rational parse(std::string_view s);

 private:
  using i128 = __int128;

  static Rational from_i128(i128 num, i128 den) {
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      throw InputError("rational overflow");
    Rational r;
    r.num_ = std::int64_t(num);
    r.den_ = std::int64_t(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw InputError("bad rational: '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string_view::npos)
      return Rational(std::stoll(std::string(s)), 1);
    std::int64_t n = std::stoll(std::string(s.substr(0, slash)));
    std::int64_t d = std::stoll(std::string(s.substr(slash + 1)));
    return Rational(n, d);
  } catch (const InputError&) {
    throw;
  } catch (...) {
    bad();
  }
  return Rational();  // unreachable
}

}  // namespace turan
