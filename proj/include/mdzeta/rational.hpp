#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mdzeta/errors.hpp"

namespace mdzeta {

/// Exact rational number on int64 coefficients. The shuffle and stuffle
/// algebras only ever produce small coefficients; intermediates go through
/// __int128 and overflow throws instead of wrapping.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::Divergent, "rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ <=> (__int128)b.num_ * a.den_;
  }

  double to_double() const { return double(num_) / double(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p" or "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad rational: " + text);
    }
  }

private:
  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::Divergent, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      fail(Errc::ParseError, "rational overflow");
    Rational r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = from128(num_, den_); }

  std::int64_t num_, den_;
};

}  // namespace mdzeta
