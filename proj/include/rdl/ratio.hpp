#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rdl/common.hpp"

namespace rdl {

// Exact rational on 64-bit terms. All density bookkeeping uses these so that
// acceptance tolerances are never polluted by floating-point drift.
// Intermediates widen to 128 bits; terms must stay within int64 after
// reduction (counts in this artifact are bounded by prefix lengths <= 1e9).
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Ratio() = default;
  Ratio(std::int64_t n) : num(n), den(1) {}
  Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  static Ratio from128(__int128 n, __int128 d) {
    if (d == 0) throw ParamError("Ratio: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw ParamError("Ratio: overflow after reduction");
    Ratio r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  void reduce() {
    *this = from128(num, den);
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return from128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return from128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num == 0) throw ParamError("Ratio: division by zero");
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

}  // namespace rdl
