#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "spl/errors.hpp"

namespace spl {

// Exact rational arithmetic on 64-bit numerator/denominator, normalized with
// positive denominator. Comparisons and products go through __int128 so the
// tight additive constants in the threshold inequalities are never rounded.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, Errc::domain_error, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(static_cast<long long>(static_cast<__int128>(a.num) * b.den +
                                      static_cast<__int128>(b.num) * a.den),
               a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return a + Rat(-b.num, b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(static_cast<long long>(static_cast<__int128>(a.num) * b.num),
               a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num != 0, Errc::domain_error, "division by zero");
    return Rat(static_cast<long long>(static_cast<__int128>(a.num) * b.den),
               static_cast<long long>(static_cast<__int128>(a.den) * b.num));
  }

  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }
  bool is_integer() const { return den == 1; }

  // "p/q" for non-integers, "p" otherwise. Used in JSON artifacts, which
  // carry no floating point.
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rat parse(const std::string& s);
};

}  // namespace spl
