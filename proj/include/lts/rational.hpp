// Minimal exact rational on int64 with 128-bit intermediates. Used at the
// stochastic edges where probabilities enter; the DPs themselves stay on
// plain integers.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lts {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }
};

inline std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN)) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

inline Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den, b.den);
  const std::int64_t bd = b.den / g;
  const __int128 num = static_cast<__int128>(a.num) * bd +
                       static_cast<__int128>(b.num) * (a.den / g);
  const __int128 den = static_cast<__int128>(a.den) * bd;
  return Rational(checked_narrow(num, "+"), checked_narrow(den, "+"));
}

inline Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational(-b.num, b.den);
}

inline Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  const std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  const __int128 num = static_cast<__int128>(a.num / g1) * (b.num / g2);
  const __int128 den = static_cast<__int128>(a.den / g2) * (b.den / g1);
  return Rational(checked_narrow(num, "*"), checked_narrow(den, "*"));
}

inline Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::invalid_argument("rational division by zero");
  return a * Rational(b.den, b.num);
}

}  // namespace lts
