#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 checked_mul(u64 a, u64 b) {
  u64 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow,
                "product " + std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

inline u64 checked_add(u64 a, u64 b) {
  u64 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow,
                "sum " + std::to_string(a) + " + " + std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

inline u64 gcd_of(std::span<const u64> values) {
  u64 g = 0;
  for (u64 v : values) g = std::gcd(g, v);
  return g;
}

// Exact nonnegative rational kept in lowest terms. Only what the invariants
// need: construction, comparison, and conversion.
struct Rational {
  u64 num = 0;
  u64 den = 1;

  Rational() = default;
  Rational(u64 n, u64 d) : num(n), den(d) {
    if (d == 0) throw Error(ErrorKind::DomainError, "rational with zero denominator");
    const u64 g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
  }
};

}  // namespace numsg
