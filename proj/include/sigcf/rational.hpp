// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#ifndef SIGCF_RATIONAL_HPP
#define SIGCF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace sigcf {

using BigInt = boost::multiprecision::cpp_int;
using int128 = __int128;

// Arbitrary-precision reduced fraction, den > 0.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  Rational() = default;
  Rational(BigInt n, BigInt d);  // normalizes: reduces, makes den > 0

  double to_double() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
};

// Reduced fraction in 128-bit integers, den > 0. The fast-path result of
// the exact continued-fraction pmfs; operations that would overflow report
// failure instead of producing one of these.
struct Frac128 {
  int128 num = 0;
  int128 den = 1;

  friend bool operator==(const Frac128& a, const Frac128& b) {
    return a.num == b.num && a.den == b.den;
  }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

int128 gcd128(int128 a, int128 b);

Rational to_rational(const Frac128& f);

}  // namespace sigcf

#endif  // SIGCF_RATIONAL_HPP
