// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sigcf {

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

double Rational::to_double() const {
  // Shift both parts into double range before dividing; shifting both by
  // the same amount preserves the ratio up to the discarded low bits.
  const unsigned mn = num == 0 ? 0 : boost::multiprecision::msb(num < 0 ? BigInt(-num) : num);
  const unsigned md = boost::multiprecision::msb(den);
  const unsigned top = mn > md ? mn : md;
  if (top <= 1000) {
    return num.convert_to<double>() / den.convert_to<double>();
  }
  const unsigned shift = top - 512;
  BigInt n = num >> shift;
  BigInt d = den >> shift;
  if (d == 0) d = 1;
  return n.convert_to<double>() / d.convert_to<double>();
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational to_rational(const Frac128& f) {
  const bool neg = f.num < 0;
  unsigned __int128 un = neg ? static_cast<unsigned __int128>(-f.num)
                             : static_cast<unsigned __int128>(f.num);
  unsigned __int128 ud = static_cast<unsigned __int128>(f.den);
  BigInt n = static_cast<std::uint64_t>(un >> 64);
  n <<= 64;
  n += static_cast<std::uint64_t>(un);
  BigInt d = static_cast<std::uint64_t>(ud >> 64);
  d <<= 64;
  d += static_cast<std::uint64_t>(ud);
  if (neg) n = -n;
  return Rational(std::move(n), std::move(d));
}

}  // namespace sigcf
