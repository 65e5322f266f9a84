// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/special.hpp"

#include <cmath>
#include <stdexcept>

namespace sigcf {

double digamma(double v) {
  if (!(v > 0.0)) throw std::domain_error("digamma: argument must be > 0");
  double result = 0.0;
  double x = v;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series: psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^2n).
  const double r = 1.0 / (x * x);
  // Coefficients B_2n/(2n): 1/12, -1/120, 1/252, -1/240, 1/132,
  // -691/32760, 1/12.
  double series = r * (1.0 / 12.0 -
               r * (1.0 / 120.0 -
               r * (1.0 / 252.0 -
               r * (1.0 / 240.0 -
               r * (1.0 / 132.0 -
               r * (691.0 / 32760.0 -
               r * (1.0 / 12.0)))))));
  result += std::log(x) - 0.5 / x - series;
  return result;
}

double hurwitz_zeta(double s, double v) {
  if (s == 1.0) throw std::invalid_argument("hurwitz_zeta: s == 1 is the digamma branch");
  if (!(s > 0.0)) throw std::domain_error("hurwitz_zeta: s must be > 0");
  if (!(v > 0.0)) throw std::domain_error("hurwitz_zeta: v must be > 0");

  // Sum directly until the tail argument X = N+v is comfortably large, then
  // apply the Euler-Maclaurin tail at X. X >= 25 + s keeps the first omitted
  // Bernoulli term below 1e-15 of the result for all s in the physical range.
  const double x_min = 25.0 + s;
  double sum = 0.0;
  long n = 0;
  while (static_cast<double>(n) + v < x_min) {
    sum += std::pow(static_cast<double>(n) + v, -s);
    ++n;
  }
  const double x = static_cast<double>(n) + v;

  // Tail: integral + half-term + Bernoulli corrections with rising
  // factorials (s)_(2j-1).
  const double integral = std::pow(x, 1.0 - s) / (s - 1.0);
  const double fx = std::pow(x, -s);
  double tail = integral + 0.5 * fx;

  const double x2 = x * x;
  double rising = s;            // (s)_1
  double power = fx / x;        // x^(-s-1)
  // B_2j/(2j)! for j = 1..6: 1/12, -1/720, 1/30240, -1/1209600,
  // 1/47900160, -691/1307674368000.
  const double bern[6] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                          -1.0 / 1209600.0, 1.0 / 47900160.0,
                          -691.0 / 1307674368000.0};
  for (int j = 0; j < 6; ++j) {
    tail += bern[j] * rising * power;
    // Advance (s)_(2j-1) -> (s)_(2j+1) and x^(-s-2j+1) -> x^(-s-2j-1).
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= x2;
  }
  return sum + tail;
}

double tau(double s, double v) {
  if (!(s > 0.0)) throw std::domain_error("tau: s must be > 0");
  if (s == 1.0) return -digamma(v);
  return hurwitz_zeta(s, v);
}

namespace {

// Stirling tail S(x) = sum B_2n / (2n(2n-1) x^(2n-1)), for x >= 10.
double stirling_tail(double x) {
  const double r = 1.0 / (x * x);
  return (1.0 / 12.0 -
         r * (1.0 / 360.0 -
         r * (1.0 / 1260.0 -
         r * (1.0 / 1680.0 -
         r * (1.0 / 1188.0 -
         r * (691.0 / 360360.0 -
         r * (1.0 / 156.0))))))) / x;
}

}  // namespace

double log_gamma_ratio(double v, double w) {
  if (!(v > 0.0) || !(w > 0.0)) {
    throw std::domain_error("log_gamma_ratio: arguments must be > 0");
  }
  if (v == w) return 0.0;

  // Shift both arguments by the same integer so the Stirling form applies:
  // lnΓ(v) - lnΓ(w) = [lnΓ(v+m) - lnΓ(w+m)] - sum_{i<m} ln((v+i)/(w+i)).
  const double d = v - w;
  double correction = 0.0;
  double a = v;
  double b = w;
  while (a < 10.0 || b < 10.0) {
    correction -= std::log1p(d / b);  // ln(a/b), stable for a ~ b
    a += 1.0;
    b += 1.0;
  }
  // (a-1/2)ln a - (b-1/2)ln b - d  ==  (b-1/2)log1p(d/b) + d ln a - d
  double main = (b - 0.5) * std::log1p(d / b) + d * std::log(a) - d;
  main += stirling_tail(a) - stirling_tail(b);
  return main + correction;
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("gamma_q: requires a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    // Lower series: P(a,x) = x^a e^-x / Γ(a) · sum x^n / (a)_(n+1)
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 10000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    return 1.0 - std::exp(log_prefix) * sum;
  }
  // Upper continued fraction (modified Lentz).
  const double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int i = 1; i < 10000; ++i) {
    double an;
    double bn;
    if (i == 1) {
      an = 1.0;
      bn = x + 1.0 - a;
    } else {
      an = -(i - 1.0) * (i - 1.0 - a);
      bn = x + 2.0 * i - 1.0 - a;
    }
    d = bn + an * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = bn + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(log_prefix) * f;
}

}  // namespace sigcf
