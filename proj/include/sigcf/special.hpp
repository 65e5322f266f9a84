// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#ifndef SIGCF_SPECIAL_HPP
#define SIGCF_SPECIAL_HPP

// Scalar special-function kernels used by the closed-form pmfs.
// All functions are pure, stateless and safe to call concurrently.

namespace sigcf {

// Digamma function psi(v) for v > 0.
// Evaluated by shifting the argument up with psi(x+1) = psi(x) + 1/x until
// x >= 10, then the asymptotic series in 1/x^2 through the x^-14 term.
// Relative accuracy ~1e-14, well inside the 1e-12 contract.
// Throws std::domain_error for v <= 0 or NaN.
double digamma(double v);

// Hurwitz zeta ζ(s, v) = sum_{n>=0} (n+v)^-s for s > 0, s != 1, v > 0.
// Direct summation up to an index where v+N is large enough, then the
// Euler-Maclaurin tail: integral term, half-term and Bernoulli corrections
// through B_12. For 0 < s < 1 the bare series diverges; the tail formula
// supplies the standard finite value. Relative accuracy target 1e-12
// (contract asks 1e-10).
// Throws std::invalid_argument for s == 1, std::domain_error for s <= 0
// or v <= 0.
double hurwitz_zeta(double s, double v);

// tau_s(v): -psi(v) when s == 1 exactly, Hurwitz zeta ζ(s, v) otherwise.
// The branch tests s == 1 with no epsilon window; nearby s goes to the
// zeta branch as written.
double tau(double s, double v);

// ln Γ(v) - ln Γ(w) for v, w > 0 without forming either log-gamma when the
// arguments are large (they cancel catastrophically for v ~ w ~ b^(j-1)).
// Both arguments are shifted by the same integer until >= 10, then the
// difference of Stirling series is assembled as
//   (w-1/2)·log1p(d/w) + d·ln v - d + [Bernoulli tail difference],  d = v-w.
// Throws std::domain_error for non-positive arguments.
double log_gamma_ratio(double v, double w);

// Regularized upper incomplete gamma Q(a, x) = Γ(a, x)/Γ(a) for a > 0,
// x >= 0. Series for x < a+1, Lentz continued fraction otherwise.
// Supports the chi-square p-value in the conformance reports.
double gamma_q(double a, double x);

}  // namespace sigcf

#endif  // SIGCF_SPECIAL_HPP
