// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.
//
// Distributions of the k-th integer significand A_(k) and of the j-th
// most significant digit A_[j] = A_(j) mod b, for a positive random
// variable X whose fractional log-base-b distribution is known.
//
// A_(k) takes values in {b^(k-1), ..., b^k - 1}; its pmf is a difference
// of the fractional-log cdf at consecutive digit boundaries.  Digit
// marginals follow by summing over the leading k-1 digits.

#pragma once

#include <cstdint>
#include <vector>

#include "sigcf/fraclog.hpp"

namespace sigcf {

// Base b >= 2 and significand order k >= 1.  b^k must fit in a signed
// 64-bit integer.
struct SignificandSpec {
  int base = 10;
  int k = 1;
};

// First element of the A_(k) support, b^(k-1).  Throws
// std::invalid_argument on an invalid spec.
std::int64_t support_lo(const SignificandSpec& spec);

// Last element of the A_(k) support, b^k - 1.
std::int64_t support_hi(const SignificandSpec& spec);

// Dense pmf over the A_(k) support.  probs[a - support_lo] = Pr(A_(k)=a).
struct SignificandPmf {
  SignificandSpec spec;
  std::vector<double> probs;

  // Pr(A_(k) = a); throws std::out_of_range outside the support.
  double prob(std::int64_t a) const;
  std::int64_t a_lo() const { return support_lo(spec); }
  std::int64_t a_hi() const { return support_hi(spec); }
};

// Dense pmf of the j-th digit.  Digits run {1,...,b-1} when j = 1 and
// {0,...,b-1} otherwise; digit_lo records the first one.
struct DigitPmf {
  int base = 10;
  int j = 1;
  int digit_lo = 1;
  std::vector<double> probs;

  double prob(int digit) const;
};

// floor(b^({log_b x} + k - 1)), the k leading base-b digits of x as one
// integer, clamped into the support.  Computed from the exact value of
// the double: the decade exponent is fixed by direct comparison, not by
// the rounded logarithm, so values a few ulps from a power of b resolve
// to the correct side.  An exact power of b yields b^(k-1).
// Throws std::domain_error unless x is finite and > 0.
std::int64_t extract_significand(double x, const SignificandSpec& spec);

// Pr(A_(k) = a) for arbitrary fractional-log distribution d:
//   F(log_b(a+1) - k + 1) - F(log_b a - k + 1).
double general_prob(const FracLogDistribution& d, const SignificandSpec& spec,
                    std::int64_t a);

// Tabulates general_prob over the support.  Throws std::length_error
// when the support has more than 10^6 elements.
SignificandPmf general_pmf(const FracLogDistribution& d,
                           const SignificandSpec& spec);

// Marginalizes a k = j significand pmf down to the j-th digit:
//   Pr(A_[j] = a) = sum over r of Pr(A_(j) = r b + a).
// For j = 1 the significand pmf is returned unchanged as a digit pmf.
DigitPmf digit_pmf_from_significand(const SignificandPmf& p);

// log_b(1 + 1/a), the scale-invariant significand law.  Independent of k.
double benford_prob(int base, std::int64_t a);

// Tabulated benford_prob over the A_(k) support.
SignificandPmf benford_pmf(const SignificandSpec& spec);

// Closed form for the j-th digit of the scale-invariant law (j >= 2),
// evaluated in log-gamma space:
//   [lgr(b^(j-1)+(a+1)/b, b^(j-1)+a/b) - lgr(b^(j-2)+(a+1)/b, b^(j-2)+a/b)]
//     / ln b,
// where lgr is the pairwise log-gamma ratio.  Agrees with marginalizing
// the k = j significand pmf.  For j = 1 delegates to benford_prob.
double benford_digit_pmf_closed_form(int base, int j, int digit);

// Pr(A_(k) = a) for Pareto-distributed X, xi = rho + k - 1:
//   b^(s(xi-1))/(1-b^(-s)) (a^(-s) - (a+1)^(-s))
//     + u(a+1-b^xi)(1 - b^(s xi)(a+1)^(-s))
//     - u(a-b^xi)(1 - b^(s xi) a^(-s)),
// with u(0) = 1.
double pareto_prob(const ParetoParams& p, const SignificandSpec& spec,
                   std::int64_t a);

// Tabulated pareto_prob over the support.
SignificandPmf pareto_pmf(const ParetoParams& p, const SignificandSpec& spec);

// Discrete truncated Pareto pmf, the rho = 0 case in closed form:
//   (a^(-s) - (a+1)^(-s)) / (b^(-s(k-1)) - b^(-s k)).
double dtp_pmf(double s, int base, int k, std::int64_t a);

// Closed form for the j-th digit under the Pareto model (j >= 2), built
// from tau (digamma for s = 1, Hurwitz zeta otherwise) with
// eta_v = ceil(b^(xi-1) - v/b).  Agrees with marginalizing
// pareto_pmf at k = j.  For j = 1 delegates to pareto_prob.
double pareto_digit_pmf(const ParetoParams& p, int j, int digit);

// First-order approximation of the significand pmf:
//   Pr(A_(k) = a) ~ f(log_b a - k + 1) log_b(1 + 1/a),
// where f is the fractional-log pdf.  Values are reported raw, without
// renormalization; raw_sum carries their total.
struct AsymptoticPmf {
  SignificandPmf pmf;
  double raw_sum = 0.0;
};

// Pointwise form of the approximation above.
double asymptotic_prob_approx(const FracLogDistribution& d,
                              const SignificandSpec& spec, std::int64_t a);

// Tabulated approximation.  Throws std::invalid_argument when d has no
// pdf and std::length_error past the 10^6 materialization cap.
AsymptoticPmf asymptotic_pmf_approx(const FracLogDistribution& d,
                                    const SignificandSpec& spec);

// a * Pr(A_(k) = a) under the scale-invariant law, which tends to the
// constant 1/ln b as the support grows.
struct SumInvarianceProfile {
  SignificandSpec spec;
  std::vector<double> values;  // values[a - support_lo] = a * Pr(A_(k)=a)
  double limit = 0.0;          // 1 / ln(base)

  double value(std::int64_t a) const;
};

SumInvarianceProfile sum_invariance_profile(const SignificandSpec& spec);

}  // namespace sigcf
