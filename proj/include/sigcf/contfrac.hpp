// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#ifndef SIGCF_CONTFRAC_HPP
#define SIGCF_CONTFRAC_HPP

#include "sigcf/fraclog.hpp"
#include "sigcf/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Continued-fraction machinery and the probability models for the CF
// coefficients of {log_b X}.
//
// Conventions. A CfVector (a_1, ..., a_k) holds the first k coefficients
// of a simple continued fraction. [a_1; a_2, ..., a_k] >= 1 is the value
// in the integer-leading convention; [0; a_1, ..., a_k] in (0,1] is its
// reciprocal. Bumping the last coefficient by one is written a_k + e_k.

namespace sigcf {

struct CfVector {
  std::vector<std::int64_t> a;

  CfVector() = default;
  explicit CfVector(std::vector<std::int64_t> coeffs) : a(std::move(coeffs)) {}
  CfVector(std::initializer_list<std::int64_t> coeffs) : a(coeffs) {}

  std::size_t size() const { return a.size(); }
  std::span<const std::int64_t> span() const { return {a.data(), a.size()}; }
};

// Coefficient model: the fractional-log distribution plus the tabulation
// bound used when a table over the (infinite) support is requested.
struct CfModel {
  FracLogDistribution d;
  std::int64_t a_max = 50;
};

struct CfExpansion {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> coeffs;
  // True when the recursion stopped on a fractional part below eps or a
  // coefficient beyond 1/eps, i.e. the float input ran out of information
  // before max_len coefficients.
  bool exhausted = false;
};

// Coefficients of y by the recursion y_j = 1/{y_(j-1)}.
// Stops after max_len coefficients, or earlier when the expansion
// exhausts (see CfExpansion::exhausted).
CfExpansion cf_expand(double y, int max_len, double eps = 1e-12);

struct CfValue {
  Rational frac;   // [a_1; a_2, ..., a_k], reduced
  double value;    // the same as a double
};

// Exact value of [a_1; a_2, ..., a_k]. 128-bit arithmetic when it fits,
// arbitrary precision otherwise.
// Throws std::invalid_argument on an empty vector or entries < 1.
CfValue cf_eval(const CfVector& v);

// Lemma check for the alternating monotonicity of convergents: for every
// prefix length j (sign = (-1)^(j-1), values in the integer-leading
// convention),
//   sign * [prefix_j]              <  sign * [prefix_j + e_j]
//   sign * [prefix_(j-1) + e_(j-1)] <= sign * [prefix_j]        (j >= 2)
//   sign * [prefix_j]              <  sign * [prefix_(j+1) + e_(j+1)]
//                                                                (j < k)
// All comparisons in exact rational arithmetic.
bool lemma1_check(const CfVector& v);

// Pr(A_1..A_k = v) for coefficients of a variable with fractional-log
// distribution m.d:
//   (-1)^k ( F([0; v + e_k]) - F([0; v]) )
// CF values are evaluated exactly and converted to double before F.
double joint_pmf_general(const CfModel& m, const CfVector& v);

// Benford specialisation: (-1)^k ([0; v + e_k] - [0; v]) as an exact
// rational (and as a double).
Rational benford_joint_exact(const CfVector& v);
double benford_joint_pmf(const CfVector& v);

// 128-bit fast path; nullopt when any intermediate overflows.
std::optional<Frac128> benford_joint_exact128(std::span<const std::int64_t> v);

// Product over all remainders: prod_j [0; v^(j:k)] [0; v^(j:k) + e_(k-j+1)]
// where v^(j:k) is the suffix starting at position j. Mathematically equal
// to benford_joint_pmf; computed as an independent product of exact
// per-suffix fractions.
Rational product_form_exact(const CfVector& v);
double product_form_pmf(const CfVector& v);
std::optional<Frac128> product_form_exact128(std::span<const std::int64_t> v);

// | log2( (1 + [0; v]) / (1 + [0; v + e_k]) ) |
double blachman_approx(const CfVector& v);

// First-coefficient law 1/(a(a+1)), second-coefficient law via digamma,
// and the Gauss-Kuzmin asymptotic law log2(1 + 1/(a(a+2))).
double benford_a1_pmf(std::int64_t a);
double benford_a2_pmf(std::int64_t a);
double gauss_kuzmin_pmf(std::int64_t a);

// Paretian joint law:
//   (-1)^k ( b^(s(rho-1)) (b^(-s[0;v]) - b^(-s[0;v+e_k])) / (1-b^(-s))
//            + u([0;v+e_k]-rho) (1 - b^(-s([0;v+e_k]-rho)))
//            - u([0;v]-rho)     (1 - b^(-s([0;v]-rho))) )
double pareto_joint_pmf(const ParetoParams& p, const CfVector& v);

// f_{Y}([0; v]) * (-1)^k ([0; v+e_k] - [0; v]); raw, not normalized.
// Requires a pdf on the distribution.
double asymptotic_joint_approx(const FracLogDistribution& d, const CfVector& v);

// Tabulations over the truncated support with telescoped tail buckets.
// k = 1: probs[i] = Pr(A_1 = i+1) for i < a_max; tail = Pr(A_1 > a_max).
struct CfTable1 {
  std::int64_t a_max;
  std::vector<double> probs;
  double tail;
  double total() const;
};
CfTable1 cf_table_k1(const CfModel& m);

// k = 2 grid. cell(i, j) = Pr(A_1 = i, A_2 = j) for 1 <= i, j <= a_max;
// row_tail[i-1] = Pr(A_1 = i, A_2 > a_max) (telescoped);
// a1_tail = Pr(A_1 > a_max), one bucket covering every A_2.
struct CfTable2 {
  std::int64_t a_max;
  std::vector<double> cells;  // row-major (a_max x a_max)
  std::vector<double> row_tail;
  double a1_tail;

  double cell(std::int64_t a1, std::int64_t a2) const {
    return cells[static_cast<std::size_t>((a1 - 1) * a_max + (a2 - 1))];
  }
  double total() const;
};
CfTable2 cf_table_k2(const CfModel& m);

}  // namespace sigcf

#endif  // SIGCF_CONTFRAC_HPP
