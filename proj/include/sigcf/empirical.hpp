// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.
//
// Dataset ingestion, seeded samplers, maximum-likelihood Pareto fitting,
// empirical frequency extraction, and chi-square conformance reports.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sigcf/contfrac.hpp"
#include "sigcf/fraclog.hpp"
#include "sigcf/significand.hpp"

namespace sigcf {

// Positive finite observations.  Invalid entries never enter values;
// dropped records how many were discarded on ingestion.
struct Dataset {
  std::vector<double> values;
  std::string source;
  std::int64_t dropped = 0;
};

// Maximum-likelihood Pareto fit.
struct FitResult {
  double s_hat = 0.0;    // shape, (mean ln(x_i / x_m_hat))^(-1)
  double x_m_hat = 0.0;  // scale, min_i x_i
  double rho_hat = 0.0;  // fractional part of log_b x_m_hat, in [0, 1)
  std::int64_t p = 0;    // retained sample count
};

// Chi-square goodness-of-fit report over merged bins.
struct EmpiricalReport {
  std::vector<std::int64_t> observed;  // counts after merging
  std::vector<double> expected;        // probabilities after merging
  double statistic = 0.0;
  int dof = 0;
  double p_value = 0.0;
  int bins_merged = 0;
  std::int64_t n = 0;
};

// Reads one value per line, or one delimited column (1-based) when
// column > 1.  Lines starting with '#' are skipped; parsing uses the
// C locale decimal point.  Non-positive, NaN, infinite, or unparseable
// entries are dropped and counted.
Dataset read_dataset(std::istream& in, int column, std::string source);

// ML estimators over a Pareto sample: x_m_hat = min x_i,
// s_hat = (mean ln(x_i / x_m_hat))^(-1), rho_hat = {log_b x_m_hat}.
// Throws std::invalid_argument for fewer than 2 values and
// std::domain_error when all values are equal (shape undefined).
FitResult fit_pareto(const Dataset& ds, int base);

// Samples X = b^U with U uniform on [0, 1).  Only the fractional log
// matters to every model here, so one decade suffices.
// Deterministic for a fixed seed; see the substream note below.
Dataset sample_benford(std::int64_t n, int base, std::uint64_t seed);

// Samples X = x_m (1 - U)^(-1/s) by inverse cdf.
Dataset sample_pareto(std::int64_t n, const ParetoParams& p,
                      std::uint64_t seed);

// Substream scheme shared by both samplers: draw i belongs to chunk
// c = i / 65536, generated by mt19937_64 seeded with
// seed_seq{lo32(seed), hi32(seed), lo32(c), hi32(c)}; uniforms are
// (x >> 11) * 2^-53.  Chunks are independent of worker layout, so any
// parallel split reproduces the sequential stream bit for bit.

// Counts of extract_significand over the dataset, indexed
// a - support_lo(spec).
std::vector<std::int64_t> empirical_significand_freqs(const Dataset& ds,
                                                      const SignificandSpec& spec);

// Leading continued-fraction coefficient counts of {log_b x}.  Keys are
// coefficient prefixes, truncated at the first entry exceeding a_max,
// which is replaced by the bucket marker a_max + 1.  Expansions that
// exhaust before reaching k coefficients (or the first bucket) are
// dropped and counted.
struct CfCounts {
  int base = 10;
  int k = 1;
  std::int64_t a_max = 50;
  std::map<std::vector<std::int64_t>, std::int64_t> counts;
  std::int64_t dropped = 0;
  std::int64_t n = 0;  // observations counted into bins
};

CfCounts empirical_cf_freqs(const Dataset& ds, int base, int k,
                            std::int64_t a_max);

// Flattens CfCounts into the canonical table layout, aligning with
// aligned_cf_probs below.  k = 1: [a=1..N, tail].  k = 2: the N x N
// cell grid row-major, then per-a1 tails, then the a1 tail.
std::vector<std::int64_t> aligned_cf_counts(const CfCounts& c);
std::vector<double> aligned_cf_probs(const CfTable1& t);
std::vector<double> aligned_cf_probs(const CfTable2& t);

// Pearson chi-square test.  Bins with expected count below min_expected
// are merged toward the tail (rightward); a trailing short bin merges
// back into the last retained one.  dof = retained - 1 - fitted_params.
// Expected probabilities must sum to 1 within 1e-9.
// Throws std::invalid_argument on size mismatch or a bad expected
// vector, std::runtime_error when fewer than 2 bins remain.
EmpiricalReport chi_square_test(const std::vector<std::int64_t>& observed,
                                const std::vector<double>& expected,
                                double min_expected = 5.0,
                                int fitted_params = 0);

}  // namespace sigcf
