// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/empirical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <random>
#include <stdexcept>
#include <utility>

#include "sigcf/special.hpp"

namespace sigcf {

namespace {

constexpr std::int64_t kChunk = 65536;

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Fills values[0..n) with h(U_i) under the chunked substream scheme.
template <typename H>
void sample_transform(std::vector<double>& out, std::int64_t n,
                      std::uint64_t seed, H h) {
  out.resize(static_cast<std::size_t>(n));
  std::int64_t i = 0;
  for (std::uint64_t c = 0; i < n; ++c) {
    std::mt19937_64 eng = chunk_engine(seed, c);
    const std::int64_t stop = std::min(n, i + kChunk);
    for (; i < stop; ++i) {
      out[static_cast<std::size_t>(i)] = h(uniform01(eng));
    }
  }
}

bool parse_field(const char* first, const char* last, double& out) {
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

Dataset read_dataset(std::istream& in, int column, std::string source) {
  if (column < 1) throw std::invalid_argument("read_dataset: column must be >= 1");
  Dataset ds;
  ds.source = std::move(source);
  std::string line;
  const auto is_delim = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == ',' || ch == ';';
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = 0;
    while (pos < line.size() && is_delim(line[pos])) ++pos;
    if (pos == line.size()) continue;  // blank line
    if (line[pos] == '#') continue;    // comment
    // Walk delimited fields up to the requested column.
    std::size_t begin = pos, end = pos;
    int col = 0;
    bool found = false;
    while (pos <= line.size()) {
      if (pos == line.size() || is_delim(line[pos])) {
        if (pos > begin) {
          ++col;
          if (col == column) {
            end = pos;
            found = true;
            break;
          }
        }
        begin = pos + 1;
      }
      ++pos;
    }
    double v = 0.0;
    if (!found || !parse_field(line.data() + begin, line.data() + end, v) ||
        !std::isfinite(v) || v <= 0.0) {
      ++ds.dropped;
      continue;
    }
    ds.values.push_back(v);
  }
  return ds;
}

FitResult fit_pareto(const Dataset& ds, int base) {
  if (base < 2) throw std::invalid_argument("fit_pareto: base must be >= 2");
  if (ds.values.size() < 2) {
    throw std::invalid_argument("fit_pareto: need at least 2 values");
  }
  const double x_m = *std::min_element(ds.values.begin(), ds.values.end());
  double sum = 0.0;
  for (const double x : ds.values) sum += std::log(x / x_m);
  if (sum <= 0.0) {
    throw std::domain_error("fit_pareto: degenerate sample, all values equal");
  }
  FitResult r;
  r.x_m_hat = x_m;
  r.s_hat = static_cast<double>(ds.values.size()) / sum;
  r.rho_hat = frac_log(x_m, base);
  r.p = static_cast<std::int64_t>(ds.values.size());
  return r;
}

Dataset sample_benford(std::int64_t n, int base, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_benford: n must be >= 0");
  if (base < 2) throw std::invalid_argument("sample_benford: base must be >= 2");
  Dataset ds;
  ds.source = "benford-sampler";
  const double lb = std::log(static_cast<double>(base));
  sample_transform(ds.values, n, seed,
                   [lb](double u) { return std::exp(u * lb); });
  return ds;
}

Dataset sample_pareto(std::int64_t n, const ParetoParams& p,
                      std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_pareto: n must be >= 0");
  Dataset ds;
  ds.source = "pareto-sampler";
  const double inv_s = 1.0 / p.s;
  const double x_m = p.x_m;
  sample_transform(ds.values, n, seed, [inv_s, x_m](double u) {
    return x_m * std::pow(1.0 - u, -inv_s);
  });
  return ds;
}

std::vector<std::int64_t> empirical_significand_freqs(
    const Dataset& ds, const SignificandSpec& spec) {
  const std::int64_t lo = support_lo(spec);
  const std::int64_t hi = support_hi(spec);
  if (hi - lo + 1 > 1000000) {
    throw std::length_error("empirical_significand_freqs: support too large");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const double x : ds.values) {
    ++counts[static_cast<std::size_t>(extract_significand(x, spec) - lo)];
  }
  return counts;
}

CfCounts empirical_cf_freqs(const Dataset& ds, int base, int k,
                            std::int64_t a_max) {
  if (base < 2) throw std::invalid_argument("empirical_cf_freqs: base must be >= 2");
  if (k < 1) throw std::invalid_argument("empirical_cf_freqs: k must be >= 1");
  if (a_max < 1) throw std::invalid_argument("empirical_cf_freqs: a_max must be >= 1");
  CfCounts out;
  out.base = base;
  out.k = k;
  out.a_max = a_max;
  std::vector<std::int64_t> key;
  key.reserve(static_cast<std::size_t>(k));
  for (const double x : ds.values) {
    const double y = frac_log(x, base);
    const CfExpansion e = cf_expand(y, k);
    key.clear();
    bool bucketed = false;
    for (const std::int64_t a : e.coeffs) {
      if (a > a_max) {
        key.push_back(a_max + 1);  // tail bucket, truncate here
        bucketed = true;
        break;
      }
      key.push_back(a);
    }
    if (!bucketed && static_cast<int>(key.size()) < k) {
      ++out.dropped;  // expansion exhausted before k coefficients
      continue;
    }
    const auto it = out.counts.find(key);
    if (it != out.counts.end()) {
      ++it->second;
    } else {
      out.counts.emplace(key, 1);
    }
    ++out.n;
  }
  return out;
}

namespace {

std::size_t cf_bin_index(const std::vector<std::int64_t>& key, int k,
                         std::int64_t n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  if (k == 1) {
    // [a] for a <= N at a-1; [N+1] at N.
    return key[0] <= n ? static_cast<std::size_t>(key[0] - 1) : nn;
  }
  if (key.size() == 1) return nn * nn + nn;  // [N+1], the a1 tail
  if (key[1] > n) return nn * nn + static_cast<std::size_t>(key[0] - 1);
  return static_cast<std::size_t>(key[0] - 1) * nn +
         static_cast<std::size_t>(key[1] - 1);
}

}  // namespace

std::vector<std::int64_t> aligned_cf_counts(const CfCounts& c) {
  if (c.k != 1 && c.k != 2) {
    throw std::invalid_argument("aligned_cf_counts: only k = 1 and k = 2 tabulate");
  }
  const std::size_t nn = static_cast<std::size_t>(c.a_max);
  const std::size_t size = (c.k == 1) ? nn + 1 : nn * nn + nn + 1;
  std::vector<std::int64_t> out(size, 0);
  for (const auto& [key, count] : c.counts) {
    out[cf_bin_index(key, c.k, c.a_max)] += count;
  }
  return out;
}

std::vector<double> aligned_cf_probs(const CfTable1& t) {
  std::vector<double> out = t.probs;
  out.push_back(t.tail);
  return out;
}

std::vector<double> aligned_cf_probs(const CfTable2& t) {
  std::vector<double> out = t.cells;
  out.insert(out.end(), t.row_tail.begin(), t.row_tail.end());
  out.push_back(t.a1_tail);
  return out;
}

EmpiricalReport chi_square_test(const std::vector<std::int64_t>& observed,
                                const std::vector<double>& expected,
                                double min_expected, int fitted_params) {
  if (observed.size() != expected.size()) {
    throw std::invalid_argument("chi_square_test: observed/expected size mismatch");
  }
  if (observed.empty()) {
    throw std::invalid_argument("chi_square_test: empty input");
  }
  double psum = 0.0;
  for (const double p : expected) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("chi_square_test: negative expected probability");
    }
    psum += p;
  }
  if (std::fabs(psum - 1.0) > 1e-9) {
    throw std::invalid_argument("chi_square_test: expected probabilities must sum to 1");
  }
  std::int64_t n = 0;
  for (const std::int64_t o : observed) {
    if (o < 0) throw std::invalid_argument("chi_square_test: negative count");
    n += o;
  }
  const double nd = static_cast<double>(n);

  // Merge forward: a bin below threshold joins the bins after it until
  // the running block clears the threshold; a short trailing block
  // joins the last retained bin.
  std::vector<std::int64_t> obs_m;
  std::vector<double> exp_m;
  int merged = 0;
  std::int64_t o_acc = 0;
  double e_acc = 0.0;
  bool pending = false;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o_acc += observed[i];
    e_acc += expected[i];
    if (pending) ++merged;
    if (e_acc * nd >= min_expected) {
      obs_m.push_back(o_acc);
      exp_m.push_back(e_acc);
      o_acc = 0;
      e_acc = 0.0;
      pending = false;
    } else {
      pending = true;
    }
  }
  if (pending) {
    if (obs_m.empty()) {
      throw std::runtime_error("chi_square_test: insufficient data");
    }
    obs_m.back() += o_acc;
    exp_m.back() += e_acc;
    ++merged;
  }
  if (obs_m.size() < 2) {
    throw std::runtime_error("chi_square_test: insufficient data");
  }

  double stat = 0.0;
  for (std::size_t i = 0; i < obs_m.size(); ++i) {
    const double e = exp_m[i] * nd;
    const double d = static_cast<double>(obs_m[i]) - e;
    stat += d * d / e;
  }
  const int dof = static_cast<int>(obs_m.size()) - 1 - fitted_params;
  if (dof < 1) {
    throw std::runtime_error("chi_square_test: insufficient data");
  }
  EmpiricalReport r;
  r.observed = std::move(obs_m);
  r.expected = std::move(exp_m);
  r.statistic = stat;
  r.dof = dof;
  r.p_value = gamma_q(dof / 2.0, stat / 2.0);
  r.bins_merged = merged;
  r.n = n;
  return r;
}

}  // namespace sigcf
