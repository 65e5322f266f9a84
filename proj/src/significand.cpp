// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/significand.hpp"

#include <cmath>
#include <stdexcept>

#include "sigcf/special.hpp"

namespace sigcf {

namespace {

constexpr std::int64_t kMaxTableSize = 1000000;

void validate(const SignificandSpec& spec) {
  if (spec.base < 2) throw std::invalid_argument("significand: base must be >= 2");
  if (spec.k < 1) throw std::invalid_argument("significand: k must be >= 1");
  std::int64_t p = 1;
  for (int i = 0; i < spec.k; ++i) {
    if (__builtin_mul_overflow(p, static_cast<std::int64_t>(spec.base), &p)) {
      throw std::invalid_argument("significand: b^k exceeds 64-bit range");
    }
  }
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= b;
  return p;
}

void check_table_size(const SignificandSpec& spec) {
  if (support_hi(spec) - support_lo(spec) + 1 > kMaxTableSize) {
    throw std::length_error("significand: support too large to materialize");
  }
}

// log_b a - (k-1), the frac-log coordinate of the lower digit boundary.
double boundary_coord(const SignificandSpec& spec, std::int64_t a) {
  return (std::log(static_cast<double>(a)) -
          (spec.k - 1) * std::log(static_cast<double>(spec.base))) /
         std::log(static_cast<double>(spec.base));
}

}  // namespace

std::int64_t support_lo(const SignificandSpec& spec) {
  validate(spec);
  return ipow(spec.base, spec.k - 1);
}

std::int64_t support_hi(const SignificandSpec& spec) {
  validate(spec);
  return ipow(spec.base, spec.k) - 1;
}

double SignificandPmf::prob(std::int64_t a) const {
  const std::int64_t lo = a_lo();
  if (a < lo || a > a_hi()) {
    throw std::out_of_range("SignificandPmf::prob: a outside support");
  }
  return probs[static_cast<std::size_t>(a - lo)];
}

double DigitPmf::prob(int digit) const {
  if (digit < digit_lo || digit >= base) {
    throw std::out_of_range("DigitPmf::prob: digit outside range");
  }
  return probs[static_cast<std::size_t>(digit - digit_lo)];
}

std::int64_t extract_significand(double x, const SignificandSpec& spec) {
  validate(spec);
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("extract_significand: x must be finite and > 0");
  }
  // Extended precision keeps the decade division exact enough that values a
  // few ulps from a power of b land on the correct side, and keeps b^e
  // normal even when x is subnormal.
  const long double lb = static_cast<long double>(spec.base);
  const long double lx = static_cast<long double>(x);
  long double e = std::floor(std::log(lx) / std::log(lb));
  // The log can round the decade either way at a boundary; fix it by
  // direct comparison. At most one step in each direction.
  while (std::pow(lb, e) > lx) e -= 1.0L;
  while (std::pow(lb, e + 1.0L) <= lx) e += 1.0L;
  const long double m = lx / std::pow(lb, e);  // in [1, b)
  const long double scaled =
      m * std::pow(lb, static_cast<long double>(spec.k - 1));
  std::int64_t a = static_cast<std::int64_t>(std::floor(scaled));
  const std::int64_t lo = support_lo(spec);
  const std::int64_t hi = support_hi(spec);
  if (a < lo) a = lo;
  if (a > hi) a = hi;
  return a;
}

double general_prob(const FracLogDistribution& d, const SignificandSpec& spec,
                    std::int64_t a) {
  const double ylo = boundary_coord(spec, a);
  const double yhi = boundary_coord(spec, a + 1);
  return cdf_at(d, yhi) - cdf_at(d, ylo);
}

SignificandPmf general_pmf(const FracLogDistribution& d,
                           const SignificandSpec& spec) {
  check_table_size(spec);
  SignificandPmf p;
  p.spec = spec;
  const std::int64_t lo = support_lo(spec), hi = support_hi(spec);
  p.probs.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t a = lo; a <= hi; ++a) {
    p.probs[static_cast<std::size_t>(a - lo)] = general_prob(d, spec, a);
  }
  return p;
}

DigitPmf digit_pmf_from_significand(const SignificandPmf& p) {
  const SignificandSpec& spec = p.spec;
  validate(spec);
  const std::int64_t lo = support_lo(spec);
  if (p.probs.size() !=
      static_cast<std::size_t>(support_hi(spec) - lo + 1)) {
    throw std::invalid_argument(
        "digit_pmf_from_significand: pmf table does not match its spec");
  }
  DigitPmf out;
  out.base = spec.base;
  out.j = spec.k;
  out.digit_lo = (spec.k == 1) ? 1 : 0;
  out.probs.assign(static_cast<std::size_t>(spec.base - out.digit_lo), 0.0);
  if (spec.k == 1) {
    out.probs = p.probs;
    return out;
  }
  // Pr(A_[j] = a) = sum_r Pr(A_(j) = r b + a) over r in the A_(j-1) support.
  const std::int64_t r_lo = ipow(spec.base, spec.k - 2);
  const std::int64_t r_hi = ipow(spec.base, spec.k - 1) - 1;
  for (std::int64_t r = r_lo; r <= r_hi; ++r) {
    for (int a = 0; a < spec.base; ++a) {
      out.probs[static_cast<std::size_t>(a)] +=
          p.probs[static_cast<std::size_t>(r * spec.base + a - lo)];
    }
  }
  return out;
}

double benford_prob(int base, std::int64_t a) {
  if (base < 2) throw std::invalid_argument("benford_prob: base must be >= 2");
  if (a < 1) throw std::domain_error("benford_prob: a must be >= 1");
  return std::log1p(1.0 / static_cast<double>(a)) /
         std::log(static_cast<double>(base));
}

SignificandPmf benford_pmf(const SignificandSpec& spec) {
  check_table_size(spec);
  SignificandPmf p;
  p.spec = spec;
  const std::int64_t lo = support_lo(spec), hi = support_hi(spec);
  p.probs.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t a = lo; a <= hi; ++a) {
    p.probs[static_cast<std::size_t>(a - lo)] = benford_prob(spec.base, a);
  }
  return p;
}

double benford_digit_pmf_closed_form(int base, int j, int digit) {
  if (base < 2) {
    throw std::invalid_argument("benford_digit_pmf_closed_form: base must be >= 2");
  }
  if (j < 1) {
    throw std::invalid_argument("benford_digit_pmf_closed_form: j must be >= 1");
  }
  if (j == 1) return benford_prob(base, digit);
  if (digit < 0 || digit >= base) {
    throw std::out_of_range("benford_digit_pmf_closed_form: digit outside range");
  }
  const double b = static_cast<double>(base);
  const double r1 = std::pow(b, static_cast<double>(j - 1));
  const double r0 = std::pow(b, static_cast<double>(j - 2));
  const double clo = digit / b;
  const double chi = (digit + 1) / b;
  // sum_r ln((r+chi)/(r+clo)) over r in [r0, r1) telescopes into two
  // log-gamma ratios, each with nearly equal arguments.
  return (log_gamma_ratio(r1 + chi, r1 + clo) -
          log_gamma_ratio(r0 + chi, r0 + clo)) /
         std::log(b);
}

double pareto_prob(const ParetoParams& p, const SignificandSpec& spec,
                   std::int64_t a) {
  validate(spec);
  if (a < support_lo(spec) || a > support_hi(spec)) {
    throw std::out_of_range("pareto_prob: a outside support");
  }
  const double s = p.s;
  const double lb = std::log(static_cast<double>(p.base));
  const double xi = p.rho + (spec.k - 1);
  const double la = std::log(static_cast<double>(a));
  // a^(-s) - (a+1)^(-s), kept multiplicative to avoid cancellation.
  const double pow_gap =
      std::exp(-s * la) * (-std::expm1(-s * std::log1p(1.0 / a)));
  double t = std::exp(s * (xi - 1.0) * lb) / (-std::expm1(-s * lb)) * pow_gap;
  const double lxi = xi * lb;  // ln(b^xi)
  const double la1 = std::log(static_cast<double>(a + 1));
  if (la1 >= lxi) t += -std::expm1(s * (lxi - la1));
  if (la >= lxi) t -= -std::expm1(s * (lxi - la));
  return t;
}

SignificandPmf pareto_pmf(const ParetoParams& p, const SignificandSpec& spec) {
  if (p.base != spec.base) {
    throw std::invalid_argument("pareto_pmf: params and spec disagree on base");
  }
  check_table_size(spec);
  SignificandPmf out;
  out.spec = spec;
  const std::int64_t lo = support_lo(spec), hi = support_hi(spec);
  out.probs.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t a = lo; a <= hi; ++a) {
    out.probs[static_cast<std::size_t>(a - lo)] = pareto_prob(p, spec, a);
  }
  return out;
}

double dtp_pmf(double s, int base, int k, std::int64_t a) {
  if (!(s > 0.0)) throw std::domain_error("dtp_pmf: s must be > 0");
  const SignificandSpec spec{base, k};
  validate(spec);
  if (a < support_lo(spec) || a > support_hi(spec)) {
    throw std::out_of_range("dtp_pmf: a outside support");
  }
  const double lb = std::log(static_cast<double>(base));
  const double num = std::exp(-s * std::log(static_cast<double>(a))) *
                     (-std::expm1(-s * std::log1p(1.0 / a)));
  const double den = std::exp(-s * (k - 1) * lb) * (-std::expm1(-s * lb));
  return num / den;
}

double pareto_digit_pmf(const ParetoParams& p, int j, int digit) {
  if (j < 1) throw std::invalid_argument("pareto_digit_pmf: j must be >= 1");
  if (j == 1) return pareto_prob(p, SignificandSpec{p.base, 1}, digit);
  if (digit < 0 || digit >= p.base) {
    throw std::out_of_range("pareto_digit_pmf: digit outside range");
  }
  const double s = p.s;
  const double b = static_cast<double>(p.base);
  const double lb = std::log(b);
  const double xi = p.rho + (j - 1);
  const double r1 = std::pow(b, static_cast<double>(j - 1));
  const double r0 = std::pow(b, static_cast<double>(j - 2));
  const double clo = digit / b;
  const double chi = (digit + 1) / b;
  const double eta_lo = std::ceil(std::pow(b, xi - 1.0) - clo);
  const double eta_hi = std::ceil(std::pow(b, xi - 1.0) - chi);
  const double geom = -std::expm1(-s * lb);  // 1 - b^(-s)
  double t = std::exp(s * (xi - 2.0) * lb) / geom *
             (tau(s, clo + r0) - tau(s, chi + r0));
  t -= std::exp(s * (xi - 1.0) * lb) / geom *
       (tau(s, clo + r1) - tau(s, chi + r1));
  t += std::exp(s * (xi - 1.0) * lb) *
       (tau(s, clo + eta_lo) - tau(s, chi + eta_hi));
  t += eta_lo - eta_hi;
  return t;
}

double asymptotic_prob_approx(const FracLogDistribution& d,
                              const SignificandSpec& spec, std::int64_t a) {
  if (!d.has_pdf()) {
    throw std::invalid_argument("asymptotic_prob_approx: distribution has no pdf");
  }
  validate(spec);
  return d.pdf(boundary_coord(spec, a)) * benford_prob(spec.base, a);
}

AsymptoticPmf asymptotic_pmf_approx(const FracLogDistribution& d,
                                    const SignificandSpec& spec) {
  if (!d.has_pdf()) {
    throw std::invalid_argument("asymptotic_pmf_approx: distribution has no pdf");
  }
  check_table_size(spec);
  AsymptoticPmf out;
  out.pmf.spec = spec;
  const std::int64_t lo = support_lo(spec), hi = support_hi(spec);
  out.pmf.probs.resize(static_cast<std::size_t>(hi - lo + 1));
  double sum = 0.0;
  for (std::int64_t a = lo; a <= hi; ++a) {
    const double v = asymptotic_prob_approx(d, spec, a);
    out.pmf.probs[static_cast<std::size_t>(a - lo)] = v;
    sum += v;
  }
  out.raw_sum = sum;
  return out;
}

double SumInvarianceProfile::value(std::int64_t a) const {
  const std::int64_t lo = support_lo(spec);
  if (a < lo || a > support_hi(spec)) {
    throw std::out_of_range("SumInvarianceProfile::value: a outside support");
  }
  return values[static_cast<std::size_t>(a - lo)];
}

SumInvarianceProfile sum_invariance_profile(const SignificandSpec& spec) {
  check_table_size(spec);
  SumInvarianceProfile out;
  out.spec = spec;
  out.limit = 1.0 / std::log(static_cast<double>(spec.base));
  const std::int64_t lo = support_lo(spec), hi = support_hi(spec);
  out.values.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t a = lo; a <= hi; ++a) {
    out.values[static_cast<std::size_t>(a - lo)] =
        static_cast<double>(a) * benford_prob(spec.base, a);
  }
  return out;
}

}  // namespace sigcf
