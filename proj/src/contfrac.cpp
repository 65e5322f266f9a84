// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/contfrac.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigcf/special.hpp"

namespace sigcf {

namespace {

using u128 = unsigned __int128;

inline bool mul128(int128 a, int128 b, int128& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

inline bool add128(int128 a, int128 b, int128& out) {
  return !__builtin_add_overflow(a, b, &out);
}

inline bool mul_u128(u128 a, u128 b, u128& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void validate(std::span<const std::int64_t> v, const char* who) {
  if (v.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty coefficient vector");
  }
  for (const std::int64_t c : v) {
    if (c < 1) {
      throw std::invalid_argument(std::string(who) + ": coefficients must be >= 1");
    }
  }
}

// Continuants of the reversed vector w (w_m = v[k-m]):
//   C_m = K(w_1..w_m), D_m = K(w_2..w_m).
// By the palindrome identity K(w_1..w_m) = K(a_(k-m+1)..a_k), these give
// every suffix value of v:
//   [0; v^(j:k)]        = C_(m-1) / C_m            with m = k-j+1,
//   [0; v^(j:k) + e]    = (C_(m-1)+D_(m-1)) / (C_m+D_m),
// since bumping the last coefficient of the suffix bumps w_1, and
// K(w_1+1, w_2..w_m) = C_m + D_m.
//
// Rolling form: keeps only the last two of each. Returns false on overflow.
struct RevPair {
  int128 c_prev, c_last;  // C_(k-1), C_k
  int128 d_prev, d_last;  // D_(k-1), D_k
};

bool rev_continuants_128(std::span<const std::int64_t> v, RevPair& out) {
  const std::size_t k = v.size();
  int128 c2 = 1, c1 = v[k - 1];  // C_0, C_1
  int128 d2 = 0, d1 = 1;         // D_0, D_1
  for (std::size_t m = 2; m <= k; ++m) {
    const int128 w = v[k - m];
    int128 c, d, t;
    if (!mul128(w, c1, t) || !add128(t, c2, c)) return false;
    if (!mul128(w, d1, t) || !add128(t, d2, d)) return false;
    c2 = c1;
    c1 = c;
    d2 = d1;
    d1 = d;
  }
  out = {c2, c1, d2, d1};
  return true;
}

// Full arrays C[0..k], D[0..k] for the product form.
bool rev_continuant_arrays_128(std::span<const std::int64_t> v, int128* C,
                               int128* D) {
  const std::size_t k = v.size();
  C[0] = 1;
  D[0] = 0;
  C[1] = v[k - 1];
  D[1] = 1;
  for (std::size_t m = 2; m <= k; ++m) {
    const int128 w = v[k - m];
    int128 t;
    if (!mul128(w, C[m - 1], t) || !add128(t, C[m - 2], C[m])) return false;
    if (!mul128(w, D[m - 1], t) || !add128(t, D[m - 2], D[m])) return false;
  }
  return true;
}

// BigInt mirrors for escalation.
struct RevPairBig {
  BigInt c_prev, c_last, d_prev, d_last;
};

RevPairBig rev_continuants_big(std::span<const std::int64_t> v) {
  const std::size_t k = v.size();
  BigInt c2 = 1, c1 = v[k - 1], d2 = 0, d1 = 1;
  for (std::size_t m = 2; m <= k; ++m) {
    const std::int64_t w = v[k - m];
    BigInt c = w * c1 + c2;
    BigInt d = w * d1 + d2;
    c2 = std::move(c1);
    c1 = std::move(c);
    d2 = std::move(d1);
    d1 = std::move(d);
  }
  return {std::move(c2), std::move(c1), std::move(d2), std::move(d1)};
}

void rev_continuant_arrays_big(std::span<const std::int64_t> v,
                               std::vector<BigInt>& C, std::vector<BigInt>& D) {
  const std::size_t k = v.size();
  C.assign(k + 1, 0);
  D.assign(k + 1, 0);
  C[0] = 1;
  D[0] = 0;
  C[1] = v[k - 1];
  D[1] = 1;
  for (std::size_t m = 2; m <= k; ++m) {
    const std::int64_t w = v[k - m];
    C[m] = w * C[m - 1] + C[m - 2];
    D[m] = w * D[m - 1] + D[m - 2];
  }
}

constexpr std::size_t kStackCap = 64;

// [0; v] and [0; v + e_k] as doubles, exact integer ratios rounded once.
void unit_values(std::span<const std::int64_t> v, double& y1, double& y2) {
  RevPair rp;
  if (v.size() <= kStackCap && rev_continuants_128(v, rp)) {
    y1 = static_cast<double>(rp.c_prev) / static_cast<double>(rp.c_last);
    y2 = static_cast<double>(rp.c_prev + rp.d_prev) /
         static_cast<double>(rp.c_last + rp.d_last);
    return;
  }
  RevPairBig rb = rev_continuants_big(v);
  y1 = Rational(rb.c_prev, rb.c_last).to_double();
  y2 = Rational(rb.c_prev + rb.d_prev, rb.c_last + rb.d_last).to_double();
}

constexpr double kLn2 = 0.6931471805599453;

}  // namespace

CfExpansion cf_expand(double y, int max_len, double eps) {
  if (!std::isfinite(y)) throw std::domain_error("cf_expand: y must be finite");
  if (max_len < 0) throw std::invalid_argument("cf_expand: max_len < 0");
  if (!(eps > 0.0)) throw std::invalid_argument("cf_expand: eps must be > 0");
  CfExpansion e;
  const double a0 = std::floor(y);
  e.a0 = static_cast<std::int64_t>(a0);
  double f = y - a0;
  const double coeff_cap = 1.0 / eps;
  while (static_cast<int>(e.coeffs.size()) < max_len) {
    if (f < eps) {
      e.exhausted = true;
      break;
    }
    const double z = 1.0 / f;
    const double af = std::floor(z);
    if (af > coeff_cap) {
      e.exhausted = true;
      break;
    }
    e.coeffs.push_back(static_cast<std::int64_t>(af));
    f = z - af;
  }
  return e;
}

CfValue cf_eval(const CfVector& v) {
  validate(v.span(), "cf_eval");
  const std::size_t k = v.size();
  // Forward continuants: value = h_k / q_k.
  int128 h1 = v.a[0], h2 = 1;  // h_1, h_0
  int128 q1 = 1, q2 = 0;       // q_1, q_0
  bool ok = true;
  for (std::size_t j = 1; j < k && ok; ++j) {
    const int128 a = v.a[j];
    int128 h, q, t;
    ok = mul128(a, h1, t) && add128(t, h2, h) && mul128(a, q1, t) &&
         add128(t, q2, q);
    if (ok) {
      h2 = h1;
      h1 = h;
      q2 = q1;
      q1 = q;
    }
  }
  Rational r;
  if (ok) {
    r = to_rational(Frac128{h1, q1});
  } else {
    BigInt h1b = v.a[0], h2b = 1, q1b = 1, q2b = 0;
    for (std::size_t j = 1; j < k; ++j) {
      BigInt h = v.a[j] * h1b + h2b;
      BigInt q = v.a[j] * q1b + q2b;
      h2b = std::move(h1b);
      h1b = std::move(h);
      q2b = std::move(q1b);
      q1b = std::move(q);
    }
    r = Rational(std::move(h1b), std::move(q1b));
  }
  const double val = r.to_double();
  return CfValue{std::move(r), val};
}

namespace {

// Exact comparison of signed prefix values for the lemma check.
// Values are p/q with p, q > 0; sign multiplies both sides.
// Returns -1, 0, 1 for p1/q1 <=> p2/q2. Falls back to BigInt on overflow.
int cmp_frac(int128 p1, int128 q1, int128 p2, int128 q2) {
  int128 l, r;
  if (mul128(p1, q2, l) && mul128(p2, q1, r)) {
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  const Rational a = to_rational(Frac128{p1, q1});
  const Rational b = to_rational(Frac128{p2, q2});
  const BigInt lhs = a.num * b.den;
  const BigInt rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

bool lemma1_check(const CfVector& v) {
  validate(v.span(), "lemma1_check");
  const std::size_t k = v.size();
  // Forward (prefix) continuants of [a_1; ...; a_j] plus the bumped
  // variants [prefix_j + e_j] = (p_j + p_(j-1)) / (q_j + q_(j-1)).
  std::vector<int128> p(k + 1), q(k + 1);
  p[0] = 1;
  q[0] = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    const int128 a = v.a[j - 1];
    const int128 pm2 = (j >= 2) ? p[j - 2] : 0;  // p_(-1) = 0, q_(-1) = 1
    const int128 qm2 = (j >= 2) ? q[j - 2] : 1;  // give p_1 = a_1, q_1 = 1
    int128 t, pp, qq;
    if (!mul128(a, p[j - 1], t) || !add128(t, pm2, pp) ||
        !mul128(a, q[j - 1], t) || !add128(t, qm2, qq)) {
      throw std::overflow_error("lemma1_check: continuant overflow");
    }
    p[j] = pp;
    q[j] = qq;
  }
  auto bumped_p = [&](std::size_t j) { return p[j] + p[j - 1]; };
  auto bumped_q = [&](std::size_t j) { return q[j] + q[j - 1]; };

  for (std::size_t j = 1; j <= k; ++j) {
    const bool positive = (j % 2 == 1);  // sign (-1)^(j-1)
    // Family 1: sign*[prefix_j] < sign*[prefix_j + e_j].
    int c = cmp_frac(p[j], q[j], bumped_p(j), bumped_q(j));
    if (!positive) c = -c;
    if (!(c < 0)) return false;
    // Chain lower bound, j >= 2: sign*[prefix_(j-1)+e_(j-1)] <= sign*[prefix_j].
    if (j >= 2) {
      c = cmp_frac(bumped_p(j - 1), bumped_q(j - 1), p[j], q[j]);
      if (!positive) c = -c;
      if (c > 0) return false;
    }
    // Chain upper bound, j < k: sign*[prefix_j] < sign*[prefix_(j+1)+e_(j+1)].
    if (j < k) {
      c = cmp_frac(p[j], q[j], bumped_p(j + 1), bumped_q(j + 1));
      if (!positive) c = -c;
      if (!(c < 0)) return false;
    }
  }
  return true;
}

double joint_pmf_general(const CfModel& m, const CfVector& v) {
  validate(v.span(), "joint_pmf_general");
  double y1, y2;
  unit_values(v.span(), y1, y2);
  const bool even = (v.size() % 2 == 0);
  const double hi = even ? y2 : y1;
  const double lo = even ? y1 : y2;
  return cdf_at(m.d, hi) - cdf_at(m.d, lo);
}

std::optional<Frac128> benford_joint_exact128(std::span<const std::int64_t> v) {
  validate(v, "benford_joint_exact128");
  if (v.size() > kStackCap) return std::nullopt;
  RevPair rp;
  if (!rev_continuants_128(v, rp)) return std::nullopt;
  // (-1)^k ([0;v+e] - [0;v]) = (-1)^k (D_(k-1) C_k - C_(k-1) D_k) /
  //                            (C_k (C_k + D_k))
  int128 t1, t2, det;
  if (!mul128(rp.d_prev, rp.c_last, t1) || !mul128(rp.c_prev, rp.d_last, t2) ||
      __builtin_sub_overflow(t1, t2, &det)) {
    return std::nullopt;
  }
  int128 num = (v.size() % 2 == 0) ? det : -det;
  int128 sum, den;
  if (!add128(rp.c_last, rp.d_last, sum) || !mul128(rp.c_last, sum, den)) {
    return std::nullopt;
  }
  if (num != 1 && num != -1) {
    const int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  return Frac128{num, den};
}

Rational benford_joint_exact(const CfVector& v) {
  if (auto f = benford_joint_exact128(v.span())) return to_rational(*f);
  RevPairBig rb = rev_continuants_big(v.span());
  BigInt det = rb.d_prev * rb.c_last - rb.c_prev * rb.d_last;
  if (v.size() % 2 == 1) det = -det;
  BigInt den = rb.c_last * (rb.c_last + rb.d_last);
  return Rational(std::move(det), std::move(den));
}

double benford_joint_pmf(const CfVector& v) {
  if (auto f = benford_joint_exact128(v.span())) return f->to_double();
  return benford_joint_exact(v).to_double();
}

std::optional<Frac128> product_form_exact128(std::span<const std::int64_t> v) {
  validate(v, "product_form_exact128");
  const std::size_t k = v.size();
  if (k > kStackCap) return std::nullopt;
  int128 C[kStackCap + 1], D[kStackCap + 1];
  if (!rev_continuant_arrays_128(v, C, D)) return std::nullopt;

  // prod_j [0; v^(j:k)] [0; v^(j:k)+e] with m = k-j+1:
  //   num *= C_(m-1) (C_(m-1)+D_(m-1)),  den *= C_m (C_m+D_m)
  // Plain fraction multiplication; reduce only when a product would
  // overflow, then retry once on the reduced state.
  u128 num = 1, den = 1;
  auto mul_into = [&](u128& acc, u128 f) {
    u128 t;
    if (mul_u128(acc, f, t)) {
      acc = t;
      return true;
    }
    const u128 g = gcd_u128(num, den);
    num /= g;
    den /= g;
    if (!mul_u128(acc, f, t)) return false;
    acc = t;
    return true;
  };
  for (std::size_t m = 1; m <= k; ++m) {
    int128 s, fn_s, fd_s;
    if (!add128(C[m - 1], D[m - 1], s) || !mul128(C[m - 1], s, fn_s)) {
      return std::nullopt;
    }
    if (!add128(C[m], D[m], s) || !mul128(C[m], s, fd_s)) return std::nullopt;
    if (!mul_into(num, static_cast<u128>(fn_s))) return std::nullopt;
    if (!mul_into(den, static_cast<u128>(fd_s))) return std::nullopt;
  }
  const u128 g = gcd_u128(num, den);
  num /= g;
  den /= g;
  constexpr u128 kMaxSigned = (static_cast<u128>(1) << 127) - 1;
  if (num > kMaxSigned || den > kMaxSigned) return std::nullopt;
  return Frac128{static_cast<int128>(num), static_cast<int128>(den)};
}

Rational product_form_exact(const CfVector& v) {
  if (auto f = product_form_exact128(v.span())) return to_rational(*f);
  std::vector<BigInt> C, D;
  rev_continuant_arrays_big(v.span(), C, D);
  BigInt num = 1, den = 1;
  for (std::size_t m = 1; m <= C.size() - 1; ++m) {
    num *= C[m - 1] * (C[m - 1] + D[m - 1]);
    den *= C[m] * (C[m] + D[m]);
  }
  return Rational(std::move(num), std::move(den));
}

double product_form_pmf(const CfVector& v) {
  if (auto f = product_form_exact128(v.span())) return f->to_double();
  return product_form_exact(v).to_double();
}

double blachman_approx(const CfVector& v) {
  validate(v.span(), "blachman_approx");
  double y1, y2;
  unit_values(v.span(), y1, y2);
  return std::fabs(std::log1p((y1 - y2) / (1.0 + y2))) / kLn2;
}

double benford_a1_pmf(std::int64_t a) {
  if (a < 1) throw std::domain_error("benford_a1_pmf: a must be >= 1");
  const double ad = static_cast<double>(a);
  return 1.0 / (ad * (ad + 1.0));
}

double benford_a2_pmf(std::int64_t a) {
  if (a < 1) throw std::domain_error("benford_a2_pmf: a must be >= 1");
  const double ad = static_cast<double>(a);
  return digamma(1.0 + 1.0 / ad) - digamma(1.0 + 1.0 / (1.0 + ad));
}

double gauss_kuzmin_pmf(std::int64_t a) {
  if (a < 1) throw std::domain_error("gauss_kuzmin_pmf: a must be >= 1");
  const double ad = static_cast<double>(a);
  return std::log1p(1.0 / (ad * (ad + 2.0))) / kLn2;
}

double pareto_joint_pmf(const ParetoParams& p, const CfVector& v) {
  validate(v.span(), "pareto_joint_pmf");
  double y1, y2;
  unit_values(v.span(), y1, y2);
  // Signed gap delta = [0;v+e] - [0;v], its magnitude taken from the exact
  // subtraction so nearby convergents never cancel in double arithmetic.
  const double dy = benford_joint_pmf(v);
  const bool even = (v.size() % 2 == 0);
  const double delta = even ? dy : -dy;
  const double lb = std::log(static_cast<double>(p.base));
  // b^(-s y1) - b^(-s y2), stable for small s and tiny delta.
  const double diff1 = std::exp(-p.s * y1 * lb) * (-std::expm1(-p.s * delta * lb));
  double t = std::exp(p.s * (p.rho - 1.0) * lb) * diff1 / (-std::expm1(-p.s * lb));
  const bool step1 = (y1 >= p.rho);
  const bool step2 = (y2 >= p.rho);
  if (step1 && step2) {
    // u-terms combine into b^(-s(y1-rho)) - b^(-s(y2-rho)).
    t += std::exp(-p.s * (y1 - p.rho) * lb) * (-std::expm1(-p.s * delta * lb));
  } else if (step2) {
    t += -std::expm1(-p.s * (y2 - p.rho) * lb);
  } else if (step1) {
    t -= -std::expm1(-p.s * (y1 - p.rho) * lb);
  }
  return even ? t : -t;
}

double asymptotic_joint_approx(const FracLogDistribution& d, const CfVector& v) {
  if (!d.has_pdf()) {
    throw std::invalid_argument("asymptotic_joint_approx: distribution has no pdf");
  }
  validate(v.span(), "asymptotic_joint_approx");
  double y1, y2;
  unit_values(v.span(), y1, y2);
  return d.pdf(y1) * benford_joint_pmf(v);
}

double CfTable1::total() const {
  double s = tail;
  for (const double p : probs) s += p;
  return s;
}

CfTable1 cf_table_k1(const CfModel& m) {
  if (m.a_max < 1 || m.a_max > 1000000) {
    throw std::invalid_argument("cf_table_k1: a_max out of range");
  }
  CfTable1 t;
  t.a_max = m.a_max;
  t.probs.resize(static_cast<std::size_t>(m.a_max));
  for (std::int64_t a = 1; a <= m.a_max; ++a) {
    t.probs[static_cast<std::size_t>(a - 1)] = joint_pmf_general(m, CfVector{a});
  }
  // Pr(A_1 > N) telescopes to F([0; N+1]).
  t.tail = cdf_at(m.d, 1.0 / static_cast<double>(m.a_max + 1));
  return t;
}

double CfTable2::total() const {
  double s = a1_tail;
  for (const double p : cells) s += p;
  for (const double p : row_tail) s += p;
  return s;
}

CfTable2 cf_table_k2(const CfModel& m) {
  if (m.a_max < 1 || m.a_max > 2000) {
    throw std::invalid_argument("cf_table_k2: a_max out of range");
  }
  const std::int64_t n = m.a_max;
  CfTable2 t;
  t.a_max = n;
  t.cells.resize(static_cast<std::size_t>(n * n));
  t.row_tail.resize(static_cast<std::size_t>(n));
  for (std::int64_t a1 = 1; a1 <= n; ++a1) {
    for (std::int64_t a2 = 1; a2 <= n; ++a2) {
      t.cells[static_cast<std::size_t>((a1 - 1) * n + (a2 - 1))] =
          joint_pmf_general(m, CfVector{a1, a2});
    }
    // Pr(A_1 = a1, A_2 > N) telescopes to F([0;a1]) - F([0;a1, N+1]).
    const double lo = static_cast<double>(n + 1) /
                      static_cast<double>(a1 * (n + 1) + 1);
    t.row_tail[static_cast<std::size_t>(a1 - 1)] =
        cdf_at(m.d, 1.0 / static_cast<double>(a1)) - cdf_at(m.d, lo);
  }
  t.a1_tail = cdf_at(m.d, 1.0 / static_cast<double>(n + 1));
  return t;
}

}  // namespace sigcf
