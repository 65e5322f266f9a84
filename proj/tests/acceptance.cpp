// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.
//
// Acceptance gate: one check per release criterion, each timed and
// reported on its own line.  Exit status 0 only when every criterion
// passes, including the stated wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sigcf/contfrac.hpp"
#include "sigcf/empirical.hpp"
#include "sigcf/fraclog.hpp"
#include "sigcf/rational.hpp"
#include "sigcf/significand.hpp"

using namespace sigcf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ---------------------------------------------------------------------
// 1. First-digit probabilities follow the logarithmic law exactly.

Outcome crit1() {
  Outcome o;
  for (const int b : {2, 3, 10, 16, 60}) {
    const SignificandPmf pmf = benford_pmf({b, 1});
    for (std::int64_t a = 1; a < b; ++a) {
      const double want =
          std::log1p(1.0 / static_cast<double>(a)) / std::log(b);
      if (std::fabs(pmf.prob(a) - want) > 1e-12) {
        o.fail(fmt("base %.0f digit %.0f off closed form", b, double(a)));
      }
    }
  }
  const SignificandPmf d10 = benford_pmf({10, 1});
  if (std::fabs(d10.prob(1) - 0.301029995663981) > 1e-12) {
    o.fail(fmt("Pr(1)=%.15f != 0.301029995663981", d10.prob(1)));
  }
  if (std::fabs(d10.prob(9) - 0.0457574905606751) > 1e-12) {
    o.fail(fmt("Pr(9)=%.16f != 0.0457574905606751", d10.prob(9)));
  }
  return o;
}

// ---------------------------------------------------------------------
// 2. Double-truncated Pareto first digit, shape 1, offset 0.7: the
//    reference series, including the interior maximum at digit 5.

Outcome crit2() {
  Outcome o;
  const ParetoParams p = ParetoParams::from_rho(1.0, 0.7, 10);
  const SignificandPmf pmf = pareto_pmf(p, {10, 1});
  static const double want[9] = {
      0.278437352015151,  0.0928124506717171, 0.0464062253358585,
      0.0278437352015151, 0.18325043408889,   0.13258921524531,
      0.0994419114339825, 0.0773437088930977, 0.0618749671144779};
  for (int a = 1; a <= 9; ++a) {
    if (std::fabs(pmf.prob(a) - want[a - 1]) > 1e-9) {
      o.fail(fmt("Pr(%.0f)=%.15f off reference", double(a), pmf.prob(a)));
    }
  }
  for (int a = 1; a <= 3; ++a) {
    if (!(pmf.prob(a) > pmf.prob(a + 1))) o.fail("not decreasing before 5");
  }
  if (!(pmf.prob(5) > pmf.prob(4))) o.fail("no jump at digit 5");
  for (int a = 5; a <= 8; ++a) {
    if (!(pmf.prob(a) > pmf.prob(a + 1))) o.fail("not decreasing after 5");
  }
  return o;
}

// ---------------------------------------------------------------------
// 3. j-th digit closed forms: reference series for j in {2,3,4} under
//    both laws, and agreement with brute-force marginalisation of the
//    k = j significand pmf.

Outcome crit3() {
  Outcome o;
  static const double benford_j[3][10] = {
      {0.119679268596881, 0.113890103407556, 0.108821499005508,
       0.104329560230961, 0.100308202267578, 0.0966772358023224,
       0.0933747357830365, 0.0903519892696031, 0.0875700535788619,
       0.0849973520576922},
      {0.101784364644181, 0.101375977447795, 0.10097219813707,
       0.100572932110944, 0.100178087627925, 0.0997875756921836,
       0.0994013099449835, 0.0990192065618586, 0.0986411841548051,
       0.0982671636782246},
      {0.100176146939765, 0.100136888118105, 0.100097672594297,
       0.10005850028342, 0.100019371096996, 0.0999802849481267,
       0.0999412417495204, 0.0999022414154643, 0.0998632838590611,
       0.0998243689957831}};
  static const double pareto_j[3][10] = {
      {0.105672019043794, 0.108858130840169, 0.119894585279158,
       0.112112457056985, 0.105323066403793, 0.0993277591547113,
       0.0939805040660286, 0.0891712054049414, 0.0848150127325704,
       0.0808452600178522},
      {0.101686319036034, 0.101024883938813, 0.10037315133021,
       0.0997308665139656, 0.0990977844814012, 0.0984736694392367,
       0.100294363713314, 0.100388434085207, 0.0997702232316549,
       0.0991603042301641},
      {0.100040841342661, 0.0999773910804151, 0.100142402795484,
       0.100166744461546, 0.10010336451893, 0.100040074300637,
       0.0999768735779298, 0.0999137621217869, 0.0998507397034132,
       0.0997878060970834}};
  const ParetoParams p = ParetoParams::from_rho(1.0, 0.5, 10);
  for (int j = 2; j <= 4; ++j) {
    const DigitPmf bm = digit_pmf_from_significand(benford_pmf({10, j}));
    const DigitPmf pm = digit_pmf_from_significand(pareto_pmf(p, {10, j}));
    for (int d = 0; d <= 9; ++d) {
      const double bc = benford_digit_pmf_closed_form(10, j, d);
      const double pc = pareto_digit_pmf(p, j, d);
      if (std::fabs(bc - benford_j[j - 2][d]) > 1e-9) {
        o.fail(fmt("benford j=%.0f d=%.0f off series", j, d));
      }
      if (std::fabs(pc - pareto_j[j - 2][d]) > 1e-9) {
        o.fail(fmt("pareto j=%.0f d=%.0f off series", j, d));
      }
      if (std::fabs(bc - bm.prob(d)) > 1e-9) {
        o.fail(fmt("benford j=%.0f d=%.0f off marginalisation", j, d));
      }
      if (std::fabs(pc - pm.prob(d)) > 1e-9) {
        o.fail(fmt("pareto j=%.0f d=%.0f off marginalisation", j, d));
      }
    }
  }
  return o;
}

// ---------------------------------------------------------------------
// 4. Density-based approximation of the second-order significand pmf:
//    Pareto reference values, and exactness under the logarithmic law.

Outcome crit4() {
  Outcome o;
  const ParetoParams p = ParetoParams::from_rho(1.0, 0.3, 10);
  const AsymptoticPmf ap = asymptotic_pmf_approx(pareto_fraclog(p), {10, 2});
  if (std::fabs(ap.pmf.prob(10) - 0.0211298677773864) > 1e-9) {
    o.fail(fmt("approx(10)=%.16f off reference", ap.pmf.prob(10)));
  }
  if (std::fabs(ap.pmf.prob(99) - 0.00225062361181506) > 1e-9) {
    o.fail(fmt("approx(99)=%.17f off reference", ap.pmf.prob(99)));
  }
  const AsymptoticPmf bp = asymptotic_pmf_approx(benford_fraclog(10), {10, 2});
  const SignificandPmf ex = benford_pmf({10, 2});
  for (std::int64_t a = 10; a <= 99; ++a) {
    if (std::fabs(bp.pmf.prob(a) - ex.prob(a)) > 1e-14) {
      o.fail(fmt("benford approx not exact at a=%.0f", double(a)));
      break;
    }
  }
  return o;
}

// ---------------------------------------------------------------------
// 5. Joint pmf identity, exhaustively: the determinant form and the
//    product form agree in exact rational arithmetic over every
//    coefficient vector with k <= 6 and entries <= 20, and the
//    numeric general-distribution route matches to 1e-14.

Outcome crit5() {
  Outcome o;
  long long total = 0;
  std::vector<std::int64_t> v;
  for (int k = 1; k <= 6 && o.ok; ++k) {
    v.assign(k, 1);
    while (true) {
      const std::span<const std::int64_t> sp(v.data(), v.size());
      const auto det = benford_joint_exact128(sp);
      const auto prod = product_form_exact128(sp);
      if (!det || !prod) {
        o.fail("128-bit path overflowed inside the guaranteed range");
        break;
      }
      if (!(*det == *prod)) {
        o.fail(fmt("mismatch at k=%.0f", double(k)));
        break;
      }
      ++total;
      int i = k - 1;
      while (i >= 0 && v[i] == 20) { v[i] = 1; --i; }
      if (i < 0) break;
      ++v[i];
    }
  }
  if (o.ok && total != 67368420LL) {
    o.fail(fmt("enumerated %.0f vectors, expected 67368420", double(total)));
  }
  const CfModel benford{benford_fraclog(10), 50};
  std::mt19937_64 eng(20260819);
  std::uniform_int_distribution<int> klen(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(1, 20);
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::int64_t> w(klen(eng));
    for (auto& e : w) e = entry(eng);
    const CfVector cv(w);
    const double g = joint_pmf_general(benford, cv);
    const double e = benford_joint_pmf(cv);
    if (std::fabs(g - e) > 1e-14) {
      o.fail("general route off the closed form");
      break;
    }
  }
  return o;
}

// ---------------------------------------------------------------------
// 6. Continuant identity suite over random coefficient vectors.

Outcome crit6() {
  Outcome o;
  std::mt19937_64 eng(424242);
  std::uniform_int_distribution<int> klen(1, 8);
  std::uniform_int_distribution<std::int64_t> entry(1, 50);
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::int64_t> w(klen(eng));
    for (auto& e : w) e = entry(eng);
    if (!lemma1_check(CfVector(w))) {
      o.fail("identity failed on a random vector");
      break;
    }
  }
  return o;
}

// ---------------------------------------------------------------------
// 7. Normalisation: finite-support pmfs sum to 1 within 1e-9; the
//    coefficient tables with telescoped tails total 1 within 1e-6.

Outcome crit7() {
  Outcome o;
  const auto check_sum = [&o](const std::vector<double>& probs, double tol,
                              const char* what) {
    double s = 0.0;
    for (const double p : probs) s += p;
    if (std::fabs(s - 1.0) > tol) {
      o.fail(fmt("sums to %.12f:", s) + what);
    }
  };
  for (const int b : {2, 10, 16}) {
    for (const int k : {1, 2}) {
      check_sum(benford_pmf({b, k}).probs, 1e-9, " (benford)");
    }
  }
  check_sum(benford_pmf({10, 3}).probs, 1e-9, " (benford k=3)");
  const ParetoParams p48 = ParetoParams::from_rho(1.5, 0.48, 10);
  const ParetoParams p70 = ParetoParams::from_rho(1.0, 0.7, 10);
  check_sum(pareto_pmf(p48, {10, 1}).probs, 1e-9, " (pareto k=1)");
  check_sum(pareto_pmf(p48, {10, 2}).probs, 1e-9, " (pareto k=2)");
  check_sum(pareto_pmf(p70, {10, 1}).probs, 1e-9, " (pareto 0.7)");
  for (int j = 2; j <= 4; ++j) {
    double sb = 0.0, sp = 0.0;
    for (int d = 0; d <= 9; ++d) {
      sb += benford_digit_pmf_closed_form(10, j, d);
      sp += pareto_digit_pmf(p48, j, d);
    }
    if (std::fabs(sb - 1.0) > 1e-9) o.fail("digit closed form (benford)");
    if (std::fabs(sp - 1.0) > 1e-9) o.fail("digit closed form (pareto)");
  }
  const CfModel mb{benford_fraclog(10), 50};
  const CfModel mp{pareto_fraclog(p48), 50};
  for (const CfModel* m : {&mb, &mp}) {
    if (std::fabs(cf_table_k1(*m).total() - 1.0) > 1e-6) {
      o.fail("k=1 coefficient table total off 1");
    }
    if (std::fabs(cf_table_k2(*m).total() - 1.0) > 1e-6) {
      o.fail("k=2 coefficient table total off 1");
    }
  }
  double gk = 0.0;
  for (std::int64_t a = 1; a <= 50; ++a) gk += gauss_kuzmin_pmf(a);
  gk += std::log2(1.0 + 1.0 / 51.0);
  if (std::fabs(gk - 1.0) > 1e-6) o.fail("limit-law table total off 1");
  return o;
}

// ---------------------------------------------------------------------
// 8. Second coefficient sits between the first and the limit law, and
//    its head value matches both the closed form and a truncated
//    marginalisation of the joint pmf.

Outcome crit8() {
  Outcome o;
  for (std::int64_t a = 1; a <= 20; ++a) {
    const double gk = gauss_kuzmin_pmf(a);
    if (!(std::fabs(benford_a2_pmf(a) - gk) <
          std::fabs(benford_a1_pmf(a) - gk))) {
      o.fail(fmt("ordering fails at a=%.0f", double(a)));
    }
  }
  const double head = benford_a2_pmf(1);
  if (std::fabs(head - (2.0 * std::log(2.0) - 1.0)) > 1e-10) {
    o.fail(fmt("head=%.15f != 2 ln 2 - 1", head));
  }
  double marg = 0.0;
  for (std::int64_t a1 = 1; a1 <= 1000000; ++a1) {
    marg += benford_joint_pmf(CfVector{a1, 1});
  }
  if (std::fabs(head - marg) > 1e-4) {
    o.fail(fmt("truncated marginalisation %.9f vs head %.9f", marg, head));
  }
  return o;
}

// ---------------------------------------------------------------------
// 9. Sampler-versus-theory goodness of fit: four scenarios, 100 seeds
//    each at n = 10^6, at least 95 passes at the 1% level.

Outcome crit9() {
  Outcome o;
  const std::int64_t n = 1000000;
  const ParetoParams p70 = ParetoParams::from_rho(1.0, 0.7, 10);
  const ParetoParams p48 = ParetoParams::from_rho(1.5, 0.48, 10);
  const std::vector<double> e1 = benford_pmf({10, 1}).probs;
  const std::vector<double> e2 = pareto_pmf(p70, {10, 1}).probs;
  const std::vector<double> e3 =
      aligned_cf_probs(cf_table_k1({benford_fraclog(10), 50}));
  const std::vector<double> e4 =
      aligned_cf_probs(cf_table_k2({pareto_fraclog(p48), 20}));
  int pass[4] = {0, 0, 0, 0};
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = 424200 + static_cast<std::uint64_t>(i);
    {
      const Dataset ds = sample_benford(n, 10, seed);
      const auto obs = empirical_significand_freqs(ds, {10, 1});
      if (chi_square_test(obs, e1).p_value >= 0.01) ++pass[0];
      const CfCounts c = empirical_cf_freqs(ds, 10, 1, 50);
      if (chi_square_test(aligned_cf_counts(c), e3).p_value >= 0.01) {
        ++pass[2];
      }
    }
    {
      const Dataset ds = sample_pareto(n, p70, seed + 7000);
      const auto obs = empirical_significand_freqs(ds, {10, 1});
      if (chi_square_test(obs, e2).p_value >= 0.01) ++pass[1];
    }
    {
      const Dataset ds = sample_pareto(n, p48, seed + 9000);
      const CfCounts c = empirical_cf_freqs(ds, 10, 2, 20);
      if (chi_square_test(aligned_cf_counts(c), e4).p_value >= 0.01) {
        ++pass[3];
      }
    }
  }
  static const char* names[4] = {"benford digit", "pareto digit",
                                 "benford coeff", "pareto joint"};
  for (int s = 0; s < 4; ++s) {
    if (pass[s] < 95) {
      o.fail(fmt("%.0f/100 seeds passed: ", double(pass[s])) + names[s]);
    }
  }
  if (o.ok) {
    o.detail = fmt("passes %g/%g/", pass[0], pass[1]) +
               fmt("%g/%g of 100 each", pass[2], pass[3]);
  }
  return o;
}

// ---------------------------------------------------------------------
// 10. Sum invariance: a * Pr(A_(k) = a) stays within 0.5% of 1/ln b at
//     k = 3 and the deviation shrinks as k grows.

Outcome crit10() {
  Outcome o;
  double dev[3] = {0.0, 0.0, 0.0};
  for (int k = 2; k <= 4; ++k) {
    const SumInvarianceProfile prof = sum_invariance_profile({10, k});
    double worst = 0.0;
    for (const double val : prof.values) {
      worst = std::max(worst, std::fabs(val / prof.limit - 1.0));
    }
    dev[k - 2] = worst;
  }
  if (!(dev[1] < 0.005)) o.fail(fmt("k=3 deviation %.6f >= 0.5%%", dev[1]));
  if (!(dev[0] > dev[1] && dev[1] > dev[2])) {
    o.fail("deviation not decreasing in k");
  }
  if (o.ok) o.detail = fmt("max rel dev %.2e / %.2e / %.2e", dev[0], dev[1], dev[2]);
  return o;
}

// ---------------------------------------------------------------------
// 11. Digits flatten toward uniform: by the fourth digit both laws sit
//     within 5e-4 of 1/10, monotonically in j.

Outcome crit11() {
  Outcome o;
  const ParetoParams p = ParetoParams::from_rho(1.5, 0.7, 10);
  double prev_b = 1.0, prev_p = 1.0;
  for (int j = 2; j <= 6; ++j) {
    double db = 0.0, dp = 0.0;
    for (int d = 0; d <= 9; ++d) {
      db = std::max(db,
                    std::fabs(benford_digit_pmf_closed_form(10, j, d) - 0.1));
      dp = std::max(dp, std::fabs(pareto_digit_pmf(p, j, d) - 0.1));
    }
    if (j == 4) {
      if (!(db < 5e-4)) o.fail(fmt("benford j=4 deviation %.2e", db));
      if (!(dp < 5e-4)) o.fail(fmt("pareto j=4 deviation %.2e", dp));
    }
    if (!(db < prev_b)) o.fail(fmt("benford deviation rises at j=%.0f", j));
    if (!(dp < prev_p)) o.fail(fmt("pareto deviation rises at j=%.0f", j));
    prev_b = db;
    prev_p = dp;
  }
  return o;
}

// ---------------------------------------------------------------------
// 12. Estimator closes the loop on the sampler: 10-seed median of the
//     maximum-likelihood fit recovers shape within 1% and offset
//     within 0.005.

Outcome crit12() {
  Outcome o;
  const ParetoParams truth = ParetoParams::from_xmin(1.5, 3.0, 10);
  const double rho_truth = 0.47712125471966244;
  std::vector<double> s_hats, rho_hats;
  for (int i = 0; i < 10; ++i) {
    const Dataset ds = sample_pareto(1000000, truth, 5000 + i);
    const FitResult f = fit_pareto(ds, 10);
    s_hats.push_back(f.s_hat);
    rho_hats.push_back(f.rho_hat);
  }
  const auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return 0.5 * (v[4] + v[5]);
  };
  const double ms = median(s_hats);
  const double mr = median(rho_hats);
  if (std::fabs(ms - 1.5) > 0.015) {
    o.fail(fmt("median shape %.6f outside 1.5 +/- 1%%", ms));
  }
  if (std::fabs(mr - rho_truth) > 0.005) {
    o.fail(fmt("median offset %.6f outside truth +/- 0.005", mr));
  }
  if (o.ok) o.detail = fmt("median shape %.5f, offset %.5f", ms, mr);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no stated wall-clock limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> crits = {
      {1, "first-digit logarithmic law", 1.0, crit1},
      {2, "pareto first-digit reference series", 1.0, crit2},
      {3, "j-th digit closed forms vs marginalisation", 10.0, crit3},
      {4, "density approximation of second-order pmf", 0.0, crit4},
      {5, "joint pmf identity, exhaustive k<=6", 30.0, crit5},
      {6, "continuant identity suite", 5.0, crit6},
      {7, "normalisation of pmfs and tables", 0.0, crit7},
      {8, "second-coefficient ordering and head value", 0.0, crit8},
      {9, "sampler goodness of fit, 4x100 seeds", 300.0, crit9},
      {10, "sum invariance profile", 0.0, crit10},
      {11, "uniform-digit limit", 0.0, crit11},
      {12, "estimator recovery on sampled data", 0.0, crit12},
  };
  int failed = 0;
  for (const Criterion& c : crits) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.limit_s > 0.0 && dt > c.limit_s) {
      o.fail(fmt("took %.2fs, limit %.0fs", dt, c.limit_s));
    }
    std::printf("%s  %2d  %-46s %7.2fs\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, dt);
    if (!o.detail.empty()) std::printf("          %s\n", o.detail.c_str());
    if (!o.ok) ++failed;
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n", crits.size());
  } else {
    std::printf("%d of %zu criteria FAILED\n", failed, crits.size());
  }
  return failed == 0 ? 0 : 1;
}
