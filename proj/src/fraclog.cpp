// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/fraclog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigcf {

namespace {

void require_unit_interval(double y, const char* who) {
  if (!(y >= 0.0) || !(y < 1.0)) {
    throw std::domain_error(std::string(who) + ": y must lie in [0,1)");
  }
}

void require_base(int base, const char* who) {
  if (base < 2) throw std::domain_error(std::string(who) + ": base must be >= 2");
}

}  // namespace

double cdf_at(const FracLogDistribution& d, double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  return d.cdf(y);
}

double frac_log(double x, int base) {
  require_base(base, "frac_log");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("frac_log: x must be positive and finite");
  }
  const double lg = std::log(x) / std::log(static_cast<double>(base));
  const double nearest = std::round(lg);
  if (std::fabs(lg - nearest) <= 1e-12) return 0.0;
  double f = lg - std::floor(lg);
  if (f >= 1.0) f = 0.0;
  return f;
}

ParetoParams ParetoParams::from_xmin(double s, double x_m, int base) {
  require_base(base, "ParetoParams");
  if (!(s > 0.0)) throw std::domain_error("ParetoParams: s must be > 0");
  if (!(x_m > 0.0) || !std::isfinite(x_m)) {
    throw std::domain_error("ParetoParams: x_m must be positive and finite");
  }
  ParetoParams p;
  p.s = s;
  p.x_m = x_m;
  p.base = base;
  p.rho = frac_log(x_m, base);
  return p;
}

ParetoParams ParetoParams::from_rho(double s, double rho, int base) {
  require_base(base, "ParetoParams");
  if (!(s > 0.0)) throw std::domain_error("ParetoParams: s must be > 0");
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw std::domain_error("ParetoParams: rho must lie in [0,1)");
  }
  ParetoParams p;
  p.s = s;
  p.x_m = std::pow(static_cast<double>(base), rho);
  p.base = base;
  p.rho = rho;
  return p;
}

double frac_cdf_from_cdf(const std::function<double(double)>& F_Y, double y) {
  require_unit_interval(y, "frac_cdf_from_cdf");
  double total = F_Y(y) - F_Y(0.0);
  // Positive side.
  int quiet = 0;
  for (long i = 1; i <= 100000 && quiet < 3; ++i) {
    const double t = F_Y(y + i) - F_Y(static_cast<double>(i));
    total += t;
    quiet = (std::fabs(t) < 1e-15) ? quiet + 1 : 0;
  }
  // Negative side.
  quiet = 0;
  for (long i = -1; i >= -100000 && quiet < 3; --i) {
    const double t = F_Y(y + i) - F_Y(static_cast<double>(i));
    total += t;
    quiet = (std::fabs(t) < 1e-15) ? quiet + 1 : 0;
  }
  if (total < 0.0) return 0.0;
  if (total > 1.0) return 1.0;
  return total;
}

double benford_frac_cdf(double y) {
  require_unit_interval(y, "benford_frac_cdf");
  return y;
}

double pareto_frac_cdf(const ParetoParams& p, double y) {
  require_unit_interval(y, "pareto_frac_cdf");
  const double lb = std::log(static_cast<double>(p.base));
  // (1 - b^(-sy)) / (1 - b^(-s)) in expm1 form, stable as s -> 0.
  const double grow = std::expm1(-p.s * y * lb) / std::expm1(-p.s * lb);
  double v = std::exp(p.s * (p.rho - 1.0) * lb) * grow;
  if (y >= p.rho) v += -std::expm1(-p.s * (y - p.rho) * lb);
  return v;
}

double pareto_frac_pdf(const ParetoParams& p, double y) {
  if (!(y >= 0.0) || !(y <= 1.0)) {
    throw std::domain_error("pareto_frac_pdf: y must lie in [0,1]");
  }
  const double lb = std::log(static_cast<double>(p.base));
  // b^(-s)/(1 - b^(-s)) = 1/(b^s - 1)
  const double geom = 1.0 / std::expm1(p.s * lb);
  const double step = (y >= p.rho) ? 1.0 : 0.0;
  return p.s * lb * std::exp(-p.s * (y - p.rho) * lb) * (geom + step);
}

FracLogDistribution benford_fraclog(int base) {
  require_base(base, "benford_fraclog");
  FracLogDistribution d;
  d.base = base;
  d.cdf = [](double y) { return benford_frac_cdf(y); };
  d.pdf = [](double) { return 1.0; };
  return d;
}

FracLogDistribution pareto_fraclog(const ParetoParams& p) {
  FracLogDistribution d;
  d.base = p.base;
  d.cdf = [p](double y) { return pareto_frac_cdf(p, y); };
  d.pdf = [p](double y) { return pareto_frac_pdf(p, y); };
  return d;
}

bool fraclog_validate(const FracLogDistribution& d,
                      const std::vector<double>& breakpoints) {
  if (!d.cdf || d.base < 2) return false;
  if (std::fabs(d.cdf(0.0)) > 1e-9) return false;
  if (std::fabs(d.cdf(1.0 - 1e-9) - 1.0) > 1e-6) return false;
  const int n = 4096;
  double prev = 0.0;
  for (int i = 1; i < n; ++i) {
    const double y = static_cast<double>(i) / n;
    const double c = d.cdf(y);
    if (c < prev - 1e-12) return false;
    prev = c;
  }
  if (d.has_pdf()) {
    // Composite Simpson per smooth piece; pieces split at the declared
    // discontinuities so the jump never lands inside a panel.
    std::vector<double> edges{0.0};
    for (double bp : breakpoints) {
      if (bp > 0.0 && bp < 1.0) edges.push_back(bp);
    }
    edges.push_back(1.0);
    std::sort(edges.begin(), edges.end());
    double integral = 0.0;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double lo = edges[e];
      const double hi = edges[e + 1];
      if (hi - lo < 1e-15) continue;
      const int m = 4000;
      const double h = (hi - lo) / m;
      for (int i = 0; i < m; ++i) {
        const double a = lo + i * h;
        const double b = a + h;
        // The pdf at a breakpoint belongs to the right branch; the last
        // panel of a piece samples just inside so the left limit is used.
        const double b_eval = (i == m - 1) ? hi - (hi - lo) * 1e-12 : b;
        integral +=
            (d.pdf(a) + 4.0 * d.pdf(0.5 * (a + b)) + d.pdf(b_eval)) * h / 6.0;
      }
    }
    if (std::fabs(integral - 1.0) > 1e-8) return false;
  }
  return true;
}

}  // namespace sigcf
