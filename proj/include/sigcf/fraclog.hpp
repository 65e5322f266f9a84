// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#ifndef SIGCF_FRACLOG_HPP
#define SIGCF_FRACLOG_HPP

#include <functional>
#include <vector>

// The distribution of {Y} = {log_b X} on [0,1), the single object every
// digit and continued-fraction model consumes.

namespace sigcf {

struct FracLogDistribution {
  int base = 10;
  // cdf on [0,1); continuous, cdf(0)=0, cdf(y)->1 as y->1.
  std::function<double(double)> cdf;
  // pdf on [0,1]; empty when the model has no density available.
  std::function<double(double)> pdf;

  bool has_pdf() const { return static_cast<bool>(pdf); }
};

// cdf evaluated with the domain closure both tails need:
// y <= 0 maps to 0, y >= 1 maps to 1.
double cdf_at(const FracLogDistribution& d, double y);

// Pareto(s, x_m) parameters viewed through base b. rho = {log_b x_m}.
// Construction snaps log_b(x_m) to the nearest integer when within 1e-12,
// so an x_m that is numerically a power of b gets rho = 0 exactly.
struct ParetoParams {
  double s = 1.0;
  double x_m = 1.0;
  double rho = 0.0;
  int base = 10;

  static ParetoParams from_xmin(double s, double x_m, int base);
  static ParetoParams from_rho(double s, double rho, int base);
};

// Fractional part of log_b(x) with the same snapping policy as
// ParetoParams: values within 1e-12 of an integer collapse to 0.
double frac_log(double x, int base);

// F_{Y}(y) folded over the integer lattice: sum_i [F_Y(y+i) - F_Y(i)].
// The window expands symmetrically from i = 0 until three consecutive
// terms on a side contribute less than 1e-15 each.
// Throws std::domain_error for y outside [0,1).
double frac_cdf_from_cdf(const std::function<double(double)>& F_Y, double y);

// cdf of {Y} for a Benford variable: the identity on [0,1).
double benford_frac_cdf(double y);

// cdf of {Y} for Pareto X:
//   b^(s(rho-1)) (1-b^(-sy))/(1-b^(-s)) + u(y-rho) (1-b^(-s(y-rho)))
// with u(0) = 1. Throws std::domain_error for y outside [0,1).
double pareto_frac_cdf(const ParetoParams& p, double y);

// pdf of {Y} for Pareto X:
//   s ln(b) b^(-s(y-rho)) (b^(-s)/(1-b^(-s)) + u(y-rho))
// Defined on [0,1]; y = 1 returns the left limit (used when a continued
// fraction value lands exactly on 1). Jump at y = rho belongs to the
// right branch (u(0) = 1).
double pareto_frac_pdf(const ParetoParams& p, double y);

// Packaged distributions.
FracLogDistribution benford_fraclog(int base);
FracLogDistribution pareto_fraclog(const ParetoParams& p);

// Checks the FracLogDistribution contract on a grid: cdf(0) ~ 0,
// cdf(1-) ~ 1, monotone, and (when a pdf is present) unit integral
// within 1e-8 by Simpson's rule. Used by tests and the custom-cdf path.
bool fraclog_validate(const FracLogDistribution& d,
                      const std::vector<double>& breakpoints = {});

}  // namespace sigcf

#endif  // SIGCF_FRACLOG_HPP
