// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.

#include "sigcf/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sigcf {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

FracLogDistribution load_cdf_table(std::istream& in) {
  std::vector<double> ys, fs;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    double y = 0.0, f = 0.0;
    if (!(row >> y >> f)) {
      throw std::invalid_argument("load_cdf_table: malformed row: " + line);
    }
    ys.push_back(y);
    fs.push_back(f);
  }
  if (ys.size() < 2) {
    throw std::invalid_argument("load_cdf_table: need at least 2 rows");
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!std::isfinite(ys[i]) || !std::isfinite(fs[i]) || ys[i] < 0.0 ||
        ys[i] > 1.0) {
      throw std::invalid_argument("load_cdf_table: y values must lie in [0, 1]");
    }
    if (i > 0 && ys[i] <= ys[i - 1]) {
      throw std::invalid_argument("load_cdf_table: y values must be strictly increasing");
    }
    if (i > 0 && fs[i] < fs[i - 1]) {
      throw std::invalid_argument("load_cdf_table: cdf values must be nondecreasing");
    }
  }
  if (std::fabs(ys.front()) > 1e-9 || std::fabs(ys.back() - 1.0) > 1e-9 ||
      std::fabs(fs.front()) > 1e-9 || std::fabs(fs.back() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "load_cdf_table: grid must span [0, 1] with F(0) = 0 and F(1) = 1");
  }
  ys.front() = 0.0;
  fs.front() = 0.0;
  ys.back() = 1.0;
  fs.back() = 1.0;

  auto y_grid = std::make_shared<std::vector<double>>(std::move(ys));
  auto f_grid = std::make_shared<std::vector<double>>(std::move(fs));
  FracLogDistribution d;
  d.base = 10;
  d.cdf = [y_grid, f_grid](double y) {
    const std::vector<double>& yg = *y_grid;
    const std::vector<double>& fg = *f_grid;
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    const auto it = std::upper_bound(yg.begin(), yg.end(), y);
    const std::size_t i = static_cast<std::size_t>(it - yg.begin());
    const double t = (y - yg[i - 1]) / (yg[i] - yg[i - 1]);
    return fg[i - 1] + t * (fg[i] - fg[i - 1]);
  };
  return d;
}

}  // namespace sigcf
