// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.
//
// Serialization helpers shared by the command-line tool and its tests.

#pragma once

#include <iosfwd>
#include <string>

#include "sigcf/fraclog.hpp"

namespace sigcf {

// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

// Loads a sampled fractional-log cdf: rows of "y F(y)" with y strictly
// increasing in [0, 1], F nondecreasing, F(0) = 0 and F(1) = 1 within
// 1e-9 (endpoints are then pinned exactly).  '#' comments allowed.
// Evaluation interpolates linearly; no pdf is attached.
// Throws std::invalid_argument on malformed input.
FracLogDistribution load_cdf_table(std::istream& in);

}  // namespace sigcf
