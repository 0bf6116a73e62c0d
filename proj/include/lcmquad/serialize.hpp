#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcmquad/constants.hpp"
#include "lcmquad/equidist.hpp"
#include "lcmquad/lcm.hpp"

namespace lcmquad {

// {"n", "log_lcm", "n_log_n", "residual_count"} plus "exact" when present.
std::string to_json(const LcmResult& r);
// "p,beta" header then one line per prime; residual primes carry beta 1.
std::string to_csv(const ExponentMap& map);

std::string to_json(const BfBreakdown& b);
BfBreakdown breakdown_from_json(const std::string& text);

// "p,nu,frac" header then one line per sample.
std::string to_csv(std::span<const RootSample> samples);
std::string to_json(std::span<const RootSample> samples);

std::string to_json(const TSums& t, u64 n);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);
// Fixed number of significant digits, for text output.
std::string format_significant(double v, int digits = 15);

}  // namespace lcmquad
