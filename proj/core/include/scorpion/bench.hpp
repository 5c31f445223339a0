#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scorpion/bigcount.hpp"
#include "scorpion/generators.hpp"

namespace scorpion {

struct BenchPoint {
  int n = 0;
  std::vector<long long> times_us;  // one entry per repeat, in run order
  long long median_us = 0;
  BigCount count;
};

struct BenchResult {
  int ell = 0;
  int k = 0;
  std::vector<BenchPoint> points;
  /// Least-squares slope of log(median time) against log(n); absent with
  /// fewer than two sizes.
  std::optional<double> slope;
};

/// Times count_scorpions on random graphs of the given sizes. Each size i
/// uses seed + i, so a fixed (sizes, p, seed) is fully reproducible.
/// Throws parameter_error on an invalid slice, empty sizes, nonpositive
/// sizes or repeats < 1.
BenchResult scaling_bench(int ell, int k, const std::vector<int>& sizes,
                          EdgeProbability p, std::uint64_t seed, int repeats);

}  // namespace scorpion
