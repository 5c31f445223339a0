#include "scorpion/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "scorpion/errors.hpp"
#include "scorpion/fast_count.hpp"

namespace scorpion {

BenchResult scaling_bench(int ell, int k, const std::vector<int>& sizes,
                          EdgeProbability p, std::uint64_t seed, int repeats) {
  if (ell < 1) throw parameter_error("scaling_bench: ell must be >= 1");
  if (k < ell + 4) throw parameter_error("scaling_bench: k must be >= ell + 4");
  if (sizes.empty()) throw parameter_error("scaling_bench: no sizes given");
  for (int n : sizes)
    if (n < 1) throw parameter_error("scaling_bench: sizes must be positive");
  if (repeats < 1) throw parameter_error("scaling_bench: repeats must be >= 1");

  BenchResult result;
  result.ell = ell;
  result.k = k;

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto g = random_graph(sizes[i], p, seed + i);
    BenchPoint point;
    point.n = sizes[i];
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      auto count = count_scorpions(g, ell, k);
      const auto stop = std::chrono::steady_clock::now();
      point.times_us.push_back(
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
      point.count = std::move(count);
    }
    auto sorted = point.times_us;
    std::sort(sorted.begin(), sorted.end());
    point.median_us = sorted[sorted.size() / 2];
    result.points.push_back(std::move(point));
  }

  if (result.points.size() >= 2) {
    // least squares on (log n, log median), clamping medians to 1us so the
    // logarithm stays finite
    const std::size_t count = result.points.size();
    double sum_x = 0, sum_y = 0;
    std::vector<double> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = std::log(static_cast<double>(result.points[i].n));
      ys[i] = std::log(static_cast<double>(std::max<long long>(1, result.points[i].median_us)));
      sum_x += xs[i];
      sum_y += ys[i];
    }
    const double mean_x = sum_x / count, mean_y = sum_y / count;
    double numer = 0, denom = 0;
    for (std::size_t i = 0; i < count; ++i) {
      numer += (xs[i] - mean_x) * (ys[i] - mean_y);
      denom += (xs[i] - mean_x) * (xs[i] - mean_x);
    }
    if (denom > 0) result.slope = numer / denom;
  }
  return result;
}

}  // namespace scorpion
