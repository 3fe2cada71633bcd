#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "vdge/rng.hpp"

namespace vdge {

// Quartile convention everywhere: linear interpolation between order
// statistics at positions p*(m-1), p in {0.25, 0.5, 0.75}.
struct SummaryStats {
  double median;
  double q1;
  double q3;
  double iqr;  // q3 - q1
};

SummaryStats summarize(std::span<const double> values);

// Interpolated percentile of an already sorted sequence, p in [0, 1].
double percentile_sorted(std::span<const double> sorted, double p);

using Statistic = std::function<double(std::span<const double>)>;

struct Interval {
  double lo;
  double hi;
};

// Percentile bootstrap: `resamples` with-replacement resamples of the same
// length, statistic of each, central `confidence` interval of the results.
Interval bootstrap(std::span<const double> values, const Statistic& statistic,
                   std::int64_t resamples, double confidence, Rng& rng);

inline Interval bootstrap(std::span<const double> values, const Statistic& statistic, Rng& rng) {
  return bootstrap(values, statistic, 1000, 0.95, rng);
}

}  // namespace vdge
