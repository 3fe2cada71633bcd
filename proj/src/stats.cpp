#include "vdge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vdge/error.hpp"

namespace vdge {

double percentile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw_error(errc::empty_input, "percentile of empty sequence");
  if (!(p >= 0.0 && p <= 1.0)) throw_error(errc::out_of_range, "percentile must be in [0, 1]");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 >= sorted.size()) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw_error(errc::empty_input, "summarize requires at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  SummaryStats stats{};
  stats.median = percentile_sorted(sorted, 0.5);
  stats.q1 = percentile_sorted(sorted, 0.25);
  stats.q3 = percentile_sorted(sorted, 0.75);
  stats.iqr = stats.q3 - stats.q1;
  return stats;
}

Interval bootstrap(std::span<const double> values, const Statistic& statistic,
                   std::int64_t resamples, double confidence, Rng& rng) {
  if (values.empty()) throw_error(errc::empty_input, "bootstrap requires at least one value");
  if (resamples < 1) throw_error(errc::invalid_argument, "resamples must be at least 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw_error(errc::invalid_argument, "confidence must be in (0, 1)");
  }
  const std::size_t m = values.size();
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<double> resample(m);
  std::vector<double> replicates(static_cast<std::size_t>(resamples));
  for (auto& rep : replicates) {
    for (auto& x : resample) x = values[pick(rng)];
    rep = statistic(resample);
  }
  std::sort(replicates.begin(), replicates.end());
  const double tail = (1.0 - confidence) / 2.0;
  return {percentile_sorted(replicates, tail), percentile_sorted(replicates, 1.0 - tail)};
}

}  // namespace vdge
