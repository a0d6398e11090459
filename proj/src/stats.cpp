#include "fdepth/stats.hpp"

#include <cmath>
#include <cstddef>

#include "fdepth/errors.hpp"

namespace fdepth {

double quantile7(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw InvalidInputError("quantile of an empty sequence");
  }
  const std::size_t m = sorted.size();
  const double pos = static_cast<double>(m - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  if (lo + 1 >= m) {
    return sorted[m - 1];
  }
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace fdepth
