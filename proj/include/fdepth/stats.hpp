#ifndef FDEPTH_STATS_HPP
#define FDEPTH_STATS_HPP

#include <span>

namespace fdepth {

// Empirical quantile with linear interpolation between order statistics
// (the common "type 7" default). `sorted` must be ascending and non-empty;
// p in [0,1].
double quantile7(std::span<const double> sorted, double p);

}  // namespace fdepth

#endif  // FDEPTH_STATS_HPP
