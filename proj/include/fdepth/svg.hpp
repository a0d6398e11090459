#ifndef FDEPTH_SVG_HPP
#define FDEPTH_SVG_HPP

#include <span>
#include <string>

#include "fdepth/evaluate.hpp"

namespace fdepth {

// Standalone SVG with one box-and-whisker per entry (box q1..q3, line at
// the median, whiskers to min/max). The vertical axis is fixed to
// [y_min, y_max] so plots of different runs stay comparable.
std::string boxplot_svg(const std::string& title,
                        std::span<const std::string> labels,
                        std::span<const SummaryStats> boxes,
                        double y_min = -1.0, double y_max = 1.0);

}  // namespace fdepth

#endif  // FDEPTH_SVG_HPP
