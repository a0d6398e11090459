#include "fdepth/grid.hpp"

#include <cmath>
#include <string>

#include "fdepth/errors.hpp"

namespace fdepth {

Grid make_grid(const Eigen::VectorXd& points) {
  const Eigen::Index n = points.size();
  if (n < 2) {
    throw InvalidGridError("grid needs at least 2 points, got " +
                           std::to_string(n));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(points(i))) {
      throw InvalidGridError("grid point " + std::to_string(i) +
                             " is not finite");
    }
    if (i > 0 && points(i) <= points(i - 1)) {
      throw InvalidGridError("grid points not strictly increasing at index " +
                             std::to_string(i));
    }
  }
  Eigen::VectorXd weights(n);
  weights(0) = (points(1) - points(0)) / 2.0;
  weights(n - 1) = (points(n - 1) - points(n - 2)) / 2.0;
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    weights(i) = (points(i + 1) - points(i - 1)) / 2.0;
  }
  return Grid{points, weights};
}

Grid make_grid(const std::vector<double>& points) {
  return make_grid(Eigen::Map<const Eigen::VectorXd>(
      points.data(), static_cast<Eigen::Index>(points.size())));
}

Grid make_grid(std::initializer_list<double> points) {
  return make_grid(std::vector<double>(points));
}

}  // namespace fdepth
