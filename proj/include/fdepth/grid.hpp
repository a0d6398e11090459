#ifndef FDEPTH_GRID_HPP
#define FDEPTH_GRID_HPP

#include <Eigen/Core>
#include <initializer_list>
#include <vector>

namespace fdepth {

// Discretized observation interval: strictly increasing abscissae plus
// trapezoid quadrature weights. weights.sum() == points(N-1) - points(0).
struct Grid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return points.size(); }
  double length() const { return points(points.size() - 1) - points(0); }
};

Grid make_grid(const Eigen::VectorXd& points);
Grid make_grid(const std::vector<double>& points);
Grid make_grid(std::initializer_list<double> points);

}  // namespace fdepth

#endif  // FDEPTH_GRID_HPP
