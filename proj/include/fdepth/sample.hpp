#ifndef FDEPTH_SAMPLE_HPP
#define FDEPTH_SAMPLE_HPP

#include <Eigen/Core>

#include "fdepth/grid.hpp"

namespace fdepth {

// Row-major so that each curve is a contiguous slice.
using CurveMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// A sample of n curves observed on a common grid; row k holds curve k.
struct FunctionalSample {
  CurveMatrix values;  // n x N
  Grid grid;

  Eigen::Index curve_count() const { return values.rows(); }
  Eigen::Index point_count() const { return values.cols(); }
  auto curve(Eigen::Index k) const { return values.row(k).transpose(); }
};

FunctionalSample make_sample(CurveMatrix values, Grid grid);

// Trapezoid L2 inner product / distance of two curves on a grid.
double l2_inner(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y, const Grid& grid);
double l2_dist(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y, const Grid& grid);

// Cached pairwise inner products and distances of a sample.
// dist(i,j) is exactly 0 iff rows i and j are elementwise equal, which is
// what the depth exclusion rules test for.
struct PairwiseGeometry {
  Eigen::MatrixXd gram;
  Eigen::MatrixXd dist;
};

PairwiseGeometry pairwise_geometry(const FunctionalSample& sample);

namespace detail {

// Fixed left-to-right accumulation, shared by the cached pairwise matrices
// and the per-query paths so that identical inputs give bit-identical sums.
double weighted_inner(const Eigen::Ref<const Eigen::VectorXd>& x,
                      const Eigen::Ref<const Eigen::VectorXd>& y,
                      const Eigen::VectorXd& w);
double weighted_sqdist(const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y,
                       const Eigen::VectorXd& w);

}  // namespace detail

}  // namespace fdepth

#endif  // FDEPTH_SAMPLE_HPP
