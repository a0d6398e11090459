#include "fdepth/sample.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fdepth/errors.hpp"

namespace fdepth {

namespace detail {

double weighted_inner(const Eigen::Ref<const Eigen::VectorXd>& x,
                      const Eigen::Ref<const Eigen::VectorXd>& y,
                      const Eigen::VectorXd& w) {
  double sum = 0.0;
  for (Eigen::Index s = 0; s < w.size(); ++s) {
    sum += w(s) * x(s) * y(s);
  }
  return sum;
}

double weighted_sqdist(const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& y,
                       const Eigen::VectorXd& w) {
  double sum = 0.0;
  for (Eigen::Index s = 0; s < w.size(); ++s) {
    const double d = x(s) - y(s);
    sum += w(s) * d * d;
  }
  return sum;
}

}  // namespace detail

namespace {

void check_conforms(Eigen::Index got, Eigen::Index expected) {
  if (got != expected) {
    throw DimensionError("curve has " + std::to_string(got) +
                         " values, grid has " + std::to_string(expected) +
                         " points");
  }
}

}  // namespace

FunctionalSample make_sample(CurveMatrix values, Grid grid) {
  if (values.rows() < 1) {
    throw InvalidInputError("sample needs at least one curve");
  }
  check_conforms(values.cols(), grid.size());
  if (!values.allFinite()) {
    throw InvalidInputError("sample values must be finite");
  }
  return FunctionalSample{std::move(values), std::move(grid)};
}

double l2_inner(const Eigen::Ref<const Eigen::VectorXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& y, const Grid& grid) {
  check_conforms(x.size(), grid.size());
  check_conforms(y.size(), grid.size());
  return detail::weighted_inner(x, y, grid.weights);
}

double l2_dist(const Eigen::Ref<const Eigen::VectorXd>& x,
               const Eigen::Ref<const Eigen::VectorXd>& y, const Grid& grid) {
  check_conforms(x.size(), grid.size());
  check_conforms(y.size(), grid.size());
  return std::sqrt(detail::weighted_sqdist(x, y, grid.weights));
}

PairwiseGeometry pairwise_geometry(const FunctionalSample& sample) {
  const Eigen::Index n = sample.curve_count();
  const auto& w = sample.grid.weights;
  PairwiseGeometry g{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    g.gram(i, i) = detail::weighted_inner(sample.curve(i), sample.curve(i), w);
    g.dist(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double inner = detail::weighted_inner(sample.curve(i), sample.curve(j), w);
      const double d = std::sqrt(detail::weighted_sqdist(sample.curve(i), sample.curve(j), w));
      g.gram(i, j) = g.gram(j, i) = inner;
      g.dist(i, j) = g.dist(j, i) = d;
    }
  }
  return g;
}

}  // namespace fdepth
