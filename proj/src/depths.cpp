#include "fdepth/depths.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fdepth/errors.hpp"
#include "fdepth/stats.hpp"

namespace fdepth {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::FSD:
      return "fsd";
    case Method::FMD:
      return "fmd";
    case Method::MBD:
      return "mbd";
    case Method::KFSD:
      return "kfsd";
    case Method::HMD:
      return "hmd";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (name == method_name(m)) {
      return m;
    }
  }
  return std::nullopt;
}

std::array<DepthParams, 5> default_method_params(
    double bandwidth_quantile, std::optional<double> bandwidth_override) {
  std::array<DepthParams, 5> params;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    params[i].method = kAllMethods[i];
    params[i].bandwidth_quantile = bandwidth_quantile;
    params[i].bandwidth_override = bandwidth_override;
  }
  return params;
}

namespace {

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

void check_query(const FunctionalSample& sample,
                 const Eigen::Ref<const Eigen::VectorXd>& query) {
  if (query.size() != sample.point_count()) {
    throw DimensionError("query has " + std::to_string(query.size()) +
                         " values, sample grid has " +
                         std::to_string(sample.point_count()) + " points");
  }
  if (!query.allFinite()) {
    throw InvalidInputError("query values must be finite");
  }
}

void check_params(const DepthParams& params) {
  if (!(params.bandwidth_quantile > 0.0 && params.bandwidth_quantile < 1.0)) {
    throw InvalidInputError("bandwidth quantile must lie in (0,1)");
  }
  if (params.bandwidth_override && !(*params.bandwidth_override > 0.0)) {
    throw InvalidInputError("bandwidth override must be positive");
  }
}

bool row_lex_less(const CurveMatrix& values, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index s = 0; s < values.cols(); ++s) {
    if (values(a, s) != values(b, s)) {
      return values(a, s) < values(b, s);
    }
  }
  return false;
}

// Distances from one query to every sample curve, plus a canonical
// iteration order (by distance, ties by lexicographic row comparison).
// Summing contributions in this order makes every depth value independent
// of how the sample rows happen to be permuted, not just up to rounding.
struct QueryContext {
  Eigen::VectorXd dist;
  std::vector<Eigen::Index> order;
};

void fill_canonical_order(const FunctionalSample& sample, QueryContext& ctx) {
  ctx.order.resize(static_cast<std::size_t>(sample.curve_count()));
  std::iota(ctx.order.begin(), ctx.order.end(), Eigen::Index{0});
  std::sort(ctx.order.begin(), ctx.order.end(),
            [&](Eigen::Index a, Eigen::Index b) {
              if (ctx.dist(a) != ctx.dist(b)) {
                return ctx.dist(a) < ctx.dist(b);
              }
              return row_lex_less(sample.values, a, b);
            });
}

QueryContext make_context(const FunctionalSample& sample,
                          const Eigen::Ref<const Eigen::VectorXd>& query) {
  QueryContext ctx;
  ctx.dist.resize(sample.curve_count());
  for (Eigen::Index i = 0; i < sample.curve_count(); ++i) {
    ctx.dist(i) = std::sqrt(
        detail::weighted_sqdist(query, sample.curve(i), sample.grid.weights));
  }
  fill_canonical_order(sample, ctx);
  return ctx;
}

QueryContext make_context_for_row(const FunctionalSample& sample,
                                  const PairwiseGeometry& geometry,
                                  Eigen::Index k) {
  QueryContext ctx;
  ctx.dist = geometry.dist.col(k);
  fill_canonical_order(sample, ctx);
  return ctx;
}

double gaussian_kernel(double dist, double h) {
  return std::exp(-(dist * dist) / (2.0 * h * h));
}

double resolve_bandwidth(const FunctionalSample& sample,
                         const DepthParams& params,
                         const PairwiseGeometry* geometry) {
  check_params(params);
  if (params.bandwidth_override) {
    return *params.bandwidth_override;
  }
  if (geometry != nullptr) {
    return bandwidth(*geometry, params.bandwidth_quantile);
  }
  if (sample.curve_count() < 2) {
    throw DegenerateSampleError(
        "bandwidth selection needs at least 2 curves (or an explicit bandwidth)");
  }
  const PairwiseGeometry local = pairwise_geometry(sample);
  return bandwidth(local, params.bandwidth_quantile);
}

// -- per-query kernels ------------------------------------------------------

double fmd_impl(const FunctionalSample& sample,
                const Eigen::Ref<const Eigen::VectorXd>& query) {
  const Eigen::Index n = sample.curve_count();
  const auto& w = sample.grid.weights;
  double acc = 0.0;
  for (Eigen::Index s = 0; s < sample.point_count(); ++s) {
    Eigen::Index below_or_equal = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (sample.values(i, s) <= query(s)) {
        ++below_or_equal;
      }
    }
    const double cdf = static_cast<double>(below_or_equal) / static_cast<double>(n);
    acc += w(s) * (1.0 - std::abs(0.5 - cdf));
  }
  return clamp_unit(acc / sample.grid.length());
}

double mbd_impl(const FunctionalSample& sample,
                const Eigen::Ref<const Eigen::VectorXd>& query) {
  const Eigen::Index n = sample.curve_count();
  if (n < 2) {
    throw InsufficientSampleError("modified band depth needs at least 2 curves");
  }
  const auto& w = sample.grid.weights;
  // A pair's band covers the query at t unless both members lie strictly
  // above or both strictly below, so the covering count per t follows from
  // the strict counts alone; this matches inclusive pair enumeration.
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  double acc = 0.0;
  for (Eigen::Index s = 0; s < sample.point_count(); ++s) {
    double strictly_above = 0.0;
    double strictly_below = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (sample.values(i, s) > query(s)) {
        ++strictly_above;
      } else if (sample.values(i, s) < query(s)) {
        ++strictly_below;
      }
    }
    const double covering = pairs - strictly_above * (strictly_above - 1.0) / 2.0 -
                            strictly_below * (strictly_below - 1.0) / 2.0;
    acc += w(s) * covering;
  }
  return clamp_unit(acc / (pairs * sample.grid.length()));
}

double fsd_impl(const FunctionalSample& sample,
                const Eigen::Ref<const Eigen::VectorXd>& query,
                const QueryContext& ctx) {
  const Eigen::Index n = sample.curve_count();
  const auto& w = sample.grid.weights;
  Eigen::VectorXd direction = Eigen::VectorXd::Zero(sample.point_count());
  for (Eigen::Index i : ctx.order) {
    const double d = ctx.dist(i);
    if (d == 0.0) {
      continue;  // curves equal to the query are excluded from the sum
    }
    for (Eigen::Index s = 0; s < sample.point_count(); ++s) {
      direction(s) += (query(s) - sample.values(i, s)) / d;
    }
  }
  double norm2 = 0.0;
  for (Eigen::Index s = 0; s < sample.point_count(); ++s) {
    norm2 += w(s) * direction(s) * direction(s);
  }
  return clamp_unit(1.0 - std::sqrt(norm2) / static_cast<double>(n));
}

double hmd_impl(const FunctionalSample& sample, const QueryContext& ctx,
                double h) {
  double acc = 0.0;
  for (Eigen::Index i : ctx.order) {
    acc += gaussian_kernel(ctx.dist(i), h);
  }
  const double value = acc / static_cast<double>(sample.curve_count());
  return std::min(value, 1.0);
}

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& dist, double h) {
  Eigen::MatrixXd kernel(dist.rows(), dist.cols());
  for (Eigen::Index i = 0; i < dist.rows(); ++i) {
    for (Eigen::Index j = 0; j < dist.cols(); ++j) {
      kernel(i, j) = gaussian_kernel(dist(i, j), h);
    }
  }
  return kernel;
}

// Kernel form of the spatial depth: with a stationary kernel (kappa(x,x)=1),
// the squared norm of the mean unit direction in feature space expands into
// a double sum over sample curves distinct from the query.
double kfsd_impl(const FunctionalSample& sample, const QueryContext& ctx,
                 const Eigen::MatrixXd& cross_kernel, double h) {
  const Eigen::Index n = sample.curve_count();
  std::vector<Eigen::Index> active;
  std::vector<double> query_kernel;
  std::vector<double> denom;
  active.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i : ctx.order) {
    if (ctx.dist(i) != 0.0) {
      active.push_back(i);
      const double k = gaussian_kernel(ctx.dist(i), h);
      query_kernel.push_back(k);
      denom.push_back(std::sqrt(2.0 - 2.0 * k));
    }
  }
  double sum = 0.0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = 0; b < active.size(); ++b) {
      sum += (1.0 + cross_kernel(active[a], active[b]) - query_kernel[a] -
              query_kernel[b]) /
             (denom[a] * denom[b]);
    }
  }
  // The sum is a squared feature-space norm, nonnegative up to rounding.
  sum = std::max(sum, 0.0);
  return clamp_unit(1.0 - std::sqrt(sum) / static_cast<double>(n));
}

}  // namespace

double bandwidth(const PairwiseGeometry& geometry, double quantile) {
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw InvalidInputError("bandwidth quantile must lie in (0,1)");
  }
  const Eigen::Index n = geometry.dist.rows();
  if (n < 2) {
    throw InsufficientSampleError("bandwidth selection needs at least 2 curves");
  }
  std::vector<double> distances;
  distances.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      distances.push_back(geometry.dist(i, j));
    }
  }
  std::sort(distances.begin(), distances.end());
  const double h = quantile7(distances, quantile);
  if (h <= 0.0) {
    if (distances.back() == 0.0) {
      throw DegenerateSampleError(
          "all curves identical: pairwise distances are all zero");
    }
    throw DegenerateSampleError(
        "selected bandwidth is zero (too many duplicated curves)");
  }
  return h;
}

double fmd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query) {
  check_query(sample, query);
  return fmd_impl(sample, query);
}

double mbd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query) {
  check_query(sample, query);
  return mbd_impl(sample, query);
}

double fsd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query) {
  check_query(sample, query);
  const QueryContext ctx = make_context(sample, query);
  return fsd_impl(sample, query, ctx);
}

double hmd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query,
           const DepthParams& params, const PairwiseGeometry* geometry) {
  check_query(sample, query);
  const double h = resolve_bandwidth(sample, params, geometry);
  const QueryContext ctx = make_context(sample, query);
  return hmd_impl(sample, ctx, h);
}

double kfsd(const FunctionalSample& sample,
            const Eigen::Ref<const Eigen::VectorXd>& query,
            const DepthParams& params, const PairwiseGeometry* geometry) {
  check_query(sample, query);
  PairwiseGeometry local;
  if (geometry == nullptr) {
    local = pairwise_geometry(sample);
    geometry = &local;
  }
  const double h = resolve_bandwidth(sample, params, geometry);
  const QueryContext ctx = make_context(sample, query);
  return kfsd_impl(sample, ctx, kernel_matrix(geometry->dist, h), h);
}

namespace {

DepthResult depth_all_with(const FunctionalSample& sample,
                           const DepthParams& params,
                           const PairwiseGeometry& geometry) {
  check_params(params);
  const Eigen::Index n = sample.curve_count();
  DepthResult result;
  result.method = params.method;
  result.values.resize(n);

  switch (params.method) {
    case Method::FMD:
      for (Eigen::Index k = 0; k < n; ++k) {
        result.values(k) = fmd_impl(sample, sample.curve(k));
      }
      break;
    case Method::MBD:
      for (Eigen::Index k = 0; k < n; ++k) {
        result.values(k) = mbd_impl(sample, sample.curve(k));
      }
      break;
    case Method::FSD:
      for (Eigen::Index k = 0; k < n; ++k) {
        const QueryContext ctx = make_context_for_row(sample, geometry, k);
        result.values(k) = fsd_impl(sample, sample.curve(k), ctx);
      }
      break;
    case Method::HMD: {
      const double h = resolve_bandwidth(sample, params, &geometry);
      result.bandwidth_used = h;
      for (Eigen::Index k = 0; k < n; ++k) {
        const QueryContext ctx = make_context_for_row(sample, geometry, k);
        result.values(k) = hmd_impl(sample, ctx, h);
      }
      break;
    }
    case Method::KFSD: {
      const double h = resolve_bandwidth(sample, params, &geometry);
      result.bandwidth_used = h;
      const Eigen::MatrixXd cross_kernel = kernel_matrix(geometry.dist, h);
      for (Eigen::Index k = 0; k < n; ++k) {
        const QueryContext ctx = make_context_for_row(sample, geometry, k);
        result.values(k) = kfsd_impl(sample, ctx, cross_kernel, h);
      }
      break;
    }
  }
  return result;
}

}  // namespace

DepthResult depth_all(const FunctionalSample& sample, const DepthParams& params) {
  // The counting depths never touch the pairwise matrices; skip the O(n^2 N)
  // precomputation for them.
  if (params.method == Method::FMD || params.method == Method::MBD) {
    PairwiseGeometry unused;
    return depth_all_with(sample, params, unused);
  }
  const PairwiseGeometry geometry = pairwise_geometry(sample);
  return depth_all_with(sample, params, geometry);
}

std::array<DepthResult, 5> depth_all_methods(
    const FunctionalSample& sample, const std::array<DepthParams, 5>& params) {
  const PairwiseGeometry geometry = pairwise_geometry(sample);
  std::array<DepthResult, 5> results;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    if (params[i].method != kAllMethods[i]) {
      throw InvalidInputError("depth_all_methods params must follow kAllMethods order");
    }
    results[i] = depth_all_with(sample, params[i], geometry);
  }
  return results;
}

}  // namespace fdepth
