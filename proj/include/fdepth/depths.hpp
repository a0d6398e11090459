#ifndef FDEPTH_DEPTHS_HPP
#define FDEPTH_DEPTHS_HPP

#include <Eigen/Core>
#include <array>
#include <optional>
#include <string_view>

#include "fdepth/sample.hpp"

namespace fdepth {

enum class Method { FSD, FMD, MBD, KFSD, HMD };

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::FSD, Method::FMD, Method::MBD, Method::KFSD, Method::HMD};

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

struct DepthParams {
  Method method = Method::FSD;
  double bandwidth_quantile = 0.25;
  std::optional<double> bandwidth_override;
};

struct DepthResult {
  Eigen::VectorXd values;
  Method method = Method::FSD;
  std::optional<double> bandwidth_used;
};

// Kernel bandwidth: empirical quantile (linear interpolation between order
// statistics) of the n(n-1)/2 pairwise curve distances. Throws
// DegenerateSampleError when the selected quantile is zero.
double bandwidth(const PairwiseGeometry& geometry, double quantile);

// Fraiman-Muniz depth: weighted average over the grid of the univariate
// depth 1 - |1/2 - Fhat(x(t))|, Fhat the empirical cdf of the sample values
// at t, normalized by the interval length.
double fmd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query);

// Modified band depth: average over all curve pairs of the fraction of the
// interval where the query lies inside the pair's band (inclusive bounds).
double mbd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query);

// Functional spatial depth: 1 - (1/n) * || sum of unit difference curves ||,
// curves identical to the query excluded from the sum.
double fsd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query);

// h-modal depth: mean Gaussian kernel similarity exp(-d^2 / (2 h^2)) to the
// sample, no exclusions.
double hmd(const FunctionalSample& sample,
           const Eigen::Ref<const Eigen::VectorXd>& query,
           const DepthParams& params,
           const PairwiseGeometry* geometry = nullptr);

// Kernelized functional spatial depth: spatial depth in the feature space
// induced by the Gaussian kernel, evaluated through kernel values only.
double kfsd(const FunctionalSample& sample,
            const Eigen::Ref<const Eigen::VectorXd>& query,
            const DepthParams& params,
            const PairwiseGeometry* geometry = nullptr);

// Leave-in depths of every sample curve with respect to the full sample;
// geometry and bandwidth are computed once and shared across queries.
DepthResult depth_all(const FunctionalSample& sample, const DepthParams& params);

std::array<DepthParams, 5> default_method_params(
    double bandwidth_quantile = 0.25,
    std::optional<double> bandwidth_override = std::nullopt);

// All five leave-in depth vectors, sharing one PairwiseGeometry.
// params[i] configures kAllMethods[i].
std::array<DepthResult, 5> depth_all_methods(
    const FunctionalSample& sample,
    const std::array<DepthParams, 5>& params = default_method_params());

}  // namespace fdepth

#endif  // FDEPTH_DEPTHS_HPP
