#include "fdepth/simulate.hpp"

#include <cmath>
#include <string>

#include "fdepth/errors.hpp"
#include "fdepth/rng.hpp"

namespace fdepth {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kCurveStreamTag = 0x43555256u;  // "CURV"

double normal_pdf(double x, double mean, double variance) {
  const double d = x - mean;
  return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * kPi * variance);
}

double student_t5_pdf(double x) {
  // Gamma(3) / (sqrt(5 pi) Gamma(5/2)) (1 + x^2/5)^-3 = 8 / (3 pi sqrt(5)) ...
  static const double norm = 8.0 / (3.0 * kPi * std::sqrt(5.0));
  const double base = 1.0 + x * x / 5.0;
  return norm / (base * base * base);
}

double chi_squared5_pdf(double x) {
  static const double norm =
      std::pow(2.0, 2.5) * std::tgamma(2.5);  // 2^(5/2) Gamma(5/2)
  return std::pow(x, 1.5) * std::exp(-x / 2.0) / norm;
}

double mixture_offset(double lambda1) { return std::sqrt(lambda1 - 0.1); }

double density_impl(int model_id, double xi, double lambda1) {
  switch (model_id) {
    case 1:
      return normal_pdf(xi, 0.0, lambda1);
    case 2: {
      const double c = std::sqrt(lambda1 * 3.0 / 5.0);
      return student_t5_pdf(xi / c) / c;
    }
    case 3: {
      const double c = std::sqrt(lambda1 / 10.0);
      return xi > 0.0 ? chi_squared5_pdf(xi / c) / c : 0.0;
    }
    case 4: {
      const double m = mixture_offset(lambda1);
      return 0.5 * normal_pdf(xi, -m, 0.1) + 0.5 * normal_pdf(xi, m, 0.1);
    }
    default:
      throw InvalidInputError("unknown model id " + std::to_string(model_id));
  }
}

void validate(const ModelSpec& spec) {
  if (spec.model_id < 1 || spec.model_id > 4) {
    throw InvalidInputError("model id must be 1..4, got " +
                            std::to_string(spec.model_id));
  }
  if (spec.n < 2) {
    throw InvalidInputError("simulated sample size must be at least 2");
  }
  if (!(spec.lambda1 > spec.lambda2 && spec.lambda2 > 0.0)) {
    throw InvalidInputError("score variances must satisfy lambda1 > lambda2 > 0");
  }
  if (!(spec.sigma2 > 0.0)) {
    throw InvalidInputError("noise variance must be positive");
  }
  if (spec.model_id == 4 && !(spec.lambda1 > 0.1)) {
    throw InvalidInputError(
        "model 4 needs lambda1 > 1/10 for a real mixture offset");
  }
}

double draw_xi1(const ModelSpec& spec, rng::Stream& stream) {
  switch (spec.model_id) {
    case 1:
      return stream.normal(0.0, std::sqrt(spec.lambda1));
    case 2:
      return std::sqrt(spec.lambda1 * 3.0 / 5.0) * stream.student_t(5);
    case 3:
      return std::sqrt(spec.lambda1 / 10.0) * stream.chi_squared(5);
    default: {
      const double m = mixture_offset(spec.lambda1);
      const double center = stream.uniform01() < 0.5 ? -m : m;
      return stream.normal(center, std::sqrt(0.1));
    }
  }
}

}  // namespace

Grid default_simulation_grid() {
  Eigen::VectorXd points(50);
  for (int s = 0; s < 50; ++s) {
    points(s) = (static_cast<double>(s) + 0.5) / 50.0;
  }
  return make_grid(points);
}

SimulatedSample generate(const ModelSpec& spec, std::uint64_t seed) {
  validate(spec);
  const Eigen::VectorXd& t = spec.grid.points;
  const Eigen::Index point_count = t.size();

  Eigen::VectorXd trend(point_count);
  Eigen::VectorXd basis2(point_count);
  const double sqrt7 = std::sqrt(7.0);
  for (Eigen::Index s = 0; s < point_count; ++s) {
    trend(s) = 2.0 * t(s);
    basis2(s) = sqrt7 * (20.0 * t(s) * t(s) * t(s) - 30.0 * t(s) * t(s) +
                         12.0 * t(s));
  }

  CurveMatrix values(spec.n, point_count);
  Eigen::VectorXd xi1(spec.n);
  Eigen::VectorXd benchmark(spec.n);
  const double xi2_sd = std::sqrt(spec.lambda2);
  const double noise_sd = std::sqrt(spec.sigma2);
  for (int k = 0; k < spec.n; ++k) {
    rng::Stream stream(rng::derive_stream(
        seed, {kCurveStreamTag, static_cast<std::uint64_t>(k)}));
    xi1(k) = draw_xi1(spec, stream);
    const double xi2 = stream.normal(0.0, xi2_sd);
    for (Eigen::Index s = 0; s < point_count; ++s) {
      values(k, s) =
          trend(s) + xi1(k) + xi2 * basis2(s) + stream.normal(0.0, noise_sd);
    }
    benchmark(k) = density_impl(spec.model_id, xi1(k), spec.lambda1);
  }

  return SimulatedSample{make_sample(std::move(values), spec.grid),
                         std::move(xi1), std::move(benchmark)};
}

double benchmark_density(int model_id, double xi) {
  return density_impl(model_id, xi, 1.98);
}

}  // namespace fdepth
