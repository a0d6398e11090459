#ifndef FDEPTH_SIMULATE_HPP
#define FDEPTH_SIMULATE_HPP

#include <cstdint>

#include "fdepth/sample.hpp"

namespace fdepth {

// Equispaced midpoint grid t = (s - 0.5)/50, s = 1..50.
Grid default_simulation_grid();

// Truncated Karhunen-Loeve generator
//   x(t) = 2t + xi1 + xi2 * sqrt(7)(20t^3 - 30t^2 + 12t) + eps(t)
// with xi2 ~ N(0, lambda2) and white noise eps(t) ~ N(0, sigma2).
// model_id selects the law of the dominant score xi1:
//   1: N(0, lambda1)                    (no complex features)
//   2: sqrt(lambda1 * 3/5) * t_5        (heavy tails / outliers)
//   3: sqrt(lambda1 / 10) * chi^2_5     (asymmetry)
//   4: N(+-sqrt(lambda1 - 1/10), 1/10)  (balanced mixture: bimodality)
struct ModelSpec {
  int model_id = 1;
  int n = 100;
  Grid grid = default_simulation_grid();
  double lambda1 = 1.98;
  double lambda2 = 0.02;
  double sigma2 = 0.01;
};

struct SimulatedSample {
  FunctionalSample sample;
  Eigen::VectorXd xi1;        // realized dominant scores
  Eigen::VectorXd benchmark;  // theoretical density of xi1 at each realization
};

// Deterministic for a fixed (spec, seed): curve k is drawn from its own
// substream keyed on (seed, k), so results do not depend on evaluation order.
SimulatedSample generate(const ModelSpec& spec, std::uint64_t seed);

// Theoretical density of xi1 under the given model, with the default
// constants (lambda1 = 1.98). Model 3 has support (0, inf).
double benchmark_density(int model_id, double xi);

}  // namespace fdepth

#endif  // FDEPTH_SIMULATE_HPP
