#ifndef FDEPTH_EVALUATE_HPP
#define FDEPTH_EVALUATE_HPP

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "fdepth/depths.hpp"
#include "fdepth/sample.hpp"

namespace fdepth {

// Ascending ranks with ties replaced by the mean of the tied positions;
// the largest value gets rank n. sum(ranks) == n(n+1)/2 exactly.
Eigen::VectorXd ranks(const Eigen::Ref<const Eigen::VectorXd>& values);

// Spearman's rank correlation: Pearson correlation of the average ranks
// (tie-safe; the 6*sum(d^2) shortcut is wrong under ties). Throws
// UndefinedCorrelationError when either input is constant.
double spearman(const Eigen::Ref<const Eigen::VectorXd>& a,
                const Eigen::Ref<const Eigen::VectorXd>& b);

// Symmetric unit-diagonal matrix of Spearman correlations between the five
// leave-in depth vectors, in kAllMethods order (FSD, FMD, MBD, KFSD, HMD).
Eigen::MatrixXd corr_matrix(
    const FunctionalSample& sample,
    const std::array<DepthParams, 5>& params = default_method_params());

struct SummaryStats {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

struct StudyConfig {
  std::vector<int> models = {1, 2, 3, 4};
  int reps = 100;
  int n = 100;
  std::uint64_t seed = 0;
  double bandwidth_quantile = 0.25;
  std::optional<double> bandwidth_override;
};

struct StudyResult {
  int model_id = 0;
  Eigen::MatrixXd coefficients;   // completed reps x 5, kAllMethods order
  std::vector<int> rep_indices;   // originating replication index per row
  std::array<SummaryStats, 5> summary;
  int failed_reps = 0;
};

// Benchmark study: per model and replication, generate a sample, compute all
// five leave-in depth vectors (bandwidth re-selected each replication), and
// record the Spearman correlation between each depth vector and the
// theoretical density of the dominant score. Replication r of model m uses
// the substream (seed, {m, r}), so runs over different model subsets or rep
// counts never shift each other's draws. Failed replications are skipped and
// counted, never silently dropped.
std::vector<StudyResult> run_study(const StudyConfig& config);

}  // namespace fdepth

#endif  // FDEPTH_EVALUATE_HPP
