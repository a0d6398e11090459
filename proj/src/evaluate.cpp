#include "fdepth/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fdepth/errors.hpp"
#include "fdepth/rng.hpp"
#include "fdepth/simulate.hpp"
#include "fdepth/stats.hpp"

namespace fdepth {

Eigen::VectorXd ranks(const Eigen::Ref<const Eigen::VectorXd>& values) {
  const Eigen::Index n = values.size();
  if (n == 0) {
    throw InvalidInputError("ranks of an empty sequence");
  }
  if (!values.allFinite()) {
    throw InvalidInputError("ranks require finite values");
  }
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values(a) < values(b);
  });
  Eigen::VectorXd out(n);
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values(idx[j + 1]) == values(idx[i])) {
      ++j;
    }
    // mean of the tied 1-based positions i+1 .. j+1
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      out(idx[k]) = rank;
    }
    i = j + 1;
  }
  return out;
}

double spearman(const Eigen::Ref<const Eigen::VectorXd>& a,
                const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("spearman inputs differ in length");
  }
  if (a.size() < 2) {
    throw InvalidInputError("spearman needs at least 2 observations");
  }
  const Eigen::VectorXd ra = ranks(a);
  const Eigen::VectorXd rb = ranks(b);
  const double mean_a = ra.mean();
  const double mean_b = rb.mean();
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (Eigen::Index i = 0; i < ra.size(); ++i) {
    const double da = ra(i) - mean_a;
    const double db = rb(i) - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw UndefinedCorrelationError(
        "spearman undefined for a constant sequence");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

Eigen::MatrixXd corr_matrix(const FunctionalSample& sample,
                            const std::array<DepthParams, 5>& params) {
  if (sample.curve_count() < 3) {
    throw InsufficientSampleError(
        "depth correlations need at least 3 curves, got " +
        std::to_string(sample.curve_count()));
  }
  const std::array<DepthResult, 5> depths = depth_all_methods(sample, params);
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(5, 5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      corr(a, b) = corr(b, a) = spearman(depths[a].values, depths[b].values);
    }
  }
  return corr;
}

namespace {

constexpr std::uint64_t kStudyStreamTag = 0x53545544u;  // "STUD"

SummaryStats five_number_summary(std::vector<double> column) {
  std::sort(column.begin(), column.end());
  SummaryStats s;
  s.min = column.front();
  s.q1 = quantile7(column, 0.25);
  s.median = quantile7(column, 0.5);
  s.q3 = quantile7(column, 0.75);
  s.max = column.back();
  return s;
}

}  // namespace

std::vector<StudyResult> run_study(const StudyConfig& config) {
  if (config.reps < 1) {
    throw InvalidInputError("study needs at least 1 replication");
  }
  if (config.models.empty()) {
    throw InvalidInputError("study needs at least one model");
  }
  const std::array<DepthParams, 5> params = default_method_params(
      config.bandwidth_quantile, config.bandwidth_override);

  std::vector<StudyResult> results;
  results.reserve(config.models.size());
  for (int model : config.models) {
    ModelSpec spec;
    spec.model_id = model;
    spec.n = config.n;

    std::vector<std::array<double, 5>> rows;
    std::vector<int> rep_indices;
    int failed = 0;
    for (int rep = 0; rep < config.reps; ++rep) {
      const std::uint64_t rep_seed = rng::derive_stream(
          config.seed, {kStudyStreamTag, static_cast<std::uint64_t>(model),
                        static_cast<std::uint64_t>(rep)});
      const SimulatedSample sim = generate(spec, rep_seed);
      try {
        const std::array<DepthResult, 5> depths =
            depth_all_methods(sim.sample, params);
        std::array<double, 5> row;
        for (std::size_t m = 0; m < depths.size(); ++m) {
          row[m] = spearman(depths[m].values, sim.benchmark);
        }
        rows.push_back(row);
        rep_indices.push_back(rep);
      } catch (const DegenerateSampleError&) {
        ++failed;
      }
    }

    StudyResult result;
    result.model_id = model;
    result.failed_reps = failed;
    result.rep_indices = std::move(rep_indices);
    result.coefficients.resize(static_cast<Eigen::Index>(rows.size()), 5);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (int m = 0; m < 5; ++m) {
        result.coefficients(static_cast<Eigen::Index>(r), m) = rows[r][m];
      }
    }
    if (!rows.empty()) {
      for (int m = 0; m < 5; ++m) {
        std::vector<double> column(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          column[r] = rows[r][m];
        }
        result.summary[static_cast<std::size_t>(m)] = five_number_summary(column);
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace fdepth
