#include "fdepth/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdepth/csv.hpp"
#include "fdepth/depths.hpp"
#include "fdepth/errors.hpp"
#include "fdepth/evaluate.hpp"
#include "fdepth/simulate.hpp"
#include "fdepth/svg.hpp"

namespace fdepth::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct Options {
  std::string input;
  std::string output;
  std::string method = "all";
  double bandwidth_quantile = 0.25;
  std::optional<double> bandwidth_override;
  bool with_ranks = false;
  int model = 1;
  std::vector<int> models = {1, 2, 3, 4};
  int n = 100;
  int reps = 100;
  std::uint64_t seed = 0;
  std::string svg_dir;
};

void check_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidInputError("--bandwidth-quantile must lie strictly in (0,1)");
  }
}

void check_bandwidth(const std::optional<double>& h) {
  if (h && !(*h > 0.0)) {
    throw InvalidInputError("--bandwidth must be positive");
  }
}

// Fail on unwritable destinations before any computation starts.
void ensure_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw InvalidInputError("cannot create output directory '" + dir.string() +
                            "'");
  }
}

void ensure_parent_dir(const fs::path& file) {
  if (file.has_parent_path()) {
    ensure_output_dir(file.parent_path());
  }
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

void cmd_depth(const Options& opt) {
  check_quantile(opt.bandwidth_quantile);
  check_bandwidth(opt.bandwidth_override);
  ensure_parent_dir(opt.output);
  const FunctionalSample sample = read_sample_csv(opt.input);

  std::vector<DepthResult> results;
  if (opt.method == "all") {
    const auto all = depth_all_methods(
        sample,
        default_method_params(opt.bandwidth_quantile, opt.bandwidth_override));
    results.assign(all.begin(), all.end());
  } else {
    const auto method = parse_method(opt.method);
    if (!method) {
      throw InvalidInputError("unknown method '" + opt.method + "'");
    }
    DepthParams params;
    params.method = *method;
    params.bandwidth_quantile = opt.bandwidth_quantile;
    params.bandwidth_override = opt.bandwidth_override;
    results.push_back(depth_all(sample, params));
  }

  for (const DepthResult& r : results) {
    if (r.bandwidth_used) {
      std::fprintf(stderr, "%s bandwidth: %s\n",
                   std::string(method_name(r.method)).c_str(),
                   format_double(*r.bandwidth_used).c_str());
    }
  }

  const bool single = results.size() == 1;
  std::ostringstream out;
  out << "curve_index";
  for (const DepthResult& r : results) {
    out << ',' << (single ? "depth" : method_name(r.method));
  }
  std::vector<Eigen::VectorXd> rank_columns;
  if (opt.with_ranks) {
    for (const DepthResult& r : results) {
      rank_columns.push_back(ranks(r.values));
      if (single) {
        out << ",rank";
      } else {
        out << ',' << method_name(r.method) << "_rank";
      }
    }
  }
  out << '\n';
  for (Eigen::Index i = 0; i < sample.curve_count(); ++i) {
    out << i;
    for (const DepthResult& r : results) {
      out << ',' << format_double(r.values(i));
    }
    for (const Eigen::VectorXd& rk : rank_columns) {
      out << ',' << format_double(rk(i));
    }
    out << '\n';
  }
  atomic_write(opt.output, out.str());
}

fs::path sidecar_path(const fs::path& output) {
  fs::path sidecar = output;
  if (sidecar.extension() == ".csv") {
    sidecar.replace_extension();
    sidecar += "_xi1.csv";
  } else {
    sidecar += "_xi1.csv";
  }
  return sidecar;
}

void cmd_simulate(const Options& opt) {
  ensure_parent_dir(opt.output);
  ModelSpec spec;
  spec.model_id = opt.model;
  spec.n = opt.n;
  const SimulatedSample sim = generate(spec, opt.seed);
  write_sample_csv(opt.output, sim.sample);

  std::ostringstream out;
  out << "curve_index,xi1,f_xi1\n";
  for (Eigen::Index i = 0; i < sim.xi1.size(); ++i) {
    out << i << ',' << format_double(sim.xi1(i)) << ','
        << format_double(sim.benchmark(i)) << '\n';
  }
  atomic_write(sidecar_path(opt.output), out.str());
}

void cmd_study(const Options& opt) {
  check_quantile(opt.bandwidth_quantile);
  check_bandwidth(opt.bandwidth_override);
  ensure_output_dir(opt.output);
  if (!opt.svg_dir.empty()) {
    ensure_output_dir(opt.svg_dir);
  }
  StudyConfig config;
  config.models = opt.models;
  config.reps = opt.reps;
  config.n = opt.n;
  config.seed = opt.seed;
  config.bandwidth_quantile = opt.bandwidth_quantile;
  config.bandwidth_override = opt.bandwidth_override;
  const std::vector<StudyResult> results = run_study(config);

  std::ostringstream coeffs;
  coeffs << "model,rep,fsd,fmd,mbd,kfsd,hmd\n";
  for (const StudyResult& r : results) {
    for (Eigen::Index row = 0; row < r.coefficients.rows(); ++row) {
      coeffs << r.model_id << ','
             << r.rep_indices[static_cast<std::size_t>(row)] + 1;
      for (int m = 0; m < 5; ++m) {
        coeffs << ',' << format_double(r.coefficients(row, m));
      }
      coeffs << '\n';
    }
  }
  const fs::path out_dir(opt.output);
  atomic_write(out_dir / "study_coefficients.csv", coeffs.str());

  std::ostringstream summary;
  summary << "model,method,min,q1,median,q3,max\n";
  for (const StudyResult& r : results) {
    if (r.coefficients.rows() == 0) {
      continue;
    }
    for (std::size_t m = 0; m < kAllMethods.size(); ++m) {
      const SummaryStats& s = r.summary[m];
      summary << r.model_id << ',' << method_name(kAllMethods[m]) << ','
              << format_double(s.min) << ',' << format_double(s.q1) << ','
              << format_double(s.median) << ',' << format_double(s.q3) << ','
              << format_double(s.max) << '\n';
    }
  }
  atomic_write(out_dir / "study_summary.csv", summary.str());

  if (!opt.svg_dir.empty()) {
    std::vector<std::string> labels;
    for (Method m : kAllMethods) {
      labels.push_back(upper(method_name(m)));
    }
    for (const StudyResult& r : results) {
      if (r.coefficients.rows() == 0) {
        continue;
      }
      const std::string svg = boxplot_svg(
          "Model " + std::to_string(r.model_id) +
              ": rank correlation between depth and benchmark",
          labels, r.summary);
      atomic_write(fs::path(opt.svg_dir) /
                       ("model" + std::to_string(r.model_id) + "_boxplot.svg"),
                   svg);
    }
  }

  for (const StudyResult& r : results) {
    if (r.failed_reps > 0) {
      std::fprintf(stderr, "warning: model %d: %d of %d replications failed\n",
                   r.model_id, r.failed_reps, opt.reps);
    }
  }
  for (const StudyResult& r : results) {
    if (r.coefficients.rows() == 0) {
      throw DegenerateSampleError("model " + std::to_string(r.model_id) +
                                  ": all replications failed");
    }
  }
}

void cmd_corr(const Options& opt) {
  check_quantile(opt.bandwidth_quantile);
  check_bandwidth(opt.bandwidth_override);
  ensure_parent_dir(opt.output);
  const FunctionalSample sample = read_sample_csv(opt.input);
  const Eigen::MatrixXd corr = corr_matrix(
      sample,
      default_method_params(opt.bandwidth_quantile, opt.bandwidth_override));

  std::ostringstream out;
  out << "method";
  for (Method m : kAllMethods) {
    out << ',' << method_name(m);
  }
  out << '\n';
  for (int a = 0; a < 5; ++a) {
    out << method_name(kAllMethods[static_cast<std::size_t>(a)]);
    for (int b = 0; b < 5; ++b) {
      out << ',' << format_double(corr(a, b));
    }
    out << '\n';
  }
  atomic_write(opt.output, out.str());
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Functional data depth toolkit: global (FSD, FMD, MBD) and "
               "local (KFSD, HMD) depths on discretized curves"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* depth = app.add_subcommand(
      "depth", "Leave-in depth of every curve of a CSV sample");
  depth->add_option("--input", opt.input, "sample CSV (grid row + curve rows)")
      ->required();
  depth->add_option("--output", opt.output, "output CSV path")->required();
  depth
      ->add_option("--method", opt.method,
                   "depth to compute: fsd|fmd|mbd|kfsd|hmd|all")
      ->check(CLI::IsMember({"fsd", "fmd", "mbd", "kfsd", "hmd", "all"}));
  depth->add_option("--bandwidth-quantile", opt.bandwidth_quantile,
                    "pairwise-distance quantile for the kernel bandwidth");
  depth->add_option("--bandwidth", opt.bandwidth_override,
                    "explicit kernel bandwidth (overrides the quantile rule)");
  depth->add_flag("--ranks", opt.with_ranks,
                  "append depth-based ranks (rank n = deepest)");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Draw one sample from a benchmark model (1-4)");
  simulate->add_option("--model", opt.model, "model id")
      ->required()
      ->check(CLI::Range(1, 4));
  simulate->add_option("--n", opt.n, "number of curves")
      ->check(CLI::Range(2, 1000000));
  simulate->add_option("--seed", opt.seed, "random seed");
  simulate->add_option("--output", opt.output, "sample CSV path")->required();

  CLI::App* study = app.add_subcommand(
      "study", "Replicated depth-vs-benchmark rank correlation study");
  study->add_option("--models", opt.models, "model ids to run")
      ->delimiter(',')
      ->check(CLI::Range(1, 4));
  study->add_option("--reps", opt.reps, "replications per model")
      ->check(CLI::Range(1, 1000000));
  study->add_option("--n", opt.n, "curves per replication")
      ->check(CLI::Range(2, 1000000));
  study->add_option("--seed", opt.seed, "random seed");
  study->add_option("--bandwidth-quantile", opt.bandwidth_quantile,
                    "pairwise-distance quantile for the kernel bandwidth");
  study->add_option("--bandwidth", opt.bandwidth_override,
                    "explicit kernel bandwidth (overrides the quantile rule)");
  study->add_option("--output", opt.output, "output directory")->required();
  study->add_option("--svg", opt.svg_dir, "also write one boxplot SVG per model");

  CLI::App* corr = app.add_subcommand(
      "corr", "Spearman correlation matrix of the five depths on a sample");
  corr->add_option("--input", opt.input, "sample CSV")->required();
  corr->add_option("--output", opt.output, "matrix CSV path")->required();
  corr->add_option("--bandwidth-quantile", opt.bandwidth_quantile,
                   "pairwise-distance quantile for the kernel bandwidth");
  corr->add_option("--bandwidth", opt.bandwidth_override,
                   "explicit kernel bandwidth (overrides the quantile rule)");

  try {
    app.parse(argc, argv);
    if (depth->parsed()) {
      cmd_depth(opt);
    } else if (simulate->parsed()) {
      cmd_simulate(opt);
    } else if (study->parsed()) {
      cmd_study(opt);
    } else if (corr->parsed()) {
      cmd_corr(opt);
    }
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const InvalidInputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const DegenerateSampleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace fdepth::cli
