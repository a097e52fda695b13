/*
 * Copyright 2026 The isoexplain Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isoexplain/csv.h"
#include "isoexplain/errors.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"
#include "isoexplain/heatmap.h"
#include "isoexplain/model_io.h"
#include "isoexplain/random.h"
#include "isoexplain/synthbench.h"
#include "isoexplain/timing.h"

namespace isoexplain::cli {
namespace {

struct CommonOptions {
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ForestFlags {
  int trees = 100;
  int psi = 256;
};

void AddForestFlags(CLI::App* app, ForestFlags& flags) {
  app->add_option("--trees", flags.trees, "Number of isolation trees")
      ->capture_default_str();
  app->add_option("--psi", flags.psi, "Subsample size per tree")
      ->capture_default_str();
}

ForestOptions MakeForestOptions(const ForestFlags& flags,
                                const CommonOptions& common) {
  ForestOptions options;
  options.num_trees = flags.trees;
  options.subsample_size = flags.psi;
  options.seed = common.seed;
  options.threads = common.threads;
  return options;
}

std::vector<Method> ParseMethods(const std::vector<std::string>& names) {
  std::vector<Method> methods;
  for (const std::string& name : names) methods.push_back(ParseMethod(name));
  if (methods.empty()) throw ConfigError("at least one method is required");
  return methods;
}

void EnsureDirectory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "': " + ec.message());
}

std::string JoinPath(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void WarnExcluded(const SweepTable& table, std::ostream& err) {
  for (const SweepPoint& point : table.points) {
    for (const GroundTruthResult& r : point.results) {
      if (r.excluded > 0) {
        err << "warning: " << MethodName(r.method) << " at " << AxisName(table.axis)
            << "=" << FormatNumber(point.axis_value) << ": excluded " << r.excluded
            << " picks with an all-zero explanation change\n";
      }
    }
  }
}

void WriteSweep(const SweepTable& table, const std::string& out_dir,
                std::ostream& out, std::ostream& err) {
  EnsureDirectory(out_dir);
  WriteFileAtomic(JoinPath(out_dir, "results.csv"), FormatResultsCsv(table));
  WriteFileAtomic(JoinPath(out_dir, "aggregate.csv"), FormatAggregateCsv(table));
  WarnExcluded(table, err);
  out << "wrote " << JoinPath(out_dir, "results.csv") << " and "
      << JoinPath(out_dir, "aggregate.csv") << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Isolation Forest training, scoring and per-attribute anomaly explanations",
               "isoexplain"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file with one section per subcommand; flags override it");

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_option("--threads", common.threads, "Worker threads (0 = all cores)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };

  // train
  auto* train = app.add_subcommand("train", "Fit a forest on a CSV file and save it");
  std::string train_data, train_model;
  ForestFlags train_forest;
  train->add_option("--data", train_data, "Input CSV")->required();
  train->add_option("--model", train_model, "Output model file")->required();
  AddForestFlags(train, train_forest);
  add_common(train);

  // score
  auto* score = app.add_subcommand("score", "Write anomaly scores for every CSV row");
  std::string score_model, score_data, score_out;
  score->add_option("--model", score_model, "Model file")->required();
  score->add_option("--data", score_data, "Input CSV")->required();
  score->add_option("--out", score_out, "Output CSV")->required();
  add_common(score);

  // explain
  auto* explain = app.add_subcommand("explain", "Write explanation vectors for every CSV row");
  std::string explain_model, explain_data, explain_out, explain_method = "ours";
  bool explain_normalize = false;
  explain->add_option("--model", explain_model, "Model file")->required();
  explain->add_option("--data", explain_data, "Input CSV")->required();
  explain->add_option("--out", explain_out, "Output CSV")->required();
  explain->add_option("--method", explain_method, "ours | diffi_local | random")
      ->capture_default_str();
  explain->add_flag("--normalize", explain_normalize,
                    "Divide each vector by its L1 norm");
  add_common(explain);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a ground-truth or heatmap study");
  experiment->require_subcommand(1);

  SweepConfig synth_config;
  std::string synth_axis = "m_fraction";
  std::vector<double> synth_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<std::string> synth_methods = {"ours", "diffi_local", "random"};
  std::string synth_out = "synth_results";
  ForestFlags synth_forest;
  auto* synth = experiment->add_subcommand("synth", "Ground-truth sweep on synthetic clusters");
  synth->add_option("--axis", synth_axis, "size | dims | m_fraction")->capture_default_str();
  synth->add_option("--grid", synth_grid, "Axis values")->delimiter(',')->capture_default_str();
  synth->add_option("--n", synth_config.n, "Dataset size")->capture_default_str();
  synth->add_option("--d", synth_config.d, "Dimensionality")->capture_default_str();
  synth->add_option("--clusters", synth_config.n_clusters, "Gaussian clusters")
      ->capture_default_str();
  synth->add_option("--m", synth_config.anomalization.m_fraction,
                    "Fraction of anomalized attributes (size and dims sweeps)")
      ->capture_default_str();
  synth->add_option("--examples", synth_config.anomalization.n_examples,
                    "Examples drawn per grid point")->capture_default_str();
  synth->add_option("--multiplier", synth_config.anomalization.multiplier,
                    "Anomalized value = multiplier * column max")->capture_default_str();
  synth->add_option("--methods", synth_methods, "Methods")->delimiter(',')->capture_default_str();
  synth->add_option("--out-dir", synth_out, "Output directory")->capture_default_str();
  AddForestFlags(synth, synth_forest);
  add_common(synth);

  SweepConfig real_config;
  std::string real_data, real_id, real_out = "real_results";
  std::vector<double> real_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<std::string> real_methods = {"ours", "diffi_local", "random"};
  ForestFlags real_forest;
  auto* real = experiment->add_subcommand("real", "Ground-truth m sweep on a CSV dataset");
  real->add_option("--data", real_data, "Input CSV of normal examples")->required();
  real->add_option("--dataset-id", real_id,
                   "glass, cardio, ionosphere, lympho, musk or letter; checks the shape");
  real->add_option("--grid", real_grid, "m_fraction values")->delimiter(',')->capture_default_str();
  real->add_option("--examples", real_config.anomalization.n_examples, "Examples per m")
      ->capture_default_str();
  real->add_option("--multiplier", real_config.anomalization.multiplier,
                   "Anomalized value = multiplier * column max")->capture_default_str();
  real->add_option("--methods", real_methods, "Methods")->delimiter(',')->capture_default_str();
  real->add_option("--out-dir", real_out, "Output directory")->capture_default_str();
  AddForestFlags(real, real_forest);
  add_common(real);

  HeatmapConfig heat_config;
  std::vector<std::string> heat_settings = {"IB_A", "OOB_A", "IB_NoA", "OOB_NoA"};
  std::vector<std::string> heat_methods = {"ours", "diffi_local"};
  std::string heat_out = "heatmap.csv";
  ForestFlags heat_forest;
  auto* heat = experiment->add_subcommand("heatmap", "Two-cluster attribute contribution grids");
  heat->add_option("--resolution", heat_config.resolution, "Grid points per axis")
      ->capture_default_str();
  heat->add_option("--lower", heat_config.lower, "Lower grid bound")->capture_default_str();
  heat->add_option("--upper", heat_config.upper, "Upper grid bound")->capture_default_str();
  heat->add_option("--settings", heat_settings, "IB_A, OOB_A, IB_NoA, OOB_NoA")
      ->delimiter(',')->capture_default_str();
  heat->add_option("--methods", heat_methods, "Methods")->delimiter(',')->capture_default_str();
  heat->add_option("--out", heat_out, "Output CSV")->capture_default_str();
  AddForestFlags(heat, heat_forest);
  add_common(heat);

  // bench
  auto* bench = app.add_subcommand("bench", "Time per-example explanation inference");
  std::string bench_data, bench_id = "synthetic", bench_out = "timing.csv";
  std::vector<double> bench_grid = {0.1, 1.0};
  std::vector<std::string> bench_methods = {"ours", "diffi_local"};
  BenchOptions bench_options;
  ForestFlags bench_forest;
  std::size_t bench_n = 1000, bench_d = 6;
  bench->add_option("--data", bench_data, "Input CSV (default: synthetic clusters)");
  bench->add_option("--dataset-id", bench_id, "Label for the timing records")
      ->capture_default_str();
  bench->add_option("--n", bench_n, "Synthetic dataset size")->capture_default_str();
  bench->add_option("--d", bench_d, "Synthetic dimensionality")->capture_default_str();
  bench->add_option("--m-grid", bench_grid, "m_fraction values")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--methods", bench_methods, "Methods")->delimiter(',')->capture_default_str();
  bench->add_option("--repeats", bench_options.repeats, "Timed passes (>= 3)")
      ->capture_default_str();
  bench->add_option("--examples", bench_options.n_examples, "Picks per pass")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Output CSV")->capture_default_str();
  AddForestFlags(bench, bench_forest);
  add_common(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (args.empty()) {
      err << app.help();
    } else {
      err << "isoexplain: " << e.what() << "\n"
          << "Run with --help for usage.\n";
    }
    return kExitUsage;
  }

  try {
    if (*train) {
      const Dataset data = LoadCsv(train_data);
      const IsolationForest forest = FitForest(data, MakeForestOptions(train_forest, common));
      SaveModel(train_model, forest);
      out << "trained " << forest.num_trees() << " trees on " << data.rows() << "x"
          << data.cols() << " -> " << train_model << "\n";
    } else if (*score) {
      const IsolationForest forest = LoadModel(score_model);
      const Dataset data = LoadCsv(score_data);
      std::string csv = "id,anomaly_score,normalized_score\n";
      for (std::size_t i = 0; i < data.rows(); ++i) {
        csv += std::to_string(i) + ',' + FormatNumber(AnomalyScore(forest, data.row(i))) +
               ',' + FormatNumber(NormalizedAnomalyScore(forest, data.row(i))) + '\n';
      }
      WriteFileAtomic(score_out, csv);
    } else if (*explain) {
      const IsolationForest forest = LoadModel(explain_model);
      const Dataset data = LoadCsv(explain_data);
      const Method method = ParseMethod(explain_method);
      if (data.cols() != forest.num_features()) {
        throw InputError("data has " + std::to_string(data.cols()) +
                         " columns, model expects " + std::to_string(forest.num_features()));
      }
      std::string csv = "id,method";
      for (const std::string& name : data.column_names()) csv += ',' + name;
      csv += ",anomaly_score\n";
      for (std::size_t i = 0; i < data.rows(); ++i) {
        Rng rng = MakeRng(common.seed, i);
        ExplanationVector w = Explain(method, forest, data.row(i), rng);
        if (explain_normalize) {
          try {
            w = Normalize(w);
          } catch (const NormalizationError&) {
            // All-zero vectors are written as they are.
          }
        }
        csv += std::to_string(i) + ',' + std::string(MethodName(method));
        for (const double v : w.weights) csv += ',' + FormatNumber(v);
        csv += ',' + FormatNumber(AnomalyScore(forest, data.row(i))) + '\n';
      }
      WriteFileAtomic(explain_out, csv);
    } else if (*synth) {
      synth_config.forest = MakeForestOptions(synth_forest, common);
      synth_config.anomalization.threads = common.threads;
      synth_config.methods = ParseMethods(synth_methods);
      synth_config.seed = common.seed;
      const SweepTable table = Sweep(ParseAxis(synth_axis), synth_grid, synth_config);
      WriteSweep(table, synth_out, out, err);
    } else if (*real) {
      const Dataset data = LoadCsv(real_data);
      if (!real_id.empty()) {
        if (!FindKnownShape(real_id)) {
          err << "warning: unknown dataset id '" << real_id << "'\n";
        } else if (const auto warning = CheckKnownShape(real_id, data)) {
          err << "warning: " << *warning << "\n";
        }
      }
      real_config.forest = MakeForestOptions(real_forest, common);
      real_config.anomalization.threads = common.threads;
      real_config.methods = ParseMethods(real_methods);
      real_config.seed = common.seed;
      WriteSweep(SweepMFraction(data, real_grid, real_config), real_out, out, err);
    } else if (*heat) {
      heat_config.forest = MakeForestOptions(heat_forest, common);
      heat_config.methods = ParseMethods(heat_methods);
      heat_config.seed = common.seed;
      heat_config.threads = common.threads;
      std::string csv = "x1,x2,method,setting,contribution_x1\n";
      for (const std::string& name : heat_settings) {
        heat_config.setting = ParseSetting(name);
        csv += FormatHeatmapCsv(RenderGrid(heat_config), heat_config.setting,
                                /*header=*/false);
      }
      WriteFileAtomic(heat_out, csv);
      out << "wrote " << heat_out << "\n";
    } else if (*bench) {
      const Dataset data = bench_data.empty()
                               ? GenerateClusters(bench_n, bench_d, 2, common.seed)
                               : LoadCsv(bench_data);
      bench_options.seed = common.seed;
      bench_options.dataset_id = bench_id;
      const IsolationForest forest = FitForest(data, MakeForestOptions(bench_forest, common));
      const std::vector<Method> methods = ParseMethods(bench_methods);
      const auto records = BenchExplain(forest, data, methods, bench_grid, bench_options);
      WriteFileAtomic(bench_out, FormatTimingCsv(records));
      out << "wrote " << bench_out << "\n";
    }
  } catch (const ConfigError& e) {
    err << "isoexplain: configuration error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "isoexplain: error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace isoexplain::cli
