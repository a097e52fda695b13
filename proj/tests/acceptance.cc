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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "isoexplain/csv.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"
#include "isoexplain/heatmap.h"
#include "isoexplain/synthbench.h"
#include "isoexplain/timing.h"
#include "isoexplain/tree.h"
#include "test_util.h"

namespace isoexplain {
namespace {

int failures = 0;

void Report(bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

double Spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

void SplitScoreEndpoints() {
  const double balanced = SplitScore(256, 128);
  const double worst = SplitScore(256, 255);
  const double best = SplitScore(256, 1);
  Report(balanced == 0.0 && std::abs(worst + 0.9944) <= 0.005 && best == 7.0,
         "split_score_endpoints",
         Fmt("s(256,128)=%.17g s(256,255)=%.10f s(256,1)=%.17g", balanced, worst, best));
}

void Telescoping() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int checked = 0;
  for (int f = 0; f < 200; ++f) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 600)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const int trees = std::uniform_int_distribution<int>(1, 20)(rng);
    const int psi = std::uniform_int_distribution<int>(2, 256)(rng);
    Dataset data = testing::RandomGaussian(n, d, rng());
    if (f % 4 == 0) {
      // Coarse grid values so that ties and unsplittable nodes occur.
      std::vector<double> values(data.values().begin(), data.values().end());
      for (double& v : values) v = std::round(v);
      data = Dataset(n, d, std::move(values));
    }
    const IsolationForest forest =
        FitForest(data, {.num_trees = trees, .subsample_size = psi, .seed = rng()});
    const Dataset probes = testing::RandomGaussian(50, d, rng());
    for (std::size_t p = 0; p < probes.rows(); ++p) {
      const auto x = probes.row(p);
      for (const IsolationTree& tree : forest.trees()) {
        std::vector<double> w(d, 0.0);
        AccumulatePathShortening(tree, x, w);
        const PathEnd end = tree.Route(x);
        const double expected =
            std::log2(static_cast<double>(tree.root().size) / end.leaf_size) - end.depth;
        worst = std::max(worst, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - expected));
        ++checked;
      }
    }
  }
  Report(worst <= 1e-9, "telescoping_invariant",
         Fmt("%d tree paths, max |sum w - (log2(root/leaf) - depth)| = %.3g", checked, worst));
}

void BalancedAnnihilation() {
  const IsolationTree tree = testing::BalancedTree(256, 1);
  std::vector<IsolationTree> trees = {tree};
  const IsolationForest forest(std::move(trees), 256, 1, 0);
  bool all_zero = true;
  for (std::uint32_t i = 0; i < 256; ++i) {
    const auto w = ExplainOurs(forest, testing::BalancedPoint(i, 1)).weights;
    all_zero = all_zero && w[0] == 0.0;
  }
  Report(all_zero, "balanced_annihilation", "256 training points of a balanced tree");
}

SweepConfig GroundTruthConfig(std::uint64_t seed) {
  SweepConfig config;
  config.n = 1000;
  config.d = 6;
  config.n_clusters = 2;
  config.forest.num_trees = 100;
  config.forest.subsample_size = 256;
  config.anomalization.n_examples = 100;
  config.seed = seed;
  return config;
}

// Mean normalized error per grid point and method, averaged over seeds.
std::vector<std::vector<double>> MeanNormalized(SweepAxis axis, const std::vector<double>& grid,
                                                const SweepConfig& base, int seeds) {
  std::vector<std::vector<double>> mean(grid.size(), std::vector<double>(3, 0.0));
  for (int s = 0; s < seeds; ++s) {
    SweepConfig config = base;
    config.seed = static_cast<std::uint64_t>(s);
    const SweepTable table = Sweep(axis, grid, config);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      for (std::size_t m = 0; m < 3; ++m) {
        mean[g][m] += table.points[g].results[m].normalized_error / seeds;
      }
    }
  }
  return mean;
}

void GroundTruth() {
  const std::vector<double> grid = {0.25, 0.5, 1.0};
  const auto mean = MeanNormalized(SweepAxis::kMFraction, grid, GroundTruthConfig(0), 5);
  bool below_random = true;
  bool on_par = true;
  std::string detail;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    below_random = below_random && mean[g][0] < 1.0;
    on_par = on_par && mean[g][0] <= mean[g][1] + 0.05;
    detail += Fmt("m=%.2f ours=%.3f diffi=%.3f random=%.3f; ", grid[g], mean[g][0],
                  mean[g][1], mean[g][2]);
  }
  Report(below_random, "ground_truth_ours_below_random", detail);
  Report(on_par, "ground_truth_ours_on_par_with_diffi", detail);
}

void Dimensionality() {
  const std::vector<double> grid = {2, 10, 25, 50};
  SweepConfig config = GroundTruthConfig(0);
  config.anomalization.m_fraction = 1.0;
  const auto mean = MeanNormalized(SweepAxis::kDims, grid, config, 5);
  std::vector<double> ours;
  std::vector<double> diffi;
  std::string detail;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    ours.push_back(mean[g][0]);
    diffi.push_back(mean[g][1]);
    detail += Fmt("d=%g ours=%.3f diffi=%.3f; ", grid[g], mean[g][0], mean[g][1]);
  }
  detail += Fmt("spread ours=%.3f diffi=%.3f", Spread(ours), Spread(diffi));
  Report(Spread(ours) < 0.15 && Spread(diffi) > Spread(ours), "dimensionality_robustness",
         detail);
}

void InverseK() {
  constexpr int kD = 20;
  std::vector<double> grid;
  for (int k = 1; k <= kD; ++k) grid.push_back(static_cast<double>(k) / kD);
  SweepConfig config = GroundTruthConfig(0);
  config.d = kD;
  config.methods = {Method::kOurs};
  std::vector<double> error(grid.size(), 0.0);
  constexpr int kSeeds = 5;
  for (int s = 0; s < kSeeds; ++s) {
    config.seed = static_cast<std::uint64_t>(s);
    const SweepTable table = Sweep(SweepAxis::kMFraction, grid, config);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      error[g] += table.points[g].results[0].mean_error / kSeeds;
    }
  }
  // Least squares fit of error = a + b * sqrt(1/k).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double x = std::sqrt(1.0 / static_cast<double>(g + 1));
    sx += x;
    sy += error[g];
    sxx += x * x;
    sxy += x * error[g];
  }
  const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double a = (sy - b * sx) / n;
  Report(b > 0.0, "inverse_k_shape",
         Fmt("d=20 error(k=1)=%.3f error(k=20)=%.3f fit a=%.4f b=%.4f", error.front(),
             error.back(), a, b));
}

void Timing() {
  const Dataset data = GenerateClusters(1000, 6, 2, 0);
  const std::vector<Method> ours = {Method::kOurs};
  BenchOptions options;
  options.repeats = 7;

  const IsolationForest forest = FitForest(data, {.num_trees = 100});
  const std::vector<double> m_grid = {0.1, 1.0};
  const auto records = BenchExplain(forest, data, ours, m_grid, options);
  const double ratio = records[0].seconds_per_example / records[1].seconds_per_example;
  Report(ratio >= 0.8 && ratio <= 1.25, "timing_invariance_in_m",
         Fmt("m=0.1 %.3g s, m=1.0 %.3g s, ratio %.3f", records[0].seconds_per_example,
             records[1].seconds_per_example, ratio));

  const std::vector<double> trees = {50, 100, 200, 400};
  const std::vector<double> m_half = {0.5};
  std::vector<double> seconds;
  for (const double t : trees) {
    const IsolationForest f = FitForest(data, {.num_trees = static_cast<int>(t)});
    seconds.push_back(BenchExplain(f, data, ours, m_half, options)[0].seconds_per_example);
  }
  const double n = static_cast<double>(trees.size());
  const double mx = std::accumulate(trees.begin(), trees.end(), 0.0) / n;
  const double my = std::accumulate(seconds.begin(), seconds.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    sxy += (trees[i] - mx) * (seconds[i] - my);
    sxx += (trees[i] - mx) * (trees[i] - mx);
    syy += (seconds[i] - my) * (seconds[i] - my);
  }
  const double r2 = sxy * sxy / (sxx * syy);
  Report(r2 >= 0.95, "timing_linear_in_trees",
         Fmt("T=50..400: %.3g %.3g %.3g %.3g s, R^2=%.4f", seconds[0], seconds[1], seconds[2],
             seconds[3], r2));
}

struct GridMeans {
  // Per method (ours, diffi_local): mean contribution_x1 on the rightmost
  // column, the same restricted to rows inside a cluster band, and mean
  // |contribution - 0.5| over the whole grid.
  double right_edge[2] = {0, 0};
  double right_edge_band[2] = {0, 0};
  double flatness[2] = {0, 0};
};

GridMeans AverageGrids(HeatmapSetting setting, int seeds) {
  constexpr int kRes = 25;
  GridMeans means;
  int band_cells = 0;
  for (int s = 0; s < seeds; ++s) {
    HeatmapConfig config;
    config.resolution = kRes;
    config.setting = setting;
    config.methods = {Method::kOurs, Method::kDiffiLocal};
    config.seed = static_cast<std::uint64_t>(s);
    config.threads = 0;
    for (const HeatmapCell& c : RenderGrid(config)) {
      const int m = c.method == Method::kOurs ? 0 : 1;
      means.flatness[m] += std::abs(c.contribution_x1 - 0.5) / (kRes * kRes * seeds);
      if (c.col != kRes - 1) continue;
      means.right_edge[m] += c.contribution_x1 / (kRes * seeds);
      if (std::abs(std::abs(c.x2) - 5.0) <= 2.0) {
        means.right_edge_band[m] += c.contribution_x1;
        if (m == 0) ++band_cells;
      }
    }
  }
  for (double& v : means.right_edge_band) v /= band_cells;
  return means;
}

void Heatmap() {
  constexpr int kSeeds = 10;
  const GridMeans ib_a = AverageGrids({true, true}, kSeeds);
  const GridMeans oob_a = AverageGrids({false, true}, kSeeds);
  const GridMeans ib_noa = AverageGrids({true, false}, kSeeds);
  const GridMeans oob_noa = AverageGrids({false, false}, kSeeds);

  Report(ib_a.right_edge[0] >= 0.8, "heatmap_right_edge_ours",
         Fmt("IB_A rightmost column mean contribution_x1 = %.3f (rows with |x2| within 2 of "
             "a cluster center: %.3f)",
             ib_a.right_edge[0], ib_a.right_edge_band[0]));
  Report(std::abs(ib_a.right_edge[1] - 0.6) <= 0.15, "heatmap_right_edge_diffi",
         Fmt("IB_A rightmost column mean contribution_x1 = %.3f (cluster rows: %.3f)",
             ib_a.right_edge[1], ib_a.right_edge_band[1]));
  Report(oob_a.flatness[0] < ib_a.flatness[0] && oob_noa.flatness[0] < ib_noa.flatness[0],
         "heatmap_oob_flatter_than_ib",
         Fmt("ours mean |c-0.5|: IB_A=%.3f OOB_A=%.3f IB_NoA=%.3f OOB_NoA=%.3f; "
             "diffi: IB_A=%.3f OOB_A=%.3f IB_NoA=%.3f OOB_NoA=%.3f",
             ib_a.flatness[0], oob_a.flatness[0], ib_noa.flatness[0], oob_noa.flatness[0],
             ib_a.flatness[1], oob_a.flatness[1], ib_noa.flatness[1], oob_noa.flatness[1]));
}

bool RunQuiet(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  return cli::Run(args, out, err) == cli::kExitOk;
}

void Determinism() {
  testing::TempDir dir;
  WriteFileAtomic(dir.File("real.csv"), FormatCsv(GenerateClusters(300, 8, 2, 5)));
  bool ok = true;
  std::string detail;
  for (int run = 0; run < 2; ++run) {
    const std::string base = (dir.path() / ("run" + std::to_string(run))).string();
    const std::string threads = run == 0 ? "1" : "3";
    ok = ok && RunQuiet({"experiment", "synth", "--grid", "0.25,0.5,1", "--examples", "30",
                         "--seed", "11", "--threads", threads, "--out-dir", base + "_synth"});
    ok = ok && RunQuiet({"experiment", "real", "--data", dir.File("real.csv"), "--grid",
                         "0.25,1", "--examples", "30", "--seed", "11", "--threads", threads,
                         "--out-dir", base + "_real"});
    ok = ok && RunQuiet({"experiment", "heatmap", "--resolution", "6", "--trees", "20",
                         "--methods", "ours,diffi_local", "--seed", "11", "--threads", threads,
                         "--out", base + "_heat.csv"});
  }
  const std::string r0 = (dir.path() / "run0").string();
  const std::string r1 = (dir.path() / "run1").string();
  for (const std::string& suffix :
       {std::string("_synth/results.csv"), std::string("_synth/aggregate.csv"),
        std::string("_real/results.csv"), std::string("_real/aggregate.csv"),
        std::string("_heat.csv")}) {
    const bool same = ok && ReadFile(r0 + suffix) == ReadFile(r1 + suffix);
    ok = ok && same;
    detail += suffix.substr(1) + (same ? " identical; " : " DIFFERS; ");
  }
  Report(ok, "determinism", detail);
}

}  // namespace
}  // namespace isoexplain

int main() {
  using namespace isoexplain;
  const auto start = std::chrono::steady_clock::now();
  SplitScoreEndpoints();
  Telescoping();
  BalancedAnnihilation();
  GroundTruth();
  Dimensionality();
  InverseK();
  Timing();
  Heatmap();
  Determinism();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed (%.1f s)\n", failures, seconds);
  return failures == 0 ? 0 : 1;
}
