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

#include "isoexplain/heatmap.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "isoexplain/csv.h"
#include "isoexplain/errors.h"
#include "isoexplain/parallel.h"
#include "isoexplain/random.h"
#include "isoexplain/synthbench.h"

namespace isoexplain {

Dataset GenerateTwoClusters2d(bool with_anomalies, std::uint64_t seed) {
  Dataset clusters = GenerateClusters(1000, 2, 2, seed);
  if (!with_anomalies) return clusters;

  double lo[2] = {clusters.at(0, 0), clusters.at(0, 1)};
  double hi[2] = {lo[0], lo[1]};
  for (std::size_t i = 1; i < clusters.rows(); ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      lo[j] = std::min(lo[j], clusters.at(i, j));
      hi[j] = std::max(hi[j], clusters.at(i, j));
    }
  }
  Rng rng(DeriveSeed(seed, 1));
  std::vector<double> values = clusters.values();
  constexpr std::size_t kAnomalies = 20;
  for (std::size_t i = 0; i < kAnomalies; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      values.push_back(std::uniform_real_distribution<double>(lo[j], hi[j])(rng));
    }
  }
  return Dataset(clusters.rows() + kAnomalies, 2, std::move(values));
}

double ContributionFraction(std::span<const double> w) {
  if (w.size() != 2) throw InputError("contribution fraction needs d == 2");
  const double a = std::max(w[0], 0.0);
  const double b = std::max(w[1], 0.0);
  if (a + b == 0.0) return 0.5;
  return a / (a + b);
}

std::string SettingName(HeatmapSetting setting) {
  return std::string(setting.in_bag ? "IB" : "OOB") +
         (setting.with_anomalies ? "_A" : "_NoA");
}

HeatmapSetting ParseSetting(std::string_view name) {
  for (const HeatmapSetting s : kAllSettings) {
    if (SettingName(s) == name) return s;
  }
  throw ConfigError("unknown heatmap setting '" + std::string(name) + "'");
}

double GridCoordinate(const HeatmapConfig& config, std::size_t i) {
  const double step =
      (config.upper - config.lower) / static_cast<double>(config.resolution - 1);
  if (i + 1 == static_cast<std::size_t>(config.resolution)) return config.upper;
  return config.lower + step * static_cast<double>(i);
}

std::vector<HeatmapCell> RenderGrid(const HeatmapConfig& config) {
  if (config.resolution < 2) throw ConfigError("heatmap resolution must be >= 2");
  if (!(config.lower < config.upper)) throw ConfigError("heatmap bounds are empty");
  if (config.methods.empty()) throw ConfigError("heatmap needs at least one method");

  const Dataset training =
      GenerateTwoClusters2d(config.setting.with_anomalies, DeriveSeed(config.seed, 1));
  ForestOptions forest_options = config.forest;
  forest_options.seed = DeriveSeed(config.seed, 2);
  // Cells already run in parallel; keep each forest's training sequential.
  forest_options.threads = 1;

  std::optional<IsolationForest> shared;
  if (!config.setting.in_bag) shared.emplace(FitForest(training, forest_options));

  const auto res = static_cast<std::size_t>(config.resolution);
  const std::size_t num_methods = config.methods.size();
  std::vector<HeatmapCell> cells(res * res * num_methods);

  ParallelFor(res * res, config.threads, [&](std::size_t index) {
    const std::size_t row = index / res;
    const std::size_t col = index % res;
    const std::array<double, 2> point = {GridCoordinate(config, col),
                                         GridCoordinate(config, row)};
    std::optional<IsolationForest> own;
    if (config.setting.in_bag) {
      own.emplace(FitForest(training.WithRow(point), forest_options));
    }
    const IsolationForest& forest = own ? *own : *shared;
    Rng rng = MakeRng(config.seed, 3 + index);
    for (std::size_t mi = 0; mi < num_methods; ++mi) {
      const ExplanationVector w = Explain(config.methods[mi], forest, point, rng);
      cells[index * num_methods + mi] = {row,      col,
                                         point[0], point[1],
                                         config.methods[mi], ContributionFraction(w.weights)};
    }
  });
  return cells;
}

std::string FormatHeatmapCsv(std::span<const HeatmapCell> cells,
                             HeatmapSetting setting, bool header) {
  std::string out = header ? "x1,x2,method,setting,contribution_x1\n" : "";
  const std::string name = SettingName(setting);
  for (const HeatmapCell& c : cells) {
    out += FormatNumber(c.x1) + ',' + FormatNumber(c.x2) + ',' +
           std::string(MethodName(c.method)) + ',' + name + ',' +
           FormatNumber(c.contribution_x1) + '\n';
  }
  return out;
}

}  // namespace isoexplain
