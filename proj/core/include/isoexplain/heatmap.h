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

#ifndef ISOEXPLAIN_HEATMAP_H_
#define ISOEXPLAIN_HEATMAP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoexplain/dataset.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"

namespace isoexplain {

// Two unit-variance Gaussian clusters of 500 points at (5, 5) and (-5, -5).
// With anomalies, 20 more points (2%) are drawn uniformly over the clusters'
// bounding box.
Dataset GenerateTwoClusters2d(bool with_anomalies, std::uint64_t seed);

// Share of the first attribute after clipping negative weights to zero;
// 0.5 when both clipped weights are zero. Throws InputError unless
// w.size() == 2.
double ContributionFraction(std::span<const double> w);

struct HeatmapSetting {
  // In-bag: a forest is retrained on the training data plus the grid point.
  // Out-of-bag: one forest trained on the training data serves every cell.
  bool in_bag = false;
  bool with_anomalies = true;
};

// "IB_A", "OOB_A", "IB_NoA" or "OOB_NoA".
std::string SettingName(HeatmapSetting setting);
HeatmapSetting ParseSetting(std::string_view name);

inline constexpr HeatmapSetting kAllSettings[] = {
    {true, true}, {false, true}, {true, false}, {false, false}};

struct HeatmapConfig {
  // Grid points per axis; coordinates run from lower to upper inclusive.
  int resolution = 50;
  double lower = -10.0;
  double upper = 10.0;
  HeatmapSetting setting;
  std::vector<Method> methods = {Method::kOurs};
  ForestOptions forest;
  std::uint64_t seed = 0;
  // Cell workers; 0 uses every hardware thread.
  int threads = 1;
};

struct HeatmapCell {
  std::size_t row = 0;  // index along x2
  std::size_t col = 0;  // index along x1
  double x1 = 0.0;
  double x2 = 0.0;
  Method method = Method::kOurs;
  double contribution_x1 = 0.5;
};

// Grid coordinate i of `resolution` evenly spaced values in [lower, upper].
double GridCoordinate(const HeatmapConfig& config, std::size_t i);

// Explains every grid point with every configured method. Training data and
// forest seeds are streams of config.seed, and in-bag forests reuse the same
// forest seed for every cell. Cells are ordered by (row, col, method). Throws
// ConfigError when resolution < 2 or lower >= upper.
std::vector<HeatmapCell> RenderGrid(const HeatmapConfig& config);

// x1,x2,method,setting,contribution_x1 rows.
std::string FormatHeatmapCsv(std::span<const HeatmapCell> cells,
                             HeatmapSetting setting, bool header = true);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_HEATMAP_H_
