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

#ifndef ISOEXPLAIN_TIMING_H_
#define ISOEXPLAIN_TIMING_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isoexplain/dataset.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"

namespace isoexplain {

struct TimingRecord {
  Method method = Method::kOurs;
  std::string dataset_id;
  double m_fraction = 0.0;
  // Wall-clock explanation time of one ground-truth pick (original and
  // anomalized example), training excluded.
  double seconds_per_example = 0.0;
};

struct BenchOptions {
  int repeats = 5;
  int n_examples = 100;
  double multiplier = 3.0;
  std::uint64_t seed = 0;
  std::string dataset_id = "synthetic";
};

// For every (method, m) pair: draws options.n_examples picks as the
// ground-truth simulation does, runs one untimed warm-up pass, then times
// `repeats` passes explaining each pick's original and anomalized example.
// Reports the median pass time divided by the number of picks. Throws
// ConfigError when repeats < 3, n_examples < 1 or the grid is empty.
std::vector<TimingRecord> BenchExplain(const IsolationForest& forest,
                                       const Dataset& data,
                                       std::span<const Method> methods,
                                       std::span<const double> m_grid,
                                       const BenchOptions& options);

// method,dataset_id,m_fraction,seconds_per_example rows.
std::string FormatTimingCsv(std::span<const TimingRecord> records);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_TIMING_H_
