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

#ifndef ISOEXPLAIN_FOREST_H_
#define ISOEXPLAIN_FOREST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isoexplain/dataset.h"
#include "isoexplain/tree.h"

namespace isoexplain {

struct ForestOptions {
  int num_trees = 100;
  int subsample_size = 256;
  std::uint64_t seed = 0;
  // Training workers; 0 uses every hardware thread. Does not affect output.
  int threads = 1;
};

// Ensemble of isolation trees. Immutable once built, so concurrent scoring
// and explaining need no synchronization.
class IsolationForest {
 public:
  // Throws InputError when `trees` is empty or a tree's feature count
  // differs from num_features.
  IsolationForest(std::vector<IsolationTree> trees, int subsample_size,
                  std::size_t num_features, std::uint64_t seed);

  const std::vector<IsolationTree>& trees() const { return trees_; }
  std::size_t num_trees() const { return trees_.size(); }
  int subsample_size() const { return subsample_size_; }
  std::size_t num_features() const { return num_features_; }
  std::uint64_t seed() const { return seed_; }

  // Throws InputError unless x has num_features() finite values.
  void CheckExample(std::span<const double> x) const;

  friend bool operator==(const IsolationForest&, const IsolationForest&) = default;

 private:
  std::vector<IsolationTree> trees_;
  int subsample_size_;
  std::size_t num_features_;
  std::uint64_t seed_;
};

// Fits options.num_trees trees, each on its own uniform subsample without
// replacement of min(subsample_size, data.rows()) rows, with height limit
// ceil(log2(that size)). Tree t draws from stream t of options.seed, so the
// result is independent of options.threads. Throws ConfigError when
// num_trees < 1 or subsample_size < 2.
IsolationForest FitForest(const Dataset& data, const ForestOptions& options);

// 2 * H(i) - 2 with H the harmonic numbers. Throws InputError when i == 0.
double Nu(std::size_t i);

// Average path length of an unsuccessful BST search over n examples, the
// classic normalizer c(n) of iForest scores.
double AveragePathLength(std::size_t n);

// (1/T) * sum over trees of (leaf depth + Nu(leaf size)).
double AnomalyScore(const IsolationForest& forest, std::span<const double> x);

// 2^(-AnomalyScore / c(sample size)); values near 1 flag anomalies.
double NormalizedAnomalyScore(const IsolationForest& forest,
                              std::span<const double> x);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_FOREST_H_
