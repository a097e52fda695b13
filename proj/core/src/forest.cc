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

#include "isoexplain/forest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "isoexplain/errors.h"
#include "isoexplain/parallel.h"
#include "isoexplain/random.h"

namespace isoexplain {

IsolationForest::IsolationForest(std::vector<IsolationTree> trees,
                                 int subsample_size, std::size_t num_features,
                                 std::uint64_t seed)
    : trees_(std::move(trees)),
      subsample_size_(subsample_size),
      num_features_(num_features),
      seed_(seed) {
  if (trees_.empty()) throw InputError("forest needs at least one tree");
  for (const IsolationTree& tree : trees_) {
    if (tree.num_features() != num_features_) {
      throw InputError("tree feature count differs from the forest's");
    }
  }
}

void IsolationForest::CheckExample(std::span<const double> x) const {
  if (x.size() != num_features_) {
    throw InputError("example has " + std::to_string(x.size()) +
                     " attributes, forest expects " + std::to_string(num_features_));
  }
  for (const double v : x) {
    if (!std::isfinite(v)) throw InputError("example has a non-finite attribute");
  }
}

IsolationForest FitForest(const Dataset& data, const ForestOptions& options) {
  if (options.num_trees < 1) {
    throw ConfigError("num_trees must be >= 1, got " +
                      std::to_string(options.num_trees));
  }
  if (options.subsample_size < 2) {
    throw ConfigError("subsample_size must be >= 2, got " +
                      std::to_string(options.subsample_size));
  }
  const std::size_t sample_size = std::min<std::size_t>(
      static_cast<std::size_t>(options.subsample_size), data.rows());
  const int depth_limit = DepthLimit(sample_size);
  const auto num_trees = static_cast<std::size_t>(options.num_trees);

  std::vector<std::optional<IsolationTree>> slots(num_trees);
  ParallelFor(num_trees, options.threads, [&](std::size_t t) {
    Rng rng = MakeRng(options.seed, t);
    // Partial Fisher-Yates: the first sample_size entries form a uniform
    // subsample without replacement.
    std::vector<std::size_t> rows(data.rows());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    for (std::size_t k = 0; k < sample_size; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, rows.size() - 1);
      std::swap(rows[k], rows[pick(rng)]);
    }
    rows.resize(sample_size);
    slots[t].emplace(FitTree(data, rows, depth_limit, rng));
  });

  std::vector<IsolationTree> trees;
  trees.reserve(num_trees);
  for (auto& slot : slots) trees.push_back(std::move(*slot));
  return IsolationForest(std::move(trees), options.subsample_size, data.cols(),
                         options.seed);
}

namespace {

constexpr std::size_t kHarmonicTableSize = 4097;

double Harmonic(std::size_t i) {
  static const auto table = [] {
    std::array<double, kHarmonicTableSize> h{};
    for (std::size_t k = 1; k < kHarmonicTableSize; ++k) {
      h[k] = h[k - 1] + 1.0 / static_cast<double>(k);
    }
    return h;
  }();
  if (i < kHarmonicTableSize) return table[i];
  double sum = table.back();
  for (std::size_t k = kHarmonicTableSize; k <= i; ++k) {
    sum += 1.0 / static_cast<double>(k);
  }
  return sum;
}

}  // namespace

double Nu(std::size_t i) {
  if (i == 0) throw InputError("Nu is undefined for 0");
  return 2.0 * Harmonic(i) - 2.0;
}

double AveragePathLength(std::size_t n) {
  if (n < 2) return 0.0;
  if (n == 2) return 1.0;
  const double m = static_cast<double>(n);
  return 2.0 * Harmonic(n - 1) - 2.0 * (m - 1.0) / m;
}

double AnomalyScore(const IsolationForest& forest, std::span<const double> x) {
  forest.CheckExample(x);
  double total = 0.0;
  for (const IsolationTree& tree : forest.trees()) {
    const TreeNode& leaf = tree.Walk(x, [](const TreeNode&, const TreeNode&) {});
    total += static_cast<double>(leaf.depth) + Nu(leaf.size);
  }
  return total / static_cast<double>(forest.num_trees());
}

double NormalizedAnomalyScore(const IsolationForest& forest,
                              std::span<const double> x) {
  const double c = AveragePathLength(forest.trees().front().sample_size());
  const double a = AnomalyScore(forest, x);
  if (c == 0.0) return 0.5;
  return std::exp2(-a / c);
}

}  // namespace isoexplain
