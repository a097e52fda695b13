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

#include "isoexplain/explain.h"

#include <cmath>
#include <string>

#include "isoexplain/errors.h"

namespace isoexplain {

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kOurs:
      return "ours";
    case Method::kDiffiLocal:
      return "diffi_local";
    case Method::kRandom:
      return "random";
  }
  return "unknown";
}

Method ParseMethod(std::string_view name) {
  for (const Method m : kAllMethods) {
    if (MethodName(m) == name) return m;
  }
  throw InputError("unknown explanation method '" + std::string(name) + "'");
}

double SplitScore(std::uint32_t parent_size, std::uint32_t child_size) {
  if (child_size == 0 || child_size >= parent_size) {
    throw InputError("split score needs 1 <= child (" +
                     std::to_string(child_size) + ") < parent (" +
                     std::to_string(parent_size) + ")");
  }
  return std::log2(static_cast<double>(parent_size) /
                   static_cast<double>(child_size)) -
         1.0;
}

void AccumulatePathShortening(const IsolationTree& tree,
                              std::span<const double> x, std::span<double> w) {
  tree.Walk(x, [&](const TreeNode& parent, const TreeNode& child) {
    w[static_cast<std::size_t>(parent.feature)] +=
        SplitScore(parent.size, child.size);
  });
}

void AccumulateDiffiLocal(const IsolationTree& tree, std::span<const double> x,
                          std::span<double> w) {
  const TreeNode& leaf = tree.Walk(x, [](const TreeNode&, const TreeNode&) {});
  if (leaf.depth == 0) return;
  const double expected_depth =
      std::log2(static_cast<double>(tree.sample_size()));
  const double weight = 1.0 / static_cast<double>(leaf.depth) - 1.0 / expected_depth;
  tree.Walk(x, [&](const TreeNode& parent, const TreeNode&) {
    w[static_cast<std::size_t>(parent.feature)] += weight;
  });
}

ExplanationVector ExplainOurs(const IsolationForest& forest,
                              std::span<const double> x) {
  forest.CheckExample(x);
  ExplanationVector out{std::vector<double>(forest.num_features(), 0.0),
                        Method::kOurs};
  for (const IsolationTree& tree : forest.trees()) {
    AccumulatePathShortening(tree, x, out.weights);
  }
  return out;
}

ExplanationVector ExplainDiffiLocal(const IsolationForest& forest,
                                    std::span<const double> x) {
  forest.CheckExample(x);
  ExplanationVector out{std::vector<double>(forest.num_features(), 0.0),
                        Method::kDiffiLocal};
  for (const IsolationTree& tree : forest.trees()) {
    AccumulateDiffiLocal(tree, x, out.weights);
  }
  return out;
}

ExplanationVector ExplainRandom(std::size_t d, Rng& rng) {
  if (d == 0) throw InputError("random explanation needs d >= 1");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ExplanationVector out{std::vector<double>(d), Method::kRandom};
  double sum = 0.0;
  for (double& v : out.weights) {
    v = u(rng);
    sum += v;
  }
  // All-zero draws are practically impossible but would divide by zero.
  if (sum == 0.0) {
    for (double& v : out.weights) v = 1.0 / static_cast<double>(d);
    return out;
  }
  for (double& v : out.weights) v /= sum;
  return out;
}

ExplanationVector Explain(Method method, const IsolationForest& forest,
                          std::span<const double> x, Rng& rng) {
  switch (method) {
    case Method::kOurs:
      return ExplainOurs(forest, x);
    case Method::kDiffiLocal:
      return ExplainDiffiLocal(forest, x);
    case Method::kRandom:
      forest.CheckExample(x);
      return ExplainRandom(forest.num_features(), rng);
  }
  throw InputError("unknown explanation method");
}

ExplanationVector Normalize(const ExplanationVector& w) {
  double norm = 0.0;
  for (const double v : w.weights) norm += std::abs(v);
  if (norm == 0.0 || !std::isfinite(norm)) {
    throw NormalizationError("cannot normalize an all-zero explanation vector");
  }
  ExplanationVector out = w;
  for (double& v : out.weights) v /= norm;
  return out;
}

}  // namespace isoexplain
