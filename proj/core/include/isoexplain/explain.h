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

#ifndef ISOEXPLAIN_EXPLAIN_H_
#define ISOEXPLAIN_EXPLAIN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "isoexplain/forest.h"
#include "isoexplain/random.h"
#include "isoexplain/tree.h"

namespace isoexplain {

enum class Method { kOurs, kDiffiLocal, kRandom };

inline constexpr Method kAllMethods[] = {Method::kOurs, Method::kDiffiLocal,
                                         Method::kRandom};

// "ours", "diffi_local" or "random".
std::string_view MethodName(Method method);
// Inverse of MethodName. Throws InputError on unknown names.
Method ParseMethod(std::string_view name);

// Per-attribute importances of one example. Positive entries push the
// example towards "anomalous", negative ones towards "normal".
struct ExplanationVector {
  std::vector<double> weights;
  Method method = Method::kOurs;

  friend bool operator==(const ExplanationVector&, const ExplanationVector&) = default;
};

// Reward of a split that sends an example from a node of parent_size
// examples into a child of child_size examples:
//
//   log2(parent_size / child_size) - 1
//
// Zero for a balanced split, positive when the example lands in the smaller
// child, and within [-1, log2(parent_size) - 1]. Throws InputError unless
// 1 <= child_size < parent_size.
double SplitScore(std::uint32_t parent_size, std::uint32_t child_size);

// Adds one tree's path-shortening contributions for x into w: every edge of
// x's root-to-leaf path adds SplitScore(parent, child) to
// w[parent.feature]. Leaves contribute nothing. No dimension checks.
void AccumulatePathShortening(const IsolationTree& tree,
                              std::span<const double> x, std::span<double> w);

// Adds one tree's local-DIFFI contribution for x into w: each edge of x's
// path adds the constant 1/h - 1/log2(root size), h being x's leaf depth.
// A path of depth 0 adds nothing.
void AccumulateDiffiLocal(const IsolationTree& tree, std::span<const double> x,
                          std::span<double> w);

// Sum of AccumulatePathShortening over all trees, unnormalized.
ExplanationVector ExplainOurs(const IsolationForest& forest,
                              std::span<const double> x);

// Sum of AccumulateDiffiLocal over all trees, unnormalized.
ExplanationVector ExplainDiffiLocal(const IsolationForest& forest,
                                    std::span<const double> x);

// d i.i.d. uniform [0, 1] draws scaled to sum to 1. Throws InputError when
// d == 0.
ExplanationVector ExplainRandom(std::size_t d, Rng& rng);

// Dispatches on `method`; `rng` is only used by Method::kRandom.
ExplanationVector Explain(Method method, const IsolationForest& forest,
                          std::span<const double> x, Rng& rng);

// w / sum(|w_i|). Throws NormalizationError when every entry is zero.
ExplanationVector Normalize(const ExplanationVector& w);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_EXPLAIN_H_
