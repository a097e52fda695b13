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

#ifndef ISOEXPLAIN_TESTS_TEST_UTIL_H_
#define ISOEXPLAIN_TESTS_TEST_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "isoexplain/dataset.h"
#include "isoexplain/tree.h"

namespace isoexplain::testing {

// Perfectly balanced tree over `size` (a power of two) examples: every split
// halves its node. Level l splits on feature l % num_features at threshold
// `offset + 0.5 * span` of the node's interval, where the examples are
// 0, 1, ..., size-1 on every feature.
inline int AddBalanced(TreeBuilder& b, std::uint32_t lo, std::uint32_t size,
                       int level, int num_features) {
  if (size == 1) return b.Leaf(1);
  const std::uint32_t half = size / 2;
  const int left = AddBalanced(b, lo, half, level + 1, num_features);
  const int right = AddBalanced(b, lo + half, half, level + 1, num_features);
  return b.Split(level % num_features, static_cast<double>(lo + half) - 0.5, left, right);
}

inline IsolationTree BalancedTree(std::uint32_t size, int num_features = 1) {
  TreeBuilder b;
  const int root = AddBalanced(b, 0, size, 0, num_features);
  return b.Build(root, static_cast<std::size_t>(num_features));
}

// Example i of the balanced tree's training set.
inline std::vector<double> BalancedPoint(std::uint32_t i, int num_features = 1) {
  return std::vector<double>(static_cast<std::size_t>(num_features),
                             static_cast<double>(i));
}

inline Dataset RandomGaussian(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> values(n * d);
  for (double& v : values) v = noise(rng);
  return Dataset(n, d, std::move(values));
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("isoexplain_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string File(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace isoexplain::testing

#endif  // ISOEXPLAIN_TESTS_TEST_UTIL_H_
