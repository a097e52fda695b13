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

#ifndef ISOEXPLAIN_TREE_H_
#define ISOEXPLAIN_TREE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isoexplain/dataset.h"
#include "isoexplain/random.h"

namespace isoexplain {

// One node of an isolation tree. Internal nodes route x left when
// x[feature] < value and right otherwise. `size` is the number of training
// examples that reached the node; `depth` is its edge count from the root.
struct TreeNode {
  static constexpr std::int32_t kLeaf = -1;

  std::int32_t feature = kLeaf;
  double value = 0.0;
  std::uint32_t size = 0;
  std::uint32_t depth = 0;
  std::int32_t left = -1;
  std::int32_t right = -1;

  bool is_leaf() const { return feature == kLeaf; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct PathEnd {
  std::uint32_t depth = 0;
  std::uint32_t leaf_size = 0;

  friend bool operator==(const PathEnd&, const PathEnd&) = default;
};

// Immutable isolation tree stored as a flat node array in preorder; node 0 is
// the root.
class IsolationTree {
 public:
  // Validates the structure and recomputes node depths. Throws InputError
  // when a child index is invalid, a node is shared, a feature is outside
  // [0, num_features), a child is empty, or a parent size differs from the
  // sum of its children.
  IsolationTree(std::vector<TreeNode> nodes, std::size_t num_features);

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& root() const { return nodes_.front(); }
  std::size_t num_features() const { return num_features_; }
  std::uint32_t sample_size() const { return nodes_.front().size; }
  std::uint32_t MaxDepth() const;

  // Leaf reached by x. Throws InputError on dimension mismatch.
  PathEnd Route(std::span<const double> x) const;

  // Calls edge(parent, child) for every edge on x's root-to-leaf path and
  // returns the leaf. Does not check x's dimension.
  template <typename EdgeFn>
  const TreeNode& Walk(std::span<const double> x, EdgeFn&& edge) const {
    const TreeNode* node = nodes_.data();
    while (!node->is_leaf()) {
      const TreeNode* child =
          nodes_.data() +
          (x[static_cast<std::size_t>(node->feature)] < node->value ? node->left
                                                                    : node->right);
      edge(*node, *child);
      node = child;
    }
    return *node;
  }

  friend bool operator==(const IsolationTree&, const IsolationTree&) = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t num_features_;
};

// Assembles trees by hand, bottom-up. Mostly useful in tests:
//
//   TreeBuilder b;
//   int l = b.Leaf(1), r = b.Leaf(7);
//   IsolationTree tree = b.Build(b.Split(0, 0.5, l, r), /*num_features=*/1);
class TreeBuilder {
 public:
  int Leaf(std::uint32_t size);
  int Split(int feature, double value, int left, int right);
  IsolationTree Build(int root, std::size_t num_features) const;

 private:
  std::vector<TreeNode> nodes_;
};

// ceil(log2(sample_size)), the height limit of a tree fit on sample_size rows.
int DepthLimit(std::size_t sample_size);

// Fits one isolation tree on data.row(i) for i in `rows` (non-empty). A node
// becomes a leaf when it holds one example, sits at depth_limit, or no
// attribute has min < max among its examples. Otherwise the split attribute
// is uniform among attributes with min < max and the threshold is uniform on
// (min, max).
IsolationTree FitTree(const Dataset& data, std::span<const std::size_t> rows,
                      int depth_limit, Rng& rng);

// Same, on every row of `sample`.
IsolationTree FitTree(const Dataset& sample, int depth_limit, Rng& rng);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_TREE_H_
