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

#include "isoexplain/tree.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "isoexplain/errors.h"

namespace isoexplain {

IsolationTree::IsolationTree(std::vector<TreeNode> nodes,
                             std::size_t num_features)
    : nodes_(std::move(nodes)), num_features_(num_features) {
  if (nodes_.empty()) throw InputError("tree has no nodes");
  if (num_features_ == 0) throw InputError("tree needs at least one feature");

  const auto count = static_cast<std::int32_t>(nodes_.size());
  std::vector<bool> referenced(nodes_.size(), false);
  nodes_[0].depth = 0;
  // Preorder guarantees a parent precedes its children, so depths propagate
  // in a single forward pass.
  for (std::int32_t i = 0; i < count; ++i) {
    TreeNode& node = nodes_[i];
    if (node.size == 0) throw InputError("empty node " + std::to_string(i));
    if (node.is_leaf()) continue;
    if (node.feature < 0 ||
        static_cast<std::size_t>(node.feature) >= num_features_) {
      throw InputError("node " + std::to_string(i) + " splits on feature " +
                       std::to_string(node.feature));
    }
    for (const std::int32_t child : {node.left, node.right}) {
      if (child <= i || child >= count || referenced[child]) {
        throw InputError("node " + std::to_string(i) +
                         " has an invalid child index");
      }
      referenced[child] = true;
      nodes_[child].depth = node.depth + 1;
    }
    if (nodes_[node.left].size + nodes_[node.right].size != node.size) {
      throw InputError("node " + std::to_string(i) +
                       " size differs from the sum of its children");
    }
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!referenced[i]) throw InputError("node " + std::to_string(i) + " is unreachable");
  }
}

std::uint32_t IsolationTree::MaxDepth() const {
  std::uint32_t out = 0;
  for (const TreeNode& n : nodes_) out = std::max(out, n.depth);
  return out;
}

PathEnd IsolationTree::Route(std::span<const double> x) const {
  if (x.size() != num_features_) {
    throw InputError("example has " + std::to_string(x.size()) +
                     " attributes, tree expects " + std::to_string(num_features_));
  }
  const TreeNode& leaf = Walk(x, [](const TreeNode&, const TreeNode&) {});
  return {leaf.depth, leaf.size};
}

int TreeBuilder::Leaf(std::uint32_t size) {
  TreeNode node;
  node.size = size;
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int TreeBuilder::Split(int feature, double value, int left, int right) {
  const auto n = static_cast<int>(nodes_.size());
  if (left < 0 || left >= n || right < 0 || right >= n) {
    throw InputError("split references an unknown node");
  }
  TreeNode node;
  node.feature = feature;
  node.value = value;
  node.size = nodes_[left].size + nodes_[right].size;
  node.left = left;
  node.right = right;
  nodes_.push_back(node);
  return n;
}

IsolationTree TreeBuilder::Build(int root, std::size_t num_features) const {
  if (root < 0 || root >= static_cast<int>(nodes_.size())) {
    throw InputError("unknown root node");
  }
  // Renumber into preorder.
  std::vector<TreeNode> out;
  std::vector<std::pair<int, int>> stack = {{root, -1}};  // (node, parent slot)
  std::vector<bool> is_left = {true};
  while (!stack.empty()) {
    const auto [id, parent] = stack.back();
    const bool left_child = is_left.back();
    stack.pop_back();
    is_left.pop_back();
    const auto slot = static_cast<std::int32_t>(out.size());
    out.push_back(nodes_[id]);
    if (parent >= 0) (left_child ? out[parent].left : out[parent].right) = slot;
    const TreeNode& src = nodes_[id];
    if (!src.is_leaf()) {
      stack.emplace_back(src.right, slot);
      is_left.push_back(false);
      stack.emplace_back(src.left, slot);
      is_left.push_back(true);
    }
  }
  return IsolationTree(std::move(out), num_features);
}

int DepthLimit(std::size_t sample_size) {
  if (sample_size <= 1) return 0;
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(sample_size))));
}

namespace {

class TreeFitter {
 public:
  TreeFitter(const Dataset& data, int depth_limit, Rng& rng)
      : data_(data), depth_limit_(depth_limit), rng_(rng) {
    features_.resize(data.cols());
    std::iota(features_.begin(), features_.end(), 0);
  }

  std::vector<TreeNode> Fit(std::vector<std::size_t> rows) {
    rows_ = std::move(rows);
    nodes_.clear();
    Grow(0, rows_.size(), 0);
    return std::move(nodes_);
  }

 private:
  // Grows the subtree over rows_[begin, end) and returns its node index.
  std::int32_t Grow(std::size_t begin, std::size_t end, std::uint32_t depth) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].size = static_cast<std::uint32_t>(end - begin);
    nodes_[id].depth = depth;
    if (end - begin <= 1 || static_cast<int>(depth) >= depth_limit_) return id;

    // Walking the attributes in a uniformly random order and taking the
    // first splittable one draws uniformly among the splittable attributes.
    double lo = 0.0;
    double hi = 0.0;
    int feature = -1;
    for (std::size_t k = 0; k < features_.size(); ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, features_.size() - 1);
      std::swap(features_[k], features_[pick(rng_)]);
      const int f = features_[k];
      lo = hi = data_.at(rows_[begin], f);
      for (std::size_t r = begin + 1; r < end; ++r) {
        const double v = data_.at(rows_[r], f);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (lo < hi) {
        feature = f;
        break;
      }
    }
    if (feature < 0) return id;

    const double value = DrawThreshold(lo, hi);
    const auto mid = std::partition(
        rows_.begin() + static_cast<std::ptrdiff_t>(begin),
        rows_.begin() + static_cast<std::ptrdiff_t>(end),
        [&](std::size_t r) { return data_.at(r, feature) < value; });
    const auto split = static_cast<std::size_t>(mid - rows_.begin());

    const std::int32_t left = Grow(begin, split, depth + 1);
    const std::int32_t right = Grow(split, end, depth + 1);
    TreeNode& node = nodes_[id];
    node.feature = feature;
    node.value = value;
    node.left = left;
    node.right = right;
    return id;
  }

  // Uniform on the open interval (lo, hi). When no double lies strictly
  // between them, hi itself still separates lo from hi.
  double DrawThreshold(double lo, double hi) {
    if (std::nextafter(lo, hi) == hi) return hi;
    std::uniform_real_distribution<double> u(lo, hi);
    for (;;) {
      const double v = u(rng_);
      if (v > lo && v < hi) return v;
    }
  }

  const Dataset& data_;
  const int depth_limit_;
  Rng& rng_;
  std::vector<int> features_;
  std::vector<std::size_t> rows_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

IsolationTree FitTree(const Dataset& data, std::span<const std::size_t> rows,
                      int depth_limit, Rng& rng) {
  if (rows.empty()) throw InputError("cannot fit a tree on zero examples");
  for (const std::size_t r : rows) {
    if (r >= data.rows()) throw InputError("sample row index out of range");
  }
  TreeFitter fitter(data, depth_limit, rng);
  return IsolationTree(fitter.Fit({rows.begin(), rows.end()}), data.cols());
}

IsolationTree FitTree(const Dataset& sample, int depth_limit, Rng& rng) {
  std::vector<std::size_t> rows(sample.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return FitTree(sample, rows, depth_limit, rng);
}

}  // namespace isoexplain
