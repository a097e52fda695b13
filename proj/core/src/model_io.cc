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

#include "isoexplain/model_io.h"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "isoexplain/csv.h"
#include "isoexplain/errors.h"

namespace isoexplain {
namespace {

constexpr std::string_view kMagic = "isoexplain-forest";

std::string HexFloat(double v) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%a", v);
  return buf.data();
}

void AppendTree(const IsolationTree& tree, std::string& out) {
  // Fitted and hand-built trees are both stored in preorder, so emitting the
  // node array in index order yields the nested layout.
  for (const TreeNode& node : tree.nodes()) {
    if (node.is_leaf()) {
      out += "leaf " + std::to_string(node.size) + '\n';
    } else {
      out += "split " + std::to_string(node.feature) + ' ' + HexFloat(node.value) +
             ' ' + std::to_string(node.size) + '\n';
    }
  }
}

// Line-oriented tokenizer over the model text.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Tokens of the next non-empty line; throws FormatError at end of input.
  std::vector<std::string_view> Next() {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_number_;
      std::vector<std::string_view> tokens;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\r' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\r' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return tokens;
    }
    throw FormatError("model file is truncated");
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw FormatError("model file line " + std::to_string(line_number_) + ": " + what);
  }

  std::uint64_t Unsigned(std::string_view token) const {
    std::string s(token);
    char* end = nullptr;
    if (s.empty() || s[0] == '-') Fail("expected an unsigned integer, got '" + s + "'");
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) Fail("expected an unsigned integer, got '" + s + "'");
    return v;
  }

  double Real(std::string_view token) const {
    std::string s(token);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) Fail("expected a number, got '" + s + "'");
    return v;
  }

  std::uint64_t Field(std::string_view key) {
    const auto tokens = Next();
    if (tokens.size() != 2 || tokens[0] != key) Fail("expected '" + std::string(key) + "'");
    return Unsigned(tokens[1]);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
};

}  // namespace

std::string SerializeForest(const IsolationForest& forest) {
  std::string out = std::string(kMagic) + ' ' + std::to_string(kModelFormatVersion) + '\n';
  out += "num_features " + std::to_string(forest.num_features()) + '\n';
  out += "subsample_size " + std::to_string(forest.subsample_size()) + '\n';
  out += "seed " + std::to_string(forest.seed()) + '\n';
  out += "num_trees " + std::to_string(forest.num_trees()) + '\n';
  for (std::size_t t = 0; t < forest.num_trees(); ++t) {
    const IsolationTree& tree = forest.trees()[t];
    out += "tree " + std::to_string(t) + ' ' + std::to_string(tree.nodes().size()) + '\n';
    AppendTree(tree, out);
  }
  out += "end\n";
  return out;
}

IsolationForest DeserializeForest(std::string_view text) {
  Reader reader(text);
  const auto header = reader.Next();
  if (header.size() != 2 || header[0] != kMagic) reader.Fail("not an isoexplain model");
  const std::uint64_t version = reader.Unsigned(header[1]);
  if (version != kModelFormatVersion) {
    throw VersionError("unsupported model format version " + std::to_string(version) +
                       " (this build reads version " +
                       std::to_string(kModelFormatVersion) + ")");
  }

  const std::uint64_t num_features = reader.Field("num_features");
  const std::uint64_t subsample_size = reader.Field("subsample_size");
  const std::uint64_t seed = reader.Field("seed");
  const std::uint64_t num_trees = reader.Field("num_trees");
  if (num_features == 0 || num_trees == 0 ||
      subsample_size > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    reader.Fail("invalid forest dimensions");
  }

  std::vector<IsolationTree> trees;
  trees.reserve(num_trees);
  for (std::uint64_t t = 0; t < num_trees; ++t) {
    const auto tree_header = reader.Next();
    if (tree_header.size() != 3 || tree_header[0] != "tree" ||
        reader.Unsigned(tree_header[1]) != t) {
      reader.Fail("expected 'tree " + std::to_string(t) + " <nodes>'");
    }
    const std::uint64_t count = reader.Unsigned(tree_header[2]);
    if (count == 0 || count > std::numeric_limits<std::int32_t>::max()) {
      reader.Fail("invalid node count");
    }

    std::vector<TreeNode> nodes(count);
    // Preorder rebuild: `pending` holds split nodes still waiting for a
    // left or right child.
    std::vector<std::pair<std::size_t, bool>> pending;  // (node, left filled)
    for (std::size_t i = 0; i < count; ++i) {
      const auto tokens = reader.Next();
      TreeNode& node = nodes[i];
      if (i > 0) {
        if (pending.empty()) reader.Fail("node outside of the tree");
        auto& [parent, left_done] = pending.back();
        if (!left_done) {
          nodes[parent].left = static_cast<std::int32_t>(i);
          left_done = true;
        } else {
          nodes[parent].right = static_cast<std::int32_t>(i);
          pending.pop_back();
        }
      }
      if (tokens[0] == "leaf" && tokens.size() == 2) {
        node.size = static_cast<std::uint32_t>(reader.Unsigned(tokens[1]));
      } else if (tokens[0] == "split" && tokens.size() == 4) {
        const std::uint64_t feature = reader.Unsigned(tokens[1]);
        if (feature >= num_features) reader.Fail("split feature out of range");
        node.feature = static_cast<std::int32_t>(feature);
        node.value = reader.Real(tokens[2]);
        node.size = static_cast<std::uint32_t>(reader.Unsigned(tokens[3]));
        pending.emplace_back(i, false);
      } else {
        reader.Fail("expected a 'leaf' or 'split' record");
      }
    }
    if (!pending.empty()) reader.Fail("tree " + std::to_string(t) + " is incomplete");
    try {
      trees.emplace_back(std::move(nodes), num_features);
    } catch (const InputError& e) {
      reader.Fail(e.what());
    }
  }
  const auto trailer = reader.Next();
  if (trailer.size() != 1 || trailer[0] != "end") reader.Fail("expected 'end'");

  return IsolationForest(std::move(trees), static_cast<int>(subsample_size),
                         num_features, seed);
}

void SaveModel(const std::string& path, const IsolationForest& forest) {
  WriteFileAtomic(path, SerializeForest(forest));
}

IsolationForest LoadModel(const std::string& path) {
  return DeserializeForest(ReadFile(path));
}

}  // namespace isoexplain
