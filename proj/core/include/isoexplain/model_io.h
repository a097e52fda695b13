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

#ifndef ISOEXPLAIN_MODEL_IO_H_
#define ISOEXPLAIN_MODEL_IO_H_

#include <string>
#include <string_view>

#include "isoexplain/forest.h"

namespace isoexplain {

inline constexpr int kModelFormatVersion = 1;

// Text model format:
//
//   isoexplain-forest 1
//   num_features <d>
//   subsample_size <psi>
//   seed <seed>
//   num_trees <T>
//   tree <index> <node count>
//   split <feature> <threshold as hex float> <size>
//   leaf <size>
//   ...
//   end
//
// Node records of a tree are in preorder: a split is followed by its left
// subtree, then its right subtree. Thresholds round-trip bit-exactly.
std::string SerializeForest(const IsolationForest& forest);

// Throws VersionError for a different format version and FormatError for
// anything malformed, truncated or structurally invalid.
IsolationForest DeserializeForest(std::string_view text);

void SaveModel(const std::string& path, const IsolationForest& forest);
IsolationForest LoadModel(const std::string& path);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_MODEL_IO_H_
