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

#ifndef ISOEXPLAIN_CSV_H_
#define ISOEXPLAIN_CSV_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "isoexplain/dataset.h"

namespace isoexplain {

enum class HeaderMode {
  // The first line is a header iff one of its cells is not a number.
  kAuto,
  kPresent,
  kAbsent,
};

// Parses a comma-separated numeric table. Column names come from the header
// or default to f0..f(d-1). Throws ParseError (with 1-based data row and
// column) on a non-numeric cell, StructureError on ragged rows or an empty
// table, DataError on non-finite values.
Dataset ParseCsv(std::string_view text, HeaderMode header = HeaderMode::kAuto);

// ParseCsv on the contents of `path`. Throws Error when unreadable.
Dataset LoadCsv(const std::string& path, HeaderMode header = HeaderMode::kAuto);

// Header line plus one line per row, every number at 17 significant digits
// so that ParseCsv(FormatCsv(d)) == d.
std::string FormatCsv(const Dataset& data);

// "%.17g".
std::string FormatNumber(double value);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::string& path, std::string_view contents);

std::string ReadFile(const std::string& path);

struct KnownShape {
  std::string_view id;
  std::size_t rows;
  std::size_t cols;
};

// Shapes of the glass, cardio, ionosphere, lympho, musk and letter
// benchmark tables.
std::optional<KnownShape> FindKnownShape(std::string_view id);

// Warning text when `data` does not have the declared dataset's shape;
// nullopt when it matches or the id is unknown.
std::optional<std::string> CheckKnownShape(std::string_view id,
                                           const Dataset& data);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_CSV_H_
