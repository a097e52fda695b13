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

#include "isoexplain/csv.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "isoexplain/errors.h"

namespace isoexplain {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(Trim(line.substr(start)));
      return cells;
    }
    cells.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::optional<double> ParseNumber(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  // strtod also takes hex floats; "nan"/"inf" parse and are rejected later
  // by the Dataset invariants.
  std::string buffer(cell);
  char* end = nullptr;
  const double v = std::strtod(buffer.c_str(), &end);
  if (end != buffer.c_str() + buffer.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string FormatNumber(double value) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return buf.data();
}

Dataset ParseCsv(std::string_view text, HeaderMode header) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(start, end - start));
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw StructureError("CSV input is empty");

  std::vector<std::string> names;
  std::size_t first_data = 0;
  const auto first_cells = SplitCells(lines.front());
  bool has_header = header == HeaderMode::kPresent;
  if (header == HeaderMode::kAuto) {
    for (const auto cell : first_cells) {
      if (!ParseNumber(cell)) has_header = true;
    }
  }
  if (has_header) {
    for (const auto cell : first_cells) names.emplace_back(cell);
    first_data = 1;
  }

  const std::size_t cols = first_cells.size();
  const std::size_t rows = lines.size() - first_data;
  if (rows == 0) throw StructureError("CSV input has a header but no rows");

  std::vector<double> values;
  values.reserve(rows * cols);
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    const std::size_t row = i - first_data + 1;
    const auto cells = SplitCells(lines[i]);
    if (cells.size() != cols) {
      throw StructureError("row " + std::to_string(row) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = ParseNumber(cells[j]);
      if (!v) {
        throw ParseError("non-numeric cell '" + std::string(cells[j]) +
                             "' at row " + std::to_string(row) + ", column " +
                             std::to_string(j + 1),
                         row, j + 1);
      }
      values.push_back(*v);
    }
  }
  return Dataset(rows, cols, std::move(values), std::move(names));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

Dataset LoadCsv(const std::string& path, HeaderMode header) {
  return ParseCsv(ReadFile(path), header);
}

std::string FormatCsv(const Dataset& data) {
  std::string out;
  for (std::size_t j = 0; j < data.cols(); ++j) {
    if (j > 0) out += ',';
    out += data.column_names()[j];
  }
  out += '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      if (j > 0) out += ',';
      out += FormatNumber(data.at(i, j));
    }
    out += '\n';
  }
  return out;
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

std::optional<KnownShape> FindKnownShape(std::string_view id) {
  static constexpr KnownShape kShapes[] = {
      {"glass", 214, 10},   {"cardio", 1831, 21}, {"ionosphere", 351, 33},
      {"lympho", 148, 18},  {"musk", 3062, 166},  {"letter", 1600, 32},
  };
  for (const KnownShape& s : kShapes) {
    if (s.id == id) return s;
  }
  if (id == "iono") return kShapes[2];
  return std::nullopt;
}

std::optional<std::string> CheckKnownShape(std::string_view id,
                                           const Dataset& data) {
  const auto shape = FindKnownShape(id);
  if (!shape || (shape->rows == data.rows() && shape->cols == data.cols())) {
    return std::nullopt;
  }
  return "dataset '" + std::string(id) + "' is " + std::to_string(data.rows()) +
         "x" + std::to_string(data.cols()) + ", expected " +
         std::to_string(shape->rows) + "x" + std::to_string(shape->cols);
}

}  // namespace isoexplain
