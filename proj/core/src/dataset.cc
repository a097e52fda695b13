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

#include "isoexplain/dataset.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "isoexplain/errors.h"

namespace isoexplain {

std::vector<std::string> DefaultColumnNames(std::size_t cols) {
  std::vector<std::string> names;
  names.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) names.push_back("f" + std::to_string(j));
  return names;
}

Dataset::Dataset(std::size_t rows, std::size_t cols, std::vector<double> values,
                 std::vector<std::string> column_names)
    : rows_(rows),
      cols_(cols),
      values_(std::move(values)),
      column_names_(std::move(column_names)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DataError("dataset must have at least one row and one column");
  }
  if (values_.size() != rows_ * cols_) {
    throw DataError("dataset has " + std::to_string(values_.size()) +
                    " values, expected " + std::to_string(rows_ * cols_));
  }
  if (column_names_.empty()) column_names_ = DefaultColumnNames(cols_);
  if (column_names_.size() != cols_) {
    throw DataError("dataset has " + std::to_string(column_names_.size()) +
                    " column names for " + std::to_string(cols_) + " columns");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw DataError("non-finite value at row " + std::to_string(k / cols_) +
                      ", column " + std::to_string(k % cols_));
    }
  }
}

Dataset Dataset::FromRows(const std::vector<std::vector<double>>& rows,
                          std::vector<std::string> column_names) {
  if (rows.empty()) throw DataError("dataset must have at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DataError("rows have different lengths");
    values.insert(values.end(), r.begin(), r.end());
  }
  return Dataset(rows.size(), cols, std::move(values), std::move(column_names));
}

std::vector<double> Dataset::ColumnMax() const {
  std::vector<double> out(row(0).begin(), row(0).end());
  for (std::size_t i = 1; i < rows_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = std::max(out[j], r[j]);
  }
  return out;
}

Dataset Dataset::WithRow(std::span<const double> extra) const {
  if (extra.size() != cols_) {
    throw InputError("appended row has " + std::to_string(extra.size()) +
                     " values, expected " + std::to_string(cols_));
  }
  std::vector<double> values = values_;
  values.insert(values.end(), extra.begin(), extra.end());
  return Dataset(rows_ + 1, cols_, std::move(values), column_names_);
}

Dataset Dataset::SelectRows(std::span<const std::size_t> indices) const {
  std::vector<double> values;
  values.reserve(indices.size() * cols_);
  for (const std::size_t i : indices) {
    if (i >= rows_) throw InputError("row index out of range");
    const auto r = row(i);
    values.insert(values.end(), r.begin(), r.end());
  }
  return Dataset(indices.size(), cols_, std::move(values), column_names_);
}

}  // namespace isoexplain
