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

#ifndef ISOEXPLAIN_DATASET_H_
#define ISOEXPLAIN_DATASET_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace isoexplain {

// Dense n x d matrix of finite reals, stored row-major, with one label per
// column. Construction validates every invariant, so a Dataset in hand is
// always usable for training.
class Dataset {
 public:
  // Throws DataError on non-finite values, n == 0, d == 0, a value count that
  // is not n * d, or a column name count different from d. Empty
  // `column_names` generates f0..f(d-1).
  Dataset(std::size_t rows, std::size_t cols, std::vector<double> values,
          std::vector<std::string> column_names = {});

  // Row-per-vector convenience constructor.
  static Dataset FromRows(const std::vector<std::vector<double>>& rows,
                          std::vector<std::string> column_names = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double at(std::size_t row, std::size_t col) const {
    return values_[row * cols_ + col];
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& column_names() const { return column_names_; }

  // Maximum of every column over all rows.
  std::vector<double> ColumnMax() const;

  // New dataset with `extra` appended as the last row.
  Dataset WithRow(std::span<const double> extra) const;

  // Subset of rows, in the given order.
  Dataset SelectRows(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
  std::vector<std::string> column_names_;
};

std::vector<std::string> DefaultColumnNames(std::size_t cols);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_DATASET_H_
