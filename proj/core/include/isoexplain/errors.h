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

#ifndef ISOEXPLAIN_ERRORS_H_
#define ISOEXPLAIN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoexplain {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters (tree count, subsample size, grids, repeats, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Training data violating the dataset invariants (non-finite values, empty).
class DataError : public Error {
 public:
  using Error::Error;
};

// Bad argument to a query: dimension mismatch, out-of-range index, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// Normalization of an all-zero vector.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated model file.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Model file written by an unsupported format version.
class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

// CSV structure problem (ragged rows, empty file).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Non-numeric CSV cell. `row` counts data rows from 1 (the header is not a
// row) and `column` counts from 1.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t row, std::size_t column)
      : Error(message), row_(row), column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace isoexplain

#endif  // ISOEXPLAIN_ERRORS_H_
