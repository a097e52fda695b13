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

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "isoexplain/errors.h"
#include "test_util.h"

namespace isoexplain {
namespace {

TEST(ParseCsv, HeaderAndValues) {
  const Dataset data = ParseCsv("a,b\n1,2\n3,4\n5,6\n");
  EXPECT_EQ(data.rows(), 3u);
  EXPECT_EQ(data.cols(), 2u);
  EXPECT_EQ(data.column_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(data.at(2, 1), 6.0);
}

TEST(ParseCsv, HeaderModes) {
  const Dataset plain = ParseCsv("1,2\n3,4\n");
  EXPECT_EQ(plain.rows(), 2u);
  EXPECT_EQ(plain.column_names(), (std::vector<std::string>{"f0", "f1"}));
  EXPECT_EQ(ParseCsv("1,2\n3,4\n", HeaderMode::kPresent).rows(), 1u);
  EXPECT_THROW(ParseCsv("a,b\n1,2\n", HeaderMode::kAbsent), ParseError);
}

TEST(ParseCsv, ToleratesCrlfAndMissingFinalNewline) {
  const Dataset data = ParseCsv("x,y\r\n1, 2\r\n3,4");
  EXPECT_EQ(data.rows(), 2u);
  EXPECT_EQ(data.at(0, 1), 2.0);
}

TEST(ParseCsv, ReportsNonNumericCell) {
  try {
    ParseCsv("a,b\n1,2\n3,abc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(ParseCsv, StructuralErrors) {
  EXPECT_THROW(ParseCsv("a,b\n1,2\n3\n"), StructureError);
  EXPECT_THROW(ParseCsv(""), StructureError);
  EXPECT_THROW(ParseCsv("a,b\n"), StructureError);
  EXPECT_THROW(ParseCsv("a,b\n1,nan\n"), DataError);
}

TEST(FormatCsv, RoundTripsExactly) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const std::size_t d = 1 + trial % 4;
    std::vector<double> values(n * d);
    for (double& v : values) v = value(rng) * std::pow(10.0, trial % 9 - 4);
    values[0] = std::numeric_limits<double>::denorm_min();
    const Dataset data(n, d, values);
    EXPECT_EQ(ParseCsv(FormatCsv(data)), data);
  }
}

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(FormatNumber(0.1), "0.10000000000000001");
  EXPECT_EQ(FormatNumber(2.0), "2");
}

TEST(Files, AtomicWriteAndLoad) {
  testing::TempDir dir;
  const std::string path = dir.File("t.csv");
  WriteFileAtomic(path, "p,q\n1,2\n");
  EXPECT_EQ(ReadFile(path), "p,q\n1,2\n");
  EXPECT_EQ(LoadCsv(path).column_names(), (std::vector<std::string>{"p", "q"}));
  EXPECT_THROW(LoadCsv(dir.File("missing.csv")), Error);
}

TEST(KnownShape, Table) {
  ASSERT_TRUE(FindKnownShape("glass").has_value());
  EXPECT_EQ(FindKnownShape("glass")->rows, 214u);
  EXPECT_EQ(FindKnownShape("glass")->cols, 10u);
  EXPECT_EQ(FindKnownShape("cardio")->cols, 21u);
  EXPECT_EQ(FindKnownShape("ionosphere")->rows, 351u);
  EXPECT_EQ(FindKnownShape("lympho")->rows, 148u);
  EXPECT_EQ(FindKnownShape("musk")->cols, 166u);
  EXPECT_EQ(FindKnownShape("letter")->rows, 1600u);
  EXPECT_FALSE(FindKnownShape("iris").has_value());
}

TEST(KnownShape, Check) {
  const Dataset small = testing::RandomGaussian(5, 10, 1);
  EXPECT_TRUE(CheckKnownShape("glass", small).has_value());
  EXPECT_FALSE(CheckKnownShape("glass", testing::RandomGaussian(214, 10, 1)).has_value());
  EXPECT_FALSE(CheckKnownShape("custom", small).has_value());
}

}  // namespace
}  // namespace isoexplain
