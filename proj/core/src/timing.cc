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

#include "isoexplain/timing.h"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>

#include "isoexplain/csv.h"
#include "isoexplain/errors.h"
#include "isoexplain/random.h"
#include "isoexplain/synthbench.h"

namespace isoexplain {
namespace {

struct TimedPick {
  std::vector<double> original;
  std::vector<double> modified;
};

std::vector<TimedPick> DrawPicks(const Dataset& data, double m_fraction,
                            const BenchOptions& options) {
  const std::size_t d = data.cols();
  const std::size_t k = NumChangedAttributes(m_fraction, d);
  const std::vector<double> column_max = data.ColumnMax();
  std::vector<TimedPick> picks;
  picks.reserve(static_cast<std::size_t>(options.n_examples));
  for (int p = 0; p < options.n_examples; ++p) {
    Rng rng = MakeRng(options.seed, static_cast<std::uint64_t>(p));
    const Pick pick = DrawPick(data.rows(), d, k, rng);
    const auto x = data.row(pick.example);
    picks.push_back({{x.begin(), x.end()},
                     Anomalize(x, column_max, pick.changed, options.multiplier)});
  }
  return picks;
}

}  // namespace

std::vector<TimingRecord> BenchExplain(const IsolationForest& forest,
                                       const Dataset& data,
                                       std::span<const Method> methods,
                                       std::span<const double> m_grid,
                                       const BenchOptions& options) {
  if (options.repeats < 3) {
    throw ConfigError("timing needs at least 3 repeats, got " +
                      std::to_string(options.repeats));
  }
  if (options.n_examples < 1) throw ConfigError("timing needs n_examples >= 1");
  if (m_grid.empty() || methods.empty()) {
    throw ConfigError("timing needs at least one method and one m value");
  }
  if (forest.num_features() != data.cols()) {
    throw InputError("forest and dataset dimensions differ");
  }

  using Clock = std::chrono::steady_clock;
  std::vector<TimingRecord> records;
  for (const double m : m_grid) {
    const std::vector<TimedPick> picks = DrawPicks(data, m, options);
    for (const Method method : methods) {
      Rng rng = MakeRng(options.seed, 0x7469'6d65ULL);
      double sink = 0.0;
      auto pass = [&]() {
        for (const TimedPick& pick : picks) {
          sink += Explain(method, forest, pick.original, rng).weights.front();
          sink += Explain(method, forest, pick.modified, rng).weights.front();
        }
      };
      pass();  // warm-up
      std::vector<double> seconds;
      for (int r = 0; r < options.repeats; ++r) {
        const auto start = Clock::now();
        pass();
        seconds.push_back(std::chrono::duration<double>(Clock::now() - start).count());
      }
      // Keeps the explanation calls observable.
      volatile double keep = sink;
      (void)keep;
      std::nth_element(seconds.begin(), seconds.begin() + seconds.size() / 2,
                       seconds.end());
      const double median = seconds[seconds.size() / 2];
      records.push_back({method, options.dataset_id, m,
                         std::max(median, 1e-12) / static_cast<double>(picks.size())});
    }
  }
  return records;
}

std::string FormatTimingCsv(std::span<const TimingRecord> records) {
  std::string out = "method,dataset_id,m_fraction,seconds_per_example\n";
  for (const TimingRecord& r : records) {
    out += std::string(MethodName(r.method)) + ',' + r.dataset_id + ',' +
           FormatNumber(r.m_fraction) + ',' + FormatNumber(r.seconds_per_example) + '\n';
  }
  return out;
}

}  // namespace isoexplain
