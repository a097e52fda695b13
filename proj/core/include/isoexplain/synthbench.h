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

#ifndef ISOEXPLAIN_SYNTHBENCH_H_
#define ISOEXPLAIN_SYNTHBENCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoexplain/dataset.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"
#include "isoexplain/random.h"

namespace isoexplain {

// n points split evenly (remainder to the first clusters) among n_clusters
// unit-variance isotropic Gaussians. Cluster c is centred at +5 in every
// coordinate when c is even and at -5 when c is odd; rows are grouped by
// cluster. Throws ConfigError when n < n_clusters or any count is zero.
Dataset GenerateClusters(std::size_t n, std::size_t d, std::size_t n_clusters,
                         std::uint64_t seed);

// Copy of x with every attribute j in `changed` set to
// multiplier * column_max[j]. Throws InputError when `changed` is empty or
// holds an index >= x.size().
std::vector<double> Anomalize(std::span<const double> x,
                              std::span<const double> column_max,
                              std::span<const std::size_t> changed,
                              double multiplier);

// Same, for row `example` of `data`, with column maxima over all rows.
std::vector<double> Anomalize(const Dataset& data, std::size_t example,
                              std::span<const std::size_t> changed,
                              double multiplier);

// Ideal explanation of an example anomalized on `changed`: 1/k on each of
// the k changed attributes, 0 elsewhere.
struct ExpectedVector {
  std::vector<double> weights;
  std::vector<std::size_t> changed;
};

// Throws InputError when `changed` is empty, has duplicates, or holds an
// index >= d.
ExpectedVector MakeExpectedVector(std::span<const std::size_t> changed,
                                  std::size_t d);

// Euclidean distance ||expected - w||_2.
double ExplanationError(std::span<const double> expected,
                        std::span<const double> w);

struct AnomalizationSpec {
  // Fraction of attributes changed per example, in (0, 1].
  double m_fraction = 0.1;
  // Examples drawn, with replacement, from the dataset.
  int n_examples = 100;
  double multiplier = 3.0;
  std::uint64_t seed = 0;
  int threads = 1;
};

// max(1, round(m_fraction * d)). Throws ConfigError unless
// 0 < m_fraction <= 1.
std::size_t NumChangedAttributes(double m_fraction, std::size_t d);

// One ground-truth pick: a row drawn uniformly and k distinct attributes
// drawn uniformly without replacement (sorted ascending).
struct Pick {
  std::size_t example = 0;
  std::vector<std::size_t> changed;
};

Pick DrawPick(std::size_t rows, std::size_t d, std::size_t k, Rng& rng);

struct GroundTruthResult {
  Method method = Method::kOurs;
  // Mean error over the picks that were not excluded.
  double mean_error = 0.0;
  // mean_error divided by the random baseline's mean error on the same picks.
  double normalized_error = 0.0;
  // Error per pick, NaN for excluded picks.
  std::vector<double> errors;
  // Picks whose explanation change was all zero and could not be normalized.
  std::size_t excluded = 0;
};

// Ground-truth simulation. For each of spec.n_examples picks (drawn with
// replacement): explain the example, anomalize k random attributes, explain
// it again, L1-normalize the change, and measure its distance to the
// expected vector. The random method instead draws one fresh random vector
// per pick. Results follow the order of `methods`; the random baseline used
// for normalization is computed regardless.
std::vector<GroundTruthResult> RunGroundTruth(const Dataset& data,
                                              const IsolationForest& forest,
                                              const AnomalizationSpec& spec,
                                              std::span<const Method> methods);

enum class SweepAxis { kSize, kDims, kMFraction };

std::string_view AxisName(SweepAxis axis);
SweepAxis ParseAxis(std::string_view name);

struct SweepConfig {
  std::size_t n = 1000;
  std::size_t d = 6;
  std::size_t n_clusters = 2;
  ForestOptions forest;
  AnomalizationSpec anomalization;
  std::vector<Method> methods = {Method::kOurs, Method::kDiffiLocal,
                                 Method::kRandom};
  std::uint64_t seed = 0;
};

struct SweepPoint {
  double axis_value = 0.0;
  std::vector<GroundTruthResult> results;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kMFraction;
  std::vector<SweepPoint> points;
};

// One RunGroundTruth per grid value on synthetic cluster data, all other
// parameters held at `config`. Data, forest and pick seeds are derived from
// config.seed and shared by every grid point. Throws ConfigError on an empty
// grid or a grid value invalid for its axis.
SweepTable Sweep(SweepAxis axis, std::span<const double> grid,
                 const SweepConfig& config);

// m_fraction sweep on a caller-supplied dataset; config.n, d and n_clusters
// are ignored. One forest is trained and shared by all grid points.
SweepTable SweepMFraction(const Dataset& data, std::span<const double> grid,
                          const SweepConfig& config);

// Long format: run_id,axis,axis_value,method,pick_index,error.
std::string FormatResultsCsv(const SweepTable& table);

// axis,axis_value,method,mean_error,normalized_error,used,excluded.
std::string FormatAggregateCsv(const SweepTable& table);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_SYNTHBENCH_H_
