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

#include "isoexplain/synthbench.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "isoexplain/csv.h"
#include "isoexplain/errors.h"
#include "isoexplain/parallel.h"
#include "isoexplain/random.h"

namespace isoexplain {

Dataset GenerateClusters(std::size_t n, std::size_t d, std::size_t n_clusters,
                         std::uint64_t seed) {
  if (n_clusters == 0 || d == 0) {
    throw ConfigError("need at least one cluster and one dimension");
  }
  if (n < n_clusters) {
    throw ConfigError("cannot split " + std::to_string(n) + " points among " +
                      std::to_string(n_clusters) + " clusters");
  }
  Rng rng(DeriveSeed(seed, 0));
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> values;
  values.reserve(n * d);
  for (std::size_t c = 0; c < n_clusters; ++c) {
    const std::size_t count = n / n_clusters + (c < n % n_clusters ? 1 : 0);
    const double center = c % 2 == 0 ? 5.0 : -5.0;
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < d; ++j) values.push_back(center + noise(rng));
    }
  }
  return Dataset(n, d, std::move(values));
}

std::vector<double> Anomalize(std::span<const double> x,
                              std::span<const double> column_max,
                              std::span<const std::size_t> changed,
                              double multiplier) {
  if (changed.empty()) throw InputError("no attribute selected for anomalization");
  if (column_max.size() != x.size()) {
    throw InputError("column maxima do not match the example's dimension");
  }
  std::vector<double> out(x.begin(), x.end());
  for (const std::size_t j : changed) {
    if (j >= x.size()) {
      throw InputError("anomalized attribute " + std::to_string(j) +
                       " is out of range");
    }
    out[j] = multiplier * column_max[j];
  }
  return out;
}

std::vector<double> Anomalize(const Dataset& data, std::size_t example,
                              std::span<const std::size_t> changed,
                              double multiplier) {
  if (example >= data.rows()) throw InputError("example index out of range");
  return Anomalize(data.row(example), data.ColumnMax(), changed, multiplier);
}

ExpectedVector MakeExpectedVector(std::span<const std::size_t> changed,
                                  std::size_t d) {
  if (changed.empty()) throw InputError("expected vector needs k >= 1");
  ExpectedVector out{std::vector<double>(d, 0.0), {changed.begin(), changed.end()}};
  std::sort(out.changed.begin(), out.changed.end());
  if (std::adjacent_find(out.changed.begin(), out.changed.end()) !=
      out.changed.end()) {
    throw InputError("duplicate anomalized attribute");
  }
  if (out.changed.back() >= d) throw InputError("anomalized attribute out of range");
  const double share = 1.0 / static_cast<double>(out.changed.size());
  for (const std::size_t j : out.changed) out.weights[j] = share;
  return out;
}

double ExplanationError(std::span<const double> expected,
                        std::span<const double> w) {
  if (expected.size() != w.size()) {
    throw InputError("explanation vectors differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double diff = expected[i] - w[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

std::size_t NumChangedAttributes(double m_fraction, std::size_t d) {
  if (!(m_fraction > 0.0 && m_fraction <= 1.0)) {
    throw ConfigError("m_fraction must lie in (0, 1], got " + FormatNumber(m_fraction));
  }
  const auto k = static_cast<std::size_t>(std::llround(m_fraction * static_cast<double>(d)));
  return std::max<std::size_t>(1, k);
}

Pick DrawPick(std::size_t rows, std::size_t d, std::size_t k, Rng& rng) {
  if (rows == 0 || k == 0 || k > d) throw InputError("invalid pick dimensions");
  Pick pick;
  pick.example = std::uniform_int_distribution<std::size_t>(0, rows - 1)(rng);
  pick.changed.resize(d);
  std::iota(pick.changed.begin(), pick.changed.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> draw(i, d - 1);
    std::swap(pick.changed[i], pick.changed[draw(rng)]);
  }
  pick.changed.resize(k);
  std::sort(pick.changed.begin(), pick.changed.end());
  return pick;
}

std::vector<GroundTruthResult> RunGroundTruth(const Dataset& data,
                                              const IsolationForest& forest,
                                              const AnomalizationSpec& spec,
                                              std::span<const Method> methods) {
  if (forest.num_features() != data.cols()) {
    throw InputError("forest and dataset dimensions differ");
  }
  if (spec.n_examples < 1) throw ConfigError("n_examples must be >= 1");
  if (!std::isfinite(spec.multiplier)) throw ConfigError("multiplier must be finite");

  const std::size_t d = data.cols();
  const std::size_t k = NumChangedAttributes(spec.m_fraction, d);
  const auto picks = static_cast<std::size_t>(spec.n_examples);
  const std::vector<double> column_max = data.ColumnMax();
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  std::vector<std::vector<double>> errors(methods.size(),
                                          std::vector<double>(picks, kNaN));
  std::vector<double> random_errors(picks, kNaN);

  ParallelFor(picks, spec.threads, [&](std::size_t p) {
    Rng rng = MakeRng(spec.seed, p);
    const Pick pick = DrawPick(data.rows(), d, k, rng);
    const ExpectedVector expected = MakeExpectedVector(pick.changed, d);

    const auto original = data.row(pick.example);
    const std::vector<double> modified =
        Anomalize(original, column_max, expected.changed, spec.multiplier);

    random_errors[p] = ExplanationError(expected.weights, ExplainRandom(d, rng).weights);

    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      if (methods[mi] == Method::kRandom) {
        errors[mi][p] = random_errors[p];
        continue;
      }
      const ExplanationVector before = Explain(methods[mi], forest, original, rng);
      ExplanationVector change = Explain(methods[mi], forest, modified, rng);
      // after - before: attributes gaining importance come out positive.
      for (std::size_t j = 0; j < d; ++j) change.weights[j] -= before.weights[j];
      try {
        errors[mi][p] = ExplanationError(expected.weights, Normalize(change).weights);
      } catch (const NormalizationError&) {
        // Left as NaN and counted as excluded below.
      }
    }
  });

  std::vector<GroundTruthResult> results;
  results.reserve(methods.size());
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    GroundTruthResult r;
    r.method = methods[mi];
    r.errors = std::move(errors[mi]);
    double sum = 0.0;
    double random_sum = 0.0;
    for (std::size_t p = 0; p < picks; ++p) {
      if (std::isnan(r.errors[p])) {
        ++r.excluded;
        continue;
      }
      sum += r.errors[p];
      random_sum += random_errors[p];
    }
    const std::size_t used = picks - r.excluded;
    r.mean_error = used > 0 ? sum / static_cast<double>(used) : kNaN;
    r.normalized_error = used > 0 ? sum / random_sum : kNaN;
    results.push_back(std::move(r));
  }
  return results;
}

std::string_view AxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kSize:
      return "size";
    case SweepAxis::kDims:
      return "dims";
    case SweepAxis::kMFraction:
      return "m_fraction";
  }
  return "unknown";
}

SweepAxis ParseAxis(std::string_view name) {
  for (const SweepAxis a : {SweepAxis::kSize, SweepAxis::kDims, SweepAxis::kMFraction}) {
    if (AxisName(a) == name) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

namespace {

std::size_t GridCount(double value, std::string_view axis) {
  if (!(value >= 1.0) || value != std::floor(value)) {
    throw ConfigError(std::string(axis) + " grid values must be positive integers, got " +
                      FormatNumber(value));
  }
  return static_cast<std::size_t>(value);
}

SweepPoint RunPoint(const Dataset& data, const IsolationForest& forest,
                    double axis_value, AnomalizationSpec spec,
                    const SweepConfig& config) {
  spec.seed = DeriveSeed(config.seed, 3);
  return {axis_value, RunGroundTruth(data, forest, spec, config.methods)};
}

ForestOptions DerivedForestOptions(const SweepConfig& config) {
  ForestOptions options = config.forest;
  options.seed = DeriveSeed(config.seed, 2);
  return options;
}

}  // namespace

SweepTable Sweep(SweepAxis axis, std::span<const double> grid,
                 const SweepConfig& config) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  const std::uint64_t data_seed = DeriveSeed(config.seed, 1);
  if (axis == SweepAxis::kMFraction) {
    const Dataset data =
        GenerateClusters(config.n, config.d, config.n_clusters, data_seed);
    return SweepMFraction(data, grid, config);
  }

  SweepTable table{axis, {}};
  for (const double value : grid) {
    std::size_t n = config.n;
    std::size_t d = config.d;
    (axis == SweepAxis::kSize ? n : d) = GridCount(value, AxisName(axis));
    const Dataset data = GenerateClusters(n, d, config.n_clusters, data_seed);
    const IsolationForest forest = FitForest(data, DerivedForestOptions(config));
    table.points.push_back(RunPoint(data, forest, value, config.anomalization, config));
  }
  return table;
}

SweepTable SweepMFraction(const Dataset& data, std::span<const double> grid,
                          const SweepConfig& config) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  for (const double m : grid) NumChangedAttributes(m, data.cols());
  const IsolationForest forest = FitForest(data, DerivedForestOptions(config));
  SweepTable table{SweepAxis::kMFraction, {}};
  for (const double m : grid) {
    AnomalizationSpec spec = config.anomalization;
    spec.m_fraction = m;
    table.points.push_back(RunPoint(data, forest, m, spec, config));
  }
  return table;
}

std::string FormatResultsCsv(const SweepTable& table) {
  std::string out = "run_id,axis,axis_value,method,pick_index,error\n";
  const std::string axis(AxisName(table.axis));
  for (std::size_t run = 0; run < table.points.size(); ++run) {
    const SweepPoint& point = table.points[run];
    for (const GroundTruthResult& r : point.results) {
      for (std::size_t p = 0; p < r.errors.size(); ++p) {
        out += std::to_string(run) + ',' + axis + ',' + FormatNumber(point.axis_value) +
               ',' + std::string(MethodName(r.method)) + ',' + std::to_string(p) + ',' +
               FormatNumber(r.errors[p]) + '\n';
      }
    }
  }
  return out;
}

std::string FormatAggregateCsv(const SweepTable& table) {
  std::string out = "axis,axis_value,method,mean_error,normalized_error,used,excluded\n";
  const std::string axis(AxisName(table.axis));
  for (const SweepPoint& point : table.points) {
    for (const GroundTruthResult& r : point.results) {
      out += axis + ',' + FormatNumber(point.axis_value) + ',' +
             std::string(MethodName(r.method)) + ',' + FormatNumber(r.mean_error) + ',' +
             FormatNumber(r.normalized_error) + ',' +
             std::to_string(r.errors.size() - r.excluded) + ',' +
             std::to_string(r.excluded) + '\n';
    }
  }
  return out;
}

}  // namespace isoexplain
