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

#ifndef ISOEXPLAIN_RANDOM_H_
#define ISOEXPLAIN_RANDOM_H_

#include <cstdint>
#include <random>

namespace isoexplain {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t MixSeed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of the independent stream `stream` under the master seed `seed`. Used
// so that per-tree / per-pick / per-cell generators do not depend on the
// order in which work items are executed.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return MixSeed(MixSeed(seed) ^ MixSeed(stream + 0x632be59bd9b4e019ULL));
}

inline Rng MakeRng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(DeriveSeed(seed, stream));
}

}  // namespace isoexplain

#endif  // ISOEXPLAIN_RANDOM_H_
