// Copyright 2026 The belltab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLTAB_RNG_HPP
#define BELLTAB_RNG_HPP

#include <cstdint>
#include <random>

namespace belltab {

/// All randomness in the library flows through a seedable 64-bit PRNG so
/// that every run is reproducible from its recorded seed.
using Rng = std::mt19937_64;

/// splitmix64 finalizer. Used to derive independent stream seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for worker/shot stream `index` of a run seeded with `seed`.
inline uint64_t derive_stream_seed(uint64_t seed, uint64_t index) {
  return mix64(seed ^ mix64(index + 1));
}

/// Uniform double in [0, 1) built from the top 53 bits. Avoids the
/// implementation-defined std::uniform_real_distribution so that records
/// are reproducible across standard libraries.
inline double uniform_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace belltab

#endif  // BELLTAB_RNG_HPP
