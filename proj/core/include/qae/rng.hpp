// Copyright 2026 The qae Authors
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

#ifndef QAE_RNG_HPP_
#define QAE_RNG_HPP_

#include <array>
#include <complex>
#include <cstdint>

namespace qae {

/// Splittable pseudo-random generator (xoshiro256++ seeded through
/// splitmix64). All randomness in the library flows through explicit Rng
/// values; there is no global state. Identical seeds give bit-identical
/// streams on every platform, including the Gaussian variates, which are
/// produced by an in-house Box-Muller rather than std::normal_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Stream `stream` of the generator family rooted at `seed`. Streams with
  /// distinct indices are statistically independent; used to give each Monte
  /// Carlo grid point its own generator.
  Rng(std::uint64_t seed, std::uint64_t stream);

  /// Child generator derived from (and advancing) this one.
  Rng split();

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box-Muller).
  double normal();

  /// Complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal();

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace qae

#endif  // QAE_RNG_HPP_
