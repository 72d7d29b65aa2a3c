// Copyright 2026 The kpres authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPRES_RNG_HPP
#define KPRES_RNG_HPP

#include <random>

#include "kpres/core.hpp"

namespace kpres {

/// Seeded generator: mt19937_64 with hand-rolled uniform/normal transforms so
/// that streams depend only on the seed, not on any standard-library
/// distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1].
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes two words per call.
  double normal() {
    double u1 = uniform_pos();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  Scalar normal_complex() {
    double re = normal();
    double im = normal();
    return Scalar(re, im);
  }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    require(lo <= hi, ErrorCode::BadArgument, "bad integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool coin() { return (next_u64() & 1u) != 0; }

  /// Independent child stream derived from this one.
  Rng split() {
    std::uint64_t s = next_u64() ^ 0x9e3779b97f4a7c15ULL;
    s ^= s >> 30;
    s *= 0xbf58476d1ce4e5b9ULL;
    s ^= s >> 27;
    return Rng(s);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace kpres

#endif  // KPRES_RNG_HPP
