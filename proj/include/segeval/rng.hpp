// segeval/rng.hpp

// Copyright 2026  The segeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SEGEVAL_RNG_HPP_
#define SEGEVAL_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "segeval/core.hpp"

namespace segeval {

// Deterministic randomness for splits and synthetic fixtures. Every draw
// goes through mt19937_64 (whose output sequence the C++ standard pins
// down) plus the fixed mappings below, so a seed reproduces the same
// values on any platform or in a reimplementation. std::shuffle and the
// std::*_distribution classes are implementation-defined and therefore
// not used here.
//
// Mappings:
//   uniform():      (next_u64() >> 11) * 2^-53, uniform in [0, 1)
//   below(n):       rejection-sampled next_u64() % n, unbiased
//   gaussian():     Box-Muller, sqrt(-2 ln u1) * cos(2 pi u2) with
//                   u1 = 1 - uniform() in (0, 1], u2 = uniform()
//   shuffle(v):     Fisher-Yates from the back, swap(v[i-1], v[below(i)])
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw input_error("DeterministicRng::below: n must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Normal(0, sigma) with draws beyond limit_sigmas rejected.
  double truncated_gaussian(double sigma, double limit_sigmas = 3.0) {
    if (sigma == 0.0) return 0.0;
    double z = gaussian();
    while (std::abs(z) > limit_sigmas) z = gaussian();
    return z * sigma;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace segeval

#endif  // SEGEVAL_RNG_HPP_
