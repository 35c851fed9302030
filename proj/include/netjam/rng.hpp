// Copyright 2026 The netjam Authors
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

#ifndef NETJAM_RNG_HPP_
#define NETJAM_RNG_HPP_

#include <cstdint>
#include <random>

namespace netjam {

// Purpose tags mixed into derived seeds so that the graph and the traffic of
// one realization never share a stream.
enum class StreamPurpose : std::uint64_t {
  kGraph = 0x67726170,
  kTraffic = 0x74726166,
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for realization `index` of an ensemble driven by `master`.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                    StreamPurpose purpose) {
  return mix64(mix64(master ^ static_cast<std::uint64_t>(purpose)) + index);
}

// Random source used by every stochastic choice in the library.
//
// The engine is mt19937_64, whose output sequence is fixed by the standard.
// The distribution helpers below are written out instead of using the
// <random> distributions, whose outputs are implementation-defined, so that
// a given seed produces the same trajectory with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection on the top of the range removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double prob) { return uniform01() < prob; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netjam

#endif  // NETJAM_RNG_HPP_
