// Copyright 2026 The Stylolab Authors.
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

#ifndef STYLOLAB_COMMON_RANDOM_H_
#define STYLOLAB_COMMON_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace stylolab {

// Seeded generator whose output is identical on every platform.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not, so all derived draws are implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t UniformIndex(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

  // Standard normal draw (Box-Muller, no cached second value).
  double Normal();

  bool Bernoulli(double p) { return UniformDouble() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = UniformIndex(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Mixes a base seed with a stream index (per-tree, per-fold seeds).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_RANDOM_H_
