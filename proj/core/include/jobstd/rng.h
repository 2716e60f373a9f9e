// Copyright 2026 The jobstd Authors.
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

#ifndef JOBSTD_RNG_H_
#define JOBSTD_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace jobstd {

// Seeded generator whose outputs are identical on every platform: the
// standard distributions are implementation-defined, so the integer and
// real mappings are spelled out here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, n); n must be positive.
  size_t Uniform(size_t n) { return static_cast<size_t>(Next() % n); }

  // Uniform in [lo, hi] (inclusive).
  int64_t Between(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(Uniform(static_cast<size_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  double Real(double lo, double hi) { return lo + (hi - lo) * UniformDouble(); }

  bool Bernoulli(double p) { return UniformDouble() < p; }

  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[Uniform(items.size())];
  }

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::vector<T> &items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

  // k distinct elements in random order (all of them if k >= size).
  template <typename T>
  std::vector<T> Sample(std::vector<T> items, size_t k) {
    Shuffle(items);
    if (items.size() > k) items.resize(k);
    return items;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jobstd

#endif  // JOBSTD_RNG_H_
