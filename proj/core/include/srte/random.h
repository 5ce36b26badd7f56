// Copyright 2026 The srte Authors.
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

#ifndef SRTE_RANDOM_H_
#define SRTE_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace srte {

// Seeded generator whose outputs are identical on every platform: only the
// raw mt19937_64 stream is used, the standard distributions are not (their
// algorithms are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

  // Exponential with rate 1.
  double Exponential();

  // `count` distinct values from [0, population), in draw order.
  std::vector<std::uint64_t> SampleWithoutReplacement(std::uint64_t population,
                                                      std::uint64_t count);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace srte

#endif  // SRTE_RANDOM_H_
