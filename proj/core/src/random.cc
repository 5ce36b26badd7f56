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

#include "srte/random.h"

#include <cmath>
#include <unordered_map>

namespace srte {

double Rng::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

double Rng::Exponential() { return -std::log1p(-Uniform()); }

std::vector<std::uint64_t> Rng::SampleWithoutReplacement(
    std::uint64_t population, std::uint64_t count) {
  // Sparse partial Fisher-Yates: only displaced slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t j = i + Below(population - i);
    auto slot = [&](std::uint64_t k) {
      auto it = displaced.find(k);
      return it == displaced.end() ? k : it->second;
    };
    std::uint64_t vi = slot(i);
    std::uint64_t vj = slot(j);
    out.push_back(vj);
    displaced[j] = vi;
  }
  return out;
}

}  // namespace srte
