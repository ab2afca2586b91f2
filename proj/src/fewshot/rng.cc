// Copyright 2026 The fewshot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fewshot/rng.h"

#include <cmath>

namespace fewshot {

std::uint64_t Rng::UniformIndex(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = Next();
    if (x >= threshold) return x % n;
  }
}

double Rng::Normal() {
  const double u1 = UniformUnit();
  const double u2 = UniformUnit();
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
  return radius * std::cos(6.283185307179586 * u2);
}

}  // namespace fewshot
