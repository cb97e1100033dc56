// Copyright 2026 The puqca Authors
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

#pragma once

#include <cstdint>
#include <vector>

namespace puqca {

/// Binomial coefficient C(n, k); zero when k is out of range.
std::uint64_t binomial(int n, int k);

/// All n-bit basis indices of Hamming weight k, ascending. Ascending index order is the
/// lexicographic order of the bit strings b_0 … b_{n-1}.
std::vector<std::uint64_t> weight_states(int n, int k);

/// Position of a weight-k index inside weight_states(n, k) (combinatorial number system).
std::uint64_t weight_rank(std::uint64_t index);

}  // namespace puqca
