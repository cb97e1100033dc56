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

#include "puqca/combinatorics.hpp"

#include <bit>
#include <stdexcept>

namespace puqca {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // Exact at every step: r * (n - k + i) is divisible by i.
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::vector<std::uint64_t> weight_states(int n, int k) {
    if (n < 0 || n > 63) {
        throw std::invalid_argument("weight_states: unsupported width");
    }
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) {
        return out;
    }
    out.reserve(binomial(n, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks same-weight integers in ascending order.
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        out.push_back(v);
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t weight_rank(std::uint64_t index) {
    std::uint64_t rank = 0;
    int i = 1;
    while (index != 0) {
        const int pos = std::countr_zero(index);
        rank += binomial(pos, i);
        ++i;
        index &= index - 1;
    }
    return rank;
}

}  // namespace puqca
