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

#include "puqca/sector.hpp"

#include <bit>
#include <limits>

#include "puqca/combinatorics.hpp"

namespace puqca {

SectorBasis::SectorBasis(int n, int k) : n_(n), k_(k) {
    if (n <= 0 || n > kMaxSites || k < 0 || k > n) {
        throw std::invalid_argument("invalid sector (n, k)");
    }
    if (binomial(n, k) > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("sector too large");
    }
    states_ = weight_states(n, k);

    tiles_.resize(static_cast<std::size_t>(n));
    occupied_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const auto s = states_[i];
        const auto pos = static_cast<std::uint32_t>(i);
        for (int p = 0; p < n; ++p) {
            if (s & site_mask(n, p)) occupied_[static_cast<std::size_t>(p)].push_back(pos);
        }
        for (int left = 0; left < n; ++left) {
            const int right = (left + 1) % n;
            const std::uint64_t ml = site_mask(n, left);
            const std::uint64_t mr = site_mask(n, right);
            auto &table = tiles_[static_cast<std::size_t>(left)];
            const bool l = s & ml;
            const bool r = s & mr;
            if (!l && r) {
                table.lo.push_back(pos);
                table.hi.push_back(static_cast<std::uint32_t>(rank((s & ~mr) | ml)));
            } else if (l && r) {
                table.both.push_back(pos);
            } else if (!l && !r) {
                table.none.push_back(pos);
            }
        }
    }
}

std::size_t SectorBasis::rank(std::uint64_t index) const {
    if (std::popcount(index) != k_ || (index >> n_) != 0) {
        throw std::invalid_argument("basis index is not in this sector");
    }
    return static_cast<std::size_t>(weight_rank(index));
}

}  // namespace puqca
