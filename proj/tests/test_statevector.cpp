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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "puqca/statevector.hpp"

namespace puqca {
namespace {

TEST(StateVector, VacuumAndBasisStates) {
    const StateVector vac(4);
    EXPECT_EQ(vac.dimension(), 16);
    EXPECT_EQ(vac[0], std::complex<double>(1.0));
    const auto psi = basis_state(Configuration("0110"));
    EXPECT_EQ(psi[6], std::complex<double>(1.0));
    EXPECT_DOUBLE_EQ(psi.norm(), 1.0);
}

TEST(StateVector, RejectsBadSizes) {
    EXPECT_THROW(StateVector(3), std::invalid_argument);
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(28), std::invalid_argument);
    EXPECT_THROW(StateVector(4, StateVector::Amplitudes::Zero(8)), std::invalid_argument);
}

TEST(StateVector, IdentityRuleLeavesBasisStatesUnchanged) {
    const Configuration b("110100");
    const auto psi = evolve(b, PuqcaRule::identity(), 5);
    EXPECT_TRUE(psi.amplitudes().isApprox(basis_state(b).amplitudes()));
}

TEST(StateVector, LayerTilesIncludeWrapBond) {
    const auto even = layer_tiles(6, 0);
    const auto odd = layer_tiles(6, 1);
    ASSERT_EQ(even.size(), 3U);
    ASSERT_EQ(odd.size(), 3U);
    EXPECT_EQ(even[2], std::make_pair(4, 5));
    EXPECT_EQ(odd[2], std::make_pair(5, 0));
}

TEST(StateVector, StepMatchesKroneckerOracle) {
    std::mt19937_64 rng(11);
    for (int n : {4, 6}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto rule = oracle::random_rule(rng);
            for (bool odd_first : {false, true}) {
                const auto u = oracle::step_unitary(n, rule, odd_first);
                for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); l += 3) {
                    const auto psi = step(basis_state(Configuration(n, l)), rule,
                                          odd_first ? LayerOrder::odd_first : LayerOrder::even_first);
                    const Eigen::VectorXcd expected = u.col(static_cast<Eigen::Index>(l));
                    EXPECT_LE((psi.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-13);
                }
            }
        }
    }
}

TEST(StateVector, EmbedAndKroneckerOraclesAgree) {
    const Eigen::Matrix4cd u = gate_matrix(GateParams(0.4, 1.0, 2.0, 3.0, 0.5));
    for (int l = 0; l + 1 < 6; ++l) {
        EXPECT_LE((oracle::embed_two_site(6, u, l, l + 1) - oracle::kron_two_site(6, u, l)).cwiseAbs().maxCoeff(),
                  1e-15);
    }
}

TEST(StateVector, ApplyTwoSiteValidatesTile) {
    StateVector psi(4);
    const Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    EXPECT_THROW(apply_two_site(psi, u, 1, 1), std::out_of_range);
    EXPECT_THROW(apply_two_site(psi, u, -1, 0), std::out_of_range);
    EXPECT_THROW(apply_two_site(psi, u, 0, 4), std::out_of_range);
}

TEST(StateVector, SwapGateMovesExcitation) {
    // θ = π/2, γ = 0, α = π: |01⟩ → |10⟩ and |10⟩ → |01⟩ up to sign.
    StateVector psi = basis_state(Configuration("0100"));
    const Eigen::Matrix4cd u = gate_matrix(GateParams(kTwoPi / 4, kTwoPi / 2, 0.0, 0.0));
    apply_two_site(psi, u, 0, 1);
    EXPECT_NEAR(excitation_probability(psi, 0), 1.0, 1e-15);
    EXPECT_NEAR(excitation_probability(psi, 1), 0.0, 1e-15);
}

TEST(StateVector, ExcitationProbabilityAndProfile) {
    std::mt19937_64 rng(3);
    const auto rule = oracle::random_rule(rng);
    const Configuration b("11010010");
    const auto psi = evolve(b, rule, 4);
    const auto profile = marginal_profile(psi);
    EXPECT_NEAR(std::accumulate(profile.begin(), profile.end(), 0.0), b.weight(), 1e-12);
    for (int p = 0; p < 8; ++p) {
        EXPECT_NEAR(profile[static_cast<std::size_t>(p)], excitation_probability(psi, p), 1e-14);
    }
    EXPECT_THROW(excitation_probability(psi, 8), std::out_of_range);
    EXPECT_THROW(evolve(b, rule, -1), std::invalid_argument);
}

TEST(StateVector, TranslateRotatesBasisStates) {
    for (const char *bits : {"10110000", "00000001", "11111110"}) {
        const Configuration b(bits);
        for (int m = -3; m <= 9; ++m) {
            const auto moved = translate(basis_state(b), m);
            EXPECT_TRUE(moved.amplitudes().isApprox(basis_state(b.translated(m)).amplitudes())) << bits << " " << m;
        }
    }
}

TEST(StateVector, FloatTracksDouble) {
    std::mt19937_64 rng(5);
    const auto rule = oracle::random_rule(rng);
    const Configuration b("110100");
    const auto pd = evolve<double>(b, rule, 6);
    const auto pf = evolve<float>(b, rule, 6);
    EXPECT_LE((pf.amplitudes().cast<std::complex<double>>() - pd.amplitudes()).cwiseAbs().maxCoeff(), 1e-5);
}

}  // namespace
}  // namespace puqca
