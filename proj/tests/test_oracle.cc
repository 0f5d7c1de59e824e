// Copyright 2026 The tcc-davies Authors
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

#include "tcc/oracle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tcc/code.h"
#include "tcc/ising.h"
#include "tcc/tcc.h"
#include "test_util.h"

namespace tcc {
namespace {

SpectralDensity flat(double beta) { return {SpectralDensity::Kind::Flat, beta, 6.0}; }

TEST(Oracle, PauliExpansionRoundTrip) {
    std::mt19937_64 rng(4);
    PauliSum s(5);
    for (int k = 0; k < 12; ++k) s.add(testing::random_pauli(5, rng), {0.1 * k, -0.05 * k});
    auto back = DenseOracle::to_pauli_sum(DenseOracle::to_matrix(s), 5);
    EXPECT_LT((back - s).max_abs_coefficient(), 1e-14);
}

TEST(Oracle, EnergiesMatchConfigurations) {
    auto model = tcc_model(StabilizerCode(build_hex_torus(3)));
    DenseOracle oracle(model, flat(1.0));
    std::vector<double> expected;
    for (std::uint64_t c = 0; c < (1ULL << model.rank()); ++c) expected.push_back(model.energy(c));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    auto expect_close = [](const std::vector<double>& a, const std::vector<double>& b) {
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
    };
    expect_close(oracle.energies(), expected);
    for (std::size_t j = 0; j < model.jumps().size(); ++j) expect_close(oracle.bohr_frequencies(j), model.bohr_frequencies(j));
}

TEST(Oracle, GibbsStateIsNormalizedAndStationary) {
    auto chain = build_inhomogeneous(4);
    auto model = chain.model();
    DenseOracle oracle(model, flat(0.7));
    EXPECT_NEAR(oracle.rho().diagonal().sum().real(), 1.0, 1e-14);
    EXPECT_LT(oracle.rho_commutation_residual(), 1e-12);
    DenseOracle::Matrix id(16, 16);
    id.setIdentity();
    EXPECT_LT(testing::max_abs(oracle.apply(id)), 1e-14);
}

TEST(Oracle, SpectrumOfMinimalTorus) {
    auto model = tcc_model(StabilizerCode(build_hex_torus(3)));
    DenseOracle oracle(model, flat(1.0));
    auto spec = oracle.spectrum(0);
    EXPECT_LT(spec.hermiticity_residual, 1e-12);
    auto all = spec.all_eigenvalues();
    EXPECT_EQ(all.size(), 4096u);
    EXPECT_GT(all.front(), -1e-10);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](double v) { return std::abs(v) < 1e-9; }), 1);
    PauliKey id{0, 0};
    EXPECT_EQ(spec.components[spec.component_of(id)].size(), 4u);
}

TEST(Oracle, CosetSpanIsInvariant) {
    auto model = tcc_model(StabilizerCode(build_hex_torus(3)));
    DenseOracle oracle(model, flat(1.0));
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        auto rep = testing::random_pauli(6, rng).unsigned_part();
        std::vector<PauliOperator> basis;
        for (std::uint64_t m = 0; m < (1ULL << model.rank()); ++m) basis.push_back(rep * model.group_element(m));
        auto r = oracle.restrict_to(basis);
        EXPECT_LT(r.closure_residual, 1e-12);
        auto h = oracle.hermitian_block(basis);
        EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Oracle, RefusesLargeSystems) {
    auto model = tcc_model(StabilizerCode(build_hex_torus(12)), ModelPart::ZHalf);
    EXPECT_THROW(DenseOracle(model, flat(1.0)), std::invalid_argument);
}

}  // namespace
}  // namespace tcc
