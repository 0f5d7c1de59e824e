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

#include "tcc/model.h"

#include <gtest/gtest.h>

#include <random>

#include "tcc/code.h"
#include "tcc/oracle.h"
#include "tcc/tcc.h"
#include "test_util.h"

namespace tcc {
namespace {

CommutingPauliModel minimal_model() { return tcc_model(StabilizerCode(build_hex_torus(3))); }

TEST(Model, MinimalTorusRankAndFrequencies) {
    auto model = minimal_model();
    EXPECT_EQ(model.num_qubits(), 6u);
    EXPECT_EQ(model.rank(), 2u);
    EXPECT_EQ(model.jumps().size(), 12u);
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        EXPECT_EQ(model.bohr_frequencies(j), (std::vector<double>{-6.0, 6.0}));
    }
    EXPECT_DOUBLE_EQ(model.max_bohr_frequency(), 6.0);
}

TEST(Model, HalfModelAtTwelvePlaquettes) {
    StabilizerCode code(build_hex_torus(12));
    auto model = tcc_model(code, ModelPart::ZHalf);
    EXPECT_EQ(model.rank(), 10u);
    EXPECT_EQ(model.jumps().size(), 24u);
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        EXPECT_EQ(model.jumps()[j].flipped_terms.size(), 3u);
        EXPECT_EQ(model.bohr_frequencies(j), (std::vector<double>{-6.0, -2.0, 2.0, 6.0}));
    }
    EXPECT_EQ(model.energy(0), -12.0);
}

TEST(Model, CouplingScalesFrequencies) {
    StabilizerCode code(build_hex_torus(12));
    auto model = tcc_model(code, ModelPart::XHalf, 0.5);
    EXPECT_EQ(model.bohr_frequencies(0), (std::vector<double>{-3.0, -1.0, 1.0, 3.0}));
}

TEST(Model, GroupElementsDecompose) {
    StabilizerCode code(build_hex_torus(12));
    auto model = tcc_model(code, ModelPart::ZHalf);
    for (std::uint64_t m = 0; m < (1ULL << model.rank()); m += 37) {
        auto d = model.decompose(model.group_element(m));
        ASSERT_TRUE(d.has_value());
        EXPECT_EQ(d->mask, m);
        EXPECT_EQ(d->phase_exp, 0);
    }
    EXPECT_FALSE(model.decompose(PauliOperator::single(24, 0, 'X')).has_value());
    EXPECT_FALSE(model.decompose(code.logical_z()[0]).has_value());
}

TEST(Model, FrequencyProjectorsResolveIdentity) {
    StabilizerCode code(build_hex_torus(12));
    auto model = tcc_model(code, ModelPart::ZHalf);
    for (std::size_t j : {0, 7, 23}) {
        PauliSum total(model.num_qubits());
        for (double w : model.bohr_frequencies(j)) {
            auto p = model.frequency_projector(j, w);
            EXPECT_LT((p * p - p).max_abs_coefficient(), 1e-12);
            total += p;
        }
        total.prune(1e-12);
        EXPECT_LT((total - PauliSum(PauliOperator(model.num_qubits()))).max_abs_coefficient(), 1e-12);
    }
}

TEST(Model, CosetCountMatchesOrbits) {
    auto model = minimal_model();
    auto reps = model.coset_representatives();
    EXPECT_EQ(reps.size() * model.orbit_size(), 1ULL << model.log2_num_cosets());
    EXPECT_EQ(model.log2_num_cosets(), 10u);
}

TEST(Model, RejectsNoncommutingTerms) {
    std::vector<ModelTerm> terms = {{PauliOperator::parse("XI"), 1.0}, {PauliOperator::parse("ZI"), 1.0}};
    EXPECT_THROW(CommutingPauliModel(2, terms, {PauliOperator::parse("XI")}), std::invalid_argument);
}

TEST(Thermal, ProbabilitiesAreNormalized) {
    auto model = minimal_model();
    for (double beta : {0.0, 0.5, 3.0}) {
        ThermalState thermal(model, beta);
        double total = 0;
        for (double p : thermal.probabilities()) total += p;
        EXPECT_NEAR(total, 1.0, 1e-14);
        PauliOperator id(model.num_qubits());
        EXPECT_NEAR(std::abs(thermal.inner_product(id, id) - 1.0), 0.0, 1e-14);
    }
}

TEST(Thermal, InfiniteTemperatureIsTraceInnerProduct) {
    auto model = minimal_model();
    ThermalState thermal(model, 0.0);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testing::random_pauli(6, rng);
        auto b = testing::random_pauli(6, rng);
        bool same = a.x_bits() == b.x_bits() && a.z_bits() == b.z_bits();
        auto ip = thermal.inner_product(a, b);
        if (same) {
            EXPECT_NEAR(std::abs(ip), 1.0, 1e-14);
        } else {
            EXPECT_NEAR(std::abs(ip), 0.0, 1e-14);
        }
    }
}

TEST(Thermal, InnerProductMatchesDenseTrace) {
    auto model = minimal_model();
    SpectralDensity density{SpectralDensity::Kind::Flat, 0.7, 6.0};
    ThermalState thermal(model, density.beta);
    DenseOracle oracle(model, density);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = testing::random_pauli(6, rng);
        auto b = testing::random_pauli(6, rng);
        auto expected = oracle.inner_product(DenseOracle::to_matrix(a), DenseOracle::to_matrix(b));
        EXPECT_LT(std::abs(thermal.inner_product(a, b) - expected), 1e-12);
    }
    auto rho = DenseOracle::to_matrix(thermal.density_operator());
    EXPECT_LT(testing::max_abs(DenseOracle::Matrix(rho - oracle.rho())), 1e-12);
}

TEST(Thermal, RejectsLargeRank) {
    StabilizerCode code(build_hex_torus(27));
    EXPECT_THROW(ThermalState(tcc_model(code, ModelPart::ZHalf), 1.0), std::invalid_argument);
}

TEST(WalshHadamard, IsItsOwnInverseUpToScale) {
    std::vector<double> v = {1, -2, 3.5, 0, 4, 1, -1, 2};
    auto w = v;
    walsh_hadamard(w);
    EXPECT_DOUBLE_EQ(w[0], 8.5);
    walsh_hadamard(w);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_DOUBLE_EQ(w[i], 8 * v[i]);
}

}  // namespace
}  // namespace tcc
