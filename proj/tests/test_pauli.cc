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

#include "tcc/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "tcc/code.h"
#include "test_util.h"

namespace tcc {
namespace {

using testing::max_abs;
using testing::random_pauli;
using Matrix = DenseOracle::Matrix;

TEST(Pauli, XTimesXIsIdentity) {
    auto x = PauliOperator::single(3, 1, 'X');
    auto p = x * x;
    EXPECT_TRUE(p.is_identity());
    EXPECT_EQ(p.phase_exp(), 0);
}

TEST(Pauli, XTimesZIsMinusIY) {
    auto p = PauliOperator::single(1, 0, 'X') * PauliOperator::single(1, 0, 'Z');
    EXPECT_TRUE(p.x_at(0));
    EXPECT_TRUE(p.z_at(0));
    EXPECT_EQ(p.str(), "-iY");
    Matrix y = DenseOracle::to_matrix(PauliOperator::single(1, 0, 'Y'));
    EXPECT_LT(max_abs(DenseOracle::to_matrix(p) - y * std::complex<double>(0, -1)), 1e-15);
}

TEST(Pauli, SingleQubitMatricesAreStandard) {
    Matrix y = DenseOracle::to_matrix(PauliOperator::single(1, 0, 'Y'));
    EXPECT_EQ(y.coeff(0, 1), std::complex<double>(0, -1));
    EXPECT_EQ(y.coeff(1, 0), std::complex<double>(0, 1));
    Matrix z = DenseOracle::to_matrix(PauliOperator::single(1, 0, 'Z'));
    EXPECT_EQ(z.coeff(1, 1), std::complex<double>(-1, 0));
}

TEST(Pauli, PlaquetteXTimesPlaquetteZMatchesDenseProduct) {
    StabilizerCode code(build_hex_torus(3));
    auto bx = code.bx_ops()[0];
    auto bz = code.bz_ops()[0];
    auto p = bx * bz;
    EXPECT_EQ(p.weight(), 6u);
    EXPECT_EQ(p.x_bits(), p.z_bits());
    EXPECT_EQ(p.phase_exp(), 0);
    Matrix dense = DenseOracle::to_matrix(bx) * DenseOracle::to_matrix(bz);
    EXPECT_LT(max_abs(dense - DenseOracle::to_matrix(p)), 1e-15);
    EXPECT_TRUE(bx.commutes_with(bz));
}

TEST(Pauli, CommutesAgreesWithDenseCommutator) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 6;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        Matrix ma = DenseOracle::to_matrix(a);
        Matrix mb = DenseOracle::to_matrix(b);
        bool dense = max_abs(Matrix(ma * mb - mb * ma)) < 1e-12;
        EXPECT_EQ(commutes(a, b), dense) << a << " " << b;
        EXPECT_LT(max_abs(Matrix(ma * mb) - DenseOracle::to_matrix(a * b)), 1e-12);
    }
}

TEST(Pauli, MultiplicationIsAssociativeWithIdentity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 20;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        auto c = random_pauli(n, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        PauliOperator eye(n);
        EXPECT_EQ(eye * a, a);
        EXPECT_EQ(a * eye, a);
    }
}

TEST(Pauli, SquareIsPlusMinusIdentityAndPlusForHermitian) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_pauli(1 + rng() % 30, rng);
        auto sq = a * a;
        EXPECT_TRUE(sq.is_identity_up_to_phase());
        EXPECT_EQ(sq.phase_exp() % 2, 0);
        if (a.is_hermitian()) {
            EXPECT_TRUE(sq.is_identity());
        }
    }
}

TEST(Pauli, AdjointMatchesDense) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_pauli(1 + rng() % 5, rng);
        Matrix adj = DenseOracle::to_matrix(a).adjoint();
        EXPECT_LT(max_abs(adj - DenseOracle::to_matrix(a.adjoint())), 1e-15);
    }
}

TEST(Pauli, LogicalPairAnticommutes) {
    StabilizerCode code(build_hex_torus(3));
    EXPECT_FALSE(commutes(code.logical_z()[0], code.logical_x()[0]));
    EXPECT_TRUE(commutes(code.logical_z()[0], code.logical_x()[1]));
}

TEST(Pauli, WeightAndSupport) {
    PauliOperator eye(4);
    EXPECT_EQ(weight(eye), 0u);
    EXPECT_TRUE(support(eye).empty());
    auto p = PauliOperator::parse("XIZY");
    EXPECT_EQ(weight(p), 3u);
    EXPECT_EQ(support(p), (std::vector<std::size_t>{0, 2, 3}));
    StabilizerCode code(build_hex_torus(12));
    for (const auto& b : code.bx_ops()) EXPECT_EQ(b.weight(), 6u);
}

TEST(Pauli, ParseAndPrintRoundTrip) {
    for (const char* text : {"+XYZI", "-iZZ", "+iY", "-X_Z"}) {
        auto p = PauliOperator::parse(text);
        EXPECT_EQ(PauliOperator::parse(p.str()), p);
    }
    EXPECT_EQ(PauliOperator::parse("Y").str(), "+Y");
    EXPECT_TRUE(PauliOperator::parse("Y").is_hermitian());
    EXPECT_THROW(PauliOperator::parse("XQ"), std::invalid_argument);
}

TEST(Pauli, SizeMismatchIsRejected) {
    auto a = PauliOperator::single(2, 0, 'X');
    auto b = PauliOperator::single(3, 0, 'X');
    EXPECT_THROW(multiply(a, b), std::invalid_argument);
    EXPECT_THROW(commutes(a, b), std::invalid_argument);
}

TEST(PauliSum, AdjointAndProductsMatchDense) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 4;
        PauliSum a(n), b(n);
        for (int k = 0; k < 4; ++k) {
            a.add(random_pauli(n, rng), {double(rng() % 7) - 3, double(rng() % 5) - 2});
            b.add(random_pauli(n, rng), {double(rng() % 3) - 1, 0.5});
        }
        Matrix ma = DenseOracle::to_matrix(a), mb = DenseOracle::to_matrix(b);
        EXPECT_LT(max_abs(Matrix(ma * mb) - DenseOracle::to_matrix(a * b)), 1e-12);
        EXPECT_LT(max_abs(Matrix(ma.adjoint()) - DenseOracle::to_matrix(a.adjoint())), 1e-12);
        EXPECT_LT(max_abs(Matrix(ma * mb - mb * ma) - DenseOracle::to_matrix(commutator(a, b))), 1e-12);
        PauliSum back = DenseOracle::to_pauli_sum(ma, n);
        EXPECT_LT((back - a).max_abs_coefficient(), 1e-12);
    }
}

}  // namespace
}  // namespace tcc
