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

#include "tcc/ising.h"

#include <gtest/gtest.h>

#include <cmath>

#include "tcc/oracle.h"

namespace tcc {
namespace {

SpectralDensity flat(double beta) { return {SpectralDensity::Kind::Flat, beta, 6.0}; }

TEST(Ising, AlternatingCouplings) {
    EXPECT_EQ(build_inhomogeneous(4).couplings, (std::vector<double>{1, 2, 1}));
    EXPECT_EQ(build_inhomogeneous(4, 0.5, true).couplings, (std::vector<double>{0.5, 1, 0.5, 1}));
    EXPECT_EQ(build_homogeneous(3).couplings, (std::vector<double>{1, 1}));
    EXPECT_FALSE(build_inhomogeneous(2, 1.0, true).periodic);
}

TEST(Ising, BohrFrequenciesPerSpin) {
    auto model = build_inhomogeneous(3).model();
    EXPECT_EQ(model.bohr_frequencies(0), (std::vector<double>{-2, 2}));
    EXPECT_EQ(model.bohr_frequencies(1), (std::vector<double>{-6, -2, 2, 6}));
    EXPECT_EQ(model.bohr_frequencies(2), (std::vector<double>{-4, 4}));
}

TEST(Ising, GroundStateDegeneracyGivesTwoDimensionalKernel) {
    for (std::size_t length : {2, 3, 5}) {
        auto report = davies_gap(build_inhomogeneous(length), flat(1.0));
        EXPECT_EQ(report.kernel_dim, 2u) << "L=" << length;
    }
}

TEST(Ising, TwoSpinClosedForm) {
    for (double beta : {0.1, 1.0, 3.0}) {
        for (auto kind : {SpectralDensity::Kind::Flat, SpectralDensity::Kind::Ohmic}) {
            SpectralDensity d{kind, beta, 6.0};
            double structured = davies_gap(build_inhomogeneous(2), d).gap;
            EXPECT_NEAR(structured, two_site_gap(d), 1e-12);
            auto spec = DenseOracle(build_inhomogeneous(2).model(), d).spectrum(1).all_eigenvalues();
            double oracle_gap = 0;
            for (double v : spec) {
                if (v > 1e-9) {
                    oracle_gap = v;
                    break;
                }
            }
            EXPECT_NEAR(oracle_gap, structured, 1e-10);
        }
    }
    EXPECT_NEAR(two_site_gap(flat(1.0)), 2.0 * std::exp(-2.0), 1e-15);
}

TEST(Ising, StructuredGapMatchesOracle) {
    for (bool periodic : {false, true}) {
        auto chain = build_inhomogeneous(5, 1.0, periodic);
        auto d = flat(0.6);
        auto spec = DenseOracle(chain.model(), d).spectrum(0).all_eigenvalues();
        double oracle_gap = 0;
        for (double v : spec) {
            if (v > 1e-9) {
                oracle_gap = v;
                break;
            }
        }
        EXPECT_NEAR(davies_gap(chain, d).gap, oracle_gap, 1e-10);
    }
}

TEST(Ising, HomogeneousChainDiffers) {
    auto d = flat(1.0);
    EXPECT_GT(std::abs(davies_gap(build_homogeneous(4), d).gap - davies_gap(build_inhomogeneous(4), d).gap), 1e-3);
}

TEST(Ising, ScanRowsInOrder) {
    auto rows = ising_scan({2, 3}, {0.5, 1.0}, SpectralDensity::Kind::Flat);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].length, 2u);
    EXPECT_EQ(rows[1].length, 3u);
    EXPECT_DOUBLE_EQ(rows[2].beta, 1.0);
    EXPECT_NEAR(rows[2].gap, two_site_gap(flat(1.0)), 1e-12);
}

TEST(Ising, RejectsShortChains) {
    EXPECT_THROW(build_inhomogeneous(1), std::invalid_argument);
    EXPECT_THROW(build_homogeneous(0), std::invalid_argument);
    EXPECT_THROW(build_inhomogeneous(3, -1.0), std::invalid_argument);
}

}  // namespace
}  // namespace tcc
