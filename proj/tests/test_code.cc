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

#include "tcc/code.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

namespace tcc {
namespace {

TEST(Code, MinimalTorusHasSixteenGroundStates) {
    StabilizerCode code(build_hex_torus(3));
    EXPECT_EQ(code.generators().size(), 6u);
    EXPECT_EQ(code.rank(), 2u);
    EXPECT_EQ(code.degeneracy(), 16u);
}

TEST(Code, TwelvePlaquetteTorus) {
    StabilizerCode code(build_hex_torus(12));
    EXPECT_EQ(code.rank(), 20u);
    EXPECT_EQ(code.degeneracy(), 16u);
    EXPECT_EQ(code.logical_dimension(), 8u);
    EXPECT_EQ(code.completeness_dimension(), 48u);
}

TEST(Code, ColorConstraintsAgree) {
    for (std::size_t n : {3, 12}) {
        StabilizerCode code(build_hex_torus(n));
        const auto& lat = code.lattice();
        std::array<PauliOperator, 3> px, pz;
        for (Color c : kAllColors) {
            PauliOperator x(code.num_qubits()), z(code.num_qubits());
            for (auto p : lat.plaquettes_of_color(c)) {
                x *= code.bx_ops()[p];
                z *= code.bz_ops()[p];
            }
            px[static_cast<std::size_t>(c)] = x;
            pz[static_cast<std::size_t>(c)] = z;
        }
        EXPECT_EQ(px[0], px[1]);
        EXPECT_EQ(px[1], px[2]);
        EXPECT_EQ(pz[0], pz[2]);
    }
}

TEST(Code, SingleXErrorFlipsOneZPlaquettePerColor) {
    StabilizerCode code(build_hex_torus(12));
    const auto& lat = code.lattice();
    for (std::size_t q = 0; q < code.num_qubits(); ++q) {
        auto s = code.syndrome(PauliOperator::single(code.num_qubits(), q, 'X'));
        EXPECT_EQ(s.x_flips, 0u);
        EXPECT_EQ(std::popcount(s.z_flips), 3);
        std::set<Color> colors;
        for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) {
            if ((s.z_flips >> p) & 1) colors.insert(lat.plaquettes[p].color);
        }
        EXPECT_EQ(colors.size(), 3u);
        EXPECT_TRUE(s.satisfies_color_parity(lat));
    }
}

TEST(Code, StabilizerProductsHaveEmptySyndrome) {
    StabilizerCode code(build_hex_torus(12));
    std::mt19937_64 rng(5);
    auto gens = code.generators();
    for (int trial = 0; trial < 50; ++trial) {
        PauliOperator p(code.num_qubits());
        for (const auto& g : gens) {
            if (rng() & 1) p *= g;
        }
        EXPECT_TRUE(code.syndrome(p).empty());
        EXPECT_TRUE(code.in_stabilizer_span(p));
        auto label = code.sector_decompose(p);
        ASSERT_TRUE(label.has_value());
        EXPECT_EQ(*label, SectorLabel{});
    }
}

TEST(Code, ErrorSyndromesSatisfyColorParity) {
    StabilizerCode code(build_hex_torus(12));
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        PauliOperator p(code.num_qubits(), rng() & 0xFFFFFF, rng() & 0xFFFFFF);
        EXPECT_TRUE(code.syndrome(p).satisfies_color_parity(code.lattice()));
    }
}

TEST(Code, SectorDecomposition) {
    StabilizerCode code(build_hex_torus(12));
    auto z1 = code.sector_decompose(code.logical_z()[0]);
    ASSERT_TRUE(z1.has_value());
    EXPECT_EQ(z1->str(), "mu=1000,nu=0000");
    auto dressed = code.sector_decompose(code.logical_z()[0] * code.bz_ops()[3] * code.bx_ops()[5]);
    ASSERT_TRUE(dressed.has_value());
    EXPECT_EQ(*dressed, *z1);
    auto plaquette = code.sector_decompose(code.bz_ops()[0]);
    ASSERT_TRUE(plaquette.has_value());
    EXPECT_EQ(*plaquette, SectorLabel{});
    EXPECT_FALSE(code.sector_decompose(PauliOperator::single(code.num_qubits(), 0, 'X')).has_value());
    for (unsigned bits = 0; bits < 256; bits += 37) {
        SectorLabel label;
        for (int i = 0; i < 4; ++i) {
            label.mu[static_cast<std::size_t>(i)] = (bits >> i) & 1;
            label.nu[static_cast<std::size_t>(i)] = (bits >> (i + 4)) & 1;
        }
        auto back = code.sector_decompose(code.sector_representative(label));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, label);
    }
}

TEST(Code, GreenLoopIsRedTimesBlue) {
    StabilizerCode code(build_hex_torus(12));
    const auto& lat = code.lattice();
    for (int k = 0; k < 2; ++k) {
        auto green = closed_string(lat, Color::Green, lat.periods[static_cast<std::size_t>(k)]);
        auto red = code.loops()[static_cast<std::size_t>(2 * k)].as_x(code.num_qubits());
        auto blue = code.loops()[static_cast<std::size_t>(2 * k + 1)].as_x(code.num_qubits());
        EXPECT_TRUE(code.in_stabilizer_span(green.as_x(code.num_qubits()) * red * blue));
    }
}

TEST(Code, InvalidLatticeIsRejected) {
    auto lat = build_hex_torus(3);
    lat.edges[0].color = static_cast<Color>((static_cast<int>(lat.edges[0].color) + 1) % 3);
    EXPECT_THROW(StabilizerCode{lat}, std::invalid_argument);
}

TEST(Code, SyndromeSizeMismatchIsRejected) {
    StabilizerCode code(build_hex_torus(3));
    EXPECT_THROW(code.syndrome(PauliOperator::single(5, 0, 'X')), std::invalid_argument);
}

}  // namespace
}  // namespace tcc
