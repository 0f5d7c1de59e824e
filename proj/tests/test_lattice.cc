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

#include "tcc/lattice.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "tcc/code.h"
#include "test_util.h"

namespace tcc {
namespace {

class LatticeSizes : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LatticeSizes, CountsAndValidity) {
    std::size_t n = GetParam();
    auto lat = build_hex_torus(n);
    EXPECT_TRUE(validate(lat).ok());
    EXPECT_EQ(lat.num_plaquettes(), n);
    EXPECT_EQ(lat.num_vertices, 2 * n);
    EXPECT_EQ(lat.num_edges(), 3 * n);
    for (Color c : kAllColors) EXPECT_EQ(lat.plaquettes_of_color(c).size(), n / 3);
}

TEST_P(LatticeSizes, ThreeColorability) {
    auto lat = build_hex_torus(GetParam());
    for (std::size_t v = 0; v < lat.num_vertices; ++v) {
        std::set<Color> colors;
        for (auto p : lat.plaquettes_containing(v)) colors.insert(lat.plaquettes[p].color);
        EXPECT_EQ(colors.size(), 3u);
    }
    // An edge of color c joins two plaquettes of color c and borders one of each other color.
    for (const auto& e : lat.edges) {
        EXPECT_EQ(lat.plaquettes[e.plaquette_a].color, e.color);
        EXPECT_EQ(lat.plaquettes[e.plaquette_b].color, e.color);
        for (Color c : kAllColors) {
            if (c == e.color) continue;
            EXPECT_EQ(lat.plaquette_at(e.a, c), lat.plaquette_at(e.b, c));
        }
    }
}

TEST_P(LatticeSizes, LoopsAreClosedAndNontrivial) {
    StabilizerCode code(build_hex_torus(GetParam()));
    const auto& loops = code.loops();
    EXPECT_EQ(loops[0].color, Color::Red);
    EXPECT_EQ(loops[1].color, Color::Blue);
    EXPECT_EQ(loops[2].color, Color::Red);
    EXPECT_EQ(loops[3].color, Color::Blue);
    for (const auto& loop : loops) {
        EXPECT_NE(loop.homology, Homology::Trivial);
        auto z = loop.as_z(code.num_qubits());
        for (const auto& g : code.generators()) EXPECT_TRUE(z.commutes_with(g));
        EXPECT_FALSE(code.in_stabilizer_span(z));
    }
}

TEST_P(LatticeSizes, ExcitationGeneratorCensus) {
    auto lat = build_hex_torus(GetParam());
    auto ex = excitation_generators(lat);
    std::size_t n = lat.num_vertices;
    EXPECT_EQ(ex.num_string_qubits(), n - 6);
    std::set<std::size_t> all;
    for (const auto& links : ex.links) {
        for (const auto& [a, b] : links) {
            EXPECT_TRUE(all.insert(a).second);
            EXPECT_TRUE(all.insert(b).second);
        }
    }
    EXPECT_TRUE(all.insert(ex.branching_x).second);
    EXPECT_TRUE(all.insert(ex.branching_z).second);
    for (auto q : ex.leftover) EXPECT_TRUE(all.insert(q).second);
    EXPECT_EQ(all.size(), n);
}

TEST_P(LatticeSizes, StringLinkExcitesTwoPlaquettesOfItsColor) {
    auto lat = build_hex_torus(GetParam());
    StabilizerCode code(lat);
    const auto& ex = code.excitations();
    for (Color c : kAllColors) {
        for (const auto& [a, b] : ex.links[static_cast<std::size_t>(c)]) {
            std::size_t q[2] = {a, b};
            auto s = code.syndrome(PauliOperator::x_string(code.num_qubits(), q));
            EXPECT_EQ(s.x_flips, 0u);
            ASSERT_EQ(std::popcount(s.z_flips), 2);
            for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) {
                if ((s.z_flips >> p) & 1) EXPECT_EQ(lat.plaquettes[p].color, c);
            }
        }
    }
}

TEST_P(LatticeSizes, BranchingPointExcitesThreeColors) {
    auto lat = build_hex_torus(GetParam());
    StabilizerCode code(lat);
    auto s = code.syndrome(PauliOperator::single(code.num_qubits(), code.excitations().branching_x, 'X'));
    ASSERT_EQ(std::popcount(s.z_flips), 3);
    std::set<Color> colors;
    for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) {
        if ((s.z_flips >> p) & 1) colors.insert(lat.plaquettes[p].color);
    }
    EXPECT_EQ(colors.size(), 3u);
}

TEST_P(LatticeSizes, JsonRoundTrip) {
    auto lat = build_hex_torus(GetParam());
    auto back = lattice_from_json(lattice_to_json(lat));
    EXPECT_EQ(lattice_to_json(back), lattice_to_json(lat));
    EXPECT_TRUE(validate(back).ok());
}

INSTANTIATE_TEST_SUITE_P(Admissible, LatticeSizes, ::testing::Values(3, 12, 27));

TEST(Lattice, AdmissibleSizes) { EXPECT_EQ(admissible_sizes(), (std::vector<std::size_t>{3, 12, 27})); }

TEST(Lattice, InvalidSizeListsAdmissibleSizes) {
    try {
        build_hex_torus(5);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("3"), std::string::npos);
        EXPECT_NE(msg.find("12"), std::string::npos);
    }
}

TEST(Lattice, MinimalFixtureMatchesConstruction) {
    auto lat = lattice_from_json(testing::read_file(testing::fixture("minimal_lattice.json")));
    EXPECT_TRUE(validate(lat).ok());
    EXPECT_EQ(lat.num_plaquettes(), 3u);
    EXPECT_EQ(lat.num_vertices, 6u);
    EXPECT_EQ(lat.num_edges(), 9u);
    StabilizerCode code(lat);
    EXPECT_EQ(code.rank(), 2u);
    EXPECT_EQ(lattice_to_json(lat), lattice_to_json(build_hex_torus(3)));
}

TEST(Lattice, RecoloredEdgeFailsValidation) {
    auto lat = build_hex_torus(12);
    lat.edges[0].color = static_cast<Color>((static_cast<int>(lat.edges[0].color) + 1) % 3);
    EXPECT_FALSE(validate(lat).ok());
}

TEST(Lattice, DeletedVertexFailsValidation) {
    auto lat = build_hex_torus(12);
    std::size_t victim = lat.num_vertices - 1;
    for (auto& p : lat.plaquettes) {
        p.vertices.erase(std::remove(p.vertices.begin(), p.vertices.end(), victim), p.vertices.end());
    }
    lat.num_vertices -= 1;
    EXPECT_FALSE(validate(lat).ok());
}

TEST(Lattice, WrappedLoopDiffersFromMinimalByPlaquettes) {
    auto lat = build_hex_torus(12);
    StabilizerCode code(lat);
    const auto& u = lat.periods[0];
    const auto& v = lat.periods[1];
    // Winding once along u + v is homologous to the product of the u and v loops.
    auto diagonal = closed_string(lat, Color::Red, Coord{u[0] + v[0], u[1] + v[1]});
    auto product = code.loops()[0].as_z(code.num_qubits()) * code.loops()[2].as_z(code.num_qubits());
    EXPECT_TRUE(code.in_stabilizer_span(diagonal.as_z(code.num_qubits()) * product));
    // Winding twice along u is trivial.
    auto twice = closed_string(lat, Color::Blue, Coord{2 * u[0], 2 * u[1]});
    EXPECT_TRUE(code.in_stabilizer_span(twice.as_z(code.num_qubits())));
}

}  // namespace
}  // namespace tcc
