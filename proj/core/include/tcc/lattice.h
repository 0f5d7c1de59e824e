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

#ifndef TCC_LATTICE_H
#define TCC_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcc/pauli.h"

namespace tcc {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

constexpr std::array<Color, 3> kAllColors = {Color::Red, Color::Green, Color::Blue};

std::string_view color_name(Color c);
Color parse_color(std::string_view name);

/// Integer coordinates on the triangular lattice of plaquette centers.
using Coord = std::array<std::int64_t, 2>;

struct Plaquette {
    Color color;
    /// Canonical representative of the center modulo the torus periods.
    Coord coord;
    /// Vertex indices in cyclic order around the hexagon.
    std::vector<std::size_t> vertices;
};

struct Edge {
    std::size_t a;
    std::size_t b;
    Color color;
    /// Plaquettes of the edge's color containing a and b respectively.
    std::size_t plaquette_a;
    std::size_t plaquette_b;
    /// Lifted displacement from plaquette_a to plaquette_b.
    Coord shift;
};

/// Hexagonal 2-colex on a torus. Qubits live on vertices.
///
/// Plaquette centers form a triangular lattice with basis e1 = (1, 0) and e2
/// at 120 degrees; the color of (a, b) is (a + b) mod 3. Vertices are the
/// triangles of that lattice, so each touches one plaquette of every color.
struct ColexLattice {
    std::size_t num_vertices = 0;
    std::vector<Plaquette> plaquettes;
    std::vector<Edge> edges;
    std::array<Coord, 2> periods{};
    /// Planar embedding of each vertex, for plotting only.
    std::vector<std::array<double, 2>> positions;

    std::size_t num_plaquettes() const { return plaquettes.size(); }
    std::size_t num_edges() const { return edges.size(); }

    /// Plaquette of the given color containing vertex v, or npos.
    std::size_t plaquette_at(std::size_t v, Color c) const;
    std::vector<std::size_t> plaquettes_of_color(Color c) const;
    std::vector<std::size_t> plaquettes_containing(std::size_t v) const;

    /// Canonical reduction of a lifted coordinate modulo the periods.
    Coord reduce(Coord p) const;
    /// Index of the plaquette whose canonical coordinate is reduce(p).
    std::size_t plaquette_index(Coord p) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Sizes N = 3k^2 (plaquette counts) admitted by build_hex_torus, up to the qubit cap.
std::vector<std::size_t> admissible_sizes();

/// Torus with N plaquettes. N must be one of admissible_sizes().
ColexLattice build_hex_torus(std::size_t num_plaquettes);

/// Torus with explicit periods; both must lie on the color sublattice (a + b = 0 mod 3).
ColexLattice build_hex_torus(Coord u, Coord v);

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate(const ColexLattice& lat);

enum class Homology : std::uint8_t { Trivial, Cycle1, Cycle2, Cycle12, Open };

std::string_view homology_name(Homology h);

struct ColoredString {
    Color color;
    /// Qubits listed in link pairs: (vertices[0], vertices[1]) is the first link, and so on.
    std::vector<std::size_t> vertices;
    Homology homology;
    /// Lifted displacement covered by a closed string.
    Coord winding{};

    /// Set of qubits acted on (pairs repeated along the path cancel).
    std::uint64_t support_mask() const;
    PauliOperator as_z(std::size_t num_qubits) const;
    PauliOperator as_x(std::size_t num_qubits) const;
};

/// Closed string of one color whose lifted displacement is the given lattice vector.
ColoredString closed_string(const ColexLattice& lat, Color c, Coord displacement);

/// C_1..C_4: red along the first period, blue along the first period, red along
/// the second, blue along the second.
std::array<ColoredString, 4> nontrivial_loops(const ColexLattice& lat);

struct ExcitationGenerators {
    /// Per color, the links (qubit pairs on edges of that color) of the open string.
    std::array<std::vector<std::pair<std::size_t, std::size_t>>, 3> links;
    std::size_t branching_x = 0;
    std::size_t branching_z = 0;
    std::array<std::size_t, 4> leftover{};

    std::size_t num_string_qubits() const;
    ColoredString string(Color c) const;
};

ExcitationGenerators excitation_generators(const ColexLattice& lat);

/// JSON document with periods, plaquettes (color, coord, cyclic vertices),
/// edges (vertices, color, end plaquettes, shift) and vertex positions.
std::string lattice_to_json(const ColexLattice& lat);
ColexLattice lattice_from_json(std::string_view text);

}  // namespace tcc

#endif
