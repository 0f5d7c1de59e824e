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

#ifndef TCC_CODE_H
#define TCC_CODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/gf2.h"
#include "tcc/lattice.h"
#include "tcc/pauli.h"

namespace tcc {

/// Plaquette eigenvalue flips caused by a Pauli error. Bit p of x_flips is set
/// when the error anticommutes with B_p^x; likewise z_flips for B_p^z.
struct Syndrome {
    std::size_t num_plaquettes = 0;
    std::uint64_t x_flips = 0;
    std::uint64_t z_flips = 0;

    bool operator==(const Syndrome&) const = default;
    bool empty() const { return x_flips == 0 && z_flips == 0; }
    /// Flips of each color share one parity, per type.
    bool satisfies_color_parity(const ColexLattice& lat) const;
};

/// Logical class Z_1^mu_1 .. Z_4^mu_4 X_1^nu_1 .. X_4^nu_4 modulo stabilizers.
struct SectorLabel {
    std::array<std::uint8_t, 4> mu{};
    std::array<std::uint8_t, 4> nu{};

    bool operator==(const SectorLabel&) const = default;
    std::string str() const;
};

class StabilizerCode {
   public:
    /// Builds plaquette generators and logical operators. Throws on an invalid lattice.
    explicit StabilizerCode(ColexLattice lattice);

    const ColexLattice& lattice() const { return lattice_; }
    std::size_t num_qubits() const { return lattice_.num_vertices; }
    std::size_t num_plaquettes() const { return lattice_.num_plaquettes(); }

    const std::vector<PauliOperator>& bx_ops() const { return bx_; }
    const std::vector<PauliOperator>& bz_ops() const { return bz_; }
    /// All 2N generators, x-type first.
    std::vector<PauliOperator> generators() const;
    /// Indices into generators() of a maximal independent subset.
    const std::vector<std::size_t>& independent_idx() const { return independent_; }
    std::size_t rank() const { return independent_.size(); }
    /// log2 of the ground-space dimension, 2N - rank.
    std::size_t log2_degeneracy() const { return num_qubits() - rank(); }
    std::uint64_t degeneracy() const { return 1ULL << log2_degeneracy(); }

    const std::array<ColoredString, 4>& loops() const { return loops_; }
    const std::array<PauliOperator, 4>& logical_z() const { return logical_z_; }
    const std::array<PauliOperator, 4>& logical_x() const { return logical_x_; }
    const ExcitationGenerators& excitations() const { return excitations_; }

    Syndrome syndrome(const PauliOperator& err) const;
    bool in_stabilizer_span(const PauliOperator& p) const;
    /// Generator subset (bit mask over generators()) whose product matches p up to phase.
    std::optional<BitVector> stabilizer_solve(const PauliOperator& p) const;
    /// Logical class of p, or nullopt when p is outside the centralizer.
    std::optional<SectorLabel> sector_decompose(const PauliOperator& p) const;
    PauliOperator sector_representative(const SectorLabel& label) const;

    /// GF(2) dimension of centralizer modulo stabilizer span.
    std::size_t logical_dimension() const;
    /// GF(2) dimension spanned by stabilizers, logicals, string links and branching points.
    std::size_t completeness_dimension() const;

    /// Minimum weight element of p times the group generated by `group`; exhaustive.
    static PauliOperator lowest_weight_representative(const PauliOperator& p, const std::vector<PauliOperator>& group);

   private:
    ColexLattice lattice_;
    std::vector<PauliOperator> bx_;
    std::vector<PauliOperator> bz_;
    std::vector<std::size_t> independent_;
    std::array<ColoredString, 4> loops_;
    std::array<PauliOperator, 4> logical_z_;
    std::array<PauliOperator, 4> logical_x_;
    ExcitationGenerators excitations_;
    Gf2Eliminator stabilizers_{0};
    Gf2Eliminator sectors_{0};
};

inline StabilizerCode build_code(const ColexLattice& lat) { return StabilizerCode(lat); }

}  // namespace tcc

#endif
