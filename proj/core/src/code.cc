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

#include <bit>
#include <stdexcept>

namespace tcc {

namespace {

constexpr std::size_t kExhaustiveSearchLimit = 12;

bool parities_agree(const ColexLattice& lat, std::uint64_t flips) {
    int parity[3] = {0, 0, 0};
    for (std::size_t p = 0; p < lat.num_plaquettes(); ++p) {
        if ((flips >> p) & 1U) parity[static_cast<int>(lat.plaquettes[p].color)] ^= 1;
    }
    return parity[0] == parity[1] && parity[1] == parity[2];
}

std::vector<PauliOperator> independent_subset(const std::vector<PauliOperator>& ops) {
    if (ops.empty()) return {};
    Gf2Eliminator elim(2 * ops[0].num_qubits());
    std::vector<PauliOperator> out;
    for (const auto& op : ops) {
        if (elim.add(BitVector::from_pauli(op))) out.push_back(op);
    }
    return out;
}

}  // namespace

bool Syndrome::satisfies_color_parity(const ColexLattice& lat) const {
    return parities_agree(lat, x_flips) && parities_agree(lat, z_flips);
}

std::string SectorLabel::str() const {
    std::string out = "mu=";
    for (auto m : mu) out += static_cast<char>('0' + m);
    out += ",nu=";
    for (auto n : nu) out += static_cast<char>('0' + n);
    return out;
}

StabilizerCode::StabilizerCode(ColexLattice lattice) : lattice_(std::move(lattice)) {
    auto report = validate(lattice_);
    if (!report.ok()) {
        std::string msg = "cannot build a code on an invalid lattice:";
        for (const auto& f : report.failures) msg += "\n  " + f;
        throw std::invalid_argument(msg);
    }
    std::size_t n = num_qubits();
    std::size_t np = num_plaquettes();
    for (const auto& p : lattice_.plaquettes) {
        bx_.push_back(PauliOperator::x_string(n, p.vertices));
        bz_.push_back(PauliOperator::z_string(n, p.vertices));
    }
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!gens[i].commutes_with(gens[j])) throw std::logic_error("plaquette generators fail to commute");
        }
    }

    stabilizers_ = Gf2Eliminator(2 * n);
    for (const auto& g : gens) stabilizers_.add(BitVector::from_pauli(g));
    independent_ = stabilizers_.independent_inputs();

    loops_ = nontrivial_loops(lattice_);
    for (int i = 0; i < 4; ++i) {
        logical_z_[i] = loops_[i].as_z(n);
        logical_x_[i] = loops_[3 - i].as_x(n);
    }
    if (rank() <= kExhaustiveSearchLimit) {
        auto zs = independent_subset(bz_);
        auto xs = independent_subset(bx_);
        for (int i = 0; i < 4; ++i) {
            logical_z_[i] = lowest_weight_representative(logical_z_[i], zs);
            logical_x_[i] = lowest_weight_representative(logical_x_[i], xs);
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            bool anti = !logical_z_[i].commutes_with(logical_x_[j]);
            if (anti != (i == j)) throw std::logic_error("logical operators violate the pairing Z_i X_j");
        }
        if (!syndrome(logical_z_[i]).empty() || !syndrome(logical_x_[i]).empty()) {
            throw std::logic_error("logical operator anticommutes with a plaquette");
        }
    }

    sectors_ = Gf2Eliminator(2 * n);
    for (const auto& g : gens) sectors_.add(BitVector::from_pauli(g));
    for (const auto& z : logical_z_) sectors_.add(BitVector::from_pauli(z));
    for (const auto& x : logical_x_) sectors_.add(BitVector::from_pauli(x));
    if (sectors_.rank() != rank() + 8) throw std::logic_error("logical operators are not independent of plaquettes");
    (void)np;

    excitations_ = excitation_generators(lattice_);
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> out = bx_;
    out.insert(out.end(), bz_.begin(), bz_.end());
    return out;
}

Syndrome StabilizerCode::syndrome(const PauliOperator& err) const {
    if (err.num_qubits() != num_qubits()) {
        throw std::invalid_argument("syndrome: operator has " + std::to_string(err.num_qubits()) +
                                    " qubits, code has " + std::to_string(num_qubits()));
    }
    Syndrome s;
    s.num_plaquettes = num_plaquettes();
    for (std::size_t p = 0; p < num_plaquettes(); ++p) {
        if (!err.commutes_with(bx_[p])) s.x_flips |= 1ULL << p;
        if (!err.commutes_with(bz_[p])) s.z_flips |= 1ULL << p;
    }
    return s;
}

bool StabilizerCode::in_stabilizer_span(const PauliOperator& p) const {
    return stabilizers_.in_span(BitVector::from_pauli(p));
}

std::optional<BitVector> StabilizerCode::stabilizer_solve(const PauliOperator& p) const {
    return stabilizers_.solve(BitVector::from_pauli(p));
}

std::optional<SectorLabel> StabilizerCode::sector_decompose(const PauliOperator& p) const {
    if (!syndrome(p).empty()) return std::nullopt;
    auto combo = sectors_.solve(BitVector::from_pauli(p));
    if (!combo) throw std::logic_error("centralizer element outside plaquette and logical span");
    std::size_t base = 2 * num_plaquettes();
    SectorLabel label;
    for (int i = 0; i < 4; ++i) {
        label.mu[i] = combo->get(base + i);
        label.nu[i] = combo->get(base + 4 + i);
    }
    return label;
}

PauliOperator StabilizerCode::sector_representative(const SectorLabel& label) const {
    PauliOperator out(num_qubits());
    for (int i = 0; i < 4; ++i) {
        if (label.mu[i]) out *= logical_z_[i];
    }
    for (int i = 0; i < 4; ++i) {
        if (label.nu[i]) out *= logical_x_[i];
    }
    return out;
}

std::size_t StabilizerCode::logical_dimension() const {
    std::vector<BitVector> rows;
    for (const auto& g : generators()) rows.push_back(BitVector::from_pauli(g));
    auto centralizer = symplectic_complement(rows, num_qubits());
    return centralizer.size() - rank();
}

std::size_t StabilizerCode::completeness_dimension() const {
    std::size_t n = num_qubits();
    Gf2Eliminator elim = stabilizers_;
    for (int i = 0; i < 4; ++i) {
        elim.add(BitVector::from_pauli(logical_z_[i]));
        elim.add(BitVector::from_pauli(logical_x_[i]));
    }
    for (const auto& per_color : excitations_.links) {
        for (auto [a, b] : per_color) {
            std::size_t pair[2] = {a, b};
            elim.add(BitVector::from_pauli(PauliOperator::x_string(n, pair)));
            elim.add(BitVector::from_pauli(PauliOperator::z_string(n, pair)));
        }
    }
    elim.add(BitVector::from_pauli(PauliOperator::single(n, excitations_.branching_x, 'X')));
    elim.add(BitVector::from_pauli(PauliOperator::single(n, excitations_.branching_z, 'Z')));
    return elim.rank();
}

PauliOperator StabilizerCode::lowest_weight_representative(const PauliOperator& p,
                                                           const std::vector<PauliOperator>& group) {
    if (group.size() > 24) throw std::invalid_argument("exhaustive coset search limited to 24 generators");
    PauliOperator best = p;
    PauliOperator cur = p;
    std::uint64_t total = 1ULL << group.size();
    // Gray-code walk: step k toggles generator countr_zero(k).
    for (std::uint64_t k = 1; k < total; ++k) {
        cur *= group[static_cast<std::size_t>(std::countr_zero(k))];
        if (cur.weight() < best.weight()) best = cur;
    }
    return best.unsigned_part();
}

}  // namespace tcc
