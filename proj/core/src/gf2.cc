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

#include "tcc/gf2.h"

#include <bit>
#include <stdexcept>

namespace tcc {

BitVector::BitVector(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

BitVector BitVector::from_pauli(const PauliOperator& p) {
    std::size_t n = p.num_qubits();
    BitVector out(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (p.x_at(q)) out.set(q);
        if (p.z_at(q)) out.set(n + q);
    }
    return out;
}

BitVector BitVector::from_word(std::size_t num_bits, std::uint64_t word) {
    if (num_bits > 64) throw std::invalid_argument("from_word supports at most 64 bits");
    BitVector out(num_bits);
    if (num_bits) out.words_[0] = num_bits == 64 ? word : word & ((1ULL << num_bits) - 1);
    return out;
}

void BitVector::set(std::size_t i, bool value) {
    std::uint64_t bit = 1ULL << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

void BitVector::resize(std::size_t num_bits) {
    if (num_bits < num_bits_) {
        for (std::size_t i = num_bits; i < num_bits_; ++i) set(i, false);
    }
    num_bits_ = num_bits;
    words_.resize((num_bits + 63) / 64, 0);
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector size mismatch: " + std::to_string(num_bits_) + " vs " +
                                    std::to_string(other.num_bits_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitVector BitVector::operator^(const BitVector& other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w) return true;
    }
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVector::first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return npos;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.num_bits_ != num_bits_) throw std::invalid_argument("BitVector size mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string out;
    out.reserve(num_bits_);
    for (std::size_t i = 0; i < num_bits_; ++i) out += get(i) ? '1' : '0';
    return out;
}

PauliOperator pauli_from_symplectic(std::size_t num_qubits, const BitVector& v) {
    if (v.size() != 2 * num_qubits) throw std::invalid_argument("symplectic vector has wrong length");
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (v.get(q)) x |= 1ULL << q;
        if (v.get(num_qubits + q)) z |= 1ULL << q;
    }
    return {num_qubits, x, z, 0};
}

bool Gf2Eliminator::add(const BitVector& v) {
    if (v.size() != num_bits_) throw std::invalid_argument("Gf2Eliminator input has wrong length");
    std::size_t index = num_inputs_++;
    for (auto& row : rows_) row.combination.resize(num_inputs_);

    Row fresh{v, BitVector(num_inputs_), 0};
    fresh.combination.set(index);
    for (const auto& row : rows_) {
        if (fresh.bits.get(row.pivot)) {
            fresh.bits ^= row.bits;
            fresh.combination ^= row.combination;
        }
    }
    fresh.pivot = fresh.bits.first_set();
    if (fresh.pivot == BitVector::npos) return false;
    // Keep the basis fully reduced so reduce() is a single pass.
    for (auto& row : rows_) {
        if (row.bits.get(fresh.pivot)) {
            row.bits ^= fresh.bits;
            row.combination ^= fresh.combination;
        }
    }
    rows_.push_back(std::move(fresh));
    independent_.push_back(index);
    return true;
}

BitVector Gf2Eliminator::reduce(const BitVector& v) const {
    if (v.size() != num_bits_) throw std::invalid_argument("Gf2Eliminator query has wrong length");
    BitVector out = v;
    for (const auto& row : rows_) {
        if (out.get(row.pivot)) out ^= row.bits;
    }
    return out;
}

bool Gf2Eliminator::in_span(const BitVector& v) const { return !reduce(v).any(); }

std::optional<BitVector> Gf2Eliminator::solve(const BitVector& target) const {
    if (target.size() != num_bits_) throw std::invalid_argument("Gf2Eliminator query has wrong length");
    BitVector residual = target;
    BitVector combination(num_inputs_);
    for (const auto& row : rows_) {
        if (residual.get(row.pivot)) {
            residual ^= row.bits;
            combination ^= row.combination;
        }
    }
    if (residual.any()) return std::nullopt;
    return combination;
}

std::size_t gf2_rank(const std::vector<BitVector>& rows) {
    if (rows.empty()) return 0;
    Gf2Eliminator elim(rows[0].size());
    for (const auto& r : rows) elim.add(r);
    return elim.rank();
}

std::vector<BitVector> gf2_right_nullspace(const std::vector<BitVector>& rows, std::size_t num_cols) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<BitVector> m = rows;
    for (const auto& r : m) {
        if (r.size() != num_cols) throw std::invalid_argument("gf2_right_nullspace row has wrong length");
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < num_cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && !m[sel].get(col)) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r].get(col)) m[r] ^= m[rank];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(num_cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BitVector> out;
    for (std::size_t free = 0; free < num_cols; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(num_cols);
        v.set(free);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (m[r].get(free)) v.set(pivots[r]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BitVector> gf2_left_nullspace(const std::vector<BitVector>& rows) {
    if (rows.empty()) return {};
    std::size_t num_cols = rows[0].size();
    std::vector<BitVector> transposed(num_cols, BitVector(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (auto c : rows[r].ones()) transposed[c].set(r);
    }
    return gf2_right_nullspace(transposed, rows.size());
}

std::vector<BitVector> symplectic_complement(const std::vector<BitVector>& rows, std::size_t num_qubits) {
    std::vector<BitVector> swapped;
    swapped.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != 2 * num_qubits) throw std::invalid_argument("symplectic vector has wrong length");
        BitVector s(2 * num_qubits);
        for (std::size_t q = 0; q < num_qubits; ++q) {
            if (r.get(q)) s.set(num_qubits + q);
            if (r.get(num_qubits + q)) s.set(q);
        }
        swapped.push_back(std::move(s));
    }
    return gf2_right_nullspace(swapped, 2 * num_qubits);
}

}  // namespace tcc
