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

#ifndef TCC_GF2_H
#define TCC_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/pauli.h"

namespace tcc {

/// Dense GF(2) vector packed into 64-bit words.
class BitVector {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t num_bits);

    /// Symplectic vector [x_0..x_{n-1} | z_0..z_{n-1}] of a Pauli operator.
    static BitVector from_pauli(const PauliOperator& p);
    /// Low num_bits bits of a word.
    static BitVector from_word(std::size_t num_bits, std::uint64_t word);

    std::size_t size() const { return num_bits_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }
    void resize(std::size_t num_bits);

    BitVector& operator^=(const BitVector& other);
    BitVector operator^(const BitVector& other) const;
    bool operator==(const BitVector& other) const = default;

    bool any() const;
    std::size_t popcount() const;
    std::size_t first_set() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector& other) const;
    /// Low 64 bits.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    std::vector<std::size_t> ones() const;
    std::string str() const;

   private:
    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Interprets a 2n-bit symplectic vector as a phase-free Pauli operator.
PauliOperator pauli_from_symplectic(std::size_t num_qubits, const BitVector& v);

/// Incremental Gaussian elimination that remembers how each reduced row is
/// built from the inputs, so membership queries can return a certificate.
class Gf2Eliminator {
   public:
    explicit Gf2Eliminator(std::size_t num_bits) : num_bits_(num_bits) {}

    /// Appends an input vector. Returns true when it increased the rank.
    bool add(const BitVector& v);

    std::size_t num_bits() const { return num_bits_; }
    std::size_t num_inputs() const { return num_inputs_; }
    std::size_t rank() const { return rows_.size(); }

    bool in_span(const BitVector& v) const;
    /// Residual of v after reduction against the span.
    BitVector reduce(const BitVector& v) const;
    /// Subset of inputs (as a bit mask over input order) whose XOR equals target.
    std::optional<BitVector> solve(const BitVector& target) const;

    /// Indices of inputs that increased the rank when they were added.
    const std::vector<std::size_t>& independent_inputs() const { return independent_; }

   private:
    struct Row {
        BitVector bits;
        BitVector combination;
        std::size_t pivot;
    };

    std::size_t num_bits_;
    std::size_t num_inputs_ = 0;
    std::vector<Row> rows_;
    std::vector<std::size_t> independent_;
};

std::size_t gf2_rank(const std::vector<BitVector>& rows);

/// Basis of {v : rows[i] . v = 0 for all i}.
std::vector<BitVector> gf2_right_nullspace(const std::vector<BitVector>& rows, std::size_t num_cols);

/// Basis of {c : XOR of rows[i] over c_i = 1 equals 0}.
std::vector<BitVector> gf2_left_nullspace(const std::vector<BitVector>& rows);

/// Symplectic complement: all v with symplectic_form(v, rows[i]) = 0.
std::vector<BitVector> symplectic_complement(const std::vector<BitVector>& rows, std::size_t num_qubits);

}  // namespace tcc

#endif
