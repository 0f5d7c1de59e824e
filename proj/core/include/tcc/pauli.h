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

#ifndef TCC_PAULI_H
#define TCC_PAULI_H

#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tcc {

/// An n-qubit Pauli operator in binary-symplectic form.
///
/// The operator is i^phase_exp * prod_q X_q^{x_q} Z_q^{z_q}, with X written
/// to the left of Z on every qubit. Under this convention Y = i*X*Z carries
/// phase_exp 1 with both bits set. Qubit q lives in bit q of each word.
class PauliOperator {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliOperator() = default;
    explicit PauliOperator(std::size_t num_qubits);
    PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase_exp = 0);

    /// Single-qubit Pauli: kind is one of 'I', 'X', 'Y', 'Z'. Y is Hermitian (phase_exp 1).
    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, char kind);
    static PauliOperator x_string(std::size_t num_qubits, std::span<const std::size_t> qubits);
    static PauliOperator z_string(std::size_t num_qubits, std::span<const std::size_t> qubits);

    /// Parses "[+|-][i]PPPP" with P in {I, X, Y, Z, _}. Qubit 0 is the leftmost character.
    static PauliOperator parse(std::string_view text);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    int phase_exp() const { return phase_; }

    bool x_at(std::size_t q) const { return (x_ >> q) & 1U; }
    bool z_at(std::size_t q) const { return (z_ >> q) & 1U; }

    std::size_t weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }
    std::vector<std::size_t> support() const;

    /// True when the operator is +-1 or +-i times the identity.
    bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
    bool is_identity() const { return is_identity_up_to_phase() && phase_ == 0; }
    bool is_hermitian() const;

    PauliOperator adjoint() const;
    /// Same supports with phase_exp reset to zero.
    PauliOperator unsigned_part() const { return {num_qubits_, x_, z_, 0}; }
    /// Scalar i^phase_exp.
    std::complex<double> phase() const;

    PauliOperator operator*(const PauliOperator& rhs) const;
    PauliOperator& operator*=(const PauliOperator& rhs);
    bool operator==(const PauliOperator& rhs) const = default;

    bool commutes_with(const PauliOperator& other) const;

    /// Sign prefix followed by one of I, X, Y, Z per qubit. Y-form phases: "+", "+i", "-", "-i".
    std::string str() const;

   private:
    void check_same_size(const PauliOperator& other) const;

    std::size_t num_qubits_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    int phase_ = 0;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);
/// Symplectic form x_a.z_b + z_a.x_b mod 2.
int symplectic_form(const PauliOperator& a, const PauliOperator& b);
inline std::size_t weight(const PauliOperator& a) { return a.weight(); }
inline std::vector<std::size_t> support(const PauliOperator& a) { return a.support(); }

std::ostream& operator<<(std::ostream& out, const PauliOperator& p);

struct PauliKey {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool operator==(const PauliKey&) const = default;
};

struct PauliKeyHash {
    std::size_t operator()(const PauliKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.x * 0x9E3779B97F4A7C15ULL ^ (k.z + 0x632BE59BD9B4E019ULL));
    }
};

/// Finite complex combination of Pauli operators, keyed by the phase-free
/// X_a Z_b form. Used for jump operators and arbitrary observables.
class PauliSum {
   public:
    using Complex = std::complex<double>;

    PauliSum() = default;
    explicit PauliSum(std::size_t num_qubits) : num_qubits_(num_qubits) {}
    PauliSum(const PauliOperator& p, Complex coeff = 1.0);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::unordered_map<PauliKey, Complex, PauliKeyHash>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add(const PauliOperator& p, Complex coeff);
    void add(PauliKey key, Complex coeff);
    /// Drops terms with |coeff| <= tol.
    void prune(double tol = 1e-14);

    PauliSum adjoint() const;
    PauliSum operator+(const PauliSum& rhs) const;
    PauliSum operator-(const PauliSum& rhs) const;
    PauliSum operator*(const PauliSum& rhs) const;
    PauliSum operator*(Complex scalar) const;
    PauliSum& operator+=(const PauliSum& rhs);

    double max_abs_coefficient() const;

   private:
    std::size_t num_qubits_ = 0;
    std::unordered_map<PauliKey, Complex, PauliKeyHash> terms_;
};

PauliSum commutator(const PauliSum& a, const PauliSum& b);

}  // namespace tcc

#endif
