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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tcc {

namespace {

std::uint64_t mask_for(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

int popcount_parity(std::uint64_t v) { return std::popcount(v) & 1; }

const std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits) : PauliOperator(num_qubits, 0, 0, 0) {}

PauliOperator::PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase_exp)
    : num_qubits_(num_qubits), x_(x_bits), z_(z_bits), phase_(((phase_exp % 4) + 4) % 4) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("PauliOperator supports at most 64 qubits, got " + std::to_string(num_qubits));
    }
    if ((x_bits | z_bits) & ~mask_for(num_qubits)) {
        throw std::invalid_argument("Pauli support exceeds qubit count " + std::to_string(num_qubits));
    }
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, char kind) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    std::uint64_t bit = 1ULL << qubit;
    switch (kind) {
        case 'I':
            return PauliOperator(num_qubits);
        case 'X':
            return {num_qubits, bit, 0, 0};
        case 'Z':
            return {num_qubits, 0, bit, 0};
        case 'Y':
            return {num_qubits, bit, bit, 1};
        default:
            throw std::invalid_argument(std::string("unknown Pauli kind '") + kind + "'");
    }
}

PauliOperator PauliOperator::x_string(std::size_t num_qubits, std::span<const std::size_t> qubits) {
    std::uint64_t x = 0;
    for (auto q : qubits) {
        if (q >= num_qubits) throw std::out_of_range("qubit out of range in x_string");
        x ^= 1ULL << q;
    }
    return {num_qubits, x, 0, 0};
}

PauliOperator PauliOperator::z_string(std::size_t num_qubits, std::span<const std::size_t> qubits) {
    std::uint64_t z = 0;
    for (auto q : qubits) {
        if (q >= num_qubits) throw std::out_of_range("qubit out of range in z_string");
        z ^= 1ULL << q;
    }
    return {num_qubits, 0, z, 0};
}

PauliOperator PauliOperator::parse(std::string_view text) {
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    std::size_t n = text.size() - pos;
    if (n > kMaxQubits) throw std::invalid_argument("Pauli string longer than 64 qubits");
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    int num_y = 0;
    for (std::size_t q = 0; q < n; ++q) {
        char c = text[pos + q];
        std::uint64_t bit = 1ULL << q;
        switch (c) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                ++num_y;
                break;
            default:
                throw std::invalid_argument("bad character '" + std::string(1, c) + "' in Pauli string");
        }
    }
    // Each Y contributes i*X*Z.
    return {n, x, z, phase + num_y};
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    std::uint64_t s = x_ | z_;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

bool PauliOperator::is_hermitian() const { return (phase_ & 1) == popcount_parity(x_ & z_); }

PauliOperator PauliOperator::adjoint() const {
    // (i^k X_a Z_b)^dag = i^-k Z_b X_a = i^-k (-1)^{|a&b|} X_a Z_b
    return {num_qubits_, x_, z_, -phase_ + 2 * popcount_parity(x_ & z_)};
}

std::complex<double> PauliOperator::phase() const { return kIPowers[phase_]; }

void PauliOperator::check_same_size(const PauliOperator& other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(num_qubits_) + " vs " +
                                    std::to_string(other.num_qubits_));
    }
}

PauliOperator PauliOperator::operator*(const PauliOperator& rhs) const {
    PauliOperator out = *this;
    out *= rhs;
    return out;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
    check_same_size(rhs);
    // Z_b1 X_a2 = (-1)^{|b1&a2|} X_a2 Z_b1
    phase_ = (phase_ + rhs.phase_ + 2 * popcount_parity(z_ & rhs.x_)) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const { return symplectic_form(*this, other) == 0; }

std::string PauliOperator::str() const {
    int num_y = std::popcount(x_ & z_);
    int y_phase = ((phase_ - num_y) % 4 + 4) % 4;
    static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[y_phase];
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        bool x = x_at(q);
        bool z = z_at(q);
        out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return out;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }

bool commutes(const PauliOperator& a, const PauliOperator& b) { return a.commutes_with(b); }

int symplectic_form(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch in symplectic form");
    }
    return popcount_parity((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits()));
}

std::ostream& operator<<(std::ostream& out, const PauliOperator& p) { return out << p.str(); }

PauliSum::PauliSum(const PauliOperator& p, Complex coeff) : num_qubits_(p.num_qubits()) { add(p, coeff); }

void PauliSum::add(const PauliOperator& p, Complex coeff) {
    if (p.num_qubits() != num_qubits_) throw std::invalid_argument("PauliSum size mismatch");
    add(PauliKey{p.x_bits(), p.z_bits()}, coeff * p.phase());
}

void PauliSum::add(PauliKey key, Complex coeff) {
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
}

void PauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(num_qubits_);
    for (const auto& [k, c] : terms_) {
        double sign = (std::popcount(k.x & k.z) & 1) ? -1.0 : 1.0;
        out.add(k, std::conj(c) * sign);
    }
    return out;
}

PauliSum PauliSum::operator+(const PauliSum& rhs) const {
    PauliSum out = *this;
    out += rhs;
    return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
    if (rhs.num_qubits_ != num_qubits_) throw std::invalid_argument("PauliSum size mismatch");
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
}

PauliSum PauliSum::operator-(const PauliSum& rhs) const { return *this + rhs * Complex(-1.0); }

PauliSum PauliSum::operator*(Complex scalar) const {
    PauliSum out(num_qubits_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * scalar);
    return out;
}

PauliSum PauliSum::operator*(const PauliSum& rhs) const {
    if (rhs.num_qubits_ != num_qubits_) throw std::invalid_argument("PauliSum size mismatch");
    PauliSum out(num_qubits_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            double sign = (std::popcount(ka.z & kb.x) & 1) ? -1.0 : 1.0;
            out.add(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z}, ca * cb * sign);
        }
    }
    return out;
}

double PauliSum::max_abs_coefficient() const {
    double m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) { return a * b - b * a; }

}  // namespace tcc
