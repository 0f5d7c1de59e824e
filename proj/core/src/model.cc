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

#include "tcc/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tcc {

namespace {

constexpr std::size_t kMaxTerms = 64;
constexpr std::size_t kMaxThermalRank = 24;
constexpr std::size_t kMaxCosetLog2 = 24;

const std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

bool same_frequency(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

CommutingPauliModel::CommutingPauliModel(std::size_t num_qubits, std::vector<ModelTerm> terms,
                                         std::vector<PauliOperator> jumps, std::vector<PauliOperator> symmetries)
    : num_qubits_(num_qubits), terms_(std::move(terms)), symmetries_(std::move(symmetries)) {
    if (terms_.size() > kMaxTerms) throw std::invalid_argument("at most 64 Hamiltonian terms are supported");
    for (const auto& t : terms_) {
        if (t.op.num_qubits() != num_qubits_) throw std::invalid_argument("term has wrong qubit count");
        if (!t.op.is_hermitian()) throw std::invalid_argument("term " + t.op.str() + " is not Hermitian");
        if (!std::isfinite(t.coupling)) throw std::invalid_argument("term coupling is not finite");
    }
    for (std::size_t a = 0; a < terms_.size(); ++a) {
        for (std::size_t b = a + 1; b < terms_.size(); ++b) {
            if (!terms_[a].op.commutes_with(terms_[b].op)) {
                throw std::invalid_argument("terms " + std::to_string(a) + " and " + std::to_string(b) +
                                            " do not commute");
            }
        }
    }

    generator_span_ = Gf2Eliminator(2 * num_qubits_);
    for (const auto& t : terms_) {
        if (generator_span_.add(BitVector::from_pauli(t.op))) generators_.push_back(t.op);
    }
    // Rebuild so that solve() returns masks over generators only.
    generator_span_ = Gf2Eliminator(2 * num_qubits_);
    for (const auto& g : generators_) generator_span_.add(BitVector::from_pauli(g));

    for (const auto& t : terms_) {
        auto d = decompose(t.op);
        if (!d || (d->phase_exp & 1)) throw std::logic_error("term is not a signed group element");
        term_masks_.push_back(d->mask);
        term_signs_.push_back(d->phase_exp == 0 ? 1 : -1);
    }

    for (auto& op : jumps) {
        if (op.num_qubits() != num_qubits_) throw std::invalid_argument("jump has wrong qubit count");
        if (!op.is_hermitian()) throw std::invalid_argument("jump " + op.str() + " is not Hermitian");
        Jump j{op, {}, generator_syndrome(op)};
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            if (!op.commutes_with(terms_[k].op)) j.flipped_terms.push_back(k);
        }
        if (j.flipped_terms.size() > 16) throw std::invalid_argument("jump flips too many terms");
        jumps_.push_back(std::move(j));
    }

    Gf2Eliminator with_symmetries = generator_span_;
    for (const auto& s : symmetries_) {
        if (s.num_qubits() != num_qubits_) throw std::invalid_argument("symmetry has wrong qubit count");
        for (const auto& t : terms_) {
            if (!s.commutes_with(t.op)) throw std::invalid_argument("symmetry does not commute with the Hamiltonian");
        }
        for (const auto& j : jumps_) {
            if (!s.commutes_with(j.op)) throw std::invalid_argument("symmetry does not commute with a jump");
        }
        if (with_symmetries.add(BitVector::from_pauli(s))) ++independent_symmetries_;
    }
}

PauliOperator CommutingPauliModel::group_element(std::uint64_t mask) const {
    PauliOperator out(num_qubits_);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if ((mask >> i) & 1U) out *= generators_[i];
    }
    return out;
}

std::optional<CommutingPauliModel::Decomposition> CommutingPauliModel::decompose(const PauliOperator& p) const {
    auto combo = generator_span_.solve(BitVector::from_pauli(p));
    if (!combo) return std::nullopt;
    std::uint64_t mask = combo->low_word();
    PauliOperator g = group_element(mask);
    return Decomposition{mask, ((p.phase_exp() - g.phase_exp()) % 4 + 4) % 4};
}

std::uint64_t CommutingPauliModel::generator_syndrome(const PauliOperator& p) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!p.commutes_with(generators_[i])) out |= 1ULL << i;
    }
    return out;
}

double CommutingPauliModel::energy(std::uint64_t config) const {
    double e = 0;
    for (std::size_t k = 0; k < terms_.size(); ++k) e -= terms_[k].coupling * term_value(k, config);
    return e;
}

double CommutingPauliModel::bohr_frequency(std::size_t j, std::uint64_t config) const {
    double w = 0;
    for (auto k : jumps_.at(j).flipped_terms) w -= 2 * terms_[k].coupling * term_value(k, config);
    return w;
}

double CommutingPauliModel::pattern_frequency(std::size_t j, std::uint64_t pattern) const {
    const auto& flipped = jumps_.at(j).flipped_terms;
    double w = 0;
    for (std::size_t i = 0; i < flipped.size(); ++i) {
        double j_k = terms_[flipped[i]].coupling;
        w += ((pattern >> i) & 1U) ? 2 * j_k : -2 * j_k;
    }
    return w;
}

bool CommutingPauliModel::pattern_realizable(std::size_t j, std::uint64_t pattern) const {
    // The pattern needs term_mask(k).c = pattern_k xor [sign_k < 0]; consistent iff
    // every dependent subset of masks has zero right-hand side.
    const auto& flipped = jumps_.at(j).flipped_terms;
    std::size_t f = flipped.size();
    for (std::uint64_t subset = 1; subset < (1ULL << f); ++subset) {
        std::uint64_t mask = 0;
        int rhs = 0;
        for (std::size_t i = 0; i < f; ++i) {
            if (!((subset >> i) & 1U)) continue;
            mask ^= term_masks_[flipped[i]];
            rhs ^= static_cast<int>((pattern >> i) & 1U) ^ (term_signs_[flipped[i]] < 0 ? 1 : 0);
        }
        if (mask == 0 && rhs) return false;
    }
    return true;
}

std::vector<double> CommutingPauliModel::bohr_frequencies(std::size_t j) const {
    std::size_t f = jumps_.at(j).flipped_terms.size();
    std::vector<double> out;
    for (std::uint64_t e = 0; e < (1ULL << f); ++e) {
        if (!pattern_realizable(j, e)) continue;
        double w = pattern_frequency(j, e);
        bool known = std::any_of(out.begin(), out.end(), [&](double x) { return same_frequency(x, w); });
        if (!known) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double CommutingPauliModel::max_bohr_frequency() const {
    double best = 0;
    for (std::size_t j = 0; j < jumps_.size(); ++j) {
        for (double w : bohr_frequencies(j)) best = std::max(best, w);
    }
    return best;
}

PauliSum CommutingPauliModel::frequency_projector(std::size_t j, double omega) const {
    const auto& flipped = jumps_.at(j).flipped_terms;
    std::size_t f = flipped.size();
    // Products of every subset T of flipped terms.
    std::vector<PauliOperator> products(1ULL << f, PauliOperator(num_qubits_));
    for (std::uint64_t t = 1; t < (1ULL << f); ++t) {
        auto low = static_cast<std::size_t>(std::countr_zero(t));
        products[t] = products[t & (t - 1)] * terms_[flipped[low]].op;
    }
    PauliSum out(num_qubits_);
    double scale = std::ldexp(1.0, -static_cast<int>(f));
    for (std::uint64_t e = 0; e < (1ULL << f); ++e) {
        if (!pattern_realizable(j, e) || !same_frequency(pattern_frequency(j, e), omega)) continue;
        for (std::uint64_t t = 0; t < (1ULL << f); ++t) {
            double sign = (std::popcount(t & e) & 1) ? -1.0 : 1.0;
            out.add(products[t], sign * scale);
        }
    }
    out.prune(1e-15);
    return out;
}

std::size_t CommutingPauliModel::log2_num_cosets() const {
    return 2 * num_qubits_ - rank() - independent_symmetries_;
}

std::vector<PauliOperator> CommutingPauliModel::coset_representatives() const {
    std::size_t k = log2_num_cosets();
    if (k > kMaxCosetLog2) throw std::invalid_argument("too many cosets to enumerate: 2^" + std::to_string(k));
    Gf2Eliminator span = generator_span_;
    for (const auto& s : symmetries_) span.add(BitVector::from_pauli(s));
    std::vector<PauliOperator> complement;
    for (std::size_t bit = 0; bit < 2 * num_qubits_ && complement.size() < k; ++bit) {
        BitVector unit(2 * num_qubits_);
        unit.set(bit);
        if (span.add(unit)) complement.push_back(pauli_from_symplectic(num_qubits_, unit));
    }
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t combo = 0; combo < (1ULL << k); ++combo) {
        PauliOperator p(num_qubits_);
        for (std::size_t i = 0; i < k; ++i) {
            if ((combo >> i) & 1U) p *= complement[i];
        }
        out.push_back(p.unsigned_part());
    }
    return out;
}

void walsh_hadamard(std::vector<double>& values) {
    std::size_t n = values.size();
    if (n & (n - 1)) throw std::invalid_argument("walsh_hadamard needs a power-of-two length");
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = values[j];
                double b = values[j + h];
                values[j] = a + b;
                values[j + h] = a - b;
            }
        }
    }
}

ThermalState::ThermalState(const CommutingPauliModel& model, double beta) : model_(&model), beta_(beta) {
    if (!(beta >= 0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and nonnegative");
    std::size_t r = model.rank();
    if (r > kMaxThermalRank) {
        throw std::invalid_argument("thermal state needs 2^rank configurations; rank " + std::to_string(r) +
                                    " is too large");
    }
    std::size_t dim = std::size_t{1} << r;
    log_probabilities_.resize(dim);
    double top = -std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 0; c < dim; ++c) {
        log_probabilities_[c] = -beta * model.energy(c);
        top = std::max(top, log_probabilities_[c]);
    }
    double z = 0;
    for (double lw : log_probabilities_) z += std::exp(lw - top);
    double log_z = top + std::log(z);
    probabilities_.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        log_probabilities_[c] -= log_z;
        probabilities_[c] = std::exp(log_probabilities_[c]);
    }
    expectations_ = probabilities_;
    walsh_hadamard(expectations_);
}

std::complex<double> ThermalState::inner_product(const PauliOperator& a, const PauliOperator& b) const {
    auto d = model_->decompose(a.adjoint() * b);
    if (!d) return 0.0;
    return kIPowers[d->phase_exp] * expectations_[d->mask];
}

std::complex<double> ThermalState::inner_product(const PauliSum& a, const PauliSum& b) const {
    std::size_t n = model_->num_qubits();
    std::complex<double> total = 0;
    for (const auto& [ka, ca] : a.terms()) {
        PauliOperator pa(n, ka.x, ka.z, 0);
        for (const auto& [kb, cb] : b.terms()) {
            PauliOperator pb(n, kb.x, kb.z, 0);
            total += std::conj(ca) * cb * inner_product(pa, pb);
        }
    }
    return total;
}

PauliSum ThermalState::density_operator() const {
    std::size_t n = model_->num_qubits();
    PauliSum out(n);
    double scale = std::ldexp(1.0, -static_cast<int>(n));
    for (std::uint64_t m = 0; m < expectations_.size(); ++m) {
        out.add(model_->group_element(m), expectations_[m] * scale);
    }
    return out;
}

}  // namespace tcc
