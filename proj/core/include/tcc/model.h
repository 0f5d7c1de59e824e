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

#ifndef TCC_MODEL_H
#define TCC_MODEL_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/gf2.h"
#include "tcc/pauli.h"

namespace tcc {

struct ModelTerm {
    PauliOperator op;
    double coupling;
};

/// H = -sum_k J_k T_k over mutually commuting Hermitian Pauli terms, coupled
/// to a bath through Hermitian Pauli jump operators.
///
/// The terms generate an abelian group. A maximal independent subset of terms
/// (the generators) labels group elements g(m) = prod_{i in m} generator_i and
/// joint eigenspaces ("configurations") c, where generator i has eigenvalue
/// (-1)^{c_i}.
class CommutingPauliModel {
   public:
    struct Jump {
        PauliOperator op;
        /// Terms anticommuting with op.
        std::vector<std::size_t> flipped_terms;
        /// Generators anticommuting with op, as a configuration mask.
        std::uint64_t generator_flips = 0;
    };

    struct Decomposition {
        std::uint64_t mask;
        /// p = i^phase_exp g(mask).
        int phase_exp;
    };

    /// Symmetries are Paulis commuting with every term and jump; cosets related
    /// by a symmetry carry identical generator blocks and are enumerated once.
    CommutingPauliModel(std::size_t num_qubits, std::vector<ModelTerm> terms, std::vector<PauliOperator> jumps,
                        std::vector<PauliOperator> symmetries = {});

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<ModelTerm>& terms() const { return terms_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    const std::vector<PauliOperator>& symmetries() const { return symmetries_; }

    std::size_t rank() const { return generators_.size(); }
    const std::vector<PauliOperator>& generators() const { return generators_; }
    std::uint64_t term_mask(std::size_t k) const { return term_masks_[k]; }
    int term_sign(std::size_t k) const { return term_signs_[k]; }

    PauliOperator group_element(std::uint64_t mask) const;
    std::optional<Decomposition> decompose(const PauliOperator& p) const;
    std::uint64_t generator_syndrome(const PauliOperator& p) const;

    /// Eigenvalue of term k in configuration c.
    int term_value(std::size_t k, std::uint64_t config) const {
        return (std::popcount(term_masks_[k] & config) & 1) ? -term_signs_[k] : term_signs_[k];
    }
    double energy(std::uint64_t config) const;

    /// Energy released when jump j acts on configuration c.
    double bohr_frequency(std::size_t j, std::uint64_t config) const;
    /// Same, for an excitation pattern over the jump's flipped terms (bit i = term flipped_terms[i] at -1).
    double pattern_frequency(std::size_t j, std::uint64_t pattern) const;
    bool pattern_realizable(std::size_t j, std::uint64_t pattern) const;
    /// Realized Bohr frequencies of jump j, ascending.
    std::vector<double> bohr_frequencies(std::size_t j) const;
    double max_bohr_frequency() const;

    /// Projector onto the configurations in which jump j releases energy omega,
    /// written as a combination of products of terms.
    PauliSum frequency_projector(std::size_t j, double omega) const;

    /// One Pauli per coset of (group x symmetries) in the Pauli group modulo phases.
    std::vector<PauliOperator> coset_representatives() const;
    std::size_t log2_num_cosets() const;
    /// Number of cosets represented by each representative.
    std::size_t orbit_size() const { return std::size_t{1} << independent_symmetries_; }

   private:
    std::size_t num_qubits_;
    std::vector<ModelTerm> terms_;
    std::vector<Jump> jumps_;
    std::vector<PauliOperator> symmetries_;
    std::vector<PauliOperator> generators_;
    std::vector<std::uint64_t> term_masks_;
    std::vector<int> term_signs_;
    Gf2Eliminator generator_span_{0};
    std::size_t independent_symmetries_ = 0;
};

/// Equal-frequency test used to group Bohr frequencies.
bool same_frequency(double a, double b);

/// Gibbs state of a CommutingPauliModel, stored through its configuration
/// probabilities pi(c) and group-element expectations t(m) = tr(rho g(m)).
class ThermalState {
   public:
    ThermalState(const CommutingPauliModel& model, double beta);

    double beta() const { return beta_; }
    const CommutingPauliModel& model() const { return *model_; }
    const std::vector<double>& probabilities() const { return probabilities_; }
    const std::vector<double>& log_probabilities() const { return log_probabilities_; }
    const std::vector<double>& expectations() const { return expectations_; }

    /// tr(rho a^dag b).
    std::complex<double> inner_product(const PauliOperator& a, const PauliOperator& b) const;
    std::complex<double> inner_product(const PauliSum& a, const PauliSum& b) const;
    /// rho as a combination of group elements.
    PauliSum density_operator() const;

   private:
    const CommutingPauliModel* model_;
    double beta_;
    std::vector<double> log_probabilities_;
    std::vector<double> probabilities_;
    std::vector<double> expectations_;
};

/// In-place Walsh-Hadamard transform: out[m] = sum_c (-1)^{m.c} in[c].
void walsh_hadamard(std::vector<double>& values);

}  // namespace tcc

#endif
