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

#ifndef TCC_ORACLE_H
#define TCC_ORACLE_H

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "tcc/davies.h"
#include "tcc/model.h"
#include "tcc/pauli.h"

namespace tcc {

/// Brute-force reference for the Davies generator on 2^n x 2^n matrices.
/// Uses only the model's terms and jumps: H is diagonalized numerically and
/// the Fourier components are eigenprojector sandwiches.
class DenseOracle {
   public:
    using Complex = std::complex<double>;
    using Matrix = Eigen::SparseMatrix<Complex>;

    struct Component {
        std::size_t jump;
        double omega;
        Matrix op;
    };

    struct Restriction {
        /// -L in the given basis: column k holds the coefficients of -L(b_k).
        Eigen::MatrixXcd matrix;
        /// gram(j, k) = tr(rho b_j^dag b_k).
        Eigen::MatrixXcd gram;
        /// Largest coefficient of L(b_k) outside the basis.
        double closure_residual = 0;
    };

    struct Spectrum {
        /// Invariant subspaces of -L, as lists of Pauli keys.
        std::vector<std::vector<PauliKey>> components;
        /// Ascending eigenvalues of -L on each component.
        std::vector<std::vector<double>> eigenvalues;
        /// Largest |K - K^dag| entry of the symmetrized generator.
        double hermiticity_residual = 0;

        std::size_t component_of(PauliKey key) const;
        std::vector<double> all_eigenvalues() const;
    };

    static constexpr std::size_t kMaxQubits = 8;

    DenseOracle(const CommutingPauliModel& model, const SpectralDensity& density);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }
    const std::vector<double>& energies() const { return energies_; }
    const std::vector<Component>& components() const { return components_; }
    /// Realized Bohr frequencies of one jump, ascending.
    std::vector<double> bohr_frequencies(std::size_t jump) const;
    const Matrix& rho() const { return rho_; }
    const Matrix& hamiltonian() const { return hamiltonian_; }

    static Matrix to_matrix(const PauliOperator& p);
    static Matrix to_matrix(const PauliSum& s);
    /// Expansion of a matrix in phase-free Paulis X_a Z_b.
    static PauliSum to_pauli_sum(const Matrix& m, std::size_t num_qubits, double tol = 1e-14);

    /// L(X) = sum_{j, w} h(w) (S^dag X S - {S^dag S, X} / 2).
    Matrix apply(const Matrix& x) const;
    PauliSum apply(const PauliSum& x) const;
    Complex inner_product(const Matrix& a, const Matrix& b) const;

    Restriction restrict_to(const std::vector<PauliOperator>& basis) const;
    /// Spectrum of -L on the full operator space through the similarity
    /// K(A) = -L(A rho^{-1/2}) rho^{1/2}, which is Hermitian for the trace inner product.
    Spectrum spectrum(std::size_t threads = 0) const;
    /// Hermitian form of -L on the span of the given Paulis (assumed invariant).
    Eigen::MatrixXcd hermitian_block(const std::vector<PauliOperator>& basis) const;

    /// Max entry of rho S(w) - e^{beta w} S(w) rho over all components.
    double rho_commutation_residual() const;

   private:
    Matrix symmetrized(const PauliOperator& p) const;

    std::size_t num_qubits_;
    SpectralDensity density_;
    Matrix hamiltonian_;
    std::vector<double> energies_;
    std::vector<Matrix> projectors_;
    std::vector<Component> components_;
    Matrix rho_;
    Matrix rho_sqrt_;
    Matrix rho_inv_sqrt_;
};

}  // namespace tcc

#endif
