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

#ifndef TCC_DAVIES_H
#define TCC_DAVIES_H

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/lanczos.h"
#include "tcc/model.h"
#include "tcc/pauli.h"

namespace tcc {

/// Bath rates h(omega) in units where J = 1. Negative frequencies follow
/// h(-w) = exp(-beta w) h(w).
struct SpectralDensity {
    enum class Kind { Flat, Ohmic };

    Kind kind = Kind::Flat;
    double beta = 1.0;
    /// Reference frequency: ohmic rates are h(w) = w / delta for w >= 0.
    double delta = 6.0;

    double operator()(double omega) const;
    std::string_view name() const { return kind == Kind::Flat ? "flat" : "ohmic"; }
    static Kind parse_kind(std::string_view name);
};

/// One Fourier component S(omega) = sigma * Pi_omega of a Pauli jump.
struct JumpComponent {
    std::size_t jump;
    /// First qubit the jump acts on, and 'x', 'y' or 'z' for single-qubit jumps ('p' otherwise).
    std::size_t site;
    char type;
    double omega;
    PauliSum projector;
    PauliSum op;
};

/// All components of jump j with a realized Bohr frequency, ascending in omega.
std::vector<JumpComponent> fourier_components(const CommutingPauliModel& model, std::size_t jump);

/// Heisenberg-picture generator L(X) = sum_{j, omega} h(omega) (S^dag X S - {S^dag S, X} / 2)
/// evaluated symbolically on a combination of Paulis.
PauliSum apply_lindbladian(const CommutingPauliModel& model, const SpectralDensity& density, const PauliSum& x);

class GramConditionError : public std::runtime_error {
   public:
    GramConditionError(double condition, double limit);
    double condition() const { return condition_; }

   private:
    double condition_;
};

/// -L restricted to the coset span{ P g(m) }, in the group-element basis,
/// together with the thermal Gram matrix G[a][b] = <P g(a), P g(b)>.
struct LindbladBlock {
    PauliOperator representative;
    std::vector<std::uint64_t> basis;
    Eigen::MatrixXd gram;
    Eigen::MatrixXd matrix;

    std::size_t dim() const { return basis.size(); }
    /// max |(G M) - (G M)^T|.
    double self_adjointness_residual() const;
    double gram_condition() const;
    /// Generalized symmetric eigenproblem (G M) v = lambda G v. Throws GramConditionError
    /// when cond(G) exceeds max_condition.
    std::vector<double> generalized_eigenvalues(double max_condition = 1e12) const;
    /// Operator sum_m coeffs[m] P g(m).
    PauliSum to_operator(const CommutingPauliModel& model, const Eigen::VectorXd& coeffs) const;
};

LindbladBlock build_lindblad_block(const CommutingPauliModel& model, const ThermalState& thermal,
                                   const SpectralDensity& density, const PauliOperator& representative);

/// The same coset in the projector basis P Pi_c, where the Gram matrix is
/// diag(pi(c)). Stored as the symmetric matrix D^{1/2} M D^{-1/2}.
struct SyndromeBlock {
    PauliOperator representative;
    Eigen::SparseMatrix<double> symmetric;
    std::vector<double> sqrt_weights;

    std::size_t dim() const { return sqrt_weights.size(); }
};

SyndromeBlock build_syndrome_block(const CommutingPauliModel& model, const ThermalState& thermal,
                                   const SpectralDensity& density, const PauliOperator& representative);

struct SolveOptions {
    /// Blocks up to this dimension are diagonalized densely; larger ones use Lanczos.
    std::size_t dense_limit = 256;
    /// Eigenvalues with |lambda| at most this count as kernel.
    double kernel_tolerance = 1e-9;
    LanczosOptions lanczos;
};

struct BlockSpectrum {
    /// Ascending; the full spectrum for dense solves, the lowest few otherwise.
    std::vector<double> eigenvalues;
    bool complete = false;
    std::size_t kernel_dim = 0;
    /// Smallest eigenvalue above the kernel tolerance, or +inf.
    double smallest_nonzero = 0;
};

BlockSpectrum block_spectrum(const SyndromeBlock& block, const SolveOptions& options = {});

struct ModelGapReport {
    double gap = 0;
    double min_eigenvalue = 0;
    std::size_t kernel_dim = 0;
    std::size_t num_blocks = 0;
    std::size_t num_lanczos_blocks = 0;
    std::size_t block_dim = 0;
    PauliOperator argmin;
};

/// Smallest nonzero eigenvalue of -L over every coset block of the model.
ModelGapReport model_gap(const CommutingPauliModel& model, const SpectralDensity& density,
                         const SolveOptions& options = {}, std::size_t threads = 0);

/// Max over jumps and omega >= 0 of |-<X, D(X)> - <[S,X],[S,X]> - e^{-beta w} <[S^dag,X],[S^dag,X]>|,
/// where D is the bracket multiplying h(omega)/2 in the generator.
double negativity_identity_residual(const CommutingPauliModel& model, const ThermalState& thermal,
                                    const PauliSum& x);

/// Max over jump components of the largest coefficient of rho S(w) - e^{beta w} S(w) rho.
double rho_commutation_residual(const CommutingPauliModel& model, const ThermalState& thermal);

}  // namespace tcc

#endif
