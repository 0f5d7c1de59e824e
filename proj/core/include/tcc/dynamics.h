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

#ifndef TCC_DYNAMICS_H
#define TCC_DYNAMICS_H

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "tcc/davies.h"

namespace tcc {

/// Spectral decomposition of one coset block, used to evaluate e^{tL}.
/// Coordinates are in the projector basis P Pi_c.
class BlockDynamics {
   public:
    /// Diagonalizes the block densely; refuses blocks above max_dim.
    explicit BlockDynamics(const SyndromeBlock& block, std::size_t max_dim = 4096);

    std::size_t dim() const { return weights_.size(); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    /// Coefficients of e^{tL} X for X = sum_c x[c] P Pi_c. Throws for t < 0.
    Eigen::VectorXd evolve(const Eigen::VectorXd& x, double t) const;
    /// Overlaps c_k of D^{1/2} x with each eigenvector, so <X, X(t)> = sum_k c_k^2 e^{-lambda_k t}.
    Eigen::VectorXd spectral_weights(const Eigen::VectorXd& x) const;
    /// <X, Y> = sum_c pi(c) x_c y_c.
    double inner_product(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

   private:
    Eigen::VectorXd weights_;  // pi(c)
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

struct AutocorrelationSeries {
    std::string observable;
    std::vector<double> times;
    std::vector<double> values;
    double normalization = 0;
    /// Squared overlap with the kernel, the t -> infinity limit.
    double kernel_offset = 0;
    /// Smallest eigenvalue above the kernel with weight above threshold; nullopt for pure kernel.
    std::optional<double> slowest_rate;
    /// normalization * e^{-slowest_rate t} + offset on the same grid.
    std::vector<double> envelope;
};

/// <X, e^{tL} X> for X = P (all projector coordinates one) on the given grid.
AutocorrelationSeries autocorrelation(const BlockDynamics& dynamics, const std::string& label,
                                      const std::vector<double>& times, double kernel_tolerance = 1e-9);

struct DecayFit {
    bool decays = false;
    double rate = 0;
    double intercept = 0;
    /// Root-mean-square residual of the log-linear fit.
    double residual = 0;
    std::size_t points = 0;
};

/// Least-squares slope of log(value - offset) over the last quarter of the grid.
/// A series with no decaying part returns decays = false.
DecayFit fit_decay_rate(const AutocorrelationSeries& series, double tail_fraction = 0.25);

/// n logarithmically spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo = 1e-2, double hi = 1e2, std::size_t n = 40);

/// True when values never increase by more than tol.
bool is_monotone_nonincreasing(const std::vector<double>& values, double tol = 1e-12);
/// Largest value - envelope over the grid; nonpositive when the envelope holds.
double envelope_violation(const AutocorrelationSeries& series);

}  // namespace tcc

#endif
