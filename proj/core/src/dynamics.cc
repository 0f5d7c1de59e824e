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

#include "tcc/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tcc {

namespace {

constexpr double kWeightThreshold = 1e-14;

}  // namespace

BlockDynamics::BlockDynamics(const SyndromeBlock& block, std::size_t max_dim) {
    if (block.dim() > max_dim) {
        throw std::invalid_argument("block of dimension " + std::to_string(block.dim()) +
                                    " is too large for dense time evolution");
    }
    Eigen::MatrixXd dense(block.symmetric);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    if (es.info() != Eigen::Success) throw std::runtime_error("block diagonalization failed");
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
    weights_.resize(static_cast<Eigen::Index>(block.dim()));
    for (std::size_t c = 0; c < block.dim(); ++c) {
        weights_[static_cast<Eigen::Index>(c)] = block.sqrt_weights[c] * block.sqrt_weights[c];
    }
}

Eigen::VectorXd BlockDynamics::spectral_weights(const Eigen::VectorXd& x) const {
    if (x.size() != weights_.size()) throw std::invalid_argument("coordinate vector size mismatch");
    Eigen::VectorXd y = weights_.cwiseSqrt().cwiseProduct(x);
    return eigenvectors_.transpose() * y;
}

Eigen::VectorXd BlockDynamics::evolve(const Eigen::VectorXd& x, double t) const {
    if (t < 0) throw std::invalid_argument("evolution time must be nonnegative");
    Eigen::VectorXd c = spectral_weights(x);
    Eigen::VectorXd decay = (-t * eigenvalues_.array()).exp();
    Eigen::VectorXd y = eigenvectors_ * c.cwiseProduct(decay);
    return y.cwiseQuotient(weights_.cwiseSqrt());
}

double BlockDynamics::inner_product(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return (weights_.array() * x.array() * y.array()).sum();
}

AutocorrelationSeries autocorrelation(const BlockDynamics& dynamics, const std::string& label,
                                      const std::vector<double>& times, double kernel_tolerance) {
    AutocorrelationSeries s;
    s.observable = label;
    s.times = times;
    Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dynamics.dim()));
    Eigen::VectorXd c = dynamics.spectral_weights(x);
    Eigen::VectorXd c2 = c.cwiseAbs2();
    const auto& lam = dynamics.eigenvalues();
    s.normalization = c2.sum();
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        if (std::abs(lam[k]) <= kernel_tolerance) {
            s.kernel_offset += c2[k];
        } else if (c2[k] > kWeightThreshold * s.normalization) {
            s.slowest_rate = s.slowest_rate ? std::min(*s.slowest_rate, lam[k]) : lam[k];
        }
    }
    for (double t : times) {
        if (t < 0) throw std::invalid_argument("autocorrelation grid has a negative time");
        double v = 0;
        for (Eigen::Index k = 0; k < lam.size(); ++k) {
            v += std::abs(lam[k]) <= kernel_tolerance ? c2[k] : c2[k] * std::exp(-lam[k] * t);
        }
        s.values.push_back(v);
        double rate = s.slowest_rate.value_or(0.0);
        s.envelope.push_back((s.normalization - s.kernel_offset) * std::exp(-rate * t) + s.kernel_offset);
    }
    return s;
}

DecayFit fit_decay_rate(const AutocorrelationSeries& series, double tail_fraction) {
    DecayFit fit;
    std::size_t n = series.times.size();
    if (n < 3) throw std::invalid_argument("decay fit needs at least 3 grid points");
    std::size_t tail = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(n))));
    std::size_t start = n - std::min(tail, n);
    double floor = 1e-13 * std::max(1.0, series.normalization);
    std::vector<double> ts, ys;
    for (std::size_t i = start; i < n; ++i) {
        double v = series.values[i] - series.kernel_offset;
        if (v > floor) {
            ts.push_back(series.times[i]);
            ys.push_back(std::log(v));
        }
    }
    fit.points = ts.size();
    if (ts.size() < 3) return fit;
    Eigen::MatrixXd a(static_cast<Eigen::Index>(ts.size()), 2);
    Eigen::VectorXd b(static_cast<Eigen::Index>(ts.size()));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        a(static_cast<Eigen::Index>(i), 0) = 1.0;
        a(static_cast<Eigen::Index>(i), 1) = ts[i];
        b[static_cast<Eigen::Index>(i)] = ys[i];
    }
    Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
    fit.decays = true;
    fit.intercept = coef[0];
    fit.rate = -coef[1];
    fit.residual = std::sqrt((a * coef - b).squaredNorm() / static_cast<double>(ts.size()));
    return fit;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0) || !(hi > lo) || n < 2) throw std::invalid_argument("log grid needs 0 < lo < hi and n >= 2");
    std::vector<double> out(n);
    double a = std::log(lo);
    double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

bool is_monotone_nonincreasing(const std::vector<double>& values, double tol) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[i - 1] + tol) return false;
    }
    return true;
}

double envelope_violation(const AutocorrelationSeries& series) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < series.values.size(); ++i) worst = std::max(worst, series.values[i] - series.envelope[i]);
    return worst;
}

}  // namespace tcc
