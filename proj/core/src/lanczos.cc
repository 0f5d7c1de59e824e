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

#include "tcc/lanczos.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tcc {

LanczosResult lanczos_smallest(const Eigen::SparseMatrix<double>& a, const LanczosOptions& options) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("lanczos needs a square matrix");
    if (n == 0) throw std::invalid_argument("lanczos needs a nonempty matrix");
    std::size_t want = std::min<std::size_t>(options.num_eigenvalues, static_cast<std::size_t>(n));
    std::size_t max_iter = options.max_iterations ? options.max_iterations : static_cast<std::size_t>(n);
    max_iter = std::min<std::size_t>(max_iter, static_cast<std::size_t>(n));

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd q(n);
    for (Eigen::Index i = 0; i < n; ++i) q[i] = normal(rng);
    q.normalize();

    Eigen::MatrixXd basis(n, static_cast<Eigen::Index>(max_iter));
    std::vector<double> alpha;
    std::vector<double> beta;
    LanczosResult result;

    auto ritz = [&](bool exhausted) {
        auto k = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
        Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                    : Eigen::VectorXd(0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        double next_beta = exhausted ? 0.0 : beta.back();
        result.eigenvalues.clear();
        result.residuals.clear();
        std::size_t m = std::min<std::size_t>(want, static_cast<std::size_t>(k));
        bool ok = m == want;
        for (std::size_t i = 0; i < m; ++i) {
            auto ii = static_cast<Eigen::Index>(i);
            double res = std::abs(next_beta * tri.eigenvectors()(k - 1, ii));
            result.eigenvalues.push_back(tri.eigenvalues()[ii]);
            result.residuals.push_back(res);
            ok = ok && res <= options.tolerance;
        }
        return ok;
    };

    Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);
    double prev_beta = 0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        basis.col(static_cast<Eigen::Index>(it)) = q;
        Eigen::VectorXd w = a * q - prev_beta * prev;
        double al = q.dot(w);
        w -= al * q;
        auto cols = basis.leftCols(static_cast<Eigen::Index>(it + 1));
        for (int pass = 0; pass < 2; ++pass) w -= cols * (cols.transpose() * w);
        alpha.push_back(al);
        double b = w.norm();
        result.iterations = it + 1;
        bool exhausted = b <= 1e-12 * std::max(1.0, std::abs(al)) || it + 1 == static_cast<std::size_t>(n);
        beta.push_back(b);
        bool check = exhausted || it + 1 == max_iter || (it + 1 >= want && (it + 1) % 5 == 0);
        if (check) {
            bool ok = ritz(exhausted);
            if (exhausted) {
                // Krylov space is invariant: Ritz values are exact eigenvalues.
                result.converged = true;
                return result;
            }
            if (ok) {
                result.converged = true;
                return result;
            }
        }
        prev = q;
        prev_beta = b;
        q = w / b;
    }
    result.converged = false;
    return result;
}

}  // namespace tcc
