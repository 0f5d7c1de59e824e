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

#ifndef TCC_LANCZOS_H
#define TCC_LANCZOS_H

#include <Eigen/Sparse>
#include <cstdint>
#include <vector>

namespace tcc {

struct LanczosOptions {
    std::size_t num_eigenvalues = 3;
    /// Converged when every requested Ritz pair has residual norm below this.
    double tolerance = 1e-10;
    /// Zero means the matrix dimension.
    std::size_t max_iterations = 0;
    std::uint64_t seed = 0x5eed;
};

struct LanczosResult {
    /// Smallest Ritz values, ascending.
    std::vector<double> eigenvalues;
    std::vector<double> residuals;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Smallest eigenvalues of a real symmetric sparse matrix by Lanczos with full
/// reorthogonalization. Copies of a repeated eigenvalue may be reported once.
LanczosResult lanczos_smallest(const Eigen::SparseMatrix<double>& a, const LanczosOptions& options = {});

}  // namespace tcc

#endif
