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

#ifndef TCC_ISING_H
#define TCC_ISING_H

#include <cstddef>
#include <vector>

#include "tcc/davies.h"
#include "tcc/model.h"

namespace tcc {

/// H = -sum_b J_b Z_b Z_{b+1} with sigma_x jumps on every spin.
struct IsingChain {
    std::size_t length = 0;
    /// Bond b couples spins b and (b + 1) mod length.
    std::vector<double> couplings;
    bool periodic = false;

    CommutingPauliModel model() const;
};

/// Bonds alternate J, 2J, J, ... starting from the first bond.
IsingChain build_inhomogeneous(std::size_t length, double coupling = 1.0, bool periodic = false);
IsingChain build_homogeneous(std::size_t length, double coupling = 1.0, bool periodic = false);

ModelGapReport davies_gap(const IsingChain& chain, const SpectralDensity& density, const SolveOptions& options = {},
                          std::size_t threads = 0);

/// Closed form for the single bond: 2 h(-2J).
double two_site_gap(const SpectralDensity& density, double coupling = 1.0);

struct IsingScanRow {
    std::size_t length;
    double beta;
    double gap;
};

std::vector<IsingScanRow> ising_scan(const std::vector<std::size_t>& lengths, const std::vector<double>& betas,
                                     SpectralDensity::Kind kind, double coupling = 1.0, bool homogeneous = false,
                                     const SolveOptions& options = {}, std::size_t threads = 0);

}  // namespace tcc

#endif
