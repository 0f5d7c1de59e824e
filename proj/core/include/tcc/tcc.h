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

#ifndef TCC_TCC_H
#define TCC_TCC_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/code.h"
#include "tcc/davies.h"
#include "tcc/model.h"

namespace tcc {

/// Which half of the color-code bath to keep. The sigma_x jumps only see the
/// B^z plaquettes and the sigma_z jumps only see B^x, so the generator splits
/// into two commuting pieces.
enum class ModelPart { Full, ZHalf, XHalf };

/// H = -J sum_p (B_p^x + B_p^z) with sigma_x and sigma_z jumps on every qubit.
/// ZHalf keeps B^z with sigma_x jumps; XHalf keeps B^x with sigma_z jumps.
CommutingPauliModel tcc_model(const StabilizerCode& code, ModelPart part = ModelPart::Full, double coupling = 1.0);

/// Z_1^mu_1 .. Z_4^mu_4 (or X's) for a 4-bit label; bit i is logical i+1.
PauliOperator logical_z_product(const StabilizerCode& code, unsigned mu);
PauliOperator logical_x_product(const StabilizerCode& code, unsigned nu);

/// Logical z-sector whose loops carry the x-sector nu (X_i lives on the loop of Z_{5-i}).
unsigned mirrored_label(unsigned nu);

struct SectorSpectrum {
    char type;  // 'z' or 'x'
    unsigned label;
    PauliOperator representative;
    BlockSpectrum spectrum;
    /// Smallest nonzero eigenvalue of -L on the whole logical sector.
    double minimum;
};

struct GapOptions {
    SolveOptions solve;
    std::size_t threads = 0;
    /// Diagonalize every coset of the full model when 2N <= this many qubits.
    std::size_t global_qubit_limit = 8;
    /// Chain length for the Ising comparison; zero picks N/3 + 1.
    std::size_t ising_length = 0;
};

struct GapResult {
    double beta = 0;
    double coupling = 1;
    std::string density;
    std::size_t num_plaquettes = 0;

    std::optional<double> global_gap;
    std::optional<std::size_t> kernel_dim;

    /// z-sectors mu = 0..15 followed by x-sectors nu = 0..15.
    std::vector<SectorSpectrum> sectors;
    /// Minima over the sector families: Z_1 or Z_2, plaquette algebra, Z_3 or Z_4, products Z_i Z_j ...
    std::array<double, 4> group_minima{};
    double sector_minimum = 0;

    double delta = 0;
    std::size_t ising_length = 0;
    double ising_gap = 0;
    double bound_rhs = 0;

    double lhs = 0;
    std::string lhs_kind;
    double slack = 0;
    bool theorem_ok = false;

    std::array<double, 32> sector_minima() const;
};

/// Sector spectra of one half model, labels 0..15.
std::vector<SectorSpectrum> sector_spectra(const StabilizerCode& code, const SpectralDensity& density, char type,
                                           double coupling = 1.0, const GapOptions& options = {});

GapResult tcc_gap(const StabilizerCode& code, const SpectralDensity& density, double coupling = 1.0,
                  const GapOptions& options = {});

/// Index 0..3 of the sector family containing z-label mu.
std::size_t sector_group(unsigned mu);

constexpr double kTheoremTolerance = 1e-10;

}  // namespace tcc

#endif
