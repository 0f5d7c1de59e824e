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

#include "tcc/tcc.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tcc/ising.h"
#include "tcc/parallel.h"

namespace tcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest nonzero value of a + b over two spectra that both start at or above zero.
double smallest_nonzero_sum(const BlockSpectrum& a, const BlockSpectrum& b, double tol) {
    double a0 = a.eigenvalues.front();
    double b0 = b.eigenvalues.front();
    if (a0 + b0 > tol) return a0 + b0;
    return std::min(a.smallest_nonzero + b0, a0 + b.smallest_nonzero);
}

}  // namespace

CommutingPauliModel tcc_model(const StabilizerCode& code, ModelPart part, double coupling) {
    if (!(coupling > 0)) throw std::invalid_argument("coupling J must be positive");
    std::size_t n = code.num_qubits();
    std::vector<ModelTerm> terms;
    std::vector<PauliOperator> jumps;
    if (part != ModelPart::ZHalf) {
        for (const auto& b : code.bx_ops()) terms.push_back({b, coupling});
    }
    if (part != ModelPart::XHalf) {
        for (const auto& b : code.bz_ops()) terms.push_back({b, coupling});
    }
    if (part != ModelPart::XHalf) {
        for (std::size_t i = 0; i < n; ++i) jumps.push_back(PauliOperator::single(n, i, 'X'));
    }
    if (part != ModelPart::ZHalf) {
        for (std::size_t i = 0; i < n; ++i) jumps.push_back(PauliOperator::single(n, i, 'Z'));
    }
    return CommutingPauliModel(n, std::move(terms), std::move(jumps));
}

PauliOperator logical_z_product(const StabilizerCode& code, unsigned mu) {
    PauliOperator out(code.num_qubits());
    for (int i = 0; i < 4; ++i) {
        if ((mu >> i) & 1U) out = out * code.logical_z()[static_cast<std::size_t>(i)];
    }
    return out.unsigned_part();
}

PauliOperator logical_x_product(const StabilizerCode& code, unsigned nu) {
    PauliOperator out(code.num_qubits());
    for (int i = 0; i < 4; ++i) {
        if ((nu >> i) & 1U) out = out * code.logical_x()[static_cast<std::size_t>(i)];
    }
    return out.unsigned_part();
}

unsigned mirrored_label(unsigned nu) {
    unsigned out = 0;
    for (unsigned i = 0; i < 4; ++i) {
        if ((nu >> i) & 1U) out |= 1U << (3 - i);
    }
    return out;
}

std::size_t sector_group(unsigned mu) {
    if (mu == 0) return 1;
    if (mu == 1 || mu == 2) return 0;
    if (mu == 4 || mu == 8) return 2;
    return 3;
}

std::array<double, 32> GapResult::sector_minima() const {
    std::array<double, 32> out{};
    for (std::size_t i = 0; i < 32 && i < sectors.size(); ++i) out[i] = sectors[i].minimum;
    return out;
}

std::vector<SectorSpectrum> sector_spectra(const StabilizerCode& code, const SpectralDensity& density, char type,
                                           double coupling, const GapOptions& options) {
    if (type != 'z' && type != 'x') throw std::invalid_argument("sector type must be 'z' or 'x'");
    // z-sectors carry Z strings, which only the sigma_x half of the bath sees.
    CommutingPauliModel model = tcc_model(code, type == 'z' ? ModelPart::ZHalf : ModelPart::XHalf, coupling);
    ThermalState thermal(model, density.beta);
    std::vector<SectorSpectrum> out(16);
    parallel_for(16, options.threads, [&](std::size_t i) {
        auto label = static_cast<unsigned>(i);
        PauliOperator rep = type == 'z' ? logical_z_product(code, label) : logical_x_product(code, label);
        auto spectrum = block_spectrum(build_syndrome_block(model, thermal, density, rep), options.solve);
        out[i] = SectorSpectrum{type, label, rep, std::move(spectrum), 0.0};
    });
    return out;
}

GapResult tcc_gap(const StabilizerCode& code, const SpectralDensity& density, double coupling,
                  const GapOptions& options) {
    GapResult result;
    result.beta = density.beta;
    result.coupling = coupling;
    result.density = std::string(density.name());
    result.num_plaquettes = code.num_plaquettes();

    auto z = sector_spectra(code, density, 'z', coupling, options);
    auto x = sector_spectra(code, density, 'x', coupling, options);
    double tol = options.solve.kernel_tolerance;
    // A full logical sector is a z-half coset times the identity coset of the
    // other half, so its spectrum is the sum set of the two.
    for (auto& s : z) s.minimum = smallest_nonzero_sum(s.spectrum, x[0].spectrum, tol);
    for (auto& s : x) s.minimum = smallest_nonzero_sum(s.spectrum, z[0].spectrum, tol);
    result.sectors = z;
    result.sectors.insert(result.sectors.end(), x.begin(), x.end());

    result.group_minima.fill(kInf);
    result.sector_minimum = kInf;
    for (const auto& s : result.sectors) {
        unsigned mu = s.type == 'z' ? s.label : mirrored_label(s.label);
        auto& g = result.group_minima[sector_group(mu)];
        g = std::min(g, s.minimum);
        result.sector_minimum = std::min(result.sector_minimum, s.minimum);
    }

    CommutingPauliModel full = tcc_model(code, ModelPart::Full, coupling);
    result.delta = full.max_bohr_frequency();
    if (code.num_qubits() <= options.global_qubit_limit) {
        auto report = model_gap(full, density, options.solve, options.threads);
        result.global_gap = report.gap;
        result.kernel_dim = report.kernel_dim;
        result.lhs = report.gap;
        result.lhs_kind = "global_gap";
    } else {
        result.lhs = result.sector_minimum;
        result.lhs_kind = "sector_minimum";
    }

    result.ising_length = options.ising_length ? options.ising_length : code.num_plaquettes() / 3 + 1;
    SpectralDensity ising_density = density;
    result.ising_gap =
        davies_gap(build_inhomogeneous(result.ising_length, coupling), ising_density, options.solve, options.threads)
            .gap;
    result.bound_rhs = std::exp(-density.beta * result.delta) * density(result.delta) * result.ising_gap;
    result.slack = result.lhs - result.bound_rhs;
    result.theorem_ok = result.slack >= -kTheoremTolerance;
    return result;
}

}  // namespace tcc
