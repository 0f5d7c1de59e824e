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

#include "tcc/davies.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tcc/parallel.h"

namespace tcc {

namespace {

constexpr std::size_t kMaxGroupBasisRank = 12;

}  // namespace

double SpectralDensity::operator()(double omega) const {
    double w = std::abs(omega);
    double base = kind == Kind::Flat ? 1.0 : w / delta;
    return omega >= 0 ? base : std::exp(-beta * w) * base;
}

SpectralDensity::Kind SpectralDensity::parse_kind(std::string_view name) {
    if (name == "flat") return Kind::Flat;
    if (name == "ohmic") return Kind::Ohmic;
    throw std::invalid_argument("unknown spectral density '" + std::string(name) + "' (expected flat or ohmic)");
}

std::vector<JumpComponent> fourier_components(const CommutingPauliModel& model, std::size_t jump) {
    const auto& sigma = model.jumps().at(jump).op;
    auto support = sigma.support();
    std::size_t site = support.empty() ? 0 : support.front();
    char type = 'p';
    if (support.size() == 1) {
        bool x = sigma.x_at(site);
        bool z = sigma.z_at(site);
        type = x ? (z ? 'y' : 'x') : 'z';
    }
    std::vector<JumpComponent> out;
    for (double omega : model.bohr_frequencies(jump)) {
        JumpComponent c{jump, site, type, omega, model.frequency_projector(jump, omega), {}};
        c.op = PauliSum(sigma) * c.projector;
        c.op.prune(1e-15);
        out.push_back(std::move(c));
    }
    return out;
}

PauliSum apply_lindbladian(const CommutingPauliModel& model, const SpectralDensity& density, const PauliSum& x) {
    PauliSum out(model.num_qubits());
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        for (const auto& comp : fourier_components(model, j)) {
            const PauliSum& s = comp.op;
            PauliSum sd = s.adjoint();
            PauliSum sds = sd * s;
            PauliSum term = sd * x * s - (sds * x + x * sds) * 0.5;
            out += term * density(comp.omega);
        }
    }
    out.prune(1e-14);
    return out;
}

GramConditionError::GramConditionError(double condition, double limit)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "thermal Gram matrix is numerically singular: condition number " << condition << " exceeds "
              << limit << " (beta too large for double precision in this basis)";
          return msg.str();
      }()),
      condition_(condition) {}

double LindbladBlock::self_adjointness_residual() const {
    Eigen::MatrixXd a = gram * matrix;
    return (a - a.transpose()).cwiseAbs().maxCoeff();
}

double LindbladBlock::gram_condition() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

std::vector<double> LindbladBlock::generalized_eigenvalues(double max_condition) const {
    double cond = gram_condition();
    if (!(cond <= max_condition)) throw GramConditionError(cond, max_condition);
    Eigen::MatrixXd a = gram * matrix;
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(a, gram, Eigen::EigenvaluesOnly);
    if (ges.info() != Eigen::Success) throw std::runtime_error("generalized eigensolver failed");
    std::vector<double> out(ges.eigenvalues().data(), ges.eigenvalues().data() + ges.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

PauliSum LindbladBlock::to_operator(const CommutingPauliModel& model, const Eigen::VectorXd& coeffs) const {
    if (static_cast<std::size_t>(coeffs.size()) != basis.size()) throw std::invalid_argument("coefficient size mismatch");
    PauliSum out(model.num_qubits());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        if (coeffs[static_cast<Eigen::Index>(m)] != 0) {
            out.add(representative * model.group_element(basis[m]), coeffs[static_cast<Eigen::Index>(m)]);
        }
    }
    return out;
}

LindbladBlock build_lindblad_block(const CommutingPauliModel& model, const ThermalState& thermal,
                                   const SpectralDensity& density, const PauliOperator& representative) {
    std::size_t r = model.rank();
    if (r > kMaxGroupBasisRank) {
        throw std::invalid_argument("group-basis block of dimension 2^" + std::to_string(r) +
                                    " is too large; use build_syndrome_block");
    }
    if (&thermal.model() != &model) throw std::invalid_argument("thermal state belongs to a different model");
    if (representative.num_qubits() != model.num_qubits()) throw std::invalid_argument("representative has wrong qubit count");
    std::size_t dim = std::size_t{1} << r;
    LindbladBlock block;
    block.representative = representative;
    block.basis.resize(dim);
    for (std::size_t m = 0; m < dim; ++m) block.basis[m] = m;
    block.gram.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const auto& t = thermal.expectations();
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            block.gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = t[a ^ b];
        }
    }
    block.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        const auto& jump = model.jumps()[j];
        const auto& flipped = jump.flipped_terms;
        std::size_t f = flipped.size();
        std::uint64_t num = 1ULL << f;
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < f; ++i) {
            if (!representative.commutes_with(model.terms()[flipped[i]].op)) y |= 1ULL << i;
        }
        double eps_p = representative.commutes_with(jump.op) ? 1.0 : -1.0;

        // Local functions of the excitation pattern e over the flipped terms.
        std::vector<double> anti(num), sand(num);
        for (std::uint64_t e = 0; e < num; ++e) {
            double w = model.pattern_frequency(j, e);
            double wy = model.pattern_frequency(j, e ^ y);
            anti[e] = 0.5 * (density(wy) + density(w));
            sand[e] = same_frequency(w, wy) ? density(w) : 0.0;
        }
        walsh_hadamard(anti);
        walsh_hadamard(sand);
        double scale = std::ldexp(1.0, -static_cast<int>(f));

        std::vector<std::uint64_t> mask_t(num, 0);
        std::vector<double> sign_t(num, 1.0);
        for (std::uint64_t tt = 1; tt < num; ++tt) {
            auto low = static_cast<std::size_t>(std::countr_zero(tt));
            mask_t[tt] = mask_t[tt & (tt - 1)] ^ model.term_mask(flipped[low]);
            sign_t[tt] = sign_t[tt & (tt - 1)] * model.term_sign(flipped[low]);
        }
        for (std::uint64_t m = 0; m < dim; ++m) {
            double eps = (std::popcount(jump.generator_flips & m) & 1) ? -eps_p : eps_p;
            for (std::uint64_t tt = 0; tt < num; ++tt) {
                double c = scale * (anti[tt] - eps * sand[tt]) * sign_t[tt];
                if (c != 0) block.matrix(static_cast<Eigen::Index>(m ^ mask_t[tt]), static_cast<Eigen::Index>(m)) += c;
            }
        }
    }
    return block;
}

SyndromeBlock build_syndrome_block(const CommutingPauliModel& model, const ThermalState& thermal,
                                   const SpectralDensity& density, const PauliOperator& representative) {
    if (&thermal.model() != &model) throw std::invalid_argument("thermal state belongs to a different model");
    if (representative.num_qubits() != model.num_qubits()) throw std::invalid_argument("representative has wrong qubit count");
    std::size_t dim = std::size_t{1} << model.rank();
    std::uint64_t psi = model.generator_syndrome(representative);
    const auto& lp = thermal.log_probabilities();
    const auto& jumps = model.jumps();
    std::vector<double> eps(jumps.size());
    for (std::size_t j = 0; j < jumps.size(); ++j) eps[j] = representative.commutes_with(jumps[j].op) ? 1.0 : -1.0;

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(dim * (jumps.size() + 1));
    for (std::uint64_t c = 0; c < dim; ++c) {
        double diag = 0;
        for (std::size_t j = 0; j < jumps.size(); ++j) {
            diag += 0.5 * (density(model.bohr_frequency(j, c ^ psi)) + density(model.bohr_frequency(j, c)));
            std::uint64_t row = c ^ jumps[j].generator_flips;
            double w = model.bohr_frequency(j, row);
            if (!same_frequency(w, model.bohr_frequency(j, row ^ psi))) continue;
            double v = -eps[j] * density(w) * std::exp(0.5 * (lp[row] - lp[c]));
            if (v != 0) triplets.emplace_back(static_cast<int>(row), static_cast<int>(c), v);
        }
        triplets.emplace_back(static_cast<int>(c), static_cast<int>(c), diag);
    }
    SyndromeBlock block;
    block.representative = representative;
    block.symmetric.resize(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    block.symmetric.setFromTriplets(triplets.begin(), triplets.end());
    block.sqrt_weights.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) block.sqrt_weights[c] = std::exp(0.5 * lp[c]);
    return block;
}

BlockSpectrum block_spectrum(const SyndromeBlock& block, const SolveOptions& options) {
    BlockSpectrum out;
    if (block.dim() <= options.dense_limit) {
        Eigen::MatrixXd dense(block.symmetric);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
        out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        out.complete = true;
    } else {
        auto res = lanczos_smallest(block.symmetric, options.lanczos);
        if (!res.converged) throw std::runtime_error("Lanczos did not converge on a generator block");
        out.eigenvalues = res.eigenvalues;
    }
    out.smallest_nonzero = std::numeric_limits<double>::infinity();
    for (double v : out.eigenvalues) {
        if (std::abs(v) <= options.kernel_tolerance) {
            ++out.kernel_dim;
        } else if (v > 0) {
            out.smallest_nonzero = std::min(out.smallest_nonzero, v);
        }
    }
    return out;
}

ModelGapReport model_gap(const CommutingPauliModel& model, const SpectralDensity& density,
                         const SolveOptions& options, std::size_t threads) {
    ThermalState thermal(model, density.beta);
    auto reps = model.coset_representatives();
    std::vector<BlockSpectrum> spectra(reps.size());
    parallel_for(reps.size(), threads, [&](std::size_t i) {
        spectra[i] = block_spectrum(build_syndrome_block(model, thermal, density, reps[i]), options);
    });
    ModelGapReport report;
    report.gap = std::numeric_limits<double>::infinity();
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    report.num_blocks = reps.size();
    report.block_dim = std::size_t{1} << model.rank();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& s = spectra[i];
        if (!s.complete) ++report.num_lanczos_blocks;
        report.kernel_dim += s.kernel_dim * model.orbit_size();
        report.min_eigenvalue = std::min(report.min_eigenvalue, s.eigenvalues.front());
        if (s.smallest_nonzero < report.gap) {
            report.gap = s.smallest_nonzero;
            report.argmin = reps[i];
        }
    }
    return report;
}

double negativity_identity_residual(const CommutingPauliModel& model, const ThermalState& thermal,
                                    const PauliSum& x) {
    double beta = thermal.beta();
    double worst = 0;
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        for (const auto& comp : fourier_components(model, j)) {
            if (comp.omega < 0) continue;
            const PauliSum& s = comp.op;
            PauliSum sd = s.adjoint();
            double boltz = std::exp(-beta * comp.omega);
            PauliSum bracket = sd * commutator(x, s) + commutator(sd, x) * s +
                               (s * commutator(x, sd) + commutator(s, x) * sd) * boltz;
            std::complex<double> lhs = -thermal.inner_product(x, bracket);
            PauliSum cs = commutator(s, x);
            PauliSum csd = commutator(sd, x);
            std::complex<double> rhs = thermal.inner_product(cs, cs) + boltz * thermal.inner_product(csd, csd);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double rho_commutation_residual(const CommutingPauliModel& model, const ThermalState& thermal) {
    if (model.rank() > kMaxGroupBasisRank) throw std::invalid_argument("density operator too large to expand");
    PauliSum rho = thermal.density_operator();
    double worst = 0;
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        for (const auto& comp : fourier_components(model, j)) {
            PauliSum diff = rho * comp.op - comp.op * rho * std::exp(thermal.beta() * comp.omega);
            diff.prune(0.0);
            worst = std::max(worst, diff.max_abs_coefficient());
        }
    }
    return worst;
}

}  // namespace tcc
