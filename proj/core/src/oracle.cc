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

#include "tcc/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tcc/parallel.h"

namespace tcc {

namespace {

using Complex = DenseOracle::Complex;
using Matrix = DenseOracle::Matrix;

constexpr double kLevelTolerance = 1e-9;
constexpr double kProjectorPrune = 1e-12;

Matrix from_dense(const Eigen::MatrixXcd& m, double tol) {
    Matrix out = m.sparseView();
    out.prune([tol](Eigen::Index, Eigen::Index, const Complex& v) { return std::abs(v) > tol; });
    out.makeCompressed();
    return out;
}

double max_entry(const Matrix& m) {
    double worst = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (Matrix::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

Complex trace(const Matrix& m) {
    Complex out = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (Matrix::InnerIterator it(m, k); it; ++it) {
            if (it.row() == it.col()) out += it.value();
        }
    }
    return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

}  // namespace

std::size_t DenseOracle::Spectrum::component_of(PauliKey key) const {
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (std::find(components[c].begin(), components[c].end(), key) != components[c].end()) return c;
    }
    throw std::out_of_range("Pauli key not in any component");
}

std::vector<double> DenseOracle::Spectrum::all_eigenvalues() const {
    std::vector<double> out;
    for (const auto& e : eigenvalues) out.insert(out.end(), e.begin(), e.end());
    std::sort(out.begin(), out.end());
    return out;
}

DenseOracle::DenseOracle(const CommutingPauliModel& model, const SpectralDensity& density)
    : num_qubits_(model.num_qubits()), density_(density) {
    if (num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("dense oracle supports at most " + std::to_string(kMaxQubits) +
                                    " qubits, model has " + std::to_string(num_qubits_));
    }
    auto d = static_cast<Eigen::Index>(dim());
    hamiltonian_.resize(d, d);
    for (const auto& t : model.terms()) hamiltonian_ -= to_matrix(t.op) * Complex(t.coupling);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(hamiltonian_)};
    if (es.info() != Eigen::Success) throw std::runtime_error("dense oracle: Hamiltonian diagonalization failed");
    const auto& evals = es.eigenvalues();
    Eigen::Index start = 0;
    while (start < d) {
        Eigen::Index end = start + 1;
        while (end < d && evals[end] - evals[start] <= kLevelTolerance) ++end;
        auto block = es.eigenvectors().middleCols(start, end - start);
        energies_.push_back(evals.segment(start, end - start).mean());
        projectors_.push_back(from_dense(block * block.adjoint(), kProjectorPrune));
        start = end;
    }

    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        Matrix sigma = to_matrix(model.jumps()[j].op);
        std::map<double, Matrix> by_omega;
        for (std::size_t a = 0; a < energies_.size(); ++a) {
            for (std::size_t b = 0; b < energies_.size(); ++b) {
                Matrix sandwich = projectors_[b] * sigma * projectors_[a];
                sandwich.prune(Complex(0), kProjectorPrune);
                if (max_entry(sandwich) <= 1e-10) continue;
                double omega = energies_[a] - energies_[b];
                auto it = std::find_if(by_omega.begin(), by_omega.end(),
                                       [&](const auto& kv) { return same_frequency(kv.first, omega); });
                if (it == by_omega.end()) {
                    by_omega.emplace(omega, sandwich);
                } else {
                    it->second += sandwich;
                }
            }
        }
        for (auto& [omega, op] : by_omega) components_.push_back({j, omega, std::move(op)});
    }

    double e0 = energies_.front();
    double partition = 0;
    for (std::size_t a = 0; a < energies_.size(); ++a) {
        partition += std::exp(-density.beta * (energies_[a] - e0)) * trace(projectors_[a]).real();
    }
    rho_.resize(d, d);
    rho_sqrt_.resize(d, d);
    rho_inv_sqrt_.resize(d, d);
    for (std::size_t a = 0; a < energies_.size(); ++a) {
        double w = std::exp(-density.beta * (energies_[a] - e0)) / partition;
        rho_ += projectors_[a] * Complex(w);
        rho_sqrt_ += projectors_[a] * Complex(std::sqrt(w));
        rho_inv_sqrt_ += projectors_[a] * Complex(1.0 / std::sqrt(w));
    }
}

std::vector<double> DenseOracle::bohr_frequencies(std::size_t jump) const {
    std::vector<double> out;
    for (const auto& c : components_) {
        if (c.jump == jump) out.push_back(c.omega);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix DenseOracle::to_matrix(const PauliOperator& p) {
    PauliSum s(p.num_qubits());
    s.add(p, 1.0);
    return to_matrix(s);
}

Matrix DenseOracle::to_matrix(const PauliSum& s) {
    if (s.num_qubits() > kMaxQubits) throw std::invalid_argument("too many qubits for a dense matrix");
    std::size_t d = std::size_t{1} << s.num_qubits();
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(d * s.size());
    for (const auto& [key, coeff] : s.terms()) {
        for (std::uint64_t col = 0; col < d; ++col) {
            double sign = (std::popcount(key.z & col) & 1) ? -1.0 : 1.0;
            triplets.emplace_back(static_cast<Eigen::Index>(col ^ key.x), static_cast<Eigen::Index>(col), sign * coeff);
        }
    }
    Matrix out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    out.setFromTriplets(triplets.begin(), triplets.end());
    out.prune(Complex(0), 0.0);
    return out;
}

PauliSum DenseOracle::to_pauli_sum(const Matrix& m, std::size_t num_qubits, double tol) {
    std::size_t d = std::size_t{1} << num_qubits;
    // Entries are grouped by x-part a = row ^ col; a Walsh-Hadamard transform over
    // the column index then yields every z-part at once.
    std::unordered_map<std::uint64_t, std::vector<Complex>> by_x;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (Matrix::InnerIterator it(m, k); it; ++it) {
            auto a = static_cast<std::uint64_t>(it.row()) ^ static_cast<std::uint64_t>(it.col());
            auto& v = by_x[a];
            if (v.empty()) v.assign(d, Complex(0));
            v[static_cast<std::size_t>(it.col())] += it.value();
        }
    }
    PauliSum out(num_qubits);
    double scale = 1.0 / static_cast<double>(d);
    for (auto& [a, v] : by_x) {
        for (std::size_t h = 1; h < d; h <<= 1) {
            for (std::size_t i = 0; i < d; i += 2 * h) {
                for (std::size_t j = i; j < i + h; ++j) {
                    Complex u = v[j];
                    Complex w = v[j + h];
                    v[j] = u + w;
                    v[j + h] = u - w;
                }
            }
        }
        for (std::uint64_t b = 0; b < d; ++b) {
            Complex c = v[b] * scale;
            if (std::abs(c) > tol) out.add(PauliKey{a, b}, c);
        }
    }
    return out;
}

Matrix DenseOracle::apply(const Matrix& x) const {
    auto d = static_cast<Eigen::Index>(dim());
    Matrix out(d, d);
    for (const auto& c : components_) {
        Matrix sd = c.op.adjoint();
        Matrix sds = sd * c.op;
        Matrix term = sd * x * c.op - (sds * x + x * sds) * Complex(0.5);
        out += term * Complex(density_(c.omega));
    }
    out.prune(Complex(0), 1e-15);
    return out;
}

PauliSum DenseOracle::apply(const PauliSum& x) const {
    return to_pauli_sum(apply(to_matrix(x)), num_qubits_);
}

Complex DenseOracle::inner_product(const Matrix& a, const Matrix& b) const {
    Matrix ad = a.adjoint();
    Matrix prod = rho_ * ad * b;
    return trace(prod);
}

DenseOracle::Restriction DenseOracle::restrict_to(const std::vector<PauliOperator>& basis) const {
    auto k = static_cast<Eigen::Index>(basis.size());
    Restriction r;
    r.matrix = Eigen::MatrixXcd::Zero(k, k);
    r.gram = Eigen::MatrixXcd::Zero(k, k);
    std::unordered_map<PauliKey, Eigen::Index, PauliKeyHash> index;
    std::vector<Matrix> mats;
    for (Eigen::Index j = 0; j < k; ++j) {
        const auto& b = basis[static_cast<std::size_t>(j)];
        index[PauliKey{b.x_bits(), b.z_bits()}] = j;
        mats.push_back(to_matrix(b));
    }
    for (Eigen::Index col = 0; col < k; ++col) {
        PauliSum image = to_pauli_sum(apply(mats[static_cast<std::size_t>(col)]), num_qubits_);
        for (const auto& [key, coeff] : image.terms()) {
            auto it = index.find(key);
            if (it == index.end()) {
                r.closure_residual = std::max(r.closure_residual, std::abs(coeff));
                continue;
            }
            r.matrix(it->second, col) = -coeff * std::conj(basis[static_cast<std::size_t>(it->second)].phase());
        }
        for (Eigen::Index row = 0; row < k; ++row) {
            r.gram(row, col) = inner_product(mats[static_cast<std::size_t>(row)], mats[static_cast<std::size_t>(col)]);
        }
    }
    return r;
}

Matrix DenseOracle::symmetrized(const PauliOperator& p) const {
    Matrix a = to_matrix(p) * rho_inv_sqrt_;
    Matrix out = apply(a) * rho_sqrt_;
    return out * Complex(-1.0);
}

Eigen::MatrixXcd DenseOracle::hermitian_block(const std::vector<PauliOperator>& basis) const {
    auto k = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(k, k);
    std::unordered_map<PauliKey, Eigen::Index, PauliKeyHash> index;
    for (Eigen::Index j = 0; j < k; ++j) {
        index[PauliKey{basis[static_cast<std::size_t>(j)].x_bits(), basis[static_cast<std::size_t>(j)].z_bits()}] = j;
    }
    for (Eigen::Index col = 0; col < k; ++col) {
        PauliSum image = to_pauli_sum(symmetrized(basis[static_cast<std::size_t>(col)]), num_qubits_);
        for (const auto& [key, coeff] : image.terms()) {
            auto it = index.find(key);
            if (it != index.end()) {
                out(it->second, col) = coeff * std::conj(basis[static_cast<std::size_t>(it->second)].phase());
            }
        }
    }
    return out;
}

DenseOracle::Spectrum DenseOracle::spectrum(std::size_t threads) const {
    std::size_t n = num_qubits_;
    std::size_t d = dim();
    std::size_t total = d * d;
    auto key_of = [d](std::size_t i) { return PauliKey{i / d, i % d}; };
    auto index_of = [d](PauliKey k) { return static_cast<std::size_t>(k.x * d + k.z); };

    std::vector<std::vector<std::pair<std::size_t, Complex>>> columns(total);
    parallel_for(total, threads, [&](std::size_t i) {
        PauliKey key = key_of(i);
        PauliSum image = to_pauli_sum(symmetrized(PauliOperator(n, key.x, key.z)), n, 1e-14);
        for (const auto& [k, c] : image.terms()) columns[i].emplace_back(index_of(k), c);
    });

    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < total; ++i) {
        for (const auto& [j, c] : columns[i]) {
            std::size_t a = find_root(parent, i);
            std::size_t b = find_root(parent, j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < total; ++i) groups[find_root(parent, i)].push_back(i);

    Spectrum out;
    for (auto& [root, members] : groups) {
        std::unordered_map<std::size_t, Eigen::Index> local;
        for (std::size_t m = 0; m < members.size(); ++m) local[members[m]] = static_cast<Eigen::Index>(m);
        auto k = static_cast<Eigen::Index>(members.size());
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(k, k);
        for (std::size_t m = 0; m < members.size(); ++m) {
            for (const auto& [j, c] : columns[members[m]]) block(local.at(j), static_cast<Eigen::Index>(m)) = c;
        }
        double herm = (block - block.adjoint()).cwiseAbs().maxCoeff();
        out.hermiticity_residual = std::max(out.hermiticity_residual, herm);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
        std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + k);
        std::vector<PauliKey> keys;
        for (std::size_t m : members) keys.push_back(key_of(m));
        out.components.push_back(std::move(keys));
        out.eigenvalues.push_back(std::move(ev));
    }
    return out;
}

double DenseOracle::rho_commutation_residual() const {
    double worst = 0;
    for (const auto& c : components_) {
        Matrix diff = rho_ * c.op - c.op * rho_ * Complex(std::exp(density_.beta * c.omega));
        worst = std::max(worst, max_entry(diff));
    }
    return worst;
}

}  // namespace tcc
