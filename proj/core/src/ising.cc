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

#include "tcc/ising.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcc {

namespace {

IsingChain make_chain(std::size_t length, bool periodic, const std::vector<double>& pattern, double coupling) {
    if (length < 2) throw std::invalid_argument("Ising chain needs at least 2 spins, got " + std::to_string(length));
    if (length > PauliOperator::kMaxQubits) throw std::invalid_argument("Ising chain too long");
    if (!(coupling > 0)) throw std::invalid_argument("Ising coupling must be positive");
    IsingChain chain;
    chain.length = length;
    chain.periodic = periodic && length > 2;
    std::size_t bonds = chain.periodic ? length : length - 1;
    for (std::size_t b = 0; b < bonds; ++b) chain.couplings.push_back(coupling * pattern[b % pattern.size()]);
    return chain;
}

}  // namespace

CommutingPauliModel IsingChain::model() const {
    std::vector<ModelTerm> terms;
    for (std::size_t b = 0; b < couplings.size(); ++b) {
        std::size_t q[2] = {b, (b + 1) % length};
        terms.push_back({PauliOperator::z_string(length, q), couplings[b]});
    }
    std::vector<PauliOperator> jumps;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < length; ++i) {
        jumps.push_back(PauliOperator::single(length, i, 'X'));
        all.push_back(i);
    }
    return CommutingPauliModel(length, std::move(terms), std::move(jumps), {PauliOperator::x_string(length, all)});
}

IsingChain build_inhomogeneous(std::size_t length, double coupling, bool periodic) {
    return make_chain(length, periodic, {1.0, 2.0}, coupling);
}

IsingChain build_homogeneous(std::size_t length, double coupling, bool periodic) {
    return make_chain(length, periodic, {1.0}, coupling);
}

ModelGapReport davies_gap(const IsingChain& chain, const SpectralDensity& density, const SolveOptions& options,
                          std::size_t threads) {
    return model_gap(chain.model(), density, options, threads);
}

double two_site_gap(const SpectralDensity& density, double coupling) { return 2.0 * density(-2.0 * coupling); }

std::vector<IsingScanRow> ising_scan(const std::vector<std::size_t>& lengths, const std::vector<double>& betas,
                                     SpectralDensity::Kind kind, double coupling, bool homogeneous,
                                     const SolveOptions& options, std::size_t threads) {
    std::vector<IsingScanRow> rows;
    for (double beta : betas) {
        SpectralDensity density{kind, beta, 6.0 * coupling};
        for (std::size_t length : lengths) {
            IsingChain chain = homogeneous ? build_homogeneous(length, coupling) : build_inhomogeneous(length, coupling);
            rows.push_back({length, beta, davies_gap(chain, density, options, threads).gap});
        }
    }
    return rows;
}

}  // namespace tcc
