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

#include <benchmark/benchmark.h>

#include "tcc/code.h"
#include "tcc/davies.h"
#include "tcc/ising.h"
#include "tcc/tcc.h"

namespace tcc {
namespace {

const SpectralDensity kFlat{SpectralDensity::Kind::Flat, 1.0, 6.0};

const StabilizerCode& twelve() {
    static const StabilizerCode code(build_hex_torus(12));
    return code;
}

void BM_BuildSyndromeBlock(benchmark::State& state) {
    auto model = tcc_model(twelve(), ModelPart::ZHalf);
    ThermalState thermal(model, kFlat.beta);
    for (auto _ : state) {
        auto block = build_syndrome_block(model, thermal, kFlat, twelve().logical_z()[0]);
        benchmark::DoNotOptimize(block.symmetric.nonZeros());
    }
}
BENCHMARK(BM_BuildSyndromeBlock)->Unit(benchmark::kMillisecond);

void BM_BlockSolve(benchmark::State& state) {
    auto model = tcc_model(twelve(), ModelPart::ZHalf);
    ThermalState thermal(model, kFlat.beta);
    auto block = build_syndrome_block(model, thermal, kFlat, twelve().logical_z()[0]);
    SolveOptions opts;
    opts.dense_limit = state.range(0) ? 2048 : 0;
    for (auto _ : state) benchmark::DoNotOptimize(block_spectrum(block, opts).smallest_nonzero);
    state.SetLabel(state.range(0) ? "dense" : "lanczos");
}
BENCHMARK(BM_BlockSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SectorSpectra(benchmark::State& state) {
    GapOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(sector_spectra(twelve(), kFlat, 'z', 1.0, opts).size());
}
BENCHMARK(BM_SectorSpectra)->Unit(benchmark::kMillisecond);

void BM_IsingGap(benchmark::State& state) {
    auto chain = build_inhomogeneous(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(davies_gap(chain, kFlat, {}, 1).gap);
}
BENCHMARK(BM_IsingGap)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tcc

BENCHMARK_MAIN();
