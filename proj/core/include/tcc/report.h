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

#ifndef TCC_REPORT_H
#define TCC_REPORT_H

#include <string>
#include <vector>

#include "tcc/dynamics.h"
#include "tcc/ising.h"
#include "tcc/tcc.h"

namespace tcc {

/// Shortest round-trip decimal form; "inf" and "nan" for non-finite values.
std::string format_double(double v);

/// One gap computation as a JSON object (two-space indent, fixed key order).
std::string gap_result_json(const GapResult& r, const SpectralDensity& density);
/// {"num_plaquettes": N, "points": [...]} for a beta sweep.
std::string theorem_json(std::size_t num_plaquettes, const std::vector<GapResult>& points,
                         const SpectralDensity& density);

/// Header "beta,global_gap,sector_minimum,lhs,bound_rhs,slack,theorem_ok".
std::string gap_sweep_csv(const std::vector<GapResult>& points);
/// Header "L,beta,gap".
std::string ising_scan_csv(const std::vector<IsingScanRow>& rows);
/// Header "observable,t,value,envelope".
std::string autocorrelation_csv(const std::vector<AutocorrelationSeries>& series);

struct AutocorrelationSummary {
    AutocorrelationSeries series;
    DecayFit fit;
    bool monotone = false;
    bool envelope_ok = false;
    /// Fitted rate at or above the lower bound (true when nothing decays).
    bool bound_ok = false;
};

std::string autocorrelation_json(double beta, double bound_rhs, const std::vector<AutocorrelationSummary>& rows);

}  // namespace tcc

#endif
