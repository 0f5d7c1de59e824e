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

#include "tcc/report.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace tcc {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

Json density_json(const SpectralDensity& d) {
    Json j;
    j["kind"] = std::string(d.name());
    j["delta"] = d.delta;
    return j;
}

Json gap_object(const GapResult& r, const SpectralDensity& density) {
    Json j;
    j["beta"] = r.beta;
    j["J"] = r.coupling;
    j["h_spec"] = density_json(density);
    j["num_plaquettes"] = r.num_plaquettes;
    j["global_gap"] = r.global_gap ? number(*r.global_gap) : Json(nullptr);
    j["kernel_dim"] = r.kernel_dim ? Json(*r.kernel_dim) : Json(nullptr);
    Json minima = Json::array();
    for (double v : r.sector_minima()) minima.push_back(number(v));
    j["sector_minima"] = minima;
    Json labels = Json::array();
    for (const auto& s : r.sectors) labels.push_back(std::string(1, s.type) + std::to_string(s.label));
    j["sector_labels"] = labels;
    Json groups;
    for (std::size_t g = 0; g < 4; ++g) groups["G" + std::to_string(g + 1)] = number(r.group_minima[g]);
    j["group_minima"] = groups;
    j["sector_minimum"] = number(r.sector_minimum);
    j["delta"] = r.delta;
    j["ising_length"] = r.ising_length;
    j["ising_gap"] = number(r.ising_gap);
    j["lhs"] = number(r.lhs);
    j["lhs_kind"] = r.lhs_kind;
    j["bound_rhs"] = number(r.bound_rhs);
    j["slack"] = number(r.slack);
    j["theorem_ok"] = r.theorem_ok;
    return j;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string gap_result_json(const GapResult& r, const SpectralDensity& density) {
    return gap_object(r, density).dump(2) + "\n";
}

std::string theorem_json(std::size_t num_plaquettes, const std::vector<GapResult>& points,
                         const SpectralDensity& density) {
    Json j;
    j["num_plaquettes"] = num_plaquettes;
    j["points"] = Json::array();
    bool all_ok = true;
    for (const auto& p : points) {
        SpectralDensity d = density;
        d.beta = p.beta;
        j["points"].push_back(gap_object(p, d));
        all_ok = all_ok && p.theorem_ok;
    }
    j["all_ok"] = all_ok;
    return j.dump(2) + "\n";
}

std::string gap_sweep_csv(const std::vector<GapResult>& points) {
    std::ostringstream out;
    out << "beta,global_gap,sector_minimum,lhs,bound_rhs,slack,theorem_ok\n";
    for (const auto& p : points) {
        out << format_double(p.beta) << ',' << (p.global_gap ? format_double(*p.global_gap) : "") << ','
            << format_double(p.sector_minimum) << ',' << format_double(p.lhs) << ',' << format_double(p.bound_rhs)
            << ',' << format_double(p.slack) << ',' << (p.theorem_ok ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string ising_scan_csv(const std::vector<IsingScanRow>& rows) {
    std::ostringstream out;
    out << "L,beta,gap\n";
    for (const auto& r : rows) out << r.length << ',' << format_double(r.beta) << ',' << format_double(r.gap) << '\n';
    return out.str();
}

std::string autocorrelation_csv(const std::vector<AutocorrelationSeries>& series) {
    std::ostringstream out;
    out << "observable,t,value,envelope\n";
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.times.size(); ++i) {
            out << s.observable << ',' << format_double(s.times[i]) << ',' << format_double(s.values[i]) << ','
                << format_double(s.envelope[i]) << '\n';
        }
    }
    return out.str();
}

std::string autocorrelation_json(double beta, double bound_rhs, const std::vector<AutocorrelationSummary>& rows) {
    Json j;
    j["beta"] = beta;
    j["bound_rhs"] = number(bound_rhs);
    j["observables"] = Json::array();
    for (const auto& r : rows) {
        Json o;
        o["observable"] = r.series.observable;
        o["normalization"] = r.series.normalization;
        o["kernel_offset"] = r.series.kernel_offset;
        o["slowest_rate"] = r.series.slowest_rate ? Json(*r.series.slowest_rate) : Json(nullptr);
        o["decays"] = r.fit.decays;
        o["fitted_rate"] = r.fit.decays ? Json(r.fit.rate) : Json(nullptr);
        o["fit_residual"] = r.fit.residual;
        o["fit_points"] = r.fit.points;
        o["monotone"] = r.monotone;
        o["envelope_ok"] = r.envelope_ok;
        o["bound_ok"] = r.bound_ok;
        j["observables"].push_back(o);
    }
    return j.dump(2) + "\n";
}

}  // namespace tcc
