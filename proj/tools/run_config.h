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

#ifndef TCC_TOOLS_RUN_CONFIG_H
#define TCC_TOOLS_RUN_CONFIG_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/davies.h"

namespace tcc {

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::size_t size = 3;
    std::vector<double> betas = {1.0};
    double coupling = 1.0;
    SpectralDensity::Kind density = SpectralDensity::Kind::Flat;
    std::vector<std::string> observables = {"Z1", "Z2", "Z3", "Z4"};
    double grid_lo = 1e-2;
    double grid_hi = 1e2;
    std::size_t grid_points = 40;
    std::string output;
    std::size_t threads = 0;
    /// structured | dense-oracle | both
    std::string method = "structured";
    std::vector<std::size_t> lengths = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    bool homogeneous = false;
    bool periodic = false;

    bool uses_dense() const { return method != "structured"; }
    bool uses_structured() const { return method != "dense-oracle"; }
    SpectralDensity density_at(double beta) const { return {density, beta, 6.0 * coupling}; }
    /// Throws ConfigError describing the first problem found.
    void validate() const;
    /// Resolved configuration as a TOML document, fields in a fixed order.
    std::string to_toml() const;
};

/// "min" or a plaquette count.
std::size_t parse_size(std::string_view text);
/// Comma-separated positive numbers.
std::vector<double> parse_beta_list(std::string_view text);
/// "flat" or "ohmic".
SpectralDensity::Kind parse_density(std::string_view text);
/// "a..b" inclusive, or a comma-separated list.
std::vector<std::size_t> parse_length_list(std::string_view text);

/// Overlays the keys present in a TOML document onto cfg.
void apply_toml(RunConfig& cfg, std::string_view text, std::string_view source = "config");
void apply_toml_file(RunConfig& cfg, const std::string& path);

/// Explicit output, else $TCC_OUTPUT_ROOT/<subcommand>, else runs/<subcommand>.
std::string resolve_output_dir(const RunConfig& cfg, std::string_view subcommand);

}  // namespace tcc

#endif
