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

#include "run_config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcc/lattice.h"
#include "toml.hpp"

namespace tcc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::size_t to_size(std::string_view s, std::string_view what) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ConfigError(std::string(what) + ": expected a nonnegative integer, got '" + std::string(s) + "'");
    }
    return v;
}

double to_double(std::string_view s, std::string_view what) {
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size()) {
        throw ConfigError(std::string(what) + ": expected a number, got '" + buf + "'");
    }
    return v;
}

std::vector<double> doubles_from(const toml::node& node, std::string_view what) {
    std::vector<double> out;
    if (auto arr = node.as_array()) {
        for (const auto& el : *arr) {
            auto v = el.value<double>();
            if (!v) throw ConfigError(std::string(what) + ": array entries must be numbers");
            out.push_back(*v);
        }
    } else if (auto v = node.value<double>()) {
        out.push_back(*v);
    } else if (auto s = node.value<std::string>()) {
        out = parse_beta_list(*s);
    } else {
        throw ConfigError(std::string(what) + ": expected a number or an array of numbers");
    }
    return out;
}

}  // namespace

std::size_t parse_size(std::string_view text) {
    text = trim(text);
    if (text == "min") return admissible_sizes().front();
    return to_size(text, "size");
}

std::vector<double> parse_beta_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(to_double(part, "beta"));
    return out;
}

SpectralDensity::Kind parse_density(std::string_view text) {
    try {
        return SpectralDensity::parse_kind(trim(text));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<std::size_t> parse_length_list(std::string_view text) {
    text = trim(text);
    std::vector<std::size_t> out;
    if (auto pos = text.find(".."); pos != std::string_view::npos) {
        std::size_t a = to_size(trim(text.substr(0, pos)), "L");
        std::size_t b = to_size(trim(text.substr(pos + 2)), "L");
        if (b < a) throw ConfigError("L: empty range '" + std::string(text) + "'");
        for (std::size_t l = a; l <= b; ++l) out.push_back(l);
        return out;
    }
    for (auto part : split(text, ',')) out.push_back(to_size(part, "L"));
    return out;
}

void RunConfig::validate() const {
    auto sizes = admissible_sizes();
    if (std::find(sizes.begin(), sizes.end(), size) == sizes.end()) {
        std::ostringstream msg;
        msg << "size " << size << " is not admissible; choose one of";
        for (auto s : sizes) msg << ' ' << s;
        throw ConfigError(msg.str());
    }
    if (betas.empty()) throw ConfigError("at least one beta is required");
    for (double b : betas) {
        if (!(b > 0) || !std::isfinite(b)) throw ConfigError("beta must be positive and finite");
    }
    if (!(coupling > 0) || !std::isfinite(coupling)) throw ConfigError("J must be positive and finite");
    if (method != "structured" && method != "dense-oracle" && method != "both") {
        throw ConfigError("method must be structured, dense-oracle or both, got '" + method + "'");
    }
    if (uses_dense() && 2 * size > 8) {
        throw ConfigError("dense-oracle needs 2N <= 8 qubits; size " + std::to_string(size) + " has " +
                          std::to_string(2 * size));
    }
    if (!(grid_lo > 0) || !(grid_hi > grid_lo) || grid_points < 3) {
        throw ConfigError("time grid needs 0 < lo < hi and at least 3 points");
    }
    for (auto l : lengths) {
        if (l < 2) throw ConfigError("Ising chain length must be at least 2");
    }
}

std::string RunConfig::to_toml() const {
    toml::array beta_arr;
    for (double b : betas) beta_arr.push_back(b);
    toml::array obs;
    for (const auto& o : observables) obs.push_back(o);
    toml::array ls;
    for (auto l : lengths) ls.push_back(static_cast<std::int64_t>(l));
    toml::table tbl{
        {"size", static_cast<std::int64_t>(size)},
        {"beta", beta_arr},
        {"J", coupling},
        {"density", density == SpectralDensity::Kind::Flat ? "flat" : "ohmic"},
        {"method", method},
        {"threads", static_cast<std::int64_t>(threads)},
        {"observables", obs},
        {"grid", toml::table{{"lo", grid_lo}, {"hi", grid_hi}, {"n", static_cast<std::int64_t>(grid_points)}}},
        {"ising", toml::table{{"L", ls}, {"homogeneous", homogeneous}, {"periodic", periodic}}},
    };
    std::ostringstream out;
    out << tbl << "\n";
    return out.str();
}

void apply_toml(RunConfig& cfg, std::string_view text, std::string_view source) {
    toml::table tbl;
    try {
        tbl = toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << "cannot parse " << source << ": " << e.description() << " at line " << e.source().begin.line;
        throw ConfigError(msg.str());
    }
    static const std::vector<std::string> known = {"size",    "beta",        "J",      "density", "method",
                                                   "threads", "observables", "output", "grid",    "ising"};
    for (const auto& [key, _] : tbl) {
        if (std::find(known.begin(), known.end(), std::string(key.str())) == known.end()) {
            throw ConfigError("unknown config key '" + std::string(key.str()) + "' in " + std::string(source));
        }
    }
    if (auto n = tbl["size"]) {
        if (auto i = n.value<std::int64_t>()) {
            if (*i < 0) throw ConfigError("size must be nonnegative");
            cfg.size = static_cast<std::size_t>(*i);
        } else if (auto s = n.value<std::string>()) {
            cfg.size = parse_size(*s);
        } else {
            throw ConfigError("size: expected an integer or \"min\"");
        }
    }
    if (auto n = tbl.get("beta")) cfg.betas = doubles_from(*n, "beta");
    if (auto n = tbl.get("J")) {
        auto v = n->value<double>();
        if (!v) throw ConfigError("J: expected a number");
        cfg.coupling = *v;
    }
    if (auto n = tbl["density"].value<std::string>()) cfg.density = parse_density(*n);
    if (auto n = tbl["method"].value<std::string>()) cfg.method = *n;
    if (auto n = tbl["threads"].value<std::int64_t>()) cfg.threads = static_cast<std::size_t>(std::max<std::int64_t>(0, *n));
    if (auto n = tbl["output"].value<std::string>()) cfg.output = *n;
    if (auto arr = tbl["observables"].as_array()) {
        cfg.observables.clear();
        for (const auto& el : *arr) {
            auto s = el.value<std::string>();
            if (!s) throw ConfigError("observables: entries must be strings");
            cfg.observables.push_back(*s);
        }
    }
    if (auto grid = tbl["grid"].as_table()) {
        if (auto v = (*grid)["lo"].value<double>()) cfg.grid_lo = *v;
        if (auto v = (*grid)["hi"].value<double>()) cfg.grid_hi = *v;
        if (auto v = (*grid)["n"].value<std::int64_t>()) cfg.grid_points = static_cast<std::size_t>(*v);
    }
    if (auto ising = tbl["ising"].as_table()) {
        if (auto node = ising->get("L")) {
            if (auto s = node->value<std::string>()) {
                cfg.lengths = parse_length_list(*s);
            } else if (auto arr = node->as_array()) {
                cfg.lengths.clear();
                for (const auto& el : *arr) {
                    auto v = el.value<std::int64_t>();
                    if (!v || *v < 0) throw ConfigError("ising.L: entries must be nonnegative integers");
                    cfg.lengths.push_back(static_cast<std::size_t>(*v));
                }
            }
        }
        if (auto v = (*ising)["homogeneous"].value<bool>()) cfg.homogeneous = *v;
        if (auto v = (*ising)["periodic"].value<bool>()) cfg.periodic = *v;
    }
}

void apply_toml_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_toml(cfg, buf.str(), path);
}

std::string resolve_output_dir(const RunConfig& cfg, std::string_view subcommand) {
    if (!cfg.output.empty()) return cfg.output;
    const char* root = std::getenv("TCC_OUTPUT_ROOT");
    std::filesystem::path base = root && *root ? root : "runs";
    return (base / std::string(subcommand)).string();
}

}  // namespace tcc
