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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "run_config.h"
#include "tcc/code.h"
#include "tcc/tcc.h"
#include "test_util.h"

namespace tcc {
namespace {

using Json = nlohmann::json;

SpectralDensity flat(double beta) { return {SpectralDensity::Kind::Flat, beta, 6.0}; }

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
    return out;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) rows.push_back(split_line(line));
    return rows;
}

const std::vector<std::string> kGapKeys = {
    "beta",         "J",        "h_spec",     "num_plaquettes", "global_gap", "kernel_dim", "sector_minima",
    "sector_labels", "group_minima", "sector_minimum", "delta", "ising_length", "ising_gap", "lhs",
    "lhs_kind",     "bound_rhs", "slack",     "theorem_ok"};

void expect_gap_schema(const nlohmann::ordered_json& j) {
    EXPECT_EQ(keys(j), kGapKeys);
    EXPECT_EQ(keys(j["h_spec"]), (std::vector<std::string>{"kind", "delta"}));
    EXPECT_EQ(j["sector_minima"].size(), 32u);
    EXPECT_EQ(j["sector_labels"].size(), 32u);
    EXPECT_EQ(j["sector_labels"][0], "z0");
    EXPECT_EQ(j["sector_labels"][16], "x0");
    EXPECT_EQ(keys(j["group_minima"]), (std::vector<std::string>{"G1", "G2", "G3", "G4"}));
    EXPECT_TRUE(j["lhs_kind"] == "global_gap" || j["lhs_kind"] == "sector_minimum");
    EXPECT_TRUE(j["theorem_ok"].is_boolean());
}

TEST(Report, FormatDouble) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(-1.5e-20), "-1.5e-20");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    double v = 0.1 + 0.2;
    EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Report, GapResultSchema) {
    StabilizerCode code(build_hex_torus(3));
    GapOptions opts;
    opts.threads = 1;
    auto r = tcc_gap(code, flat(1.0), 1.0, opts);
    auto j = nlohmann::ordered_json::parse(gap_result_json(r, flat(1.0)));
    expect_gap_schema(j);
    EXPECT_EQ(j["num_plaquettes"], 3);
    EXPECT_EQ(j["h_spec"]["kind"], "flat");
    EXPECT_EQ(j["kernel_dim"], 1);
    EXPECT_DOUBLE_EQ(j["global_gap"].get<double>(), *r.global_gap);
}

TEST(Report, GapSweepCsv) {
    StabilizerCode code(build_hex_torus(3));
    GapOptions opts;
    opts.threads = 1;
    std::vector<GapResult> points = {tcc_gap(code, flat(0.5), 1.0, opts), tcc_gap(code, flat(1.0), 1.0, opts)};
    auto rows = read_csv(gap_sweep_csv(points));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"beta", "global_gap", "sector_minimum", "lhs", "bound_rhs", "slack",
                                                 "theorem_ok"}));
    EXPECT_EQ(rows[1][0], "0.5");
    EXPECT_EQ(rows[2][6], "1");
    EXPECT_EQ(std::stod(rows[2][1]), *points[1].global_gap);
    auto t = nlohmann::ordered_json::parse(theorem_json(3, points, flat(0.5)));
    EXPECT_EQ(keys(t), (std::vector<std::string>{"num_plaquettes", "points", "all_ok"}));
    EXPECT_EQ(t["points"][1]["beta"], 1.0);
    EXPECT_EQ(t["all_ok"], true);
}

TEST(Report, IsingAndAutocorrelationCsv) {
    auto ising = read_csv(ising_scan_csv({{2, 1.0, 0.25}, {3, 1.0, 0.125}}));
    EXPECT_EQ(ising, (std::vector<std::vector<std::string>>{{"L", "beta", "gap"}, {"2", "1", "0.25"}, {"3", "1", "0.125"}}));
    AutocorrelationSeries s;
    s.observable = "Z1@beta=1";
    s.times = {0.5, 1.0};
    s.values = {0.75, 0.5};
    s.envelope = {0.8, 0.6};
    auto rows = read_csv(autocorrelation_csv({s}));
    EXPECT_EQ(rows[0], (std::vector<std::string>{"observable", "t", "value", "envelope"}));
    EXPECT_EQ(rows[2], (std::vector<std::string>{"Z1@beta=1", "1", "0.5", "0.6"}));
}

TEST(Report, AutocorrelationJson) {
    AutocorrelationSummary row;
    row.series.observable = "Z1";
    row.series.normalization = 1.0;
    row.fit.decays = false;
    row.bound_ok = true;
    auto j = nlohmann::ordered_json::parse(autocorrelation_json(1.0, 0.01, {row}));
    EXPECT_EQ(keys(j), (std::vector<std::string>{"beta", "bound_rhs", "observables"}));
    EXPECT_EQ(keys(j["observables"][0]),
              (std::vector<std::string>{"observable", "normalization", "kernel_offset", "slowest_rate", "decays",
                                        "fitted_rate", "fit_residual", "fit_points", "monotone", "envelope_ok",
                                        "bound_ok"}));
    EXPECT_TRUE(j["observables"][0]["slowest_rate"].is_null());
    EXPECT_TRUE(j["observables"][0]["fitted_rate"].is_null());
}

TEST(Report, FormatFixturesFollowSchema) {
    auto t = nlohmann::ordered_json::parse(testing::read_file(testing::fixture("formats/theorem_summary.json")));
    EXPECT_EQ(keys(t), (std::vector<std::string>{"num_plaquettes", "points", "all_ok"}));
    for (const auto& p : t["points"]) expect_gap_schema(p);
    auto sweep = read_csv(testing::read_file(testing::fixture("formats/sweep.csv")));
    EXPECT_EQ(sweep[0].size(), 7u);
    EXPECT_EQ(sweep.size(), t["points"].size() + 1);
    auto ising = read_csv(testing::read_file(testing::fixture("formats/ising_scan.csv")));
    EXPECT_EQ(ising[0], (std::vector<std::string>{"L", "beta", "gap"}));
    auto ac = read_csv(testing::read_file(testing::fixture("formats/autocorr.csv")));
    EXPECT_EQ(ac[0], (std::vector<std::string>{"observable", "t", "value", "envelope"}));
    auto acj = Json::parse(testing::read_file(testing::fixture("formats/autocorr_summary.json")));
    EXPECT_EQ(acj["runs"][0]["observables"][0]["observable"], "Z1@beta=1");
    RunConfig cfg;
    apply_toml_file(cfg, testing::fixture("formats/config_echo.toml"));
    EXPECT_EQ(cfg.betas, (std::vector<double>{0.5, 1.0}));
}

// Reads the run directories written by the CLI tests; skipped outside that context.
class CliOutputs : public ::testing::Test {
   protected:
    void SetUp() override {
        const char* root = std::getenv("TCC_CLI_RUNS");
        if (!root || !*root) GTEST_SKIP() << "TCC_CLI_RUNS is not set";
        root_ = root;
    }
    std::string read(const std::string& rel) const {
        auto path = root_ / rel;
        EXPECT_TRUE(std::filesystem::exists(path)) << path;
        return testing::read_file(path.string());
    }
    std::filesystem::path root_;
};

TEST_F(CliOutputs, TheoremRun) {
    auto j = nlohmann::ordered_json::parse(read("theorem/summary.json"));
    EXPECT_EQ(keys(j), (std::vector<std::string>{"num_plaquettes", "points", "all_ok"}));
    ASSERT_EQ(j["points"].size(), 4u);
    for (const auto& p : j["points"]) expect_gap_schema(p);
    EXPECT_EQ(j["all_ok"], true);
    auto rows = read_csv(read("theorem/sweep.csv"));
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0][0], "beta");
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].size(), 7u);
    auto cfg = read("theorem/config.toml");
    EXPECT_NE(cfg.find("size = 3"), std::string::npos);
}

TEST_F(CliOutputs, IsingScanRun) {
    auto rows = read_csv(read("ising/ising_scan.csv"));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"L", "beta", "gap"}));
    EXPECT_EQ(rows[1][0], "2");
    EXPECT_NEAR(std::stod(rows[1][2]), 2.0 * std::exp(-2.0), 1e-12);
    auto j = Json::parse(read("ising/summary.json"));
    EXPECT_EQ(j["chain"], "inhomogeneous");
    EXPECT_EQ(j["spreads"].size(), 1u);
}

TEST_F(CliOutputs, AutocorrRun) {
    auto rows = read_csv(read("autocorr/autocorr.csv"));
    ASSERT_EQ(rows.size(), 1u + 4u * 40u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"observable", "t", "value", "envelope"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 4u);
        EXPECT_LE(std::stod(rows[i][2]), std::stod(rows[i][3]) + 1e-12);
    }
    auto j = Json::parse(read("autocorr/summary.json"));
    ASSERT_EQ(j["runs"].size(), 1u);
    EXPECT_EQ(j["runs"][0]["observables"].size(), 4u);
    for (const auto& o : j["runs"][0]["observables"]) {
        EXPECT_EQ(o["monotone"], true);
        EXPECT_EQ(o["envelope_ok"], true);
        EXPECT_EQ(o["bound_ok"], true);
    }
}

TEST_F(CliOutputs, BuildRun) {
    auto lat = lattice_from_json(read("build/lattice.json"));
    EXPECT_TRUE(validate(lat).ok());
    auto j = Json::parse(read("build/summary.json"));
    EXPECT_EQ(j["completeness_dimension"], 12);
}

}  // namespace
}  // namespace tcc
