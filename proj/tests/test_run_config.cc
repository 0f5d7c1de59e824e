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

#include <gtest/gtest.h>

#include <cstdlib>

#include "test_util.h"

namespace tcc {
namespace {

TEST(RunConfig, DefaultsAreValid) {
    RunConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.size, 3u);
    EXPECT_EQ(cfg.grid_points, 40u);
    auto d = cfg.density_at(2.0);
    EXPECT_DOUBLE_EQ(d.beta, 2.0);
    EXPECT_DOUBLE_EQ(d.delta, 6.0);
}

TEST(RunConfig, ParsesFixture) {
    RunConfig cfg;
    apply_toml_file(cfg, testing::fixture("theorem_min.toml"));
    EXPECT_EQ(cfg.size, 3u);
    EXPECT_EQ(cfg.betas, (std::vector<double>{0.25, 0.5, 1.0, 2.0}));
    EXPECT_EQ(cfg.threads, 1u);
    EXPECT_EQ(cfg.method, "structured");
    EXPECT_NO_THROW(cfg.validate());
}

TEST(RunConfig, ParsesAllKeys) {
    RunConfig cfg;
    apply_toml(cfg, R"(
size = 12
beta = 0.5
J = 2
density = "ohmic"
method = "structured"
threads = 4
observables = ["Z1", "X3"]
output = "out/here"
[grid]
lo = 0.1
hi = 10.0
n = 5
[ising]
L = "3..5"
homogeneous = true
periodic = true
)");
    EXPECT_EQ(cfg.size, 12u);
    EXPECT_EQ(cfg.betas, std::vector<double>{0.5});
    EXPECT_DOUBLE_EQ(cfg.coupling, 2.0);
    EXPECT_EQ(cfg.density, SpectralDensity::Kind::Ohmic);
    EXPECT_DOUBLE_EQ(cfg.density_at(1.0).delta, 12.0);
    EXPECT_EQ(cfg.threads, 4u);
    EXPECT_EQ(cfg.observables, (std::vector<std::string>{"Z1", "X3"}));
    EXPECT_EQ(cfg.output, "out/here");
    EXPECT_DOUBLE_EQ(cfg.grid_lo, 0.1);
    EXPECT_EQ(cfg.grid_points, 5u);
    EXPECT_EQ(cfg.lengths, (std::vector<std::size_t>{3, 4, 5}));
    EXPECT_TRUE(cfg.homogeneous);
    EXPECT_TRUE(cfg.periodic);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(RunConfig, ResolvedTomlRoundTrips) {
    RunConfig cfg;
    cfg.size = 12;
    cfg.betas = {0.25, 3.0};
    cfg.density = SpectralDensity::Kind::Ohmic;
    cfg.lengths = {2, 7};
    RunConfig back;
    apply_toml(back, cfg.to_toml());
    EXPECT_EQ(back.size, 12u);
    EXPECT_EQ(back.betas, cfg.betas);
    EXPECT_EQ(back.density, cfg.density);
    EXPECT_EQ(back.lengths, cfg.lengths);
    EXPECT_EQ(back.to_toml(), cfg.to_toml());
}

TEST(RunConfig, RejectsBadInput) {
    RunConfig cfg;
    EXPECT_THROW(apply_toml(cfg, "sise = 3"), ConfigError);
    EXPECT_THROW(apply_toml(cfg, "size = ["), ConfigError);
    EXPECT_THROW(apply_toml(cfg, "J = \"big\""), ConfigError);
    EXPECT_THROW(apply_toml(cfg, "density = \"lorentz\""), ConfigError);
    EXPECT_THROW(apply_toml(cfg, "beta = true"), ConfigError);
    EXPECT_THROW(apply_toml_file(cfg, "/nonexistent/config.toml"), ConfigError);
}

TEST(RunConfig, ValidationMessages) {
    RunConfig cfg;
    cfg.size = 5;
    try {
        cfg.validate();
        FAIL() << "size 5 accepted";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("3 12 27"), std::string::npos) << e.what();
    }
    cfg = {};
    cfg.betas = {-1.0};
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.size = 12;
    cfg.method = "dense-oracle";
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.method = "fast";
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.lengths = {1};
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(RunConfig, Parsers) {
    EXPECT_EQ(parse_size("min"), 3u);
    EXPECT_EQ(parse_size(" 12 "), 12u);
    EXPECT_THROW(parse_size("twelve"), ConfigError);
    EXPECT_EQ(parse_beta_list("0.5, 1,2e0"), (std::vector<double>{0.5, 1.0, 2.0}));
    EXPECT_THROW(parse_beta_list("1,,2"), ConfigError);
    EXPECT_EQ(parse_length_list("2..4"), (std::vector<std::size_t>{2, 3, 4}));
    EXPECT_EQ(parse_length_list("2,6"), (std::vector<std::size_t>{2, 6}));
    EXPECT_THROW(parse_length_list("5..2"), ConfigError);
    EXPECT_EQ(parse_density("ohmic"), SpectralDensity::Kind::Ohmic);
    EXPECT_THROW(parse_density("x"), ConfigError);
}

TEST(RunConfig, OutputDirectory) {
    RunConfig cfg;
    cfg.output = "explicit";
    EXPECT_EQ(resolve_output_dir(cfg, "gap"), "explicit");
    cfg.output.clear();
    ::setenv("TCC_OUTPUT_ROOT", "/tmp/tcc-root", 1);
    EXPECT_EQ(resolve_output_dir(cfg, "gap"), "/tmp/tcc-root/gap");
    ::unsetenv("TCC_OUTPUT_ROOT");
    EXPECT_EQ(resolve_output_dir(cfg, "ising-scan"), "runs/ising-scan");
}

}  // namespace
}  // namespace tcc
