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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "run_config.h"
#include "tcc/code.h"
#include "tcc/davies.h"
#include "tcc/dynamics.h"
#include "tcc/ising.h"
#include "tcc/oracle.h"
#include "tcc/report.h"
#include "tcc/tcc.h"

using namespace tcc;
using Json = nlohmann::ordered_json;

namespace {

struct Flags {
    std::string config;
    std::string size;
    std::string beta;
    double coupling = 1.0;
    std::string density;
    std::string method;
    std::string output;
    std::size_t threads = 0;
    std::vector<std::string> observables;
    std::string lengths;
    double grid_lo = 0, grid_hi = 0;
    std::size_t grid_points = 0;
    bool homogeneous = false;
    bool periodic = false;
};

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
    std::string note;
};

class Run {
   public:
    Run(RunConfig cfg, std::string subcommand) : cfg_(std::move(cfg)), dir_(resolve_output_dir(cfg_, subcommand)) {
        std::filesystem::create_directories(dir_);
        write("config.toml", cfg_.to_toml());
    }

    const RunConfig& cfg() const { return cfg_; }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(std::filesystem::path(dir_) / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (std::filesystem::path(dir_) / name).string());
        out << content;
    }

    void announce() const { std::cout << "wrote " << dir_ << std::endl; }

   private:
    RunConfig cfg_;
    std::string dir_;
};

std::string fmt(double v, int digits = 6) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (std::isnan(v) ? "nan" : "-inf");
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

int print_checks(const std::vector<Check>& checks) {
    int failures = 0;
    for (const auto& c : checks) {
        std::printf("%-4s %-44s %12s  (tol %s)%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), fmt(c.value, 4).c_str(),
                    fmt(c.tolerance, 2).c_str(), c.note.empty() ? "" : "  ", c.note.c_str());
        failures += c.pass ? 0 : 1;
    }
    return failures;
}

Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["value"] = std::isfinite(c.value) ? Json(c.value) : Json(nullptr);
        j["tolerance"] = c.tolerance;
        j["pass"] = c.pass;
        arr.push_back(j);
    }
    return arr;
}

Check upper(const std::string& name, double value, double tol, std::string note = "") {
    return {name, value, tol, value <= tol, std::move(note)};
}

Check exact(const std::string& name, bool ok, std::string note = "") {
    return {name, ok ? 0.0 : 1.0, 0.0, ok, std::move(note)};
}

PauliOperator parse_observable(const StabilizerCode& code, const std::string& label) {
    if (label.size() >= 2 && (label[0] == 'Z' || label[0] == 'X') &&
        std::all_of(label.begin() + 1, label.end(), [](char c) { return c >= '1' && c <= '4'; })) {
        unsigned mask = 0;
        for (std::size_t i = 1; i < label.size(); ++i) mask ^= 1U << (label[i] - '1');
        return label[0] == 'Z' ? logical_z_product(code, mask) : logical_x_product(code, mask);
    }
    auto p = PauliOperator::parse(label);
    if (p.num_qubits() != code.num_qubits()) {
        throw ConfigError("observable '" + label + "' acts on " + std::to_string(p.num_qubits()) +
                          " qubits, the code has " + std::to_string(code.num_qubits()));
    }
    return p;
}

double max_abs(const DenseOracle::Matrix& m) {
    double worst = 0;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
        for (DenseOracle::Matrix::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

GapOptions gap_options(const RunConfig& cfg) {
    GapOptions opt;
    opt.threads = cfg.threads;
    return opt;
}

struct OracleComparison {
    double component_deviation = 0;
    double block_deviation = 0;
    double closure = 0;
    double oracle_gap = 0;
    double structured_gap = 0;
    std::size_t blocks = 0;
};

OracleComparison compare_with_oracle(const StabilizerCode& code, const SpectralDensity& density, double coupling,
                                     std::size_t threads) {
    OracleComparison out;
    auto model = tcc_model(code, ModelPart::Full, coupling);
    ThermalState thermal(model, density.beta);
    DenseOracle oracle(model, density);
    for (std::size_t j = 0; j < model.jumps().size(); ++j) {
        for (const auto& c : fourier_components(model, j)) {
            double dev = std::numeric_limits<double>::infinity();
            for (const auto& oc : oracle.components()) {
                if (oc.jump == j && same_frequency(oc.omega, c.omega)) dev = max_abs(DenseOracle::to_matrix(c.op) - oc.op);
            }
            out.component_deviation = std::max(out.component_deviation, dev);
        }
    }
    for (const auto& rep : model.coset_representatives()) {
        std::vector<PauliOperator> basis;
        for (std::uint64_t m = 0; m < (1ULL << model.rank()); ++m) basis.push_back(rep * model.group_element(m));
        out.closure = std::max(out.closure, oracle.restrict_to(basis).closure_residual);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle.hermitian_block(basis), Eigen::EigenvaluesOnly);
        auto mine = block_spectrum(build_syndrome_block(model, thermal, density, rep));
        for (std::size_t k = 0; k < mine.eigenvalues.size(); ++k) {
            out.block_deviation =
                std::max(out.block_deviation, std::abs(mine.eigenvalues[k] - es.eigenvalues()[static_cast<Eigen::Index>(k)]));
        }
        ++out.blocks;
    }
    out.oracle_gap = std::numeric_limits<double>::infinity();
    for (double v : oracle.spectrum(threads).all_eigenvalues()) {
        if (v > 1e-9) out.oracle_gap = std::min(out.oracle_gap, v);
    }
    out.structured_gap = model_gap(model, density, {}, threads).gap;
    return out;
}

// ---------------------------------------------------------------- subcommands

int cmd_build(const RunConfig& cfg) {
    Run run(cfg, "build");
    auto lat = build_hex_torus(cfg.size);
    auto report = validate(lat);
    StabilizerCode code(lat);
    Json j;
    j["num_plaquettes"] = lat.num_plaquettes();
    j["num_qubits"] = lat.num_vertices;
    j["num_edges"] = lat.num_edges();
    j["valid"] = report.ok();
    j["rank"] = code.rank();
    j["log2_degeneracy"] = code.log2_degeneracy();
    j["degeneracy"] = code.degeneracy();
    Json lz = Json::array(), lx = Json::array(), loops = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        lz.push_back(code.logical_z()[i].str());
        lx.push_back(code.logical_x()[i].str());
        const auto& loop = code.loops()[i];
        Json l;
        l["color"] = std::string(color_name(loop.color));
        l["homology"] = std::string(homology_name(loop.homology));
        l["qubits"] = loop.vertices;
        loops.push_back(l);
    }
    j["logical_z"] = lz;
    j["logical_x"] = lx;
    j["loops"] = loops;
    const auto& ex = code.excitations();
    Json e;
    Json links = Json::array();
    for (Color c : kAllColors) {
        Json per = Json::array();
        for (const auto& [a, b] : ex.links[static_cast<std::size_t>(c)]) per.push_back({a, b});
        links.push_back(per);
    }
    e["links"] = links;
    e["string_qubits"] = ex.num_string_qubits();
    e["branching_x"] = ex.branching_x;
    e["branching_z"] = ex.branching_z;
    e["leftover"] = ex.leftover;
    j["excitations"] = e;
    j["completeness_dimension"] = code.completeness_dimension();
    run.write("lattice.json", lattice_to_json(lat) + "\n");
    run.write("summary.json", j.dump(2) + "\n");
    std::cout << "N=" << lat.num_plaquettes() << " qubits=" << lat.num_vertices << " edges=" << lat.num_edges()
              << " rank=" << code.rank() << " degeneracy=" << code.degeneracy() << " valid=" << report.ok() << "\n";
    for (const auto& f : report.failures) std::cout << "  invalid: " << f << "\n";
    run.announce();
    return report.ok() ? 0 : 1;
}

int cmd_check(const RunConfig& cfg) {
    Run run(cfg, "check");
    auto lat = build_hex_torus(cfg.size);
    StabilizerCode code(lat);
    std::size_t n = code.num_qubits();
    std::size_t np = lat.num_plaquettes();
    std::vector<Check> checks;
    checks.push_back(exact("lattice invariants", validate(lat).ok()));
    checks.push_back(exact("counts N : 2N : 3N", n == 2 * np && lat.num_edges() == 3 * np));
    checks.push_back(exact("stabilizer rank 2N-4", code.rank() == n - 4, std::to_string(code.rank())));
    checks.push_back(exact("ground degeneracy 16", code.degeneracy() == 16));
    bool pairing = true;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            pairing = pairing && code.logical_x()[i].commutes_with(code.logical_z()[k]) == (i != k);
        }
    }
    checks.push_back(exact("logical pairing", pairing));
    checks.push_back(exact("logical dimension 8", code.logical_dimension() == 8));
    checks.push_back(exact("generating set spans 4N", code.completeness_dimension() == 2 * n));
    checks.push_back(exact("2N-6 string qubits", code.excitations().num_string_qubits() == n - 6));

    auto full = tcc_model(code, ModelPart::Full, cfg.coupling);
    bool bohr_ok = true;
    for (std::size_t j = 0; j < full.jumps().size(); ++j) {
        for (double w : full.bohr_frequencies(j)) {
            double a = std::abs(w) / cfg.coupling;
            bohr_ok = bohr_ok && (std::abs(a - 2) < 1e-9 || std::abs(a - 6) < 1e-9);
        }
    }
    checks.push_back(exact("Bohr frequencies in {+-2J, +-6J}", bohr_ok));
    checks.push_back(exact("Delta = 6J", std::abs(full.max_bohr_frequency() - 6 * cfg.coupling) < 1e-12));

    bool small = full.rank() <= 12;
    std::vector<CommutingPauliModel> models;
    if (small) {
        models.push_back(full);
    } else {
        models.push_back(tcc_model(code, ModelPart::ZHalf, cfg.coupling));
        models.push_back(tcc_model(code, ModelPart::XHalf, cfg.coupling));
    }
    double sum_dev = 0;
    bool adjoint_ok = true;
    for (const auto& model : models) {
        for (std::size_t j = 0; j < model.jumps().size(); ++j) {
            auto comps = fourier_components(model, j);
            PauliSum total(n);
            for (const auto& c : comps) total += c.op;
            sum_dev = std::max(sum_dev, (total - PauliSum(model.jumps()[j].op)).max_abs_coefficient());
            for (const auto& c : comps) {
                for (const auto& o : comps) {
                    if (o.omega == -c.omega) adjoint_ok = adjoint_ok && (c.op.adjoint() - o.op).max_abs_coefficient() == 0;
                }
            }
        }
    }
    checks.push_back(upper("sum_w S(w) = S", sum_dev, 0.0));
    checks.push_back(exact("S(-w) = S(w)^dag", adjoint_ok));

    for (double beta : cfg.betas) {
        auto density = cfg.density_at(beta);
        std::string tag = " [beta=" + fmt(beta) + "]";
        double self_adj = 0, min_eig = std::numeric_limits<double>::infinity(), l_of_i = 0, identity = 0, rho = 0;
        for (const auto& model : models) {
            ThermalState thermal(model, beta);
            std::vector<PauliOperator> reps;
            if (model.log2_num_cosets() <= 10) {
                reps = model.coset_representatives();
            } else {
                for (unsigned mu = 0; mu < 16; ++mu) {
                    reps.push_back(model.jumps().front().op.x_bits() ? logical_z_product(code, mu) : logical_x_product(code, mu));
                }
            }
            for (const auto& rep : reps) {
                if (model.rank() <= 12) {
                    auto block = build_lindblad_block(model, thermal, density, rep);
                    self_adj = std::max(self_adj, block.self_adjointness_residual());
                }
                auto sb = build_syndrome_block(model, thermal, density, rep);
                Eigen::SparseMatrix<double> diff = sb.symmetric - Eigen::SparseMatrix<double>(sb.symmetric.transpose());
                for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
                    for (Eigen::SparseMatrix<double>::InnerIterator it(diff, k); it; ++it) {
                        self_adj = std::max(self_adj, std::abs(it.value()));
                    }
                }
                min_eig = std::min(min_eig, block_spectrum(sb).eigenvalues.front());
            }
            PauliSum eye{PauliOperator(n)};
            l_of_i = std::max(l_of_i, apply_lindbladian(model, density, eye).max_abs_coefficient());
            for (unsigned mu : {0U, 1U, 5U}) {
                PauliSum x{model.jumps().front().op.x_bits() ? logical_z_product(code, mu) : logical_x_product(code, mu)};
                identity = std::max(identity, negativity_identity_residual(model, thermal, x));
            }
            if (model.rank() <= 12) rho = std::max(rho, rho_commutation_residual(model, thermal));
        }
        checks.push_back(upper("self-adjointness residual" + tag, self_adj, 1e-10));
        checks.push_back({"min eigenvalue of -L" + tag, min_eig, -1e-10, min_eig >= -1e-10, "lower bound"});
        checks.push_back(upper("L(I)" + tag, l_of_i, 1e-12));
        checks.push_back(upper("negativity identity residual" + tag, identity, 1e-10));
        if (small) checks.push_back(upper("rho-commutation residual" + tag, rho, 1e-12));
        if (cfg.uses_dense()) {
            auto cmp = compare_with_oracle(code, density, cfg.coupling, cfg.threads);
            checks.push_back(upper("dense: Fourier components" + tag, cmp.component_deviation, 1e-10));
            checks.push_back(upper("dense: coset block spectra" + tag, cmp.block_deviation, 1e-8));
            checks.push_back(upper("dense: global gap" + tag, std::abs(cmp.oracle_gap - cmp.structured_gap), 1e-8));
        }
    }
    int failures = print_checks(checks);
    Json j;
    j["num_plaquettes"] = np;
    j["checks"] = checks_json(checks);
    j["all_pass"] = failures == 0;
    run.write("summary.json", j.dump(2) + "\n");
    run.announce();
    return failures == 0 ? 0 : 1;
}

int cmd_gap_like(const RunConfig& cfg, bool theorem) {
    Run run(cfg, theorem ? "theorem" : "gap");
    StabilizerCode code(build_hex_torus(cfg.size));
    std::vector<GapResult> points;
    int failures = 0;
    for (double beta : cfg.betas) {
        auto density = cfg.density_at(beta);
        auto r = tcc_gap(code, density, cfg.coupling, gap_options(cfg));
        std::printf("beta=%-8s lhs=%-12s (%s) rhs=%-12s slack=%-12s %s\n", fmt(beta).c_str(), fmt(r.lhs).c_str(),
                    r.lhs_kind.c_str(), fmt(r.bound_rhs).c_str(), fmt(r.slack).c_str(), r.theorem_ok ? "ok" : "VIOLATED");
        std::printf("    G1=%s G2=%s G3=%s G4=%s ising(L=%zu)=%s\n", fmt(r.group_minima[0]).c_str(),
                    fmt(r.group_minima[1]).c_str(), fmt(r.group_minima[2]).c_str(), fmt(r.group_minima[3]).c_str(),
                    r.ising_length, fmt(r.ising_gap).c_str());
        if (theorem && !r.theorem_ok) ++failures;
        if (cfg.uses_dense()) {
            auto cmp = compare_with_oracle(code, density, cfg.coupling, cfg.threads);
            double dev = std::abs(cmp.oracle_gap - r.global_gap.value_or(cmp.structured_gap));
            std::printf("    dense global gap %s (deviation %s)\n", fmt(cmp.oracle_gap).c_str(), fmt(dev, 3).c_str());
            if (dev > 1e-8) ++failures;
        }
        points.push_back(std::move(r));
    }
    auto density = cfg.density_at(cfg.betas.front());
    run.write("summary.json", theorem_json(code.num_plaquettes(), points, density));
    run.write("sweep.csv", gap_sweep_csv(points));
    run.announce();
    return failures == 0 ? 0 : 1;
}

int cmd_autocorr(const RunConfig& cfg) {
    Run run(cfg, "autocorr");
    StabilizerCode code(build_hex_torus(cfg.size));
    auto grid = log_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_points);
    std::vector<AutocorrelationSeries> all;
    Json summaries = Json::array();
    int failures = 0;
    std::size_t ising_length = code.num_plaquettes() / 3 + 1;
    auto full = tcc_model(code, ModelPart::Full, cfg.coupling);
    bool use_full = full.rank() <= 12;
    auto zhalf = tcc_model(code, ModelPart::ZHalf, cfg.coupling);
    auto xhalf = tcc_model(code, ModelPart::XHalf, cfg.coupling);
    for (double beta : cfg.betas) {
        auto density = cfg.density_at(beta);
        double ising = davies_gap(build_inhomogeneous(ising_length, cfg.coupling), density, {}, cfg.threads).gap;
        double bound = std::exp(-beta * full.max_bohr_frequency()) * density(full.max_bohr_frequency()) * ising;
        std::vector<AutocorrelationSummary> rows;
        for (const auto& label : cfg.observables) {
            auto obs = parse_observable(code, label);
            const CommutingPauliModel* model = &full;
            if (!use_full) {
                if (obs.x_bits() == 0) {
                    model = &zhalf;
                } else if (obs.z_bits() == 0) {
                    model = &xhalf;
                } else {
                    throw ConfigError("observable '" + label + "' mixes X and Z; only pure types are supported above 2N = 8");
                }
            }
            ThermalState thermal(*model, beta);
            BlockDynamics dyn(build_syndrome_block(*model, thermal, density, obs));
            std::string tag = label + "@beta=" + fmt(beta);
            AutocorrelationSummary s;
            s.series = autocorrelation(dyn, tag, grid);
            s.fit = fit_decay_rate(s.series);
            s.monotone = is_monotone_nonincreasing(s.series.values);
            s.envelope_ok = envelope_violation(s.series) <= 1e-12;
            s.bound_ok = !s.fit.decays || s.fit.rate >= bound - 1e-10;
            std::printf("%-24s rate=%-12s slowest=%-12s offset=%-10s monotone=%d envelope=%d bound(%s)=%d\n", tag.c_str(),
                        s.fit.decays ? fmt(s.fit.rate).c_str() : "no decay",
                        s.series.slowest_rate ? fmt(*s.series.slowest_rate).c_str() : "-",
                        fmt(s.series.kernel_offset, 3).c_str(), s.monotone, s.envelope_ok, fmt(bound, 3).c_str(),
                        s.bound_ok);
            if (!s.monotone || !s.envelope_ok || !s.bound_ok) ++failures;
            all.push_back(s.series);
            rows.push_back(std::move(s));
        }
        summaries.push_back(Json::parse(autocorrelation_json(beta, bound, rows)));
    }
    run.write("autocorr.csv", autocorrelation_csv(all));
    Json j;
    j["num_plaquettes"] = code.num_plaquettes();
    j["runs"] = summaries;
    run.write("summary.json", j.dump(2) + "\n");
    run.announce();
    return failures == 0 ? 0 : 1;
}

int cmd_ising_scan(const RunConfig& cfg) {
    Run run(cfg, "ising-scan");
    std::vector<IsingScanRow> rows;
    for (double beta : cfg.betas) {
        auto density = cfg.density_at(beta);
        for (std::size_t length : cfg.lengths) {
            auto chain = cfg.homogeneous ? build_homogeneous(length, cfg.coupling, cfg.periodic)
                                         : build_inhomogeneous(length, cfg.coupling, cfg.periodic);
            auto report = davies_gap(chain, density, {}, cfg.threads);
            rows.push_back({length, beta, report.gap});
            std::printf("L=%-3zu beta=%-8s gap=%s\n", length, fmt(beta).c_str(), fmt(report.gap, 10).c_str());
        }
    }
    Json spreads = Json::array();
    for (double beta : cfg.betas) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (const auto& r : rows) {
            if (r.beta == beta) {
                lo = std::min(lo, r.gap);
                hi = std::max(hi, r.gap);
            }
        }
        Json s;
        s["beta"] = beta;
        s["min_gap"] = lo;
        s["max_gap"] = hi;
        s["relative_spread"] = (hi - lo) / lo;
        spreads.push_back(s);
        std::printf("beta=%s relative spread %s\n", fmt(beta).c_str(), fmt((hi - lo) / lo, 4).c_str());
    }
    Json j;
    j["chain"] = cfg.homogeneous ? "homogeneous" : "inhomogeneous";
    j["boundary"] = cfg.periodic ? "periodic" : "open";
    j["spreads"] = spreads;
    run.write("ising_scan.csv", ising_scan_csv(rows));
    run.write("summary.json", j.dump(2) + "\n");
    run.announce();
    return 0;
}

int cmd_oracle_compare(RunConfig cfg) {
    if (cfg.method == "structured") cfg.method = "both";
    cfg.validate();
    Run run(cfg, "oracle-compare");
    StabilizerCode code(build_hex_torus(cfg.size));
    std::vector<Check> checks;
    Json points = Json::array();
    for (double beta : cfg.betas) {
        auto cmp = compare_with_oracle(code, cfg.density_at(beta), cfg.coupling, cfg.threads);
        std::string tag = " [beta=" + fmt(beta) + "]";
        checks.push_back(upper("Fourier components" + tag, cmp.component_deviation, 1e-10));
        checks.push_back(upper("coset closure" + tag, cmp.closure, 1e-12));
        checks.push_back(upper("coset block spectra" + tag, cmp.block_deviation, 1e-8, std::to_string(cmp.blocks) + " blocks"));
        checks.push_back(upper("global gap" + tag, std::abs(cmp.oracle_gap - cmp.structured_gap), 1e-8));
        Json p;
        p["beta"] = beta;
        p["component_deviation"] = cmp.component_deviation;
        p["block_deviation"] = cmp.block_deviation;
        p["closure_residual"] = cmp.closure;
        p["oracle_gap"] = cmp.oracle_gap;
        p["structured_gap"] = cmp.structured_gap;
        p["blocks"] = cmp.blocks;
        points.push_back(p);
    }
    int failures = print_checks(checks);
    Json j;
    j["num_plaquettes"] = code.num_plaquettes();
    j["points"] = points;
    j["all_pass"] = failures == 0;
    run.write("summary.json", j.dump(2) + "\n");
    run.announce();
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological color code Davies generator toolkit"};
    app.require_subcommand(1);
    Flags f;
    struct Sub {
        CLI::App* app;
        CLI::Option* size = nullptr;
        CLI::Option* beta = nullptr;
        CLI::Option* coupling = nullptr;
        CLI::Option* density = nullptr;
        CLI::Option* method = nullptr;
        CLI::Option* output = nullptr;
        CLI::Option* threads = nullptr;
        CLI::Option* observables = nullptr;
        CLI::Option* lengths = nullptr;
        CLI::Option* grid_lo = nullptr;
        CLI::Option* grid_hi = nullptr;
        CLI::Option* grid_points = nullptr;
        CLI::Option* homogeneous = nullptr;
        CLI::Option* periodic = nullptr;
    };
    auto make = [&](const char* name, const char* help) {
        Sub s{app.add_subcommand(name, help)};
        s.app->add_option("--config", f.config, "TOML run configuration; flags override its values")
            ->check(CLI::ExistingFile);
        s.size = s.app->add_option("--size", f.size, "plaquette count N, or 'min'");
        s.beta = s.app->add_option("--beta", f.beta, "comma-separated inverse temperatures (units of 1/J)");
        s.coupling = s.app->add_option("--J", f.coupling, "plaquette coupling J");
        s.density = s.app->add_option("--density", f.density, "spectral density: flat or ohmic");
        s.method = s.app->add_option("--method", f.method, "structured, dense-oracle or both");
        s.output = s.app->add_option("--output", f.output, "run directory (default $TCC_OUTPUT_ROOT/<subcommand>)");
        s.threads = s.app->add_option("--threads", f.threads, "worker threads, 0 = all cores");
        return s;
    };
    std::vector<Sub> subs;
    subs.push_back(make("build", "construct the lattice and code, write lattice.json"));
    subs.push_back(make("check", "run the invariant suite and print a PASS/FAIL table"));
    subs.push_back(make("gap", "sector minima and global gap per beta"));
    subs.push_back(make("theorem", "check the gap lower bound per beta"));
    subs.push_back(make("autocorr", "autocorrelation decay of logical observables"));
    subs.push_back(make("ising-scan", "Davies gap of the Ising comparison chain versus length"));
    subs.push_back(make("oracle-compare", "compare structured blocks with the dense oracle"));
    Sub& ac = subs[4];
    ac.observables = ac.app->add_option("--observables", f.observables, "labels like Z1, X2, Z13 or Pauli strings")
                         ->delimiter(',');
    ac.grid_lo = ac.app->add_option("--t-min", f.grid_lo, "first time point");
    ac.grid_hi = ac.app->add_option("--t-max", f.grid_hi, "last time point");
    ac.grid_points = ac.app->add_option("--t-points", f.grid_points, "number of logarithmic time points");
    Sub& is = subs[5];
    is.lengths = is.app->add_option("--L", f.lengths, "chain lengths: 'a..b' or a comma list");
    is.homogeneous = is.app->add_flag("--homogeneous", f.homogeneous, "all bonds J instead of alternating J, 2J");
    is.periodic = is.app->add_flag("--periodic", f.periodic, "periodic boundary (sensitivity runs only)");

    CLI11_PARSE(app, argc, argv);

    try {
        Sub* active = nullptr;
        for (auto& s : subs) {
            if (s.app->parsed()) active = &s;
        }
        RunConfig cfg;
        if (!f.config.empty()) apply_toml_file(cfg, f.config);
        if (active->size->count()) cfg.size = parse_size(f.size);
        if (active->beta->count()) cfg.betas = parse_beta_list(f.beta);
        if (active->coupling->count()) cfg.coupling = f.coupling;
        if (active->density->count()) cfg.density = parse_density(f.density);
        if (active->method->count()) cfg.method = f.method;
        if (active->output->count()) cfg.output = f.output;
        if (active->threads->count()) cfg.threads = f.threads;
        if (active->observables && active->observables->count()) cfg.observables = f.observables;
        if (active->grid_lo && active->grid_lo->count()) cfg.grid_lo = f.grid_lo;
        if (active->grid_hi && active->grid_hi->count()) cfg.grid_hi = f.grid_hi;
        if (active->grid_points && active->grid_points->count()) cfg.grid_points = f.grid_points;
        if (active->lengths && active->lengths->count()) cfg.lengths = parse_length_list(f.lengths);
        if (active->homogeneous && active->homogeneous->count()) cfg.homogeneous = f.homogeneous;
        if (active->periodic && active->periodic->count()) cfg.periodic = f.periodic;

        std::string name = active->app->get_name();
        if (name == "oracle-compare") return cmd_oracle_compare(cfg);
        cfg.validate();
        if (name == "build") return cmd_build(cfg);
        if (name == "check") return cmd_check(cfg);
        if (name == "gap") return cmd_gap_like(cfg, false);
        if (name == "theorem") return cmd_gap_like(cfg, true);
        if (name == "autocorr") return cmd_autocorr(cfg);
        if (name == "ising-scan") return cmd_ising_scan(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
