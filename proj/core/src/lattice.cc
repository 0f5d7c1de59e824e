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

#include "tcc/lattice.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tcc/gf2.h"

namespace tcc {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

Coord add(Coord a, Coord b) { return {a[0] + b[0], a[1] + b[1]}; }
Coord sub(Coord a, Coord b) { return {a[0] - b[0], a[1] - b[1]}; }

Color color_of(Coord p) { return static_cast<Color>(floor_mod(p[0] + p[1], 3)); }

// Hermite basis (g, x), (0, h) of the period lattice.
struct Hermite {
    std::int64_t g;
    std::int64_t x;
    std::int64_t h;
};

Hermite hermite(const std::array<Coord, 2>& periods) {
    auto [u, v] = periods;
    std::int64_t det = u[0] * v[1] - u[1] * v[0];
    if (det == 0) throw std::invalid_argument("torus periods are linearly dependent");
    // Extended gcd on the first components.
    std::int64_t old_r = u[0], r = v[0];
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = floor_div(old_r, r);
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    std::int64_t g = old_r;
    std::int64_t x = old_s * u[1] + old_t * v[1];
    std::int64_t h = std::abs(det) / g;
    return {g, floor_mod(x, h), h};
}

Coord hermite_reduce(const Hermite& hf, Coord p) {
    std::int64_t k = floor_div(p[0], hf.g);
    p[0] -= k * hf.g;
    p[1] -= k * hf.x;
    p[1] = floor_mod(p[1], hf.h);
    return p;
}

std::size_t hermite_index(const Hermite& hf, Coord p) {
    Coord r = hermite_reduce(hf, p);
    return static_cast<std::size_t>(r[0] * hf.h + r[1]);
}

constexpr std::size_t kMaxPlaquettes = 32;

}  // namespace

std::string_view color_name(Color c) {
    switch (c) {
        case Color::Red:
            return "red";
        case Color::Green:
            return "green";
        case Color::Blue:
            return "blue";
    }
    return "?";
}

Color parse_color(std::string_view name) {
    if (name == "red" || name == "R") return Color::Red;
    if (name == "green" || name == "G") return Color::Green;
    if (name == "blue" || name == "B") return Color::Blue;
    throw std::invalid_argument("unknown color '" + std::string(name) + "'");
}

std::string_view homology_name(Homology h) {
    switch (h) {
        case Homology::Trivial:
            return "trivial";
        case Homology::Cycle1:
            return "cycle-1";
        case Homology::Cycle2:
            return "cycle-2";
        case Homology::Cycle12:
            return "cycle-12";
        case Homology::Open:
            return "open";
    }
    return "?";
}

std::size_t ColexLattice::plaquette_at(std::size_t v, Color c) const {
    for (std::size_t p = 0; p < plaquettes.size(); ++p) {
        if (plaquettes[p].color != c) continue;
        const auto& vs = plaquettes[p].vertices;
        if (std::find(vs.begin(), vs.end(), v) != vs.end()) return p;
    }
    return npos;
}

std::vector<std::size_t> ColexLattice::plaquettes_of_color(Color c) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < plaquettes.size(); ++p) {
        if (plaquettes[p].color == c) out.push_back(p);
    }
    return out;
}

std::vector<std::size_t> ColexLattice::plaquettes_containing(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < plaquettes.size(); ++p) {
        const auto& vs = plaquettes[p].vertices;
        if (std::find(vs.begin(), vs.end(), v) != vs.end()) out.push_back(p);
    }
    return out;
}

Coord ColexLattice::reduce(Coord p) const { return hermite_reduce(hermite(periods), p); }

std::size_t ColexLattice::plaquette_index(Coord p) const {
    Coord r = reduce(p);
    for (std::size_t k = 0; k < plaquettes.size(); ++k) {
        if (plaquettes[k].coord == r) return k;
    }
    return npos;
}

std::vector<std::size_t> admissible_sizes() {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; 3 * k * k <= kMaxPlaquettes; ++k) out.push_back(3 * k * k);
    return out;
}

ColexLattice build_hex_torus(std::size_t num_plaquettes) {
    auto sizes = admissible_sizes();
    if (std::find(sizes.begin(), sizes.end(), num_plaquettes) == sizes.end()) {
        std::ostringstream msg;
        msg << "no hexagonal torus with " << num_plaquettes
            << " plaquettes in this family: the plaquette count must be 3k^2 so both periods keep the "
               "3-coloring, and 2N qubits must fit in 64; admissible sizes are";
        for (auto s : sizes) msg << ' ' << s;
        throw std::invalid_argument(msg.str());
    }
    auto k = static_cast<std::int64_t>(std::lround(std::sqrt(static_cast<double>(num_plaquettes / 3))));
    return build_hex_torus(Coord{k, -k}, Coord{k, 2 * k});
}

ColexLattice build_hex_torus(Coord u, Coord v) {
    for (const auto& w : {u, v}) {
        if (floor_mod(w[0] + w[1], 3) != 0) {
            throw std::invalid_argument("period (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) +
                                        ") breaks the 3-coloring: a + b must be divisible by 3");
        }
    }
    ColexLattice lat;
    lat.periods = {u, v};
    Hermite hf = hermite(lat.periods);
    std::size_t n = static_cast<std::size_t>(hf.g * hf.h);
    if (n > kMaxPlaquettes) {
        throw std::invalid_argument("torus has " + std::to_string(n) + " plaquettes; at most " +
                                    std::to_string(kMaxPlaquettes) + " fit in 64 qubits");
    }

    lat.plaquettes.resize(n);
    for (std::int64_t a = 0; a < hf.g; ++a) {
        for (std::int64_t b = 0; b < hf.h; ++b) {
            Coord p{a, b};
            auto& pl = lat.plaquettes[hermite_index(hf, p)];
            pl.coord = p;
            pl.color = color_of(p);
        }
    }

    auto up = [&](Coord p) { return 2 * hermite_index(hf, p); };
    auto down = [&](Coord p) { return 2 * hermite_index(hf, p) + 1; };

    lat.num_vertices = 2 * n;
    lat.positions.resize(2 * n);
    const double s3 = std::sqrt(3.0) / 2;
    for (std::size_t k = 0; k < n; ++k) {
        Coord p = lat.plaquettes[k].coord;
        auto embed = [&](double a, double b) { return std::array<double, 2>{a - 0.5 * b, s3 * b}; };
        double a = static_cast<double>(p[0]);
        double b = static_cast<double>(p[1]);
        lat.positions[2 * k] = embed(a + 2.0 / 3, b + 1.0 / 3);
        lat.positions[2 * k + 1] = embed(a + 1.0 / 3, b + 2.0 / 3);

        // Triangles around p, in angular order of the neighbor directions.
        lat.plaquettes[k].vertices = {
            up(p),
            down(p),
            up(sub(p, {1, 0})),
            down(sub(p, {1, 1})),
            up(sub(p, {1, 1})),
            down(sub(p, {0, 1})),
        };
    }

    for (std::size_t k = 0; k < n; ++k) {
        Coord p = lat.plaquettes[k].coord;
        struct Dual {
            std::size_t a;
            Coord third_a;
            std::size_t b;
            Coord third_b;
        };
        const Dual duals[3] = {
            {up(p), add(p, {1, 1}), down(sub(p, {0, 1})), sub(p, {0, 1})},
            {down(p), add(p, {1, 1}), up(sub(p, {1, 0})), sub(p, {1, 0})},
            {up(p), add(p, {1, 0}), down(p), add(p, {0, 1})},
        };
        for (const auto& d : duals) {
            lat.edges.push_back(Edge{
                d.a,
                d.b,
                color_of(d.third_a),
                hermite_index(hf, d.third_a),
                hermite_index(hf, d.third_b),
                sub(d.third_b, d.third_a),
            });
        }
    }
    return lat;
}

ValidationReport validate(const ColexLattice& lat) {
    ValidationReport report;
    auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
    std::size_t n = lat.num_plaquettes();
    std::size_t nv = lat.num_vertices;

    if (nv != 2 * n) fail("vertex count " + std::to_string(nv) + " != 2N = " + std::to_string(2 * n));
    if (lat.num_edges() != 3 * n) {
        fail("edge count " + std::to_string(lat.num_edges()) + " != 3N = " + std::to_string(3 * n));
    }

    // Every vertex in exactly three plaquettes, one per color.
    std::vector<std::array<int, 3>> membership(nv, {0, 0, 0});
    for (std::size_t p = 0; p < n; ++p) {
        for (auto v : lat.plaquettes[p].vertices) {
            if (v >= nv) {
                fail("plaquette " + std::to_string(p) + " references missing vertex " + std::to_string(v));
                continue;
            }
            membership[v][static_cast<int>(lat.plaquettes[p].color)]++;
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& m = membership[v];
        if (m[0] != 1 || m[1] != 1 || m[2] != 1) {
            fail("vertex " + std::to_string(v) + " is not in exactly one plaquette of each color (r,g,b = " +
                 std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")");
        }
    }

    // Faces adjacent to each edge: plaquettes whose cycle steps across it.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> faces;
    for (std::size_t p = 0; p < n; ++p) {
        const auto& vs = lat.plaquettes[p].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::size_t a = vs[i];
            std::size_t b = vs[(i + 1) % vs.size()];
            faces[{std::min(a, b), std::max(a, b)}].push_back(p);
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, int> seen;
    std::vector<std::array<int, 3>> edge_colors(nv, {0, 0, 0});
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        const auto& edge = lat.edges[e];
        std::string tag = "edge " + std::to_string(e);
        if (edge.a >= nv || edge.b >= nv || edge.a == edge.b) {
            fail(tag + " has invalid endpoints");
            continue;
        }
        auto key = std::make_pair(std::min(edge.a, edge.b), std::max(edge.a, edge.b));
        if (seen[key]++) fail(tag + " duplicates another edge");
        edge_colors[edge.a][static_cast<int>(edge.color)]++;
        edge_colors[edge.b][static_cast<int>(edge.color)]++;

        auto it = faces.find(key);
        if (it == faces.end() || it->second.size() != 2) {
            fail(tag + " does not border exactly two plaquettes");
            continue;
        }
        Color c0 = lat.plaquettes[it->second[0]].color;
        Color c1 = lat.plaquettes[it->second[1]].color;
        if (c0 == c1) fail(tag + " is shared by two " + std::string(color_name(c0)) + " plaquettes");
        if (c0 == edge.color || c1 == edge.color) {
            fail(tag + " is colored " + std::string(color_name(edge.color)) +
                 " but borders a plaquette of that color instead of linking two of them");
        }
        if (edge.plaquette_a >= n || edge.plaquette_b >= n || lat.plaquettes[edge.plaquette_a].color != edge.color ||
            lat.plaquettes[edge.plaquette_b].color != edge.color ||
            lat.plaquette_at(edge.a, edge.color) != edge.plaquette_a ||
            lat.plaquette_at(edge.b, edge.color) != edge.plaquette_b) {
            fail(tag + " does not connect two plaquettes of its own color");
        }
    }
    for (const auto& [key, ps] : faces) {
        if (!seen.count(key)) {
            fail("plaquette boundary step " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                 " is not an edge");
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& m = edge_colors[v];
        if (m[0] != 1 || m[1] != 1 || m[2] != 1) {
            fail("vertex " + std::to_string(v) + " does not have one incident edge of each color");
        }
    }
    return report;
}

std::uint64_t ColoredString::support_mask() const {
    std::uint64_t mask = 0;
    for (auto v : vertices) mask ^= 1ULL << v;
    return mask;
}

PauliOperator ColoredString::as_z(std::size_t num_qubits) const { return {num_qubits, 0, support_mask(), 0}; }

PauliOperator ColoredString::as_x(std::size_t num_qubits) const { return {num_qubits, support_mask(), 0, 0}; }

ColoredString closed_string(const ColexLattice& lat, Color c, Coord displacement) {
    if (lat.reduce(displacement) != Coord{0, 0}) {
        throw std::invalid_argument("closed string displacement is not a torus period");
    }
    auto members = lat.plaquettes_of_color(c);
    if (members.empty()) throw std::invalid_argument("lattice has no plaquettes of the requested color");
    Coord start = lat.plaquettes[members.front()].coord;
    Coord target = add(start, displacement);

    struct Step {
        Coord from;
        std::size_t a;
        std::size_t b;
    };
    std::map<Coord, Step> parent;
    std::deque<Coord> queue{start};
    parent[start] = {start, 0, 0};
    constexpr std::size_t kMaxNodes = 1 << 20;
    while (!queue.empty() && !parent.count(target)) {
        if (parent.size() > kMaxNodes) throw std::runtime_error("closed string search exceeded its budget");
        Coord p = queue.front();
        queue.pop_front();
        std::size_t idx = lat.plaquette_index(p);
        for (const auto& e : lat.edges) {
            if (e.color != c) continue;
            if (e.plaquette_a == idx) {
                Coord q = add(p, e.shift);
                if (parent.emplace(q, Step{p, e.a, e.b}).second) queue.push_back(q);
            }
            if (e.plaquette_b == idx) {
                Coord q = sub(p, e.shift);
                if (parent.emplace(q, Step{p, e.b, e.a}).second) queue.push_back(q);
            }
        }
    }
    if (!parent.count(target)) throw std::runtime_error("closed string target unreachable");

    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (Coord p = target; p != start;) {
        const auto& s = parent.at(p);
        links.emplace_back(s.a, s.b);
        p = s.from;
    }
    std::reverse(links.begin(), links.end());

    ColoredString out;
    out.color = c;
    for (auto [a, b] : links) {
        out.vertices.push_back(a);
        out.vertices.push_back(b);
    }
    out.winding = displacement;
    auto [u, v] = lat.periods;
    std::int64_t det = u[0] * v[1] - u[1] * v[0];
    std::int64_t m = (displacement[0] * v[1] - displacement[1] * v[0]) / det;
    std::int64_t k = (u[0] * displacement[1] - u[1] * displacement[0]) / det;
    bool odd_m = floor_mod(m, 2) != 0;
    bool odd_k = floor_mod(k, 2) != 0;
    out.homology = odd_m ? (odd_k ? Homology::Cycle12 : Homology::Cycle1) : (odd_k ? Homology::Cycle2 : Homology::Trivial);
    return out;
}

std::array<ColoredString, 4> nontrivial_loops(const ColexLattice& lat) {
    auto [u, v] = lat.periods;
    return {
        closed_string(lat, Color::Red, u),
        closed_string(lat, Color::Blue, u),
        closed_string(lat, Color::Red, v),
        closed_string(lat, Color::Blue, v),
    };
}

std::size_t ExcitationGenerators::num_string_qubits() const {
    std::size_t total = 0;
    for (const auto& l : links) total += 2 * l.size();
    return total;
}

ColoredString ExcitationGenerators::string(Color c) const {
    ColoredString s;
    s.color = c;
    s.homology = Homology::Open;
    for (auto [a, b] : links[static_cast<int>(c)]) {
        s.vertices.push_back(a);
        s.vertices.push_back(b);
    }
    return s;
}

namespace {

// Picks, for every color, a spanning tree of that color's shrunk lattice
// whose links are pairwise vertex-disjoint across all colors.
class LinkSearch {
   public:
    LinkSearch(const ColexLattice& lat, bool paths_only) : lat_(lat), paths_only_(paths_only) {
        for (auto c : kAllColors) {
            auto& list = candidates_[static_cast<int>(c)];
            for (std::size_t e = 0; e < lat.num_edges(); ++e) {
                const auto& edge = lat.edges[e];
                if (edge.color == c && edge.plaquette_a != edge.plaquette_b) list.push_back(e);
            }
            needed_[static_cast<int>(c)] = lat.plaquettes_of_color(c).size() - 1;
        }
        used_.assign(lat.num_vertices, false);
        degree_.assign(lat.num_plaquettes(), 0);
        component_.resize(lat.num_plaquettes());
        std::iota(component_.begin(), component_.end(), 0);
    }

    bool run() { return search(0, 0, 0); }

    std::array<std::vector<std::size_t>, 3> chosen;

   private:
    std::size_t find(std::size_t p) const {
        while (component_[p] != p) p = component_[p];
        return p;
    }

    bool search(int color, std::size_t pos, std::size_t count) {
        if (++nodes_ > kBudget) return false;
        if (color == 3) return true;
        const auto& list = candidates_[color];
        if (count == needed_[color]) return search(color + 1, 0, 0);
        if (list.size() - pos < needed_[color] - count) return false;
        for (std::size_t i = pos; i < list.size(); ++i) {
            const auto& e = lat_.edges[list[i]];
            if (used_[e.a] || used_[e.b]) continue;
            std::size_t ra = find(e.plaquette_a);
            std::size_t rb = find(e.plaquette_b);
            if (ra == rb) continue;
            if (paths_only_ && (degree_[e.plaquette_a] >= 2 || degree_[e.plaquette_b] >= 2)) continue;
            used_[e.a] = used_[e.b] = true;
            degree_[e.plaquette_a]++;
            degree_[e.plaquette_b]++;
            component_[ra] = rb;
            chosen[color].push_back(list[i]);
            if (search(color, i + 1, count + 1)) return true;
            chosen[color].pop_back();
            component_[ra] = ra;
            degree_[e.plaquette_a]--;
            degree_[e.plaquette_b]--;
            used_[e.a] = used_[e.b] = false;
            if (nodes_ > kBudget) return false;
        }
        return false;
    }

    static constexpr std::size_t kBudget = 2'000'000;
    const ColexLattice& lat_;
    bool paths_only_;
    std::array<std::vector<std::size_t>, 3> candidates_;
    std::array<std::size_t, 3> needed_{};
    std::vector<bool> used_;
    std::vector<int> degree_;
    std::vector<std::size_t> component_;
    std::size_t nodes_ = 0;
};

}  // namespace

ExcitationGenerators excitation_generators(const ColexLattice& lat) {
    auto report = validate(lat);
    if (!report.ok()) throw std::invalid_argument("excitation_generators needs a valid lattice: " + report.failures[0]);

    std::optional<LinkSearch> found;
    for (bool paths_only : {true, false}) {
        found.emplace(lat, paths_only);
        if (found->run()) break;
        found.reset();
    }
    if (!found) throw std::runtime_error("no vertex-disjoint set of open strings found");

    ExcitationGenerators gen;
    std::vector<bool> covered(lat.num_vertices, false);
    for (int c = 0; c < 3; ++c) {
        for (auto e : found->chosen[c]) {
            const auto& edge = lat.edges[e];
            gen.links[c].emplace_back(edge.a, edge.b);
            covered[edge.a] = covered[edge.b] = true;
        }
    }
    std::vector<std::size_t> free;
    for (std::size_t v = 0; v < lat.num_vertices; ++v) {
        if (!covered[v]) free.push_back(v);
    }
    if (free.size() != 6) throw std::logic_error("open strings should leave exactly six qubits uncovered");

    // Fixed part of the generating set: plaquettes, logical loops, string links.
    std::size_t nq = lat.num_vertices;
    Gf2Eliminator base(2 * nq);
    for (const auto& p : lat.plaquettes) {
        base.add(BitVector::from_pauli(PauliOperator::x_string(nq, p.vertices)));
        base.add(BitVector::from_pauli(PauliOperator::z_string(nq, p.vertices)));
    }
    for (const auto& loop : nontrivial_loops(lat)) {
        base.add(BitVector::from_pauli(loop.as_z(nq)));
        base.add(BitVector::from_pauli(loop.as_x(nq)));
    }
    for (const auto& per_color : gen.links) {
        for (auto [a, b] : per_color) {
            std::size_t pair[2] = {a, b};
            base.add(BitVector::from_pauli(PauliOperator::x_string(nq, pair)));
            base.add(BitVector::from_pauli(PauliOperator::z_string(nq, pair)));
        }
    }
    for (auto bx : free) {
        for (auto bz : free) {
            if (bx == bz) continue;
            Gf2Eliminator trial = base;
            trial.add(BitVector::from_pauli(PauliOperator::single(nq, bx, 'X')));
            trial.add(BitVector::from_pauli(PauliOperator::single(nq, bz, 'Z')));
            if (trial.rank() != 2 * nq) continue;
            gen.branching_x = bx;
            gen.branching_z = bz;
            std::size_t k = 0;
            for (auto q : free) {
                if (q != bx && q != bz) gen.leftover[k++] = q;
            }
            return gen;
        }
    }
    throw std::runtime_error("no branching-point choice completes the generating set");
}

std::string lattice_to_json(const ColexLattice& lat) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["num_plaquettes"] = lat.num_plaquettes();
    doc["num_vertices"] = lat.num_vertices;
    doc["num_edges"] = lat.num_edges();
    doc["periods"] = {{lat.periods[0][0], lat.periods[0][1]}, {lat.periods[1][0], lat.periods[1][1]}};
    doc["plaquettes"] = ordered_json::array();
    for (const auto& p : lat.plaquettes) {
        ordered_json jp;
        jp["color"] = color_name(p.color);
        jp["coord"] = {p.coord[0], p.coord[1]};
        jp["vertices"] = p.vertices;
        doc["plaquettes"].push_back(jp);
    }
    doc["edges"] = ordered_json::array();
    for (const auto& e : lat.edges) {
        ordered_json je;
        je["vertices"] = {e.a, e.b};
        je["color"] = color_name(e.color);
        je["plaquettes"] = {e.plaquette_a, e.plaquette_b};
        je["shift"] = {e.shift[0], e.shift[1]};
        doc["edges"].push_back(je);
    }
    doc["positions"] = ordered_json::array();
    for (const auto& pos : lat.positions) {
        doc["positions"].push_back({std::round(pos[0] * 1e9) / 1e9, std::round(pos[1] * 1e9) / 1e9});
    }
    return doc.dump(2) + "\n";
}

ColexLattice lattice_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        ColexLattice lat;
        lat.num_vertices = doc.at("num_vertices").get<std::size_t>();
        const auto& per = doc.at("periods");
        lat.periods = {Coord{per.at(0).at(0).get<std::int64_t>(), per.at(0).at(1).get<std::int64_t>()},
                       Coord{per.at(1).at(0).get<std::int64_t>(), per.at(1).at(1).get<std::int64_t>()}};
        for (const auto& jp : doc.at("plaquettes")) {
            Plaquette p;
            p.color = parse_color(jp.at("color").get<std::string>());
            p.coord = {jp.at("coord").at(0).get<std::int64_t>(), jp.at("coord").at(1).get<std::int64_t>()};
            p.vertices = jp.at("vertices").get<std::vector<std::size_t>>();
            lat.plaquettes.push_back(std::move(p));
        }
        for (const auto& je : doc.at("edges")) {
            Edge e;
            e.a = je.at("vertices").at(0).get<std::size_t>();
            e.b = je.at("vertices").at(1).get<std::size_t>();
            e.color = parse_color(je.at("color").get<std::string>());
            e.plaquette_a = je.at("plaquettes").at(0).get<std::size_t>();
            e.plaquette_b = je.at("plaquettes").at(1).get<std::size_t>();
            e.shift = {je.at("shift").at(0).get<std::int64_t>(), je.at("shift").at(1).get<std::int64_t>()};
            lat.edges.push_back(e);
        }
        if (doc.contains("positions")) {
            for (const auto& pos : doc.at("positions")) {
                lat.positions.push_back({pos.at(0).get<double>(), pos.at(1).get<double>()});
            }
        }
        return lat;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed lattice JSON: ") + ex.what());
    }
}

}  // namespace tcc
