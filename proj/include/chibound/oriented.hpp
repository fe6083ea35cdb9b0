#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chibound/bounds.hpp"
#include "chibound/exact.hpp"
#include "chibound/graph.hpp"

namespace chibound {

// An undirected graph together with an acyclic orientation of every edge and
// a proper coloring phi.  The coloring is the one the acyclic-path properties
// below are stated against; nothing here assumes how it was produced.
struct OrientedGraph {
    Graph graph;
    std::vector<std::pair<int, int>> arcs;  // one (tail, head) per edge
    Coloring phi;
};

namespace detail {

// Topological order of the arcs; throws on a directed cycle.
inline std::vector<int> topological_order(const OrientedGraph& og) {
    int n = og.graph.n;
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (auto [t, h] : og.arcs) {
        out[t].push_back(h);
        ++indeg[h];
    }
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : out[order[i]])
            if (--indeg[w] == 0) order.push_back(w);
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("orientation has a directed cycle");
    return order;
}

// Per-source sparse reachability lists (target, path count saturated at 2,
// unique path length).  Saturation keeps the numbers small; only "is there
// more than one path" and the unique lengths are ever consumed.
struct PathTable {
    // entries[u] sorted by target
    struct Entry {
        int target;
        int count;       // saturated at 2
        long long length;  // arc count of the unique path when count == 1
    };
    std::vector<std::vector<Entry>> entries;

    bool unique_paths() const {
        for (const auto& row : entries)
            for (const Entry& e : row)
                if (e.count > 1) return false;
        return true;
    }
};

inline PathTable path_table(const OrientedGraph& og) {
    int n = og.graph.n;
    std::vector<int> order = topological_order(og);
    std::vector<std::vector<std::pair<int, int>>> out(n);  // not weighted; pair for symmetry
    for (auto [t, h] : og.arcs) out[t].push_back({h, 1});
    PathTable table;
    table.entries.assign(n, {});
    std::vector<int> count(n, 0);
    std::vector<long long> length(n, 0);
    std::vector<int> touched;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        touched.clear();
        for (auto [w, unused] : out[u]) {
            (void)unused;
            if (count[w] == 0) touched.push_back(w);
            count[w] = std::min(2, count[w] + 1);
            length[w] = 1;
            for (const PathTable::Entry& e : table.entries[w]) {
                if (count[e.target] == 0) touched.push_back(e.target);
                count[e.target] = std::min(2, count[e.target] + e.count);
                length[e.target] = e.length + 1;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = table.entries[u];
        row.reserve(touched.size());
        for (int x : touched) {
            row.push_back({x, count[x], length[x]});
            count[x] = 0;
        }
    }
    return table;
}

}  // namespace detail

inline void validate_oriented(const OrientedGraph& og) {
    if (static_cast<long long>(og.arcs.size()) != og.graph.edge_count())
        throw std::invalid_argument("orientation must cover every edge exactly once");
    for (auto [t, h] : og.arcs)
        if (t < 0 || t >= og.graph.n || h < 0 || h >= og.graph.n || !og.graph.has_edge(t, h))
            throw std::invalid_argument("arc does not match an edge");
    std::vector<std::pair<int, int>> seen = og.arcs;
    for (auto& [t, h] : seen)
        if (t > h) std::swap(t, h);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("edge oriented twice");
    detail::topological_order(og);
    if (!og.phi.proper(og.graph)) throw std::invalid_argument("phi must properly color the graph");
}

// The four acyclic-path properties, measured rather than assumed:
//   a1  chromatic number equals k
//   a2  every ordered pair is joined by at most one directed path
//   a3  some directed path has k vertices
//   a4  phi separates the endpoints of every directed path with >= 1 arc
struct AcyclicReport {
    bool a1 = false, a2 = false, a3 = false, a4 = false;
    int chi = 0;
    int longest_path_vertices = 0;
    bool all() const { return a1 && a2 && a3 && a4; }
};

inline AcyclicReport verify_acyclic_properties(const OrientedGraph& og, int k) {
    validate_oriented(og);
    AcyclicReport report;
    report.chi = chromatic_number(og.graph).first;
    report.a1 = report.chi == k;
    detail::PathTable table = detail::path_table(og);
    report.a2 = table.unique_paths();
    std::vector<int> order = detail::topological_order(og);
    std::vector<std::vector<int>> out(og.graph.n);
    for (auto [t, h] : og.arcs) out[t].push_back(h);
    std::vector<int> lp(og.graph.n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int w : out[*it]) lp[*it] = std::max(lp[*it], 1 + lp[w]);
    report.longest_path_vertices = og.graph.n == 0 ? 0 : *std::max_element(lp.begin(), lp.end());
    report.a3 = report.longest_path_vertices >= k;
    report.a4 = true;
    for (int u = 0; u < og.graph.n && report.a4; ++u)
        for (const auto& e : table.entries[u])
            if (og.phi.color[u] == og.phi.color[e.target]) {
                report.a4 = false;
                break;
            }
    return report;
}

// Minimum number of direction changes over all cycles of the underlying
// graph; returns the sentinel below when there is no cycle.  Walking a cycle,
// a change happens at every vertex whose two incident cycle edges both point
// at it or both point away.
inline constexpr int no_cycles = std::numeric_limits<int>::max();

inline int min_direction_changes(const OrientedGraph& og) {
    if (og.graph.n > 14) throw std::invalid_argument("direction-change scan is capped at 14 vertices");
    validate_oriented(og);
    int n = og.graph.n;
    std::vector<std::vector<int>> dir(n, std::vector<int>(n, 0));  // +1: u -> v
    for (auto [t, h] : og.arcs) {
        dir[t][h] = 1;
        dir[h][t] = -1;
    }
    int best = no_cycles;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto changes = [&](const std::vector<int>& cyc) {
        int L = static_cast<int>(cyc.size()), c = 0;
        for (int i = 0; i < L; ++i) {
            int sign_in = dir[cyc[i]][cyc[(i + 1) % L]];
            int sign_out = dir[cyc[(i + 1) % L]][cyc[(i + 2) % L]];
            if (sign_in != sign_out) ++c;
        }
        return c;
    };
    // Cycles are enumerated once each: smallest vertex first, and the two
    // traversal directions are told apart by comparing the neighbors of the
    // start.
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (int v = 0; v < n; ++v) {
            if (dir[u][v] == 0) continue;
            if (v == start && path.size() >= 3) {
                if (path[1] < path.back()) best = std::min(best, changes(path));
                continue;
            }
            if (v <= start || on_path[v]) continue;
            on_path[v] = 1;
            path.push_back(v);
            self(self, start, v);
            path.pop_back();
            on_path[v] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        dfs(dfs, s, s);
    }
    return best;
}

// The mod-p shift power: u ~ v whenever the unique directed path between
// them (in either direction) has length not divisible by p.  Requires unique
// paths, otherwise "the" length is meaningless.
inline Graph shift_power(const OrientedGraph& og, int p) {
    if (p < 1) throw std::invalid_argument("shift power needs p >= 1");
    validate_oriented(og);
    detail::PathTable table = detail::path_table(og);
    if (!table.unique_paths())
        throw std::invalid_argument("shift power needs unique directed paths");
    Graph gp(og.graph.n);
    for (int u = 0; u < og.graph.n; ++u)
        for (const auto& e : table.entries[u])
            if (e.length % p != 0) gp.add_edge(u, e.target);
    return gp;
}

// Measured check of the clique-number and small-subgraph chromatic claims
// about the shift power.  Violations are recorded, never thrown; when the
// acyclic-path hypotheses do not hold the mismatch is reported as
// hypothesis-not-met rather than claim-falsified.
struct ShiftClaimsReport {
    int p = 0;
    bool hypothesis_met = false;  // A1-A4 hold for k = chi(graph) and chi >= p
    int omega = 0;                // measured clique number of the shift power
    bool omega_matches = false;
    long long subgraphs_checked = 0;
    bool bounds_hold = true;
    std::vector<std::vector<int>> violations;  // induced subgraphs beating binom(m+2, 3)

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["hypothesis_met"] = hypothesis_met;
        j["omega"] = omega;
        j["omega_matches"] = omega_matches;
        j["subgraphs_checked"] = subgraphs_checked;
        j["bounds_hold"] = bounds_hold;
        j["violations"] = violations;
        return j;
    }
};

inline ShiftClaimsReport verify_shift_claims(const OrientedGraph& og, int p, int sample_budget,
                                             std::uint64_t seed = 12345) {
    if (og.graph.n > 20)
        throw std::invalid_argument("shift claim verification is capped at 20 vertices");
    Graph gp = shift_power(og, p);
    ShiftClaimsReport report;
    report.p = p;
    int chi = chromatic_number(og.graph).first;
    AcyclicReport acyclic = verify_acyclic_properties(og, chi);
    report.hypothesis_met = acyclic.all() && chi >= p;
    report.omega = static_cast<int>(max_clique(gp).size());
    report.omega_matches = report.omega == p;

    auto check_subset = [&](const std::vector<int>& subset) {
        ++report.subgraphs_checked;
        Graph h = induced(gp, subset);
        int m = static_cast<int>(max_clique(h).size());
        if (m >= p) return;  // bound only claimed below the clique number
        if (chromatic_number(h).first > binom(m + 2, 3)) {
            report.bounds_hold = false;
            report.violations.push_back(subset);
        }
    };
    int n = gp.n;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    for (int size = 1; size <= std::min(8, n); ++size)
        detail::for_each_subset(all, size, [&](const std::vector<int>& subset) { check_subset(subset); });
    std::mt19937_64 rng(seed);
    for (int s = 0; s < sample_budget && n > 8; ++s) {
        int size = std::uniform_int_distribution<int>(9, n)(rng);
        std::vector<int> pool = all;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> subset(pool.begin(), pool.begin() + size);
        std::sort(subset.begin(), subset.end());
        check_subset(subset);
    }
    return report;
}

// DIMACS-like serialization: a problem line, one line per arc in sorted
// order, and a final phi line carrying the colors vertex by vertex.
inline std::string oriented_to_dimacs(const OrientedGraph& og) {
    std::ostringstream out;
    out << "p arcs " << og.graph.n << ' ' << og.arcs.size() << '\n';
    std::vector<std::pair<int, int>> arcs = og.arcs;
    std::sort(arcs.begin(), arcs.end());
    for (auto [t, h] : arcs) out << "a " << t + 1 << ' ' << h + 1 << '\n';
    out << "phi";
    for (int c : og.phi.color) out << ' ' << c;
    out << '\n';
    return out.str();
}

inline OrientedGraph oriented_from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    OrientedGraph og;
    long long arc_count = -1;
    while (in >> tag) {
        if (tag == "p") {
            std::string kind;
            int n;
            if (!(in >> kind >> n >> arc_count) || kind != "arcs")
                throw std::invalid_argument("bad problem line");
            og.graph = Graph(n);
            og.phi = Coloring(n);
        } else if (tag == "a") {
            int t, h;
            if (!(in >> t >> h) || og.graph.n == 0)
                throw std::invalid_argument("bad arc line");
            og.graph.add_edge(t - 1, h - 1);
            og.arcs.push_back({t - 1, h - 1});
        } else if (tag == "phi") {
            for (int& c : og.phi.color)
                if (!(in >> c)) throw std::invalid_argument("phi line too short");
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (arc_count != static_cast<long long>(og.arcs.size()))
        throw std::invalid_argument("arc count mismatch");
    validate_oriented(og);
    return og;
}

}  // namespace chibound
