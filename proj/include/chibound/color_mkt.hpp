#pragma once

#include <utility>
#include <vector>

#include "chibound/bounds.hpp"
#include "chibound/containment.hpp"
#include "chibound/exact.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {
namespace detail {

struct MktStats {
    long long f = 0;  // max exact chi over clique-neighborhood pieces
    long long g = 0;  // max color count over the (m-1)K_t recursions
};

// One level of the (K_t u H)-free recursion.  `stats` is non-null only at the
// top level, where the observed piece constants feed the bound report.
inline Coloring color_mkt_rec(const Graph& g, int m, int t, MktStats* stats) {
    if (g.n == 0) return Coloring();
    std::vector<int> clique = max_clique(g);
    int w = static_cast<int>(clique.size());
    if (t == 1 || w < t) {
        // K_t-free (trivially so once t=1 pieces are exhausted): color exactly.
        if (m == 1 && w >= t) throw std::logic_error("color_mkt_rec: base case is not K_t-free");
        Coloring col = chromatic_number(g).second;
        if (stats) stats->f = std::max(stats->f, static_cast<long long>(col.count()));
        return col;
    }

    std::vector<bool> in_clique(g.n, false);
    for (int v : clique) in_clique[v] = true;

    Coloring out(g.n);
    std::vector<bool> assigned(g.n, false);
    int palette = 0;  // colors handed out so far; each piece gets a fresh block

    auto place = [&](const std::vector<int>& piece, const Coloring& pc) {
        int used = pc.count();
        for (std::size_t i = 0; i < piece.size(); ++i) {
            out.color[piece[i]] = palette + pc.color[i];
            assigned[piece[i]] = true;
        }
        palette += used;
    };

    // Pieces M u A_M over (t-1)-subsets M of the clique: A_M collects the
    // outside vertices complete to K\M, so every clique of the piece extends
    // by K\M and the piece is K_t-free.
    for_each_subset(clique, t - 1, [&](const std::vector<int>& sub) {
        std::vector<bool> in_m(g.n, false);
        for (int v : sub) in_m[v] = true;
        std::vector<int> piece;
        for (int v : sub)
            if (!assigned[v]) piece.push_back(v);
        for (int u = 0; u < g.n; ++u) {
            if (assigned[u] || in_clique[u]) continue;
            bool complete = true;
            for (int v : clique)
                if (!in_m[v] && !g.has_edge(u, v)) {
                    complete = false;
                    break;
                }
            if (complete) piece.push_back(u);
        }
        std::sort(piece.begin(), piece.end());
        if (piece.empty()) return;
        Coloring pc = chromatic_number(induced(g, piece)).second;
        if (stats) stats->f = std::max(stats->f, static_cast<long long>(pc.count()));
        place(piece, pc);
    });

    // Pieces A'_N over t-subsets N of the clique: anti-complete to N, so a
    // further (m-1)K_t inside would combine with N into an mK_t.
    for_each_subset(clique, t, [&](const std::vector<int>& sub) {
        std::vector<bool> in_n(g.n, false);
        for (int v : sub) in_n[v] = true;
        std::vector<int> piece;
        for (int u = 0; u < g.n; ++u) {
            if (assigned[u] || in_n[u]) continue;
            bool anti = true;
            for (int v : sub)
                if (g.has_edge(u, v)) {
                    anti = false;
                    break;
                }
            if (anti) piece.push_back(u);
        }
        if (piece.empty()) return;
        Coloring pc = color_mkt_rec(induced(g, piece), m - 1, t, nullptr);
        if (stats) stats->g = std::max(stats->g, static_cast<long long>(pc.count()));
        place(piece, pc);
    });

    for (int v = 0; v < g.n; ++v)
        if (!assigned[v]) throw std::logic_error("color_mkt_rec: piece decomposition missed a vertex");
    return out;
}

}  // namespace detail

// Colors an mK_t-free graph by the clique-neighborhood recursion: exact
// coloring of the K_t-free pieces around a maximum clique, recursion with
// m-1 on the anti-complete pieces.
inline std::pair<Coloring, BoundReport> color_mkt_free(const Graph& g, int m, int t) {
    if (m < 1 || t < 1) throw std::invalid_argument("color_mkt_free: m,t must be >= 1");
    PatternSpec spec{PatternSpec::mkt, m, t};
    if (auto w = contains_induced(g, make_pattern(spec)))
        throw forbidden_pattern_error("color_mkt_free: graph contains " + spec.to_string(), *w);

    detail::MktStats stats;
    Coloring col = detail::color_mkt_rec(g, m, t, &stats);
    if (!col.proper(g)) throw std::logic_error("color_mkt_free: improper coloring");

    int w = static_cast<int>(max_clique(g).size());
    BoundReport report;
    report.bound_name = "eq31";
    report.inputs = {{"omega", w}, {"m", m}, {"t", t}, {"f", stats.f}, {"g", stats.g}};
    report.bound_value = eq31(w, t, stats.f, stats.g);
    report.achieved = col.count();
    detail::check_bound(report);
    return {std::move(col), report};
}

}  // namespace chibound
