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

// Induction on |V| for (t,k)-pineapple-free graphs.  `c_obs` accumulates the
// largest exact chromatic number seen in a base case or clique-neighborhood
// piece; it instantiates the constant C of m(x) = C*sum binom(x,i).
inline Coloring color_pineapple_rec(const Graph& g, int t, int k, long long& c_obs) {
    if (g.n == 0) return Coloring();
    std::vector<int> clique = max_clique(g);
    int w = static_cast<int>(clique.size());
    if (w <= 2 * t - 4) {
        Coloring col = chromatic_number(g).second;
        c_obs = std::max(c_obs, static_cast<long long>(col.count()));
        return col;
    }

    std::vector<bool> in_clique(g.n, false);
    for (int v : clique) in_clique[v] = true;

    // S = vertices with a nonempty set M of at most t-2 non-neighbors in the
    // clique; such a vertex sits in A_M for M = its exact non-neighbor set.
    std::vector<std::vector<int>> non_nbrs(g.n);
    std::vector<bool> in_s(g.n, false);
    for (int u = 0; u < g.n; ++u) {
        if (in_clique[u]) continue;
        for (int v : clique)
            if (!g.has_edge(u, v)) non_nbrs[u].push_back(v);
        if (non_nbrs[u].empty()) throw std::logic_error("color_pineapple_rec: clique not maximum");
        if (static_cast<int>(non_nbrs[u].size()) <= t - 2) in_s[u] = true;
    }

    // c2: exact coloring of G[K u S] piece by piece with disjoint palettes.
    // Singleton pieces {v} u A_{v} for v in K, then A_M for larger M; the
    // pieces partition K u S since M is the exact non-neighbor set.
    std::vector<int> c2(g.n, 0);
    int c2_used = 0;
    auto color_piece = [&](const std::vector<int>& piece) {
        if (piece.empty()) return;
        Coloring pc = chromatic_number(induced(g, piece)).second;
        c_obs = std::max(c_obs, static_cast<long long>(pc.count()));
        for (std::size_t i = 0; i < piece.size(); ++i) c2[piece[i]] = c2_used + pc.color[i];
        c2_used += pc.count();
    };
    for (int v : clique) {
        std::vector<int> piece{v};
        for (int u = 0; u < g.n; ++u)
            if (in_s[u] && non_nbrs[u].size() == 1 && non_nbrs[u][0] == v) piece.push_back(u);
        std::sort(piece.begin(), piece.end());
        color_piece(piece);
    }
    for (int size = 2; size <= t - 2; ++size) {
        for_each_subset(clique, size, [&](const std::vector<int>& m) {
            std::vector<int> piece;
            for (int u = 0; u < g.n; ++u)
                if (in_s[u] && non_nbrs[u] == m) piece.push_back(u);
            color_piece(piece);
        });
    }

    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!in_clique[v] && !in_s[v]) rest.push_back(v);
    Coloring c1 = color_pineapple_rec(induced(g, rest), t, k, c_obs);

    // Lift: every vertex of K u S has fewer than alpha neighbors among the
    // recursively colored rest (Ramsey pigeonhole on the pendant sets), so a
    // free color exists in its private alpha-block.
    long long alpha = (t * binom(w, t) + 1) * ramsey_bound(w - 1, k);
    Coloring out(g.n);
    for (std::size_t i = 0; i < rest.size(); ++i) out.color[rest[i]] = c1.color[i];
    std::vector<int> rest_index(g.n, -1);
    for (std::size_t i = 0; i < rest.size(); ++i) rest_index[rest[i]] = static_cast<int>(i);
    for (int v = 0; v < g.n; ++v) {
        if (out.color[v] != 0 || c2[v] == 0) continue;
        std::vector<long long> taken;
        g.for_each_neighbor(v, [&](int u) {
            if (rest_index[u] >= 0) taken.push_back(out.color[u]);
        });
        if (static_cast<long long>(taken.size()) >= alpha)
            throw std::logic_error("color_pineapple_rec: neighbor budget exceeded");
        std::sort(taken.begin(), taken.end());
        long long base = alpha * (c2[v] - 1);
        long long pick = base + 1;
        for (long long c : taken) {
            if (c < pick) continue;
            if (c == pick) ++pick;
            if (pick > base + alpha) break;
        }
        if (pick > base + alpha) throw std::logic_error("color_pineapple_rec: block exhausted");
        out.color[v] = static_cast<int>(pick);
    }
    return out;
}

}  // namespace detail

// Colors a (t,k)-pineapple-free graph: exact base below omega = 2t-3,
// otherwise exact coloring of the maximum clique's close neighborhood plus a
// recursion on the remainder, recombined through private color blocks.
inline std::pair<Coloring, BoundReport> color_pineapple_free(const Graph& g, int t, int k) {
    if (t <= 2) throw std::invalid_argument("color_pineapple_free: t must be > 2");
    if (k < 1) throw std::invalid_argument("color_pineapple_free: k must be >= 1");
    PatternSpec spec{PatternSpec::pineapple, t, k};
    if (auto w = contains_induced(g, make_pattern(spec)))
        throw forbidden_pattern_error("color_pineapple_free: graph contains " + spec.to_string(), *w);

    long long c_obs = 0;
    Coloring col = detail::color_pineapple_rec(g, t, k, c_obs);
    if (!col.proper(g)) throw std::logic_error("color_pineapple_free: improper coloring");

    int w = static_cast<int>(max_clique(g).size());
    BoundReport report;
    report.bound_name = "pineapple_g";
    report.inputs = {{"omega", w}, {"t", t}, {"k", k}, {"C", c_obs}};
    // g(x) degenerates to 0 below omega = 2; the base constant bounds those.
    report.bound_value = std::max(pineapple_g(w, t, k, c_obs), c_obs);
    report.achieved = col.count();
    detail::check_bound(report);
    return {std::move(col), report};
}

}  // namespace chibound
