#pragma once

#include <algorithm>
#include <utility>

#include "chibound/graph.hpp"

namespace chibound {
namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int bits_count(const Bits& b) {
    int c = 0;
    for (std::uint64_t w : b) c += std::popcount(w);
    return c;
}

template <typename F>
inline void bits_for_each(const Bits& b, F&& f) {
    for (std::size_t w = 0; w < b.size(); ++w) {
        std::uint64_t word = b[w];
        while (word) {
            int bit = std::countr_zero(word);
            f(static_cast<int>(w * 64 + bit));
            word &= word - 1;
        }
    }
}

// Greedy coloring of the subgraph induced on `cand`; the number of classes
// used upper-bounds its clique number.
inline int greedy_color_bound(const Graph& g, const Bits& cand) {
    std::vector<Bits> classes;
    bits_for_each(cand, [&](int v) {
        for (Bits& cls : classes) {
            bool clash = false;
            for (int w = 0; w < g.words; ++w)
                if (cls[w] & g.row(v)[w]) {
                    clash = true;
                    break;
                }
            if (!clash) {
                cls[v / 64] |= 1ull << (v % 64);
                return;
            }
        }
        classes.emplace_back(g.words, 0);
        classes.back()[v / 64] |= 1ull << (v % 64);
    });
    return static_cast<int>(classes.size());
}

// Branching in increasing vertex order makes the first maximum clique found
// the lexicographically least one: a lex-smaller clique of equal size would
// sit in an earlier subtree, where the strictly-improving bound cannot have
// pruned it.
inline void clique_extend(const Graph& g, const Bits& cand, std::vector<int>& cur,
                          std::vector<int>& best) {
    int remaining = bits_count(cand);
    if (remaining == 0) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    if (static_cast<int>(cur.size()) + remaining <= static_cast<int>(best.size())) return;
    if (static_cast<int>(cur.size()) + greedy_color_bound(g, cand) <=
        static_cast<int>(best.size()))
        return;
    std::vector<int> order;
    order.reserve(remaining);
    bits_for_each(cand, [&](int v) { order.push_back(v); });
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (static_cast<int>(cur.size() + order.size() - i) <= static_cast<int>(best.size()))
            break;
        Bits next(g.words, 0);
        for (int w = 0; w < g.words; ++w) next[w] = cand[w] & g.row(v)[w];
        // only vertices above v: keeps each clique enumerated once, in lex order
        next[v / 64] &= ~((1ull << (v % 64)) | ((1ull << (v % 64)) - 1));
        for (int w = 0; w < v / 64; ++w) next[w] = 0;
        cur.push_back(v);
        clique_extend(g, next, cur, best);
        cur.pop_back();
    }
}

}  // namespace detail

// Exact maximum clique; lexicographically least among maximum cliques.
inline std::vector<int> max_clique(const Graph& g) {
    detail::Bits all(g.words, 0);
    for (int v = 0; v < g.n; ++v) all[v / 64] |= 1ull << (v % 64);
    std::vector<int> cur, best;
    detail::clique_extend(g, all, cur, best);
    return best;
}

// DSATUR heuristic; proper but not necessarily optimal.
inline Coloring dsatur_coloring(const Graph& g) {
    Coloring col(g.n);
    std::vector<std::vector<bool>> seen(g.n);  // seen[v][c-1]: some neighbor has color c
    std::vector<int> sat(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (col.color[v] != 0) continue;
            if (pick == -1 || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 1;
        while (c <= static_cast<int>(seen[pick].size()) && seen[pick][c - 1]) ++c;
        col.color[pick] = c;
        g.for_each_neighbor(pick, [&](int u) {
            if (static_cast<int>(seen[u].size()) < c) seen[u].resize(c, false);
            if (!seen[u][c - 1]) {
                seen[u][c - 1] = true;
                ++sat[u];
            }
        });
    }
    return col;
}

namespace detail {

// Exact k-colorability by DSATUR-ordered backtracking.  `clique` is
// precolored 1..|clique| to break color symmetry.
inline bool kcolor_rec(const Graph& g, int k, std::vector<int>& col, int colored, int max_used) {
    if (colored == g.n) return true;
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < g.n; ++v) {
        if (col[v] != 0) continue;
        std::uint64_t mask = 0;  // bitmask of neighbor colors (k <= 40 < 64)
        g.for_each_neighbor(v, [&](int u) {
            if (col[u]) mask |= 1ull << (col[u] - 1);
        });
        int s = std::popcount(mask);
        if (s > pick_sat || (s == pick_sat && g.degree(v) > g.degree(pick)))
            pick = v, pick_sat = s;
    }
    std::uint64_t used = 0;
    g.for_each_neighbor(pick, [&](int u) {
        if (col[u]) used |= 1ull << (col[u] - 1);
    });
    int limit = std::min(k, max_used + 1);  // at most one brand-new color
    for (int c = 1; c <= limit; ++c) {
        if (used & (1ull << (c - 1))) continue;
        col[pick] = c;
        if (kcolor_rec(g, k, col, colored + 1, std::max(max_used, c))) return true;
        col[pick] = 0;
    }
    return false;
}

inline bool k_colorable(const Graph& g, const std::vector<int>& clique, int k,
                        std::vector<int>& out) {
    if (static_cast<int>(clique.size()) > k) return false;
    std::vector<int> col(g.n, 0);
    for (std::size_t i = 0; i < clique.size(); ++i) col[clique[i]] = static_cast<int>(i) + 1;
    if (kcolor_rec(g, k, col, static_cast<int>(clique.size()),
                   static_cast<int>(clique.size()))) {
        out = col;
        return true;
    }
    return false;
}

}  // namespace detail

// Exact chromatic number with an optimal proper coloring.  Clique lower
// bound, DSATUR upper bound, backtracking in between.
inline std::pair<int, Coloring> chromatic_number(const Graph& g, int cap = 40) {
    if (g.n > cap)
        throw std::invalid_argument("chromatic_number: vertex count exceeds exact-solve cap");
    Coloring best = dsatur_coloring(g);
    int ub = best.count();
    std::vector<int> clique = max_clique(g);
    for (int k = static_cast<int>(clique.size()); k < ub; ++k) {
        std::vector<int> col;
        if (detail::k_colorable(g, clique, k, col)) {
            best.color = std::move(col);
            return {k, best};
        }
    }
    return {ub, best};
}

// chi^(n): max chromatic number over induced subgraphs with clique number
// <= n.  Scans maximal such vertex sets; exponential in |V|.
inline int chi_upto(const Graph& g, int n, int cap = 14) {
    if (g.n > cap) throw std::invalid_argument("chi_upto: vertex count exceeds subset-scan cap");
    if (n <= 0 || g.n == 0) return 0;
    auto omega_of = [&](std::uint32_t mask) {
        std::vector<int> s;
        for (int v = 0; v < g.n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        return static_cast<int>(max_clique(induced(g, s)).size());
    };
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        if (omega_of(mask) > n) continue;
        bool maximal = true;
        for (int v = 0; v < g.n && maximal; ++v)
            if (!(mask & (1u << v)) && omega_of(mask | (1u << v)) <= n) maximal = false;
        if (!maximal) continue;
        std::vector<int> s;
        for (int v = 0; v < g.n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        best = std::max(best, chromatic_number(induced(g, s)).first);
    }
    return best;
}

}  // namespace chibound
