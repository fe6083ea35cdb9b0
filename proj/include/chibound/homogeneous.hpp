#pragma once

#include <algorithm>
#include <optional>

#include "chibound/graph.hpp"

namespace chibound {
namespace detail {

// Minimal module containing `seed`: repeatedly absorb splitters (vertices
// with both a neighbor and a non-neighbor inside the set).
inline std::vector<bool> module_closure(const Graph& g, std::vector<bool> in) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.n && !grew; ++v) {
            if (in[v]) continue;
            bool has_nbr = false, has_non = false;
            for (int u = 0; u < g.n; ++u) {
                if (!in[u] || u == v) continue;
                (g.has_edge(u, v) ? has_nbr : has_non) = true;
                if (has_nbr && has_non) break;
            }
            if (has_nbr && has_non) {
                in[v] = true;
                grew = true;
            }
        }
    }
    return in;
}

inline int set_size(const std::vector<bool>& in) {
    return static_cast<int>(std::count(in.begin(), in.end(), true));
}

}  // namespace detail

// Lexicographically least inclusion-maximal homogeneous set X with
// 1 < |X| < |V|; absent iff G is prime.  Greedy growth from the minimal
// module of each vertex pair suffices: if growth from a pair inside the
// lex-least maximal set ever deviated, the deviation would add a smaller
// vertex and produce a lex-smaller maximal set — a contradiction.
inline std::optional<std::vector<int>> find_homogeneous_set(const Graph& g) {
    std::optional<std::vector<int>> best;
    auto consider = [&](const std::vector<bool>& in) {
        std::vector<int> s;
        for (int v = 0; v < g.n; ++v)
            if (in[v]) s.push_back(v);
        if (!best || std::lexicographical_compare(s.begin(), s.end(), best->begin(), best->end()))
            best = std::move(s);
    };
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            std::vector<bool> in(g.n, false);
            in[a] = in[b] = true;
            in = detail::module_closure(g, in);
            if (detail::set_size(in) >= g.n) continue;
            bool grew = true;
            while (grew) {
                grew = false;
                for (int v = 0; v < g.n; ++v) {
                    if (in[v]) continue;
                    std::vector<bool> cand = in;
                    cand[v] = true;
                    cand = detail::module_closure(g, cand);
                    if (detail::set_size(cand) < g.n) {
                        in = std::move(cand);
                        grew = true;
                        break;
                    }
                }
            }
            consider(in);
        }
    return best;
}

// Join of disjoint blocks along `quotient`: block i replaces quotient
// vertex i, cross edges follow the quotient, inner edges follow the block.
// Vertices are the blocks concatenated in quotient order.
inline Graph blowup(const Graph& quotient, const std::vector<Graph>& blocks) {
    if (static_cast<int>(blocks.size()) != quotient.n)
        throw std::invalid_argument("blowup: one block per quotient vertex required");
    std::vector<int> offset(quotient.n + 1, 0);
    for (int i = 0; i < quotient.n; ++i) offset[i + 1] = offset[i] + blocks[i].n;
    Graph g(offset[quotient.n]);
    for (int i = 0; i < quotient.n; ++i)
        for (int u = 0; u < blocks[i].n; ++u)
            for (int v = u + 1; v < blocks[i].n; ++v)
                if (blocks[i].has_edge(u, v)) g.add_edge(offset[i] + u, offset[i] + v);
    for (int i = 0; i < quotient.n; ++i)
        for (int j = i + 1; j < quotient.n; ++j)
            if (quotient.has_edge(i, j))
                for (int u = 0; u < blocks[i].n; ++u)
                    for (int v = 0; v < blocks[j].n; ++v)
                        g.add_edge(offset[i] + u, offset[j] + v);
    return g;
}

// Product coloring of blowup(quotient, blocks): pair (quotient color, block
// color), relabeled to 1..k in order of first appearance.  Uses at most
// (#quotient colors) * (max #block colors) colors.
inline Coloring compose_coloring_by_substitution(const Graph& quotient, const Coloring& qcol,
                                                 const std::vector<Graph>& blocks,
                                                 const std::vector<Coloring>& block_cols) {
    if (!qcol.proper(quotient))
        throw std::invalid_argument("compose_coloring_by_substitution: improper quotient coloring");
    if (blocks.size() != block_cols.size() || static_cast<int>(blocks.size()) != quotient.n)
        throw std::invalid_argument("compose_coloring_by_substitution: size mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!block_cols[i].proper(blocks[i]))
            throw std::invalid_argument("compose_coloring_by_substitution: improper block coloring");

    Graph g = blowup(quotient, blocks);
    Coloring out(g.n);
    std::vector<std::pair<int, int>> seen;
    int next = 0;
    for (int i = 0; i < quotient.n; ++i)
        for (int u = 0; u < blocks[i].n; ++u) {
            std::pair<int, int> key{qcol.color[i], block_cols[i].color[u]};
            auto it = std::find(seen.begin(), seen.end(), key);
            if (it == seen.end()) {
                seen.push_back(key);
                it = std::prev(seen.end());
            }
            out.color[next++] = static_cast<int>(it - seen.begin()) + 1;
        }
    if (!out.proper(g))
        throw std::logic_error("compose_coloring_by_substitution: composed coloring improper");
    return out;
}

}  // namespace chibound
