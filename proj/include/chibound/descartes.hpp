#pragma once
// Descartes-style triangle-free graphs of chromatic number k, oriented so the
// acyclic-orientation contract (A1-A4) holds.
//
// Levels 1 and 2 are K1 and a single arc.  Level 3 is an oriented pentagon:
// seeding the recursion with the odd cycle (as Descartes did) keeps level 4 at
// 6448 vertices, where the K2-based recursion would need ~18M.  Level k+1
// takes a stable set S of size k(n_k - 1) + 1 and one copy of level k per
// n_k-subset of S, perfectly matched into the subset.  Matching arcs point at
// S; copy-internal arcs keep the copy's own orientation; phi gives copies
// their recursive colors and S the fresh color k+1.
//
// Why chi = k+1: phi is proper, and with only k colors some color class inside
// S would contain n_k vertices (pigeonhole on |S|), forcing the copy matched
// to those vertices down to k-1 colors.  Why triangle-free: copies are
// triangle-free, S is stable, and a copy vertex has exactly one S-neighbor.
// Why unique paths: S has no out-arcs and copies are pairwise non-adjacent,
// so every directed path is a copy-internal path plus at most one matching
// arc.
//
// Levels <= 3 are re-verified exactly before return.  Level 4 exceeds the
// exact-chi cap, so it gets the scalable checks only: A2-A4, phi proper (which
// certifies chi <= 4), and triangle-freeness; chi >= 4 rests on the pigeonhole
// argument above.

#include <stdexcept>
#include <vector>

#include "chibound/bounds.hpp"
#include "chibound/oriented.hpp"

namespace chibound {

namespace detail {

// Next n_k-subset of {0..s-1} in lexicographic order; false when exhausted.
inline bool next_subset(std::vector<int>& a, int s) {
    int k = static_cast<int>(a.size());
    for (int i = k - 1; i >= 0; --i) {
        if (a[i] < s - (k - i)) {
            ++a[i];
            for (int j = i + 1; j < k; ++j) a[j] = a[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline OrientedGraph descartes_level(int k) {
    OrientedGraph og;
    if (k == 1) {
        og.graph = Graph(1);
        og.phi.color = {1};
        return og;
    }
    if (k == 2) {
        og.graph = Graph(2);
        og.graph.add_edge(0, 1);
        og.arcs = {{0, 1}};
        og.phi.color = {1, 2};
        return og;
    }
    if (k == 3) {
        // Pentagon with sources 2,4 and sinks 1,3; 4->0->1 is the 3-vertex path.
        og.graph = Graph(5);
        for (int v = 0; v < 5; ++v) og.graph.add_edge(v, (v + 1) % 5);
        og.arcs = {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}};
        og.phi.color = {1, 2, 1, 2, 3};
        return og;
    }
    OrientedGraph base = descartes_level(k - 1);
    int nb = base.graph.n;
    int s = (k - 1) * (nb - 1) + 1;  // stable-set size forcing the pigeonhole
    long long copies = binom(s, nb);
    long long total = s + copies * nb;
    og.graph = Graph(static_cast<int>(total));
    og.phi.color.assign(static_cast<size_t>(total), k);  // S keeps color k
    std::vector<int> subset(nb);
    for (int i = 0; i < nb; ++i) subset[i] = i;
    int at = s;  // vertices 0..s-1 are S; copies follow in subset order
    do {
        for (int i = 0; i < nb; ++i) og.phi.color[at + i] = base.phi.color[i];
        for (auto [t, h] : base.arcs) {
            og.graph.add_edge(at + t, at + h);
            og.arcs.push_back({at + t, at + h});
        }
        for (int i = 0; i < nb; ++i) {  // i-th copy vertex to i-th subset element
            og.graph.add_edge(at + i, subset[i]);
            og.arcs.push_back({at + i, subset[i]});
        }
        at += nb;
    } while (next_subset(subset, s));
    return og;
}

inline bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = 0; w < g.words; ++w)
                if (g.row(u)[w] & g.row(v)[w]) return true;
        }
    return false;
}

}  // namespace detail

inline OrientedGraph build_descartes(int k) {
    if (k < 1 || k > 4) throw std::out_of_range("build_descartes: k must be in 1..4");
    OrientedGraph og = detail::descartes_level(k);
    validate_oriented(og);
    if (detail::has_triangle(og.graph)) throw std::logic_error("build_descartes: triangle");
    if (k <= 3) {
        if (!verify_acyclic_properties(og, k).all())
            throw std::logic_error("build_descartes: contract violation");
        return og;
    }
    // Level 4: validate_oriented already certified phi proper (so chi <= 4);
    // check A2-A4 directly at scale.
    detail::PathTable table = detail::path_table(og);
    if (!table.unique_paths()) throw std::logic_error("build_descartes: duplicate paths");
    std::vector<int> order = detail::topological_order(og);
    std::vector<std::vector<int>> out(og.graph.n);
    for (auto [t, h] : og.arcs) out[t].push_back(h);
    std::vector<int> lp(og.graph.n, 1);
    int longest = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (int w : out[*it]) lp[*it] = std::max(lp[*it], 1 + lp[w]);
        longest = std::max(longest, lp[*it]);
    }
    if (longest < k) throw std::logic_error("build_descartes: directed path too short");
    for (int u = 0; u < og.graph.n; ++u)
        for (const auto& e : table.entries[u])
            if (og.phi.color[u] == og.phi.color[e.target])
                throw std::logic_error("build_descartes: phi repeats along a path");
    return og;
}

}  // namespace chibound
