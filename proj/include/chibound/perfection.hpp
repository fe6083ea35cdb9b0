#pragma once

#include <optional>
#include <utility>

#include "chibound/graph.hpp"
#include "chibound/exact.hpp"

namespace chibound {
namespace detail {

// If the vertices in `mask` induce a cycle, return them in cycle order
// starting at the least vertex, second vertex the smaller neighbor.
inline std::optional<std::vector<int>> induced_cycle_order(const Graph& g, std::uint32_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < 32 && (mask >> v); ++v)
        if (mask & (1u << v)) verts.push_back(v);
    int k = static_cast<int>(verts.size());
    if (k < 3) return std::nullopt;
    for (int v : verts) {
        int deg = 0;
        for (int u : verts)
            if (u != v && g.has_edge(u, v)) ++deg;
        if (deg != 2) return std::nullopt;
    }
    // 2-regular: a single cycle iff a walk from the least vertex visits all
    std::vector<int> order{verts[0]};
    int prev = -1, cur = verts[0];
    do {
        int next = -1;
        for (int u : verts)
            if (u != cur && u != prev && g.has_edge(u, cur)) {
                if (next == -1 || u < next) next = u;
                if (static_cast<int>(order.size()) > 1) break;  // only first step picks min
            }
        prev = cur;
        cur = next;
        if (cur != verts[0]) order.push_back(cur);
    } while (cur != verts[0]);
    if (static_cast<int>(order.size()) != k) return std::nullopt;
    return order;
}

}  // namespace detail

// Strong-perfect-graph check by enumeration: perfect iff no induced odd
// cycle of length >= 5 in G or in its complement.  Witness = the offending
// hole/antihole in cycle order.
inline std::pair<bool, std::optional<Witness>> is_perfect(const Graph& g, int cap = 16) {
    if (g.n > cap) throw std::invalid_argument("is_perfect: vertex count exceeds enumeration cap");
    Graph co = complement(g);
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        if (std::popcount(mask) < 5 || std::popcount(mask) % 2 == 0) continue;
        if (auto hole = detail::induced_cycle_order(g, mask))
            return {false, Witness{Witness::Kind::violation, *hole}};
        if (auto antihole = detail::induced_cycle_order(co, mask))
            return {false, Witness{Witness::Kind::violation, *antihole}};
    }
    return {true, std::nullopt};
}

// Complete multipartite iff the complement is a disjoint union of cliques
// (equivalently, no induced K2 u K1).
inline bool is_complete_multipartite(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            // non-adjacent u,v must have identical closed non-neighborhoods
            for (int w = 0; w < g.n; ++w) {
                if (w == u || w == v) continue;
                if (g.has_edge(w, u) != g.has_edge(w, v)) return false;
            }
        }
    return true;
}

// Partition into at most k blocks each inducing a perfect graph, or absent.
// Brute force with per-subset perfection precomputed (superset closure).
inline std::optional<VertexPartition> is_k_perfect(const Graph& g, int k, int cap = 12) {
    if (g.n > cap) throw std::invalid_argument("is_k_perfect: vertex count exceeds partition cap");
    if (k < 1) return std::nullopt;
    if (g.n == 0) return VertexPartition{{}, {}};

    const std::uint32_t full = (1u << g.n) - 1;
    Graph co = complement(g);
    // imperfect[s] = subset s contains an odd hole or antihole
    std::vector<bool> imperfect(full + 1, false);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (std::popcount(mask) >= 5 && std::popcount(mask) % 2 == 1)
            imperfect[mask] = detail::induced_cycle_order(g, mask).has_value() ||
                              detail::induced_cycle_order(co, mask).has_value();
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (!imperfect[mask])
            for (int v = 0; v < g.n; ++v)
                if ((mask & (1u << v)) && imperfect[mask & ~(1u << v)]) {
                    imperfect[mask] = true;
                    break;
                }

    std::vector<std::uint32_t> blocks;
    // vertex v joins an existing block or opens block #used (symmetry break)
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::uint32_t with = blocks[b] | (1u << v);
            if (imperfect[with]) continue;
            blocks[b] = with;
            if (self(self, v + 1)) return true;
            blocks[b] &= ~(1u << v);
        }
        if (static_cast<int>(blocks.size()) < k) {
            blocks.push_back(1u << v);
            if (self(self, v + 1)) return true;
            blocks.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    VertexPartition part;
    for (std::uint32_t b : blocks) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (b & (1u << v)) verts.push_back(v);
        part.blocks.push_back(std::move(verts));
        part.tags.push_back(BlockTag::perfect);
    }
    return part;
}

}  // namespace chibound
