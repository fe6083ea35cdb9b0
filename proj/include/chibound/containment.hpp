#pragma once

#include <optional>

#include "chibound/graph.hpp"

namespace chibound {
namespace detail {

inline bool embed_rec(const Graph& g, const Graph& h, int i, std::vector<int>& phi,
                      std::vector<bool>& used) {
    if (i == h.n) return true;
    for (int v = 0; v < g.n; ++v) {
        if (used[v] || g.degree(v) < h.degree(i)) continue;
        bool ok = true;
        for (int j = 0; j < i; ++j)
            if (g.has_edge(phi[j], v) != h.has_edge(j, i)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        phi[i] = v;
        used[v] = true;
        if (embed_rec(g, h, i + 1, phi, used)) return true;
        used[v] = false;
    }
    return false;
}

}  // namespace detail

// Induced-subgraph embedding of H into G; first found under lexicographic
// branching (H vertices in index order, G candidates ascending), so the
// witness mapping is deterministic.
inline std::optional<Witness> contains_induced(const Graph& g, const Graph& h) {
    if (h.n > g.n) return std::nullopt;
    std::vector<int> phi(h.n, -1);
    std::vector<bool> used(g.n, false);
    if (!detail::embed_rec(g, h, 0, phi, used)) return std::nullopt;
    return Witness{Witness::Kind::containment, phi};
}

}  // namespace chibound
