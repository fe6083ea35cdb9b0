#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "chibound/bounds.hpp"
#include "chibound/containment.hpp"
#include "chibound/exact.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {
namespace detail {

// All cliques of size k, as (vertex list, bitmask, anti-complete bitmask).
struct CliqueInfo {
    std::vector<int> verts;
    std::uint32_t mask = 0;
    std::uint32_t anti = 0;  // vertices outside with no edge to the clique
};

inline std::vector<CliqueInfo> cliques_of_size(const Graph& g, int k) {
    std::vector<CliqueInfo> out;
    std::vector<int> pool(g.n);
    for (int i = 0; i < g.n; ++i) pool[i] = i;
    for_each_subset(pool, k, [&](const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.has_edge(s[i], s[j])) return;
        CliqueInfo info;
        info.verts = s;
        for (int v : s) info.mask |= 1u << v;
        for (int u = 0; u < g.n; ++u) {
            if (info.mask & (1u << u)) continue;
            bool anti = true;
            for (int v : s)
                if (g.has_edge(u, v)) {
                    anti = false;
                    break;
                }
            if (anti) info.anti |= 1u << u;
        }
        out.push_back(info);
    });
    return out;
}

inline bool is_split_set(const Graph& g, const std::vector<int>& s) {
    std::vector<int> status(g.n, 0);  // 1 = in S
    for (int v : s) status[v] = 1;
    std::vector<int> complete, mixed;
    for (int u = 0; u < g.n; ++u) {
        if (status[u]) continue;
        int nbrs = 0;
        for (int v : s) nbrs += g.has_edge(u, v);
        if (nbrs == static_cast<int>(s.size()))
            complete.push_back(u);
        else if (nbrs > 0)
            mixed.push_back(u);
    }
    for (int v : complete)
        for (int u : mixed)
            if (!g.has_edge(u, v)) return false;
    return true;
}

inline bool is_fair_set(const Graph& g, const std::vector<int>& s, int t) {
    for (int u = 0; u < g.n; ++u) {
        bool in_s = false;
        int nbrs = 0;
        for (int v : s) {
            if (v == u) in_s = true;
            nbrs += g.has_edge(u, v);
        }
        if (in_s || nbrs == 0 || nbrs == static_cast<int>(s.size())) continue;
        std::vector<int> miss;
        for (int v : s)
            if (!g.has_edge(u, v)) miss.push_back(v);
        if (static_cast<int>(max_clique(induced(g, miss)).size()) < t - 1) return false;
    }
    return true;
}

}  // namespace detail

// True iff every ordered bipartition (M,N) of V(H) into nonempty parts admits
// either a (t-1)-clique in M with an N-vertex anti-complete to it, or a
// (t-1)-clique K in N together with an edge xy, x in M, y in N\K, both ends
// anti-complete to K.
inline bool is_tidy(const Graph& h, int t) {
    if (h.n < 2) throw std::invalid_argument("is_tidy: need at least two vertices");
    if (h.n > 20) throw std::invalid_argument("is_tidy: vertex count exceeds bipartition-scan cap");
    auto cliques = detail::cliques_of_size(h, std::max(0, t - 1));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (h.has_edge(u, v)) edges.emplace_back(u, v);

    std::uint32_t full = (h.n == 32) ? ~0u : ((1u << h.n) - 1);
    for (std::uint32_t m = 1; m < full; ++m) {
        std::uint32_t nmask = full & ~m;
        bool ok = false;
        for (const auto& c : cliques) {
            if ((c.mask & ~m) == 0 && (c.anti & nmask)) {  // U1
                ok = true;
                break;
            }
            if ((c.mask & ~nmask) == 0) {  // U2
                std::uint32_t xs = c.anti & m;
                std::uint32_t ys = c.anti & nmask & ~c.mask;
                for (const auto& [u, v] : edges) {
                    bool hit = ((xs >> u) & 1u) && ((ys >> v) & 1u);
                    hit = hit || (((xs >> v) & 1u) && ((ys >> u) & 1u));
                    if (hit) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// Locates an induced 2K_{2t-3} in a t-lollipop-free graph; its vertex set is
// a fair split.  Both the fairness and the split property are re-checked
// against their definitions rather than taken from the containment.
inline std::optional<std::vector<int>> find_fair_split(const Graph& g, int t) {
    if (t < 3) throw std::invalid_argument("find_fair_split: t must be >= 3");
    PatternSpec lollipop{PatternSpec::lollipop, t, 0};
    if (auto w = contains_induced(g, make_pattern(lollipop)))
        throw forbidden_pattern_error("find_fair_split: graph contains " + lollipop.to_string(), *w);

    auto w = contains_induced(g, make_pattern({PatternSpec::twok, 2 * t - 3, 0}));
    if (!w) return std::nullopt;
    std::vector<int> s = w->mapping;
    std::sort(s.begin(), s.end());
    if (!detail::is_split_set(g, s)) throw std::logic_error("find_fair_split: split check failed");
    if (!detail::is_fair_set(g, s, t)) throw std::logic_error("find_fair_split: fairness check failed");
    return s;
}

// Given a fair split S inside N(v), returns the homogeneous set S u Y u Z:
// Y = vertices mixed on S, Z = vertices reaching S while avoiding the
// S-complete vertices X.  If the final homogeneity check fails, the failure
// pinpoints a t-lollipop, which is reported as the witness.
inline std::vector<int> homogeneous_set_from_split(const Graph& g, int v, const std::vector<int>& s,
                                                   int t) {
    if (v < 0 || v >= g.n) throw std::out_of_range("homogeneous_set_from_split: bad vertex");
    for (int u : s) {
        if (u < 0 || u >= g.n) throw std::out_of_range("homogeneous_set_from_split: bad split vertex");
        if (u == v || !g.has_edge(v, u))
            throw std::invalid_argument("homogeneous_set_from_split: S not inside N(v)");
    }
    if (!detail::is_split_set(g, s)) throw std::invalid_argument("homogeneous_set_from_split: S is not a split");
    if (!detail::is_fair_set(g, s, t)) throw std::invalid_argument("homogeneous_set_from_split: S is not fair");

    std::vector<int> role(g.n, 0);  // 1 = S, 2 = X, 3 = Y
    for (int u : s) role[u] = 1;
    for (int u = 0; u < g.n; ++u) {
        if (role[u]) continue;
        int nbrs = 0;
        for (int w : s) nbrs += g.has_edge(u, w);
        if (nbrs == static_cast<int>(s.size()))
            role[u] = 2;
        else if (nbrs > 0)
            role[u] = 3;
    }

    // BFS from S in G\X; parents let us reconstruct the offending path later.
    std::vector<int> parent(g.n, -1), dist(g.n, -1);
    std::queue<int> bfs;
    for (int u : s) {
        dist[u] = 0;
        bfs.push(u);
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        g.for_each_neighbor(u, [&](int w) {
            if (role[w] == 2 || dist[w] >= 0) return;
            dist[w] = dist[u] + 1;
            parent[w] = u;
            bfs.push(w);
        });
    }

    std::vector<int> result;
    for (int u = 0; u < g.n; ++u)
        if (role[u] == 1 || role[u] == 3 || (role[u] == 0 && dist[u] >= 0)) result.push_back(u);

    // Direct homogeneity check; a mixed outside vertex must lie in X and miss
    // some Z-vertex, and the proof turns that miss into a t-lollipop.
    std::vector<bool> in_res(g.n, false);
    for (int u : result) in_res[u] = true;
    for (int x = 0; x < g.n; ++x) {
        if (in_res[x]) continue;
        int nbrs = 0;
        for (int u : result) nbrs += g.has_edge(x, u);
        if (nbrs == 0 || nbrs == static_cast<int>(result.size())) continue;
        // x is mixed: reconstruct the lollipop K u {x, z', z}.
        int zbest = -1;
        for (int z = 0; z < g.n; ++z)
            if (role[z] == 0 && dist[z] > 0 && !g.has_edge(x, z) && (zbest < 0 || dist[z] < dist[zbest]))
                zbest = z;
        if (zbest >= 0 && role[x] == 2) {
            int zp = parent[zbest];
            int y = zbest;
            while (y >= 0 && role[y] != 3) y = parent[y];
            if (y >= 0) {
                std::vector<int> miss;
                for (int u : s)
                    if (!g.has_edge(y, u)) miss.push_back(u);
                std::vector<int> clique = max_clique(induced(g, miss));
                if (static_cast<int>(clique.size()) >= t - 1) {
                    std::vector<int> mapping{x};
                    for (int i = 0; i < t - 1; ++i) mapping.push_back(miss[clique[i]]);
                    mapping.push_back(zp);
                    mapping.push_back(zbest);
                    Graph pat = make_pattern({PatternSpec::lollipop, t, 0});
                    bool induced_copy = true;
                    for (int i = 0; i < pat.n && induced_copy; ++i)
                        for (int j = i + 1; j < pat.n; ++j)
                            if (pat.has_edge(i, j) != g.has_edge(mapping[i], mapping[j])) {
                                induced_copy = false;
                                break;
                            }
                    if (induced_copy)
                        throw forbidden_pattern_error(
                            "homogeneous_set_from_split: graph contains lollipop:" + std::to_string(t),
                            Witness{Witness::Kind::containment, mapping});
                }
            }
        }
        throw std::logic_error("homogeneous_set_from_split: result not homogeneous");
    }
    return result;
}

}  // namespace chibound
