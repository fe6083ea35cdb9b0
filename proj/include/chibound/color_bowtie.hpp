#pragma once

#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "chibound/bounds.hpp"
#include "chibound/containment.hpp"
#include "chibound/exact.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {
namespace detail {

// Special block (the possibly-K4-free one, may be empty) plus triangle-free
// blocks.  Keeping the special slot explicit makes component merging and the
// edge-restoration argument mechanical.
struct BowtiePartition {
    std::vector<int> special;
    bool special_k4_free = false;  // else merely triangle-free
    std::vector<std::vector<int>> rest;
};

inline std::optional<std::pair<int, int>> edge_in_no_triangle(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (!g.has_edge(u, v)) continue;
            bool in_triangle = false;
            for (int w = 0; w < g.n && !in_triangle; ++w)
                in_triangle = w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w);
            if (!in_triangle) return std::make_pair(u, v);
        }
    return std::nullopt;
}

inline BowtiePartition bowtie_partition_rec(const Graph& g) {
    BowtiePartition part;
    if (g.n == 0) return part;

    std::vector<int> clique = max_clique(g);
    int w = static_cast<int>(clique.size());
    if (w < 4) {
        for (int v = 0; v < g.n; ++v) part.special.push_back(v);
        part.special_k4_free = true;
        return part;
    }

    // An edge in no triangle can be deleted: restoring it cannot create a
    // triangle inside a block, so the deleted graph's partition carries over.
    if (auto e = edge_in_no_triangle(g)) {
        Graph h = g;
        h.remove_edge(e->first, e->second);
        return bowtie_partition_rec(h);
    }

    auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& verts : comps) {
            BowtiePartition sub = bowtie_partition_rec(induced(g, verts));
            for (int local : sub.special) part.special.push_back(verts[local]);
            part.special_k4_free = part.special_k4_free || sub.special_k4_free;
            for (std::size_t j = 0; j < sub.rest.size(); ++j) {
                if (part.rest.size() <= j) part.rest.emplace_back();
                for (int local : sub.rest[j]) part.rest[j].push_back(verts[local]);
            }
        }
        for (auto& b : part.rest) std::sort(b.begin(), b.end());
        std::sort(part.special.begin(), part.special.end());
        return part;
    }

    // Connected, every edge in a triangle, omega >= 4: every vertex is within
    // distance 2 of the maximum clique, the far layer B is triangle-free, and
    // the near layer splits into stable sets S_x and T_{x,y,z}.
    std::vector<int> dist(g.n, -1);
    std::queue<int> bfs;
    for (int v : clique) {
        dist[v] = 0;
        bfs.push(v);
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        g.for_each_neighbor(u, [&](int x) {
            if (dist[x] < 0) {
                dist[x] = dist[u] + 1;
                bfs.push(x);
            }
        });
    }
    for (int v = 0; v < g.n; ++v)
        if (dist[v] < 0 || dist[v] > 2)
            throw std::logic_error("bowtie_partition: vertex beyond distance 2 from the maximum clique");

    std::vector<bool> in_clique(g.n, false);
    for (int v : clique) in_clique[v] = true;
    std::vector<int> b_verts;
    for (int v = 0; v < g.n; ++v)
        if (dist[v] == 2) b_verts.push_back(v);
    if (static_cast<int>(max_clique(induced(g, b_verts)).size()) > 2)
        throw std::logic_error("bowtie_partition: far layer contains a triangle");

    std::vector<bool> assigned(g.n, false);
    std::vector<std::vector<int>> stable_blocks;
    auto check_stable = [&](const std::vector<int>& block) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (g.has_edge(block[i], block[j]))
                    throw std::logic_error("bowtie_partition: block is not stable");
    };

    // S_x u {x}: the vertices whose only non-neighbor in the clique is x.
    for (int x : clique) {
        std::vector<int> block{x};
        assigned[x] = true;
        for (int a = 0; a < g.n; ++a) {
            if (assigned[a] || in_clique[a] || dist[a] != 1) continue;
            bool complete = true;
            for (int v : clique)
                if (v != x && !g.has_edge(a, v)) {
                    complete = false;
                    break;
                }
            if (complete && !g.has_edge(a, x)) {
                block.push_back(a);
                assigned[a] = true;
            }
        }
        std::sort(block.begin(), block.end());
        check_stable(block);
        stable_blocks.push_back(std::move(block));
    }

    // T_{x,y,z}: adjacent to z, anti-complete to {x,y}; two adjacent members
    // would close a bowtie with x, y, z.
    for (std::size_t xi = 0; xi < clique.size(); ++xi)
        for (std::size_t yi = xi + 1; yi < clique.size(); ++yi)
            for (std::size_t zi = 0; zi < clique.size(); ++zi) {
                if (zi == xi || zi == yi) continue;
                int x = clique[xi], y = clique[yi], z = clique[zi];
                std::vector<int> block;
                for (int a = 0; a < g.n; ++a) {
                    if (assigned[a] || dist[a] != 1) continue;
                    if (g.has_edge(a, z) && !g.has_edge(a, x) && !g.has_edge(a, y)) {
                        block.push_back(a);
                        assigned[a] = true;
                    }
                }
                if (block.empty()) continue;
                check_stable(block);
                stable_blocks.push_back(std::move(block));
            }

    for (int v = 0; v < g.n; ++v)
        if (dist[v] == 1 && !assigned[v])
            throw std::logic_error("bowtie_partition: near layer vertex missed");

    part.special = b_verts;
    part.special_k4_free = false;
    for (std::size_t i = 0; i < stable_blocks.size(); i += 2) {
        std::vector<int> merged = stable_blocks[i];
        if (i + 1 < stable_blocks.size())
            merged.insert(merged.end(), stable_blocks[i + 1].begin(), stable_blocks[i + 1].end());
        std::sort(merged.begin(), merged.end());
        part.rest.push_back(std::move(merged));
    }
    return part;
}

}  // namespace detail

// Partitions a bowtie-free graph into one block of clique number <= 3 and
// triangle-free blocks, at most ceil((w+3*binom(w,3))/2)+1 blocks in total.
inline VertexPartition bowtie_partition(const Graph& g) {
    PatternSpec spec{PatternSpec::bowtie, 0, 0};
    if (auto w = contains_induced(g, make_pattern(spec)))
        throw forbidden_pattern_error("bowtie_partition: graph contains a bowtie", *w);

    detail::BowtiePartition raw = detail::bowtie_partition_rec(g);
    VertexPartition out;
    if (!raw.special.empty()) {
        out.blocks.push_back(raw.special);
        out.tags.push_back(raw.special_k4_free ? BlockTag::k4_free : BlockTag::triangle_free);
    }
    for (auto& b : raw.rest) {
        out.blocks.push_back(std::move(b));
        out.tags.push_back(BlockTag::triangle_free);
    }

    if (!out.covers(g)) throw std::logic_error("bowtie_partition: blocks do not partition the graph");
    int w = static_cast<int>(max_clique(g).size());
    if (static_cast<long long>(out.blocks.size()) > bowtie_f(w))
        throw std::logic_error("bowtie_partition: block budget exceeded");
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        int block_omega = static_cast<int>(max_clique(induced(g, out.blocks[i])).size());
        int cap = out.tags[i] == BlockTag::k4_free ? 3 : 2;
        if (block_omega > cap) throw std::logic_error("bowtie_partition: block violates its tag");
    }
    return out;
}

// Exact coloring per partition block with disjoint palettes.
inline std::pair<Coloring, BoundReport> color_bowtie_free(const Graph& g) {
    VertexPartition part = bowtie_partition(g);

    Coloring col(g.n);
    int palette = 0;
    long long m_obs = 0;
    for (const auto& block : part.blocks) {
        if (block.empty()) continue;
        Coloring pc = chromatic_number(induced(g, block)).second;
        m_obs = std::max(m_obs, static_cast<long long>(pc.count()));
        for (std::size_t i = 0; i < block.size(); ++i) col.color[block[i]] = palette + pc.color[i];
        palette += pc.count();
    }
    if (!col.proper(g)) throw std::logic_error("color_bowtie_free: improper coloring");

    int w = static_cast<int>(max_clique(g).size());
    BoundReport report;
    report.bound_name = "bowtie_f";
    report.inputs = {{"omega", w}, {"m", m_obs}};
    report.bound_value = bowtie_f(w) * std::max(m_obs, 1ll);
    report.achieved = col.count();
    detail::check_bound(report);
    return {std::move(col), report};
}

}  // namespace chibound
