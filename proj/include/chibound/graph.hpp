#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chibound {

// Undirected simple graph on vertices 0..n-1.  Adjacency is a dense bitset,
// one row per vertex; symmetry and irreflexivity are maintained by the
// mutators, never assumed from callers.
struct Graph {
    int n = 0;
    int words = 0;                // 64-bit words per adjacency row
    std::vector<uint64_t> adj;    // n * words

    Graph() = default;
    explicit Graph(int n_) : n(n_), words((n_ + 63) / 64), adj(static_cast<size_t>(n_) * words, 0) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
    }

    const uint64_t* row(int u) const { return adj.data() + static_cast<size_t>(u) * words; }
    uint64_t* row(int u) { return adj.data() + static_cast<size_t>(u) * words; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v) {
        check_pair(u, v);
        row(u)[v >> 6] |= uint64_t{1} << (v & 63);
        row(v)[u >> 6] |= uint64_t{1} << (u & 63);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        row(u)[v >> 6] &= ~(uint64_t{1} << (v & 63));
        row(v)[u >> 6] &= ~(uint64_t{1} << (u & 63));
    }

    int degree(int u) const {
        int d = 0;
        for (int w = 0; w < words; ++w) d += std::popcount(row(u)[w]);
        return d;
    }
    long long edge_count() const {
        long long twice = 0;
        for (int u = 0; u < n; ++u) twice += degree(u);
        return twice / 2;
    }

    template <class F>
    void for_each_neighbor(int u, F&& f) const {
        const uint64_t* r = row(u);
        for (int w = 0; w < words; ++w) {
            uint64_t x = r[w];
            while (x) {
                int b = std::countr_zero(x);
                f(w * 64 + b);
                x &= x - 1;
            }
        }
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for_each_neighbor(u, [&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

 private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop");
    }
};

inline Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// Induced subgraph; vertices relabeled by ascending original index.
inline Graph induced(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    for (int v : s)
        if (v < 0 || v >= g.n) throw std::out_of_range("induced: vertex not in graph");
    Graph h(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n + b.n);
    for (int u = 0; u < a.n; ++u)
        for (int v = u + 1; v < a.n; ++v)
            if (a.has_edge(u, v)) h.add_edge(u, v);
    for (int u = 0; u < b.n; ++u)
        for (int v = u + 1; v < b.n; ++v)
            if (b.has_edge(u, v)) h.add_edge(a.n + u, a.n + v);
    return h;
}

// Substitute H for vertex v: remove v, add H, join all of H to N_G(v).
// Result vertex order: V(G)-v by ascending index, then V(H).
inline Graph substitute(const Graph& g, int v, const Graph& h) {
    if (v < 0 || v >= g.n) throw std::out_of_range("substitute: vertex out of range");
    std::vector<int> keep;
    for (int u = 0; u < g.n; ++u)
        if (u != v) keep.push_back(u);
    Graph out(static_cast<int>(keep.size()) + h.n);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    int base = static_cast<int>(keep.size());
    for (int x = 0; x < h.n; ++x)
        for (int y = x + 1; y < h.n; ++y)
            if (h.has_edge(x, y)) out.add_edge(base + x, base + y);
    for (size_t i = 0; i < keep.size(); ++i)
        if (g.has_edge(keep[i], v))
            for (int x = 0; x < h.n; ++x) out.add_edge(static_cast<int>(i), base + x);
    return out;
}

// Vertex coloring with positive colors.  color[v] >= 1 once assigned.
// Connected components as sorted vertex lists, ordered by least vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v}, verts;
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            g.for_each_neighbor(u, [&](int w) {
                if (comp[w] < 0) {
                    comp[w] = comp[u];
                    stack.push_back(w);
                }
            });
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n) : color(n, 0) {}

    int count() const {
        std::vector<int> seen(color.begin(), color.end());
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        return static_cast<int>(seen.size());
    }
    bool proper(const Graph& g) const {
        if (static_cast<int>(color.size()) != g.n) return false;
        for (int v : color)
            if (v < 1) return false;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if (g.has_edge(u, v) && color[u] == color[v]) return false;
        return true;
    }
};

enum class BlockTag { k4_free, triangle_free, stable, perfect, unconstrained };

inline const char* to_string(BlockTag t) {
    switch (t) {
        case BlockTag::k4_free: return "K4-free";
        case BlockTag::triangle_free: return "triangle-free";
        case BlockTag::stable: return "stable";
        case BlockTag::perfect: return "perfect";
        default: return "unconstrained";
    }
}

struct VertexPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<BlockTag> tags;

    bool covers(const Graph& g) const {
        std::vector<int> seen(g.n, 0);
        for (const auto& b : blocks)
            for (int v : b) {
                if (v < 0 || v >= g.n || seen[v]) return false;
                seen[v] = 1;
            }
        return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
    }
};

// Injective vertex map, either an induced embedding (pattern -> host) or the
// offending object of a failed verification.
struct Witness {
    enum class Kind { containment, violation };
    Kind kind = Kind::containment;
    std::vector<int> mapping;
};

}  // namespace chibound
