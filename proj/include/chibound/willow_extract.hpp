#pragma once
// Willow certificates for shift powers, read off the orientation itself.
//
// For X inside a shift power G_p, let T be the union of the unique directed
// paths realizing the G_p edges within X.  When that union is a forest, T
// plus a fresh root (one unit out-arc per component) is an oriented tree
// whose consistent paths between X-vertices are exactly the original
// directed paths: any consistently oriented tree path uses only base arcs,
// so by path uniqueness it IS the base path, with the same length.  Edges of
// G_p|X therefore come out as path sums =/= 0 mod p and non-edges as broken
// or =0 paths, i.e. the certificate verifies by construction.  The root adds
// no consistent path between components because nothing enters it.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oriented.hpp"
#include "chibound/willow.hpp"

namespace chibound {

namespace detail {

// The unique directed path from u to v as a list of arcs; empty if none.
inline std::vector<std::pair<int, int>> directed_path_arcs(
    const std::vector<std::vector<int>>& out, int u, int v) {
    std::vector<std::pair<int, int>> path;
    auto dfs = [&](auto&& self, int x) -> bool {
        if (x == v) return true;
        for (int w : out[x]) {
            path.push_back({x, w});
            if (self(self, w)) return true;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, u)) path.clear();
    return path;
}

}  // namespace detail

inline WillowCertificate extract_from_shift(const OrientedGraph& og, int p,
                                            std::vector<int> X) {
    if (p < 1) throw std::invalid_argument("extract_from_shift: p must be at least 1");
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    for (int v : X)
        if (v < 0 || v >= og.graph.n)
            throw std::invalid_argument("extract_from_shift: X vertex out of range");
    Graph gp = shift_power(og, p);  // also rejects non-unique paths

    std::vector<std::vector<int>> out(og.graph.n);
    for (auto [t, h] : og.arcs) out[t].push_back(h);
    std::vector<std::pair<int, int>> arcs;  // base arcs making up T, deduplicated
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) {
            if (!gp.has_edge(X[i], X[j])) continue;
            auto path = detail::directed_path_arcs(out, X[i], X[j]);
            if (path.empty()) path = detail::directed_path_arcs(out, X[j], X[i]);
            arcs.insert(arcs.end(), path.begin(), path.end());
        }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    // T's nodes: every path vertex plus every X vertex, even isolated ones.
    std::vector<int> verts = X;
    for (auto [t, h] : arcs) {
        verts.push_back(t);
        verts.push_back(h);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> node(og.graph.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) node[verts[i]] = static_cast<int>(i);

    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [t, h] : arcs) {
        int a = find(node[t]), b = find(node[h]);
        if (a == b)
            throw std::runtime_error("extract_from_shift: path union contains a cycle");
        parent[a] = b;
    }

    WillowCertificate cert;
    cert.modulus = p;
    cert.tree = WeightedOrientedTree(static_cast<int>(verts.size()) + 1);
    for (auto [t, h] : arcs) cert.tree.add_arc(node[t], node[h], 1);
    int root = static_cast<int>(verts.size());
    std::vector<char> attached(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {  // ascending: least node per component
        int r = find(static_cast<int>(i));
        if (!attached[r]) {
            attached[r] = 1;
            cert.tree.add_arc(root, static_cast<int>(i), 1);
        }
    }
    cert.embedding.resize(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) cert.embedding[i] = node[X[i]];

    auto [ok, witness] = verify_certificate(induced(gp, X), cert);
    (void)witness;
    if (!ok) throw std::logic_error("extract_from_shift: certificate failed verification");
    return cert;
}

}  // namespace chibound
