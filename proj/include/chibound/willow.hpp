#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chibound/graph.hpp"

namespace chibound {

// Oriented tree with positive integer arc weights.  A weight-w arc stands for
// a directed path of w unit arcs, so the "length" of a consistently oriented
// tree path is the sum of the weights along it.
struct TreeArc {
    int tail = 0;
    int head = 0;
    int weight = 1;
    auto operator<=>(const TreeArc&) const = default;
};

struct WeightedOrientedTree {
    int nodes = 0;
    std::vector<TreeArc> arcs;

    WeightedOrientedTree() = default;
    explicit WeightedOrientedTree(int m) : nodes(m) {}

    void add_arc(int tail, int head, int weight) { arcs.push_back({tail, head, weight}); }
};

// Invariants: at least one node, exactly nodes-1 arcs, connected as an
// undirected graph (which with nodes-1 arcs also rules out parallel arcs and
// cycles), every weight >= 1.
inline void validate_tree(const WeightedOrientedTree& t) {
    if (t.nodes <= 0) throw std::invalid_argument("tree needs at least one node");
    if (static_cast<int>(t.arcs.size()) != t.nodes - 1)
        throw std::invalid_argument("tree must have exactly nodes-1 arcs");
    std::vector<std::vector<int>> nbr(t.nodes);
    for (const TreeArc& a : t.arcs) {
        if (a.tail < 0 || a.tail >= t.nodes || a.head < 0 || a.head >= t.nodes)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.tail == a.head) throw std::invalid_argument("arc endpoints must differ");
        if (a.weight < 1) throw std::invalid_argument("arc weights must be positive");
        nbr[a.tail].push_back(a.head);
        nbr[a.head].push_back(a.tail);
    }
    std::vector<char> seen(t.nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : nbr[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("tree must be connected");
}

// lengths[a][b] = weight sum of the directed path a -> b, or -1 when the
// unique undirected tree path is not consistently oriented.  lengths[a][a] = 0.
inline std::vector<std::vector<long long>> directed_path_lengths(const WeightedOrientedTree& t) {
    std::vector<std::vector<std::pair<int, int>>> out(t.nodes);
    for (const TreeArc& a : t.arcs) out[a.tail].push_back({a.head, a.weight});
    std::vector<std::vector<long long>> len(t.nodes, std::vector<long long>(t.nodes, -1));
    std::vector<int> stack;
    for (int s = 0; s < t.nodes; ++s) {
        len[s][s] = 0;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, w] : out[u])
                if (len[s][v] < 0) {
                    len[s][v] = len[s][u] + w;
                    stack.push_back(v);
                }
        }
    }
    return len;
}

// A willow certificate: an oriented tree, an injective embedding of the graph
// vertices into its nodes, and a modulus.  The certified graph joins u and v
// exactly when the tree has a directed path between their images whose length
// is not a multiple of the modulus.
struct WillowCertificate {
    WeightedOrientedTree tree;
    std::vector<int> embedding;  // graph vertex -> tree node
    int modulus = 1;
};

namespace detail {

inline void check_embedding(const WillowCertificate& cert, int n) {
    if (cert.modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    if (static_cast<int>(cert.embedding.size()) != n)
        throw std::invalid_argument("embedding must cover every graph vertex");
    std::vector<char> used(cert.tree.nodes, 0);
    for (int img : cert.embedding) {
        if (img < 0 || img >= cert.tree.nodes)
            throw std::invalid_argument("embedding image out of range");
        if (used[img]) throw std::invalid_argument("embedding must be injective");
        used[img] = 1;
    }
}

}  // namespace detail

// Checks the certificate against g pair by pair.  On mismatch returns false
// together with the lexicographically least violating pair.
inline std::pair<bool, std::optional<Witness>> verify_certificate(const Graph& g,
                                                                  const WillowCertificate& cert) {
    validate_tree(cert.tree);
    detail::check_embedding(cert, g.n);
    auto len = directed_path_lengths(cert.tree);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            long long fwd = len[cert.embedding[u]][cert.embedding[v]];
            long long bwd = len[cert.embedding[v]][cert.embedding[u]];
            bool declared = (fwd > 0 && fwd % cert.modulus != 0) || (bwd > 0 && bwd % cert.modulus != 0);
            if (declared != g.has_edge(u, v))
                return {false, Witness{Witness::Kind::violation, {u, v}}};
        }
    return {true, std::nullopt};
}

// The graph a certificate declares, on vertex set 0..embedding.size()-1.
inline Graph realized_graph(const WillowCertificate& cert) {
    validate_tree(cert.tree);
    int n = static_cast<int>(cert.embedding.size());
    detail::check_embedding(cert, n);
    auto len = directed_path_lengths(cert.tree);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            long long fwd = len[cert.embedding[u]][cert.embedding[v]];
            long long bwd = len[cert.embedding[v]][cert.embedding[u]];
            if ((fwd > 0 && fwd % cert.modulus != 0) || (bwd > 0 && bwd % cert.modulus != 0))
                g.add_edge(u, v);
        }
    return g;
}

// Raises the modulus of a certificate from n to n' >= n without changing the
// certified graph.  Root the tree anywhere and let d(v) be the signed weight
// sum from the root (arcs count positive forward, negative backward); a
// directed path a -> b then has length d(b) - d(a).  Re-weighting each arc
// (t, h, w) to
//     w + (n'-n) * (floor(d(h)/n) - floor(d(t)/n))
// sends a path of length q*n + r with 0 <= r < n to q*n' + r or
// (q+1)*n' - (n-r), because floor((s+L)/n) - floor(s/n) is either floor(L/n)
// or ceil(L/n).  Multiples of n become multiples of n' and everything else
// lands strictly between consecutive multiples of n'.  In picture terms this
// stretches dashed arcs, i.e. subdivides the underlying unit-arc paths.
inline WillowCertificate lift_certificate(const WillowCertificate& cert, int new_modulus) {
    validate_tree(cert.tree);
    if (cert.modulus < 1) throw std::invalid_argument("modulus must be at least 1");
    if (new_modulus < cert.modulus) throw std::invalid_argument("lift cannot lower the modulus");
    const int n = cert.modulus;
    std::vector<std::vector<std::pair<int, long long>>> nbr(cert.tree.nodes);
    for (const TreeArc& a : cert.tree.arcs) {
        nbr[a.tail].push_back({a.head, a.weight});
        nbr[a.head].push_back({a.tail, -static_cast<long long>(a.weight)});
    }
    std::vector<long long> d(cert.tree.nodes, 0);
    std::vector<char> seen(cert.tree.nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, w] : nbr[u])
            if (!seen[v]) {
                seen[v] = 1;
                d[v] = d[u] + w;
                stack.push_back(v);
            }
    }
    auto fdiv = [](long long a, long long b) {  // floor division, negatives round down
        long long q = a / b, r = a % b;
        return r != 0 && (r < 0) != (b < 0) ? q - 1 : q;
    };
    WillowCertificate lifted = cert;
    lifted.modulus = new_modulus;
    for (TreeArc& a : lifted.tree.arcs) {
        long long w = a.weight + static_cast<long long>(new_modulus - n) * (fdiv(d[a.head], n) - fdiv(d[a.tail], n));
        if (w < a.weight) throw std::logic_error("lift produced a shrunken weight");
        a.weight = static_cast<int>(w);
    }
    return lifted;
}

// JSON schema: {modulus, nodes, arcs: [[tail, head, weight]...],
// embedding: {graphVertex: treeNode}}.  Arcs are emitted sorted and embedding
// keys in vertex order, so serialize/parse round-trips are byte-identical.
inline nlohmann::ordered_json certificate_to_json(const WillowCertificate& cert) {
    nlohmann::ordered_json j;
    j["modulus"] = cert.modulus;
    j["nodes"] = cert.tree.nodes;
    std::vector<TreeArc> arcs = cert.tree.arcs;
    std::sort(arcs.begin(), arcs.end());
    auto ja = nlohmann::ordered_json::array();
    for (const TreeArc& a : arcs) ja.push_back(nlohmann::ordered_json::array({a.tail, a.head, a.weight}));
    j["arcs"] = std::move(ja);
    auto je = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < cert.embedding.size(); ++v)
        je[std::to_string(v)] = cert.embedding[v];
    j["embedding"] = std::move(je);
    return j;
}

inline WillowCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    WillowCertificate cert;
    cert.modulus = j.at("modulus").get<int>();
    cert.tree.nodes = j.at("nodes").get<int>();
    for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 3)
            throw std::invalid_argument("arc entries must be [tail, head, weight]");
        cert.tree.add_arc(a[0].get<int>(), a[1].get<int>(), a[2].get<int>());
    }
    const auto& je = j.at("embedding");
    cert.embedding.assign(je.size(), -1);
    for (auto it = je.begin(); it != je.end(); ++it) {
        std::size_t v = std::stoul(it.key());
        if (v >= cert.embedding.size())
            throw std::invalid_argument("embedding keys must be 0..n-1");
        cert.embedding[v] = it.value().get<int>();
    }
    for (int img : cert.embedding)
        if (img < 0) throw std::invalid_argument("embedding keys must be 0..n-1 without gaps");
    return cert;
}

}  // namespace chibound
