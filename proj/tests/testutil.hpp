#pragma once

#include <cstdlib>
#include <random>

#include "chibound/graph.hpp"

namespace testutil {

using chibound::Graph;

// labeled graph on n vertices from a bitmask over pairs (0,1),(0,2),(1,2),...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask & (1ull << bit)) g.add_edge(u, v);
    return g;
}

template <typename F>
inline void for_all_graphs(int n, F&& f) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) f(graph_from_mask(n, mask));
}

inline std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("CHIBOUND_SEED")) return std::strtoull(s, nullptr, 10);
    return 12345;
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(seed_from_env() + salt);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer C5
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

}  // namespace testutil
