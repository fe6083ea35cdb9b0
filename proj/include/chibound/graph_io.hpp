#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "chibound/graph.hpp"

namespace chibound {

// graph6: McKay's ASCII format.  N(n) followed by the upper triangle read
// column by column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into
// 6-bit groups, each group + 63.
inline std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& s_in) {
    std::string s = s_in;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    long long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        int c1 = next();
        if (c1 < 63) {
            n = (static_cast<long long>(c1) << 12) | (next() << 6) | next();
        } else {
            n = 0;
            for (int k = 0; k < 6; ++k) n = (n << 6) | next();
        }
    }
    if (n > 1'000'000) throw std::invalid_argument("graph6: vertex count too large");

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

// DIMACS .col: `c` comments, one `p edge <n> <m>` line, `e <u> <v>` with
// 1-based endpoints.  Duplicate edges are tolerated (set semantics).
inline Graph from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_p = false;
    long long declared_edges = -1;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_p) throw std::invalid_argument("dimacs: repeated p line");
            std::string fmt;
            long long n, m;
            if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
                throw std::invalid_argument("dimacs: bad p line");
            if (n < 0 || n > 1'000'000) throw std::invalid_argument("dimacs: bad vertex count");
            g = Graph(static_cast<int>(n));
            declared_edges = m;
            have_p = true;
            continue;
        }
        if (tag == "e") {
            if (!have_p) throw std::invalid_argument("dimacs: e line before p line");
            long long u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("dimacs: bad e line");
            if (u < 1 || v < 1 || u > g.n || v > g.n || u == v)
                throw std::invalid_argument("dimacs: bad edge endpoints");
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw std::invalid_argument("dimacs: unknown line tag '" + tag + "'");
    }
    if (!have_p) throw std::invalid_argument("dimacs: missing p line");
    (void)declared_edges;  // the edge count in the p line is advisory
    return g;
}

}  // namespace chibound
