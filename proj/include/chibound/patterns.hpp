#pragma once

#include <optional>
#include <string>

#include "chibound/graph.hpp"
#include "chibound/containment.hpp"

namespace chibound {

// Named graphs and graph families.  Textual grammar for the CLI:
//   mkt:m,t  pineapple:t,k  lollipop:t  bowtie  bull  gem  twok:s  twokstar:s
//   fan:n  wheel:n  comp-path:n  comp-cycle:n
//   pentagram-spider  tall-strider  short-strider
struct PatternSpec {
    enum Kind {
        mkt,
        pineapple,
        lollipop,
        bowtie,
        bull,
        gem,
        twok,
        twokstar,
        fan,
        wheel,
        path_complement,
        cycle_complement,
        pentagram_spider_base,
        tall_strider_base,
        short_strider_base,
    };
    Kind kind;
    int a = 0;
    int b = 0;

    static PatternSpec parse(const std::string& text);
    std::string to_string() const;
};

namespace detail {

struct PatternKindInfo {
    const char* name;
    PatternSpec::Kind kind;
    int params;
};

inline const PatternKindInfo pattern_kinds[] = {
    {"mkt", PatternSpec::mkt, 2},
    {"pineapple", PatternSpec::pineapple, 2},
    {"lollipop", PatternSpec::lollipop, 1},
    {"bowtie", PatternSpec::bowtie, 0},
    {"bull", PatternSpec::bull, 0},
    {"gem", PatternSpec::gem, 0},
    {"twok", PatternSpec::twok, 1},
    {"twokstar", PatternSpec::twokstar, 1},
    {"fan", PatternSpec::fan, 1},
    {"wheel", PatternSpec::wheel, 1},
    {"comp-path", PatternSpec::path_complement, 1},
    {"comp-cycle", PatternSpec::cycle_complement, 1},
    {"pentagram-spider", PatternSpec::pentagram_spider_base, 0},
    {"tall-strider", PatternSpec::tall_strider_base, 0},
    {"short-strider", PatternSpec::short_strider_base, 0},
};

}  // namespace detail

inline PatternSpec PatternSpec::parse(const std::string& text) {
    std::string name = text, args;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    for (const auto& info : detail::pattern_kinds) {
        if (name != info.name) continue;
        PatternSpec spec{info.kind, 0, 0};
        int got = 0;
        std::size_t pos = 0;
        while (pos < args.size()) {
            std::size_t comma = args.find(',', pos);
            std::string tok = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
            pos = comma == std::string::npos ? args.size() : comma + 1;
            int val;
            try {
                std::size_t used;
                val = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (...) {
                throw std::invalid_argument("pattern: bad parameter '" + tok + "' in '" + text + "'");
            }
            if (got == 0)
                spec.a = val;
            else if (got == 1)
                spec.b = val;
            ++got;
        }
        if (got != info.params)
            throw std::invalid_argument("pattern: '" + std::string(info.name) + "' takes " +
                                        std::to_string(info.params) + " parameter(s)");
        return spec;
    }
    throw std::invalid_argument("pattern: unknown kind in '" + text + "'");
}

inline std::string PatternSpec::to_string() const {
    for (const auto& info : detail::pattern_kinds) {
        if (info.kind != kind) continue;
        std::string out = info.name;
        if (info.params >= 1) out += ":" + std::to_string(a);
        if (info.params >= 2) out += "," + std::to_string(b);
        return out;
    }
    throw std::logic_error("pattern: bad kind");
}

// Canonical instances.  Vertex orders (used everywhere downstream):
//   mkt:          copy j on [j*t, (j+1)*t)
//   pineapple:    clique 0..t-1, pendants t..t+k-1 attached at vertex 0
//   lollipop:     clique 0..t-1, pendant path 0 - t - t+1
//   bowtie:       center 0, edges {1,2} and {3,4}
//   bull:         triangle 0,1,2, horns 3 at 1 and 4 at 2
//   gem:          path 0-1-2-3, apex 4
//   twok(star):   cliques [0,s) and [s,2s), apex 2s for twokstar
//   fan/wheel:    path/cycle 0..n-1, center n
//   comp-*:       complement of path/cycle 0-1-...-n-1
//   striders etc: central clique first, attachment groups in order
inline Graph make_pattern(const PatternSpec& spec) {
    auto clique_on = [](Graph& g, int from, int to) {
        for (int u = from; u < to; ++u)
            for (int v = u + 1; v < to; ++v) g.add_edge(u, v);
    };
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("pattern: ") + what);
    };
    switch (spec.kind) {
        case PatternSpec::mkt: {
            need(spec.a >= 1 && spec.b >= 1, "mkt needs m,t >= 1");
            Graph g(spec.a * spec.b);
            for (int j = 0; j < spec.a; ++j) clique_on(g, j * spec.b, (j + 1) * spec.b);
            return g;
        }
        case PatternSpec::pineapple: {
            need(spec.a >= 3 && spec.b >= 1, "pineapple needs t >= 3, k >= 1");
            Graph g(spec.a + spec.b);
            clique_on(g, 0, spec.a);
            for (int p = 0; p < spec.b; ++p) g.add_edge(0, spec.a + p);
            return g;
        }
        case PatternSpec::lollipop: {
            need(spec.a >= 2, "lollipop needs t >= 2");
            Graph g(spec.a + 2);
            clique_on(g, 0, spec.a);
            g.add_edge(0, spec.a);
            g.add_edge(spec.a, spec.a + 1);
            return g;
        }
        case PatternSpec::bowtie:
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
        case PatternSpec::bull:
            return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
        case PatternSpec::gem:
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
        case PatternSpec::twok:
        case PatternSpec::twokstar: {
            need(spec.a >= 1, "twok needs s >= 1");
            bool star = spec.kind == PatternSpec::twokstar;
            Graph g(2 * spec.a + (star ? 1 : 0));
            clique_on(g, 0, spec.a);
            clique_on(g, spec.a, 2 * spec.a);
            if (star)
                for (int v = 0; v < 2 * spec.a; ++v) g.add_edge(v, 2 * spec.a);
            return g;
        }
        case PatternSpec::fan:
        case PatternSpec::wheel: {
            need(spec.a >= 3, "fan/wheel needs n >= 3");
            Graph g(spec.a + 1);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            if (spec.kind == PatternSpec::wheel) g.add_edge(spec.a - 1, 0);
            for (int v = 0; v < spec.a; ++v) g.add_edge(v, spec.a);
            return g;
        }
        case PatternSpec::path_complement: {
            need(spec.a >= 1, "comp-path needs n >= 1");
            Graph g(spec.a);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            return complement(g);
        }
        case PatternSpec::cycle_complement: {
            need(spec.a >= 3, "comp-cycle needs n >= 3");
            Graph g(spec.a);
            for (int v = 0; v < spec.a; ++v) g.add_edge(v, (v + 1) % spec.a);
            return complement(g);
        }
        case PatternSpec::pentagram_spider_base: {
            Graph g(10);
            clique_on(g, 0, 5);
            for (int v = 0; v < 5; ++v) g.add_edge(v, v + 5);
            return g;
        }
        case PatternSpec::tall_strider_base: {
            Graph g(12);
            clique_on(g, 0, 3);
            for (int i = 0; i < 3; ++i) {
                int base = 3 + 3 * i;
                clique_on(g, base, base + 3);
                for (int v = base; v < base + 3; ++v) g.add_edge(i, v);
            }
            return g;
        }
        case PatternSpec::short_strider_base: {
            Graph g(10);
            clique_on(g, 0, 4);
            for (int i = 0; i < 3; ++i) {
                int base = 4 + 2 * i;
                g.add_edge(base, base + 1);
                g.add_edge(i, base);
                g.add_edge(i, base + 1);
            }
            return g;
        }
    }
    throw std::logic_error("pattern: bad kind");
}

// 10 vertices and some perfect matching M such that deleting the edges of M
// leaves a component isomorphic to K5.
inline bool is_pentagram_spider(const Graph& g) {
    if (g.n != 10) return false;
    std::vector<std::pair<int, int>> matching;
    std::vector<bool> matched(g.n, false);
    auto k5_component_after = [&]() {
        Graph h = g;
        for (auto [u, v] : matching) h.remove_edge(u, v);
        std::vector<int> comp(h.n, -1);
        for (int s = 0; s < h.n; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s}, verts;
            comp[s] = s;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                verts.push_back(u);
                h.for_each_neighbor(u, [&](int w) {
                    if (comp[w] == -1) {
                        comp[w] = s;
                        stack.push_back(w);
                    }
                });
            }
            if (verts.size() != 5) continue;
            bool complete = true;
            for (std::size_t i = 0; i < 5 && complete; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    if (!h.has_edge(verts[i], verts[j])) {
                        complete = false;
                        break;
                    }
            if (complete) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self) -> bool {
        int u = 0;
        while (u < g.n && matched[u]) ++u;
        if (u == g.n) return k5_component_after();
        for (int v = u + 1; v < g.n; ++v) {
            if (matched[v] || !g.has_edge(u, v)) continue;
            matched[u] = matched[v] = true;
            matching.push_back({u, v});
            if (self(self)) return true;
            matching.pop_back();
            matched[u] = matched[v] = false;
        }
        return false;
    };
    return rec(rec);
}

namespace detail {

// the sets N(x)\C for x in `centers` are pairwise disjoint cliques of size sz
inline bool strider_centers_ok(const Graph& g, const std::vector<int>& c,
                               const std::vector<int>& centers, int sz) {
    std::vector<bool> in_c(g.n, false), seen(g.n, false);
    for (int v : c) in_c[v] = true;
    for (int x : centers) {
        std::vector<int> nb;
        g.for_each_neighbor(x, [&](int v) {
            if (!in_c[v]) nb.push_back(v);
        });
        if (static_cast<int>(nb.size()) != sz) return false;
        for (int v : nb) {
            if (seen[v]) return false;
            seen[v] = true;
        }
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) return false;
    }
    return true;
}

}  // namespace detail

// 12 vertices, triangle C = {x1,x2,x3} with N(xi)\C disjoint triangles.
inline bool is_tall_strider(const Graph& g) {
    if (g.n != 12) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c) {
                if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                if (detail::strider_centers_ok(g, {a, b, c}, {a, b, c}, 3)) return true;
            }
    return false;
}

// 10 vertices, K4 clique C = {x1..x4} with N(xi)\C disjoint edges for three
// of the four clique vertices.
inline bool is_short_strider(const Graph& g) {
    if (g.n != 10) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    int cl[4] = {a, b, c, d};
                    bool clique = true;
                    for (int i = 0; i < 4 && clique; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (!g.has_edge(cl[i], cl[j])) {
                                clique = false;
                                break;
                            }
                    if (!clique) continue;
                    for (int skip = 0; skip < 4; ++skip) {
                        std::vector<int> centers;
                        for (int i = 0; i < 4; ++i)
                            if (i != skip) centers.push_back(cl[i]);
                        if (detail::strider_centers_ok(g, {a, b, c, d}, centers, 2)) return true;
                    }
                }
    return false;
}

namespace detail {

// k-subsets of 0..n-1 in lexicographic order; pred gets the induced subgraph
template <typename Pred>
inline std::optional<std::vector<int>> scan_subsets(const Graph& g, int k, Pred&& pred) {
    if (k > g.n) return std::nullopt;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (pred(induced(g, idx))) return idx;
        int i = k - 1;
        while (i >= 0 && idx[i] == g.n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Families recognized structurally ("any additional edges" families) are
// scanned over vertex subsets of the right size; fixed patterns go through
// contains_induced.  Family names: pentagram-spider, tall-strider,
// short-strider, nonwillow-obstructions, or any PatternSpec string.
inline std::optional<Witness> contains_family_member(const Graph& g, const std::string& family) {
    auto scan = [&](int size, auto&& rec) -> std::optional<Witness> {
        auto found = detail::scan_subsets(g, size, rec);
        if (!found) return std::nullopt;
        return Witness{Witness::Kind::containment, *found};
    };
    if (family == "pentagram-spider")
        return scan(10, [](const Graph& h) { return is_pentagram_spider(h); });
    if (family == "tall-strider")
        return scan(12, [](const Graph& h) { return is_tall_strider(h); });
    if (family == "short-strider")
        return scan(10, [](const Graph& h) { return is_short_strider(h); });
    if (family == "nonwillow-obstructions") {
        for (const char* sub : {"pentagram-spider", "tall-strider", "short-strider"})
            if (auto w = contains_family_member(g, sub)) return w;
        if (auto w = contains_induced(g, make_pattern(PatternSpec::parse("comp-path:9")))) return w;
        for (int n = 7; n <= g.n; ++n)
            if (auto w = contains_induced(g, make_pattern({PatternSpec::cycle_complement, n, 0})))
                return w;
        for (int n = 7; n + 1 <= g.n; ++n) {
            if (auto w = contains_induced(g, make_pattern({PatternSpec::fan, n, 0}))) return w;
            if (auto w = contains_induced(g, make_pattern({PatternSpec::wheel, n, 0}))) return w;
        }
        return std::nullopt;
    }
    return contains_induced(g, make_pattern(PatternSpec::parse(family)));
}

}  // namespace chibound
