#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chibound/descartes.hpp"
#include "chibound/oriented.hpp"
#include "chibound/willow_extract.hpp"
#include "testutil.hpp"

using namespace chibound;
using testutil::cycle;
using testutil::path;
using testutil::random_graph;
using testutil::seeded_rng;

namespace {

OrientedGraph directed_path4(std::vector<int> phi) {
    OrientedGraph og;
    og.graph = path(4);
    og.arcs = {{0, 1}, {1, 2}, {2, 3}};
    og.phi.color = std::move(phi);
    return og;
}

OrientedGraph single_arc() {
    OrientedGraph og;
    og.graph = Graph(2);
    og.graph.add_edge(0, 1);
    og.arcs = {{0, 1}};
    og.phi.color = {1, 2};
    return og;
}

// 0->1->3 and 0->2->3: acyclic but two directed paths from 0 to 3.
OrientedGraph diamond() {
    OrientedGraph og;
    og.graph = Graph(4);
    og.graph.add_edge(0, 1);
    og.graph.add_edge(0, 2);
    og.graph.add_edge(1, 3);
    og.graph.add_edge(2, 3);
    og.arcs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    og.phi.color = {1, 2, 3, 4};
    return og;
}

}  // namespace

TEST(AcyclicProperties, ParityColoringFailsOnLengthTwoPaths) {
    auto rep = verify_acyclic_properties(directed_path4({1, 2, 1, 2}), 2);
    EXPECT_TRUE(rep.a1);
    EXPECT_EQ(rep.chi, 2);
    EXPECT_TRUE(rep.a2);
    EXPECT_TRUE(rep.a3);
    EXPECT_EQ(rep.longest_path_vertices, 4);
    EXPECT_FALSE(rep.a4);  // vertices 0 and 2 share a color across a path
    EXPECT_FALSE(rep.all());
}

TEST(AcyclicProperties, InjectiveColoringPassesOnThePath) {
    auto rep = verify_acyclic_properties(directed_path4({1, 2, 3, 4}), 2);
    EXPECT_TRUE(rep.a1);
    EXPECT_TRUE(rep.a4);
    EXPECT_TRUE(rep.all());
}

TEST(AcyclicProperties, SingleArcSatisfiesEverything) {
    EXPECT_TRUE(verify_acyclic_properties(single_arc(), 2).all());
}

TEST(AcyclicProperties, DirectedCycleIsRejected) {
    OrientedGraph og;
    og.graph = cycle(3);
    og.arcs = {{0, 1}, {1, 2}, {2, 0}};
    og.phi.color = {1, 2, 3};
    EXPECT_THROW(verify_acyclic_properties(og, 3), std::invalid_argument);
}

TEST(OrientedValidation, RejectsBadStructures) {
    OrientedGraph og = single_arc();
    og.arcs.push_back({1, 0});  // same edge twice
    EXPECT_THROW(validate_oriented(og), std::invalid_argument);

    og = single_arc();
    og.arcs = {};  // arc missing
    EXPECT_THROW(validate_oriented(og), std::invalid_argument);

    og = single_arc();
    og.phi.color = {1, 1};  // improper
    EXPECT_THROW(validate_oriented(og), std::invalid_argument);

    og = single_arc();
    og.arcs = {{0, 0}};  // not an edge
    EXPECT_THROW(validate_oriented(og), std::invalid_argument);
}

TEST(DirectionChanges, HeadToHeadSquareHasTwo) {
    OrientedGraph og;
    og.graph = cycle(4);
    og.arcs = {{0, 1}, {1, 2}, {0, 3}, {3, 2}};  // 0->1->2 meets 0->3->2
    og.phi.color = {1, 2, 3, 2};
    EXPECT_EQ(min_direction_changes(og), 2);
}

TEST(DirectionChanges, AlternatingSquareHasFour) {
    OrientedGraph og;
    og.graph = cycle(4);
    og.arcs = {{0, 1}, {2, 1}, {2, 3}, {0, 3}};
    og.phi.color = {1, 2, 1, 2};
    EXPECT_EQ(min_direction_changes(og), 4);
}

TEST(DirectionChanges, ForestGetsTheSentinel) {
    EXPECT_EQ(min_direction_changes(directed_path4({1, 2, 3, 4})), no_cycles);
}

TEST(DirectionChanges, CapIsEnforced) {
    OrientedGraph og;
    og.graph = Graph(15);
    og.phi.color.assign(15, 1);
    EXPECT_THROW(min_direction_changes(og), std::invalid_argument);
}

TEST(ShiftPower, PathModTwoGivesTheSquare) {
    Graph gp = shift_power(directed_path4({1, 2, 3, 4}), 2);
    EXPECT_EQ(gp.edge_count(), 4);
    EXPECT_TRUE(gp.has_edge(0, 1));
    EXPECT_TRUE(gp.has_edge(1, 2));
    EXPECT_TRUE(gp.has_edge(2, 3));
    EXPECT_TRUE(gp.has_edge(0, 3));  // length 3
    EXPECT_FALSE(gp.has_edge(0, 2));  // length 2
    EXPECT_FALSE(gp.has_edge(1, 3));
    EXPECT_EQ(max_clique(gp).size(), 2u);
}

TEST(ShiftPower, PathModThreeGivesNearComplete) {
    Graph gp = shift_power(directed_path4({1, 2, 3, 4}), 3);
    EXPECT_EQ(gp.edge_count(), 5);
    EXPECT_FALSE(gp.has_edge(0, 3));  // only the length-3 pair drops out
    EXPECT_EQ(max_clique(gp).size(), 3u);
}

TEST(ShiftPower, SingleArcGivesAnEdge) {
    for (int p = 2; p <= 5; ++p) {
        Graph gp = shift_power(single_arc(), p);
        EXPECT_EQ(gp.edge_count(), 1);
    }
}

TEST(ShiftPower, NonUniquePathsAreRejected) {
    EXPECT_THROW(shift_power(diamond(), 2), std::invalid_argument);
}

TEST(ShiftClaims, PathExamples) {
    auto r2 = verify_shift_claims(directed_path4({1, 2, 3, 4}), 2, 0);
    EXPECT_TRUE(r2.hypothesis_met);
    EXPECT_EQ(r2.omega, 2);
    EXPECT_TRUE(r2.omega_matches);
    EXPECT_TRUE(r2.bounds_hold);
    EXPECT_TRUE(r2.violations.empty());
    EXPECT_EQ(r2.subgraphs_checked, 15);  // all nonempty subsets of 4 vertices

    auto r3 = verify_shift_claims(directed_path4({1, 2, 3, 4}), 3, 0);
    EXPECT_EQ(r3.omega, 3);
    EXPECT_TRUE(r3.omega_matches);
}

TEST(ShiftClaims, BrokenHypothesisIsFlaggedNotFalsified) {
    // Parity coloring breaks the path-endpoint property; the report must say
    // hypothesis-not-met while still measuring the clique number.
    auto rep = verify_shift_claims(directed_path4({1, 2, 1, 2}), 2, 0);
    EXPECT_FALSE(rep.hypothesis_met);
    EXPECT_EQ(rep.omega, 2);
}

TEST(ShiftClaims, ReportSerializesAllFields) {
    auto rep = verify_shift_claims(directed_path4({1, 2, 3, 4}), 2, 0);
    auto j = rep.to_json();
    EXPECT_EQ(j["p"], 2);
    EXPECT_EQ(j["omega"], 2);
    EXPECT_TRUE(j["bounds_hold"].get<bool>());
    EXPECT_TRUE(j["violations"].empty());
}

TEST(Descartes, SmallLevelsMeetTheContract) {
    for (int k = 1; k <= 3; ++k) {
        OrientedGraph og = build_descartes(k);
        auto rep = verify_acyclic_properties(og, k);
        EXPECT_TRUE(rep.all()) << "level " << k;
        EXPECT_EQ(rep.chi, k);
    }
    EXPECT_EQ(build_descartes(1).graph.n, 1);
    EXPECT_EQ(build_descartes(2).graph.n, 2);
    EXPECT_EQ(build_descartes(3).graph.n, 5);
    EXPECT_THROW(build_descartes(0), std::out_of_range);
    EXPECT_THROW(build_descartes(5), std::out_of_range);
}

TEST(Descartes, ShiftPowersHaveCliqueNumberP) {
    for (int k = 2; k <= 3; ++k) {
        OrientedGraph og = build_descartes(k);
        for (int p = 2; p <= k; ++p) {
            Graph gp = shift_power(og, p);
            EXPECT_EQ(static_cast<int>(max_clique(gp).size()), p) << "k=" << k << " p=" << p;
            auto rep = verify_shift_claims(og, p, 0);
            EXPECT_TRUE(rep.hypothesis_met);
            EXPECT_TRUE(rep.omega_matches);
            EXPECT_TRUE(rep.bounds_hold);
        }
    }
}

TEST(Descartes, LevelFourSizesAndCliques) {
    // 13 stable vertices + C(13,5) pentagon copies; the builder re-checks
    // unique paths, the 4-vertex directed path, the path-endpoint coloring,
    // and triangle-freeness before returning.
    OrientedGraph og = build_descartes(4);
    EXPECT_EQ(og.graph.n, 6448);
    EXPECT_EQ(og.graph.edge_count(), 12870);
    EXPECT_EQ(og.phi.count(), 4);
    for (int p = 2; p <= 3; ++p)
        EXPECT_EQ(static_cast<int>(max_clique(shift_power(og, p)).size()), p);
}

namespace {

// All directed paths u -> v by DFS, capped; the reference for the path table.
int brute_path_count(const std::vector<std::vector<int>>& out, int u, int v, int cap) {
    if (u == v) return 1;
    int total = 0;
    for (int w : out[u]) {
        total += brute_path_count(out, w, v, cap);
        if (total >= cap) return cap;
    }
    return total;
}

long long brute_path_length(const std::vector<std::vector<int>>& out, int u, int v) {
    if (u == v) return 0;
    for (int w : out[u]) {
        long long rest = brute_path_length(out, w, v);
        if (rest >= 0) return rest + 1;
    }
    return -1;
}

void expect_table_matches_brute(const OrientedGraph& og) {
    auto table = detail::path_table(og);
    std::vector<std::vector<int>> out(og.graph.n);
    for (auto [t, h] : og.arcs) out[t].push_back(h);
    for (int u = 0; u < og.graph.n; ++u) {
        std::size_t found = 0;
        for (int v = 0; v < og.graph.n; ++v) {
            if (v == u) continue;
            int brute = brute_path_count(out, u, v, 2);
            auto it = std::find_if(table.entries[u].begin(), table.entries[u].end(),
                                   [&](const auto& e) { return e.target == v; });
            if (brute == 0) {
                EXPECT_EQ(it, table.entries[u].end());
                continue;
            }
            ++found;
            ASSERT_NE(it, table.entries[u].end());
            EXPECT_EQ(it->count, brute);
            if (brute == 1) {
                EXPECT_EQ(it->length, brute_path_length(out, u, v));
            }
        }
        EXPECT_EQ(found, table.entries[u].size());
    }
}

OrientedGraph random_dag(int n, double density, std::mt19937_64& rng) {
    OrientedGraph og;
    og.graph = random_graph(n, density, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (og.graph.has_edge(u, v))
                og.arcs.push_back(pos[u] < pos[v] ? std::make_pair(u, v) : std::make_pair(v, u));
    og.phi.color.resize(n);
    std::iota(og.phi.color.begin(), og.phi.color.end(), 1);
    return og;
}

}  // namespace

TEST(PathTable, MatchesBruteForceOnAllSmallOrientations) {
    // Every acyclic orientation of every graph on 4 vertices.
    testutil::for_all_graphs(4, [&](const Graph& g) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (g.has_edge(u, v)) edges.push_back({u, v});
        for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
            OrientedGraph og;
            og.graph = g;
            for (std::size_t i = 0; i < edges.size(); ++i)
                og.arcs.push_back(mask & (1u << i) ? edges[i]
                                                   : std::make_pair(edges[i].second, edges[i].first));
            try {
                detail::topological_order(og);
            } catch (const std::invalid_argument&) {
                continue;  // cyclic orientation: not a table input
            }
            expect_table_matches_brute(og);
        }
    });
}

TEST(PathTable, MatchesBruteForceOnRandomDags) {
    auto rng = seeded_rng(61);
    for (int n = 5; n <= 7; ++n)
        for (int trial = 0; trial < 400; ++trial)
            expect_table_matches_brute(random_dag(n, 0.4, rng));
}

TEST(Extraction, PathSubsetsComeOutVerified) {
    OrientedGraph og = directed_path4({1, 2, 3, 4});

    auto c1 = extract_from_shift(og, 2, {0, 1, 3});
    EXPECT_EQ(c1.modulus, 2);
    Graph g1 = induced(shift_power(og, 2), {0, 1, 3});
    EXPECT_TRUE(verify_certificate(g1, c1).first);
    EXPECT_TRUE(g1.has_edge(0, 1));   // length 1
    EXPECT_TRUE(g1.has_edge(0, 2));   // length 3
    EXPECT_FALSE(g1.has_edge(1, 2));  // length 2

    auto c2 = extract_from_shift(og, 3, {0, 1, 2});
    Graph g2 = induced(shift_power(og, 3), {0, 1, 2});
    EXPECT_EQ(g2.edge_count(), 3);  // triangle: lengths 1, 1, 2
    EXPECT_TRUE(verify_certificate(g2, c2).first);
}

TEST(Extraction, NonUniquePathsAreRejected) {
    EXPECT_THROW(extract_from_shift(diamond(), 2, {0, 3}), std::invalid_argument);
}

TEST(Extraction, PathUnionCycleIsReported) {
    // The whole pentagon: the five realizing paths close the cycle.
    EXPECT_THROW(extract_from_shift(build_descartes(3), 2, {0, 1, 2, 3, 4}),
                 std::runtime_error);
}

TEST(Extraction, HandlesIsolatedAndSpreadVertices) {
    OrientedGraph og = build_descartes(4);
    // Vertices from the stable set and several copies: most pairs unrelated.
    std::vector<int> X = {0, 5, 12, 13, 14, 200, 201, 3000, 6000};
    auto cert = extract_from_shift(og, 3, X);
    std::sort(X.begin(), X.end());
    EXPECT_TRUE(verify_certificate(induced(shift_power(og, 3), X), cert).first);
}

TEST(Extraction, RandomSubsetsOfTheLevelThreeShiftPower) {
    OrientedGraph og = build_descartes(3);
    Graph gp = shift_power(og, 2);
    auto rng = seeded_rng(62);
    int verified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> X;
        for (int v = 0; v < 5; ++v)
            if (rng() % 2) X.push_back(v);
        try {
            auto cert = extract_from_shift(og, 2, X);
            EXPECT_TRUE(verify_certificate(induced(gp, X), cert).first);
            ++verified;
        } catch (const std::runtime_error&) {
            // path union closed a cycle; legitimate refusal
        }
    }
    EXPECT_GT(verified, 0);
}

TEST(Dimacs, RoundTripIsExact) {
    for (int k = 2; k <= 3; ++k) {
        OrientedGraph og = build_descartes(k);
        std::string text = oriented_to_dimacs(og);
        OrientedGraph back = oriented_from_dimacs(text);
        EXPECT_EQ(back.graph.n, og.graph.n);
        EXPECT_EQ(back.phi.color, og.phi.color);
        std::vector<std::pair<int, int>> a = og.arcs, b = back.arcs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        EXPECT_EQ(oriented_to_dimacs(back), text);  // canonical form is stable
    }
}

TEST(Dimacs, MalformedInputsAreRejected) {
    EXPECT_THROW(oriented_from_dimacs("p arcs 2 1\n"), std::invalid_argument);  // count mismatch
    EXPECT_THROW(oriented_from_dimacs("a 1 2\n"), std::invalid_argument);       // arc before header
    EXPECT_THROW(oriented_from_dimacs("p arcs 2 1\nz 1 2\n"), std::invalid_argument);
    EXPECT_THROW(oriented_from_dimacs("p arcs 2 1\na 1 2\nphi 1\n"), std::invalid_argument);
}
