#include <gtest/gtest.h>

#include "chibound/exact.hpp"
#include "chibound/patterns.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace chibound;
using testutil::complete;
using testutil::cycle;

TEST(MaxClique, SpecExamples) {
    EXPECT_EQ(max_clique(make_pattern(PatternSpec::parse("pineapple:7,5"))).size(), 7u);
    EXPECT_EQ(max_clique(testutil::petersen()).size(), 2u);
    EXPECT_EQ(max_clique(complement(cycle(7))).size(), 3u);
    EXPECT_TRUE(max_clique(Graph(0)).empty());
    EXPECT_EQ(max_clique(Graph(3)).size(), 1u);  // no edges: a single vertex
}

TEST(MaxClique, LexLeastExhaustive) {
    for (int n = 0; n <= 5; ++n)
        testutil::for_all_graphs(
            n, [](const Graph& g) { EXPECT_EQ(max_clique(g), oracle::lex_least_max_clique(g)); });
}

TEST(MaxClique, LexLeastRandom) {
    auto rng = testutil::seeded_rng(20);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = testutil::random_graph(9, 0.6, rng);
        EXPECT_EQ(max_clique(g), oracle::lex_least_max_clique(g));
    }
}

TEST(Chromatic, SpecExamples) {
    EXPECT_EQ(chromatic_number(cycle(5)).first, 3);
    EXPECT_EQ(chromatic_number(testutil::petersen()).first, 3);
    EXPECT_EQ(chromatic_number(complete(5)).first, 5);
    EXPECT_EQ(chromatic_number(Graph(0)).first, 0);
}

TEST(Chromatic, ReturnsOptimalProperColoring) {
    auto rng = testutil::seeded_rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = testutil::random_graph(9, 0.5, rng);
        auto [k, col] = chromatic_number(g);
        EXPECT_TRUE(col.proper(g));
        EXPECT_EQ(col.count(), k);
        EXPECT_EQ(k, oracle::chi(g));
        EXPECT_GE(k, static_cast<int>(max_clique(g).size()));
    }
}

TEST(Chromatic, MatchesOracleExhaustiveSmall) {
    for (int n = 0; n <= 5; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) {
            EXPECT_EQ(chromatic_number(g).first, oracle::chi(g));
            EXPECT_EQ(max_clique(g).size(), static_cast<std::size_t>(oracle::omega(g)));
        });
}

TEST(Chromatic, CapError) {
    EXPECT_THROW(chromatic_number(Graph(41)), std::invalid_argument);
    EXPECT_NO_THROW(chromatic_number(Graph(41), 50));
}

TEST(Chromatic, HandlesModeratelyHardInstances) {
    // Kneser-ish stress: complement of Petersen, chi = 5
    EXPECT_EQ(chromatic_number(complement(testutil::petersen())).first, 5);
    // random 30-vertex instance against DSATUR sanity: exact <= heuristic
    auto rng = testutil::seeded_rng(22);
    Graph g = testutil::random_graph(30, 0.5, rng);
    auto [k, col] = chromatic_number(g);
    EXPECT_TRUE(col.proper(g));
    EXPECT_LE(k, dsatur_coloring(g).count());
}

TEST(Dsatur, ProperButHeuristic) {
    auto rng = testutil::seeded_rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = testutil::random_graph(25, 0.4, rng);
        EXPECT_TRUE(dsatur_coloring(g).proper(g));
    }
}

TEST(ChiUpto, SpecExamples) {
    EXPECT_EQ(chi_upto(complete(5), 2), 2);
    EXPECT_EQ(chi_upto(cycle(5), 2), 3);
    auto rng = testutil::seeded_rng(24);
    Graph g = testutil::random_graph(8, 0.5, rng);
    g.add_edge(0, 1);  // make sure it is nonempty
    EXPECT_EQ(chi_upto(g, 1), 1);
}

TEST(ChiUpto, MatchesOracle) {
    auto rng = testutil::seeded_rng(25);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = testutil::random_graph(7, 0.5, rng);
        for (int n = 1; n <= 4; ++n) EXPECT_EQ(chi_upto(g, n), oracle::chi_upto(g, n));
    }
}

TEST(ChiUpto, CapError) { EXPECT_THROW(chi_upto(Graph(15), 2), std::invalid_argument); }

TEST(Invariants, OmegaLeChi) {
    auto rng = testutil::seeded_rng(26);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = testutil::random_graph(10, 0.5, rng);
        EXPECT_LE(max_clique(g).size(), static_cast<std::size_t>(chromatic_number(g).first));
    }
}
