#include <gtest/gtest.h>

#include "chibound/graph.hpp"
#include "chibound/homogeneous.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace chibound;
using testutil::complete;
using testutil::cycle;
using testutil::path;

TEST(Graph, BasicEditing) {
    Graph g(4);
    EXPECT_EQ(g.n, 4);
    EXPECT_EQ(g.edge_count(), 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(0, 3));
    EXPECT_EQ(g.degree(2), 2);
    EXPECT_EQ(g.edge_count(), 2);
    g.remove_edge(0, 2);
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.neighbors(3), std::vector<int>{2});
}

TEST(Graph, EditErrors) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_THROW(g.add_edge(-1, 1), std::out_of_range);
    EXPECT_THROW(Graph(-1), std::invalid_argument);
}

TEST(Graph, ComplementIsInvolution) {
    for (int n = 0; n <= 5; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) { EXPECT_EQ(complement(complement(g)), g); });
    auto rng = testutil::seeded_rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = testutil::random_graph(80, 0.4, rng);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Graph, ComplementEdges) {
    Graph g = complement(path(3));  // 0-1-2 -> only edge {0,2}
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(Graph, InducedRelabelsAscending) {
    Graph g = cycle(5);
    Graph h = induced(g, {4, 0, 1});  // sorted to 0,1,4: edges 01, 04
    EXPECT_EQ(h.n, 3);
    EXPECT_TRUE(h.has_edge(0, 1));
    EXPECT_TRUE(h.has_edge(0, 2));
    EXPECT_FALSE(h.has_edge(1, 2));
    EXPECT_THROW(induced(g, {0, 0}), std::invalid_argument);
    EXPECT_THROW(induced(g, {0, 5}), std::out_of_range);
}

TEST(Graph, DisjointUnion) {
    Graph g = disjoint_union(complete(3), complete(2));
    EXPECT_EQ(g.n, 5);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(g.has_edge(3, 4));
    EXPECT_FALSE(g.has_edge(2, 3));
}

// substitute(G, v, H): replace v by H, joining H completely to N_G(v).
TEST(Graph, SubstituteExamples) {
    // P3, middle vertex, K2 -> diamond
    Graph d = substitute(path(3), 1, complete(2));
    EXPECT_EQ(d.n, 4);
    EXPECT_EQ(d.edge_count(), 5);  // K4 minus one edge
    // result order: remaining P3 vertices 0,2 first, then the K2
    EXPECT_FALSE(d.has_edge(0, 1));
    // identity substitution
    Graph c5 = cycle(5);
    Graph same = substitute(c5, 2, Graph(1));
    EXPECT_EQ(oracle::chi(same), 3);
    EXPECT_EQ(same.edge_count(), 5);
    // K2 with one end replaced by K2 = K3
    Graph k3 = substitute(complete(2), 0, complete(2));
    EXPECT_EQ(k3, complete(3));
}

TEST(Graph, SubstituteCreatesHomogeneousSet) {
    auto rng = testutil::seeded_rng(2);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = testutil::random_graph(6, 0.5, rng);
        Graph h = testutil::random_graph(3, 0.5, rng);
        Graph s = substitute(g, 2, h);
        // the copy of H sits on the last |V(H)| vertices
        std::vector<int> copy{s.n - 3, s.n - 2, s.n - 1};
        EXPECT_TRUE(oracle::is_homogeneous(s, copy));
    }
}

TEST(Homogeneous, SpecExamples) {
    // diamond with nonadjacent pair {2,3}: the pair extends by either apex,
    // so the maximal homogeneous sets are {0,1}, {0,2,3}, {1,2,3}
    Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto x = find_homogeneous_set(diamond);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (std::vector<int>{0, 1}));
    EXPECT_TRUE(oracle::is_homogeneous(diamond, {2, 3}));  // the nonadjacent pair too
    EXPECT_FALSE(find_homogeneous_set(path(4)).has_value());
    EXPECT_FALSE(find_homogeneous_set(cycle(5)).has_value());
}

TEST(Homogeneous, MatchesOracleExhaustively) {
    for (int n = 0; n <= 5; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) {
            auto got = find_homogeneous_set(g);
            auto want = oracle::homogeneous_set(g);
            EXPECT_EQ(got, want);
        });
}

TEST(Homogeneous, MatchesOracleRandom) {
    auto rng = testutil::seeded_rng(3);
    for (int rep = 0; rep < 300; ++rep) {
        Graph g = testutil::random_graph(8, 0.5, rng);
        EXPECT_EQ(find_homogeneous_set(g), oracle::homogeneous_set(g));
    }
}

TEST(Homogeneous, OutsideVerticesCompleteOrAnticomplete) {
    auto rng = testutil::seeded_rng(4);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = testutil::random_graph(10, 0.3, rng);
        if (auto x = find_homogeneous_set(g)) EXPECT_TRUE(oracle::is_homogeneous(g, *x));
    }
}

TEST(Coloring, ProperChecks) {
    Graph g = cycle(4);
    Coloring c(4);
    c.color = {1, 2, 1, 2};
    EXPECT_TRUE(c.proper(g));
    EXPECT_EQ(c.count(), 2);
    c.color = {1, 2, 1, 1};
    EXPECT_FALSE(c.proper(g));
    c.color = {1, 2, 1, 0};  // unassigned vertex
    EXPECT_FALSE(c.proper(g));
}

TEST(Compose, QuotientWithSingletonBlocks) {
    Graph q = path(4);
    Coloring qc(4);
    qc.color = {1, 2, 1, 2};
    std::vector<Graph> blocks(4, Graph(1));
    std::vector<Coloring> bc;
    for (int i = 0; i < 4; ++i) {
        Coloring c(1);
        c.color = {1};
        bc.push_back(c);
    }
    Coloring out = compose_coloring_by_substitution(q, qc, blocks, bc);
    EXPECT_EQ(out.color, qc.color);
}

TEST(Compose, SingleVertexQuotientK3Block) {
    Graph q(1);
    Coloring qc(1);
    qc.color = {1};
    std::vector<Graph> blocks{complete(3)};
    Coloring bc(3);
    bc.color = {1, 2, 3};
    Coloring out = compose_coloring_by_substitution(q, qc, blocks, {bc});
    EXPECT_EQ(out.count(), 3);
    EXPECT_TRUE(out.proper(complete(3)));
}

TEST(Compose, P4WithK2Block) {
    Graph q = path(4);
    Coloring qc(4);
    qc.color = {1, 2, 1, 2};
    std::vector<Graph> blocks{Graph(1), complete(2), Graph(1), Graph(1)};
    std::vector<Coloring> bc;
    for (const Graph& b : blocks) {
        Coloring c(b.n);
        for (int v = 0; v < b.n; ++v) c.color[v] = v + 1;
        bc.push_back(c);
    }
    Graph g = blowup(q, blocks);
    Coloring out = compose_coloring_by_substitution(q, qc, blocks, bc);
    EXPECT_TRUE(out.proper(g));
    EXPECT_LE(out.count(), 4);
    EXPECT_EQ(oracle::chi(g), 3);
}

TEST(Compose, RejectsImproperInputs) {
    Graph q = complete(2);
    Coloring bad(2);
    bad.color = {1, 1};
    std::vector<Graph> blocks(2, Graph(1));
    Coloring one(1);
    one.color = {1};
    EXPECT_THROW(compose_coloring_by_substitution(q, bad, blocks, {one, one}),
                 std::invalid_argument);
}

TEST(Compose, ProperOnRandomInstances) {
    auto rng = testutil::seeded_rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        Graph q = testutil::random_graph(5, 0.5, rng);
        Coloring qc(5);
        for (int v = 0; v < 5; ++v) qc.color[v] = v + 1;  // rainbow is always proper
        std::vector<Graph> blocks;
        std::vector<Coloring> bc;
        for (int i = 0; i < 5; ++i) {
            std::uniform_int_distribution<int> sz(1, 3);
            Graph b = testutil::random_graph(sz(rng), 0.5, rng);
            Coloring c(b.n);
            for (int v = 0; v < b.n; ++v) c.color[v] = v + 1;
            blocks.push_back(b);
            bc.push_back(c);
        }
        Coloring out = compose_coloring_by_substitution(q, qc, blocks, bc);
        EXPECT_TRUE(out.proper(blowup(q, blocks)));
    }
}

TEST(Partition, CoversChecks) {
    Graph g = path(3);
    VertexPartition p;
    p.blocks = {{0, 2}, {1}};
    p.tags = {BlockTag::stable, BlockTag::unconstrained};
    EXPECT_TRUE(p.covers(g));
    p.blocks = {{0}, {1}};
    EXPECT_FALSE(p.covers(g));  // vertex 2 missing
    p.blocks = {{0, 1}, {1, 2}};
    EXPECT_FALSE(p.covers(g));  // overlap
}
