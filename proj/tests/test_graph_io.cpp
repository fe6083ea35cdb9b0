#include <gtest/gtest.h>

#include "chibound/graph_io.hpp"
#include "testutil.hpp"

using namespace chibound;

TEST(Graph6, KnownEncodings) {
    // hand-packed: n+63, then upper-triangle bits column by column
    EXPECT_EQ(to_graph6(testutil::complete(3)), "Bw");
    EXPECT_EQ(to_graph6(testutil::complete(2)), "A_");
    EXPECT_EQ(to_graph6(Graph(2)), "A?");
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(testutil::path(3)), "Bg");
}

TEST(Graph6, ParsesKnownStrings) {
    Graph k3 = from_graph6("Bw");
    EXPECT_EQ(k3.n, 3);
    EXPECT_EQ(k3.edge_count(), 3);
    Graph c5 = from_graph6(to_graph6(testutil::cycle(5)));
    EXPECT_EQ(c5, testutil::cycle(5));
    // optional format header and trailing newline are accepted
    EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), k3);
}

TEST(Graph6, RoundTripExhaustiveSmall) {
    for (int n = 0; n <= 5; ++n)
        testutil::for_all_graphs(n, [](const Graph& g) { EXPECT_EQ(from_graph6(to_graph6(g)), g); });
}

TEST(Graph6, RoundTripRandomLarger) {
    auto rng = testutil::seeded_rng(10);
    for (int n : {20, 62, 63, 64, 100, 258}) {
        Graph g = testutil::random_graph(n, 0.3, rng);
        Graph back = from_graph6(to_graph6(g));
        EXPECT_EQ(back, g) << "n=" << n;
    }
}

TEST(Graph6, LongFormHeader) {
    // n = 63 switches to the three-byte count encoding
    std::string s = to_graph6(Graph(63));
    EXPECT_EQ(static_cast<unsigned char>(s[0]), 126);
    EXPECT_EQ(from_graph6(s).n, 63);
}

TEST(Graph6, RejectsGarbage) {
    EXPECT_THROW(from_graph6(""), std::invalid_argument);
    EXPECT_THROW(from_graph6("B"), std::invalid_argument);       // truncated triangle
    EXPECT_THROW(from_graph6("Bww"), std::invalid_argument);     // trailing bytes
    EXPECT_THROW(from_graph6("B\x01"), std::invalid_argument);   // byte below 63
}

TEST(Dimacs, ParsesSample) {
    std::string text =
        "c sample file\n"
        "p edge 4 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 3 4\n";
    Graph g = from_dimacs(text);
    EXPECT_EQ(g, testutil::path(4));
}

TEST(Dimacs, ToleratesDuplicatesAndBlankLines) {
    std::string text = "p edge 3 2\n\ne 1 2\ne 2 1\ne 2 3\n";
    Graph g = from_dimacs(text);
    EXPECT_EQ(g.edge_count(), 2);
}

TEST(Dimacs, Errors) {
    EXPECT_THROW(from_dimacs("e 1 2\n"), std::invalid_argument);           // e before p
    EXPECT_THROW(from_dimacs("p edge 2 1\ne 1 3\n"), std::invalid_argument);
    EXPECT_THROW(from_dimacs("p edge 2 1\ne 1 1\n"), std::invalid_argument);
    EXPECT_THROW(from_dimacs("p huh 2 1\n"), std::invalid_argument);
    EXPECT_THROW(from_dimacs("x 1\n"), std::invalid_argument);
    EXPECT_THROW(from_dimacs(""), std::invalid_argument);
}
