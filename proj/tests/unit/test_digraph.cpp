#include "dihom/digraph.hpp"
#include "dihom/error.hpp"
#include "dihom/io.hpp"
#include "dihom/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace dihom;

TEST(Digraph, DegreesAndArcs)
{
    const std::vector<Arc> arcs{{0, 1}, {0, 2}, {2, 1}};
    const Digraph g(3, arcs);
    EXPECT_EQ(g.arc_count(), 3u);
    EXPECT_EQ(g.deg_out(0), 2);
    EXPECT_EQ(g.deg_in(1), 2);
    EXPECT_EQ(g.degree(2), 2);
    EXPECT_EQ(g.max_degree(), 2);
    EXPECT_TRUE(g.has_arc(2, 1));
    EXPECT_FALSE(g.has_arc(1, 2));
    EXPECT_EQ(g.arcs(), arcs);
}

TEST(Digraph, RejectsLoopsAndBadVertices)
{
    const std::vector<Arc> loop{{1, 1}};
    EXPECT_THROW(Digraph(2, loop), DomainError);
    const std::vector<Arc> out_of_range{{0, 3}};
    EXPECT_THROW(Digraph(2, out_of_range), DomainError);
    EXPECT_THROW(Digraph(65), DomainError);
}

TEST(Digraph, IndexOrderForTwoVertices)
{
    // pair (0,1) is the most significant bit
    EXPECT_EQ(Digraph::from_index(2, 0).arc_count(), 0u);
    EXPECT_TRUE(Digraph::from_index(2, 1).has_arc(1, 0));
    EXPECT_FALSE(Digraph::from_index(2, 1).has_arc(0, 1));
    EXPECT_TRUE(Digraph::from_index(2, 2).has_arc(0, 1));
    EXPECT_EQ(Digraph::from_index(2, 3).arc_count(), 2u);
}

TEST(Digraph, IndexRoundTripAndCount)
{
    EXPECT_EQ(host_count(1), 1u);
    EXPECT_EQ(host_count(3), 64u);
    EXPECT_EQ(host_count(5), 1u << 20);
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < host_count(3); ++i) {
        const auto g = Digraph::from_index(3, i);
        EXPECT_EQ(g.index(), i);
        seen.insert(g.index());
    }
    EXPECT_EQ(seen.size(), 64u);
}

TEST(Digraph, ReversedAndPermuted)
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = gen_erdos_renyi_digraph(rng.between(1, 7), 0.4, rng);
        const auto r = g.reversed();
        EXPECT_EQ(r.reversed(), g);
        for (int v = 0; v < g.n(); ++v) {
            EXPECT_EQ(r.deg_in(v), g.deg_out(v));
            EXPECT_EQ(r.deg_out(v), g.deg_in(v));
        }
        std::vector<int> perm(g.n());
        for (int v = 0; v < g.n(); ++v)
            perm[v] = (v + 1) % g.n();
        const auto p = g.permuted(perm);
        for (const auto& a : g.arcs())
            EXPECT_TRUE(p.has_arc(perm[a.from], perm[a.to]));
        EXPECT_EQ(p.arc_count(), g.arc_count());
    }
}

TEST(Digraph, WeakConnectivity)
{
    EXPECT_TRUE(Digraph(0).is_weakly_connected());
    EXPECT_TRUE(Digraph(1).is_weakly_connected());
    EXPECT_FALSE(Digraph(2).is_weakly_connected());
    const std::vector<Arc> arcs{{1, 0}, {1, 2}};
    EXPECT_TRUE(Digraph(3, arcs).is_weakly_connected());
}

TEST(Digraph, CompleteDigraph)
{
    const auto g = complete_digraph(4);
    EXPECT_EQ(g.arc_count(), 12u);
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(g.degree(v), 6);
}

TEST(Io, MatrixAndEdgeListAgree)
{
    const auto a = parse_digraph("3\n0 1 0\n0 0 1\n1 0 0\n");
    const auto b = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(a, b);
    EXPECT_EQ(parse_matrix(format_matrix(a)), a);
    EXPECT_EQ(parse_edge_list(format_edge_list(a)), a);
    EXPECT_EQ(format_matrix_inline(a), "[[0,1,0],[0,0,1],[1,0,0]]");
}

TEST(Io, CommentsAreIgnored)
{
    EXPECT_EQ(parse_digraph("# host\n2\n0 0 # row 0\n1 0\n").arc_count(), 1u);
}

TEST(Io, MalformedInputIsParseError)
{
    EXPECT_THROW(parse_digraph(""), ParseError);
    EXPECT_THROW(parse_digraph("2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_digraph("2\n0 2\n0 0\n"), ParseError);
    EXPECT_THROW(parse_digraph("2\n1 0\n0 0\n"), ParseError);
    EXPECT_THROW(parse_digraph("2 1\n0 5\n"), ParseError);
    EXPECT_THROW(parse_digraph("x\n"), ParseError);
    EXPECT_THROW(read_digraph_file("/nonexistent/host.mat"), ParseError);
}

TEST(Io, DuplicateEdgeIsParseError)
{
    EXPECT_THROW(parse_digraph("2 2\n0 1\n0 1\n"), ParseError);
}
