#include "dihom/error.hpp"
#include "dihom/random.hpp"
#include "dihom/tree.hpp"

#include <gtest/gtest.h>

using namespace dihom;

TEST(Tree, StarLayout)
{
    const auto s = make_star(1, 2);
    ASSERT_EQ(s.size(), 4);
    EXPECT_EQ(s.degree(0), 3);
    EXPECT_EQ(s.in_children(0).size(), 1u);
    EXPECT_EQ(s.out_children(0).size(), 2u);
    EXPECT_EQ(s.dir(1), ArcDir::In);
    EXPECT_EQ(s.dir(2), ArcDir::Out);
    EXPECT_EQ(s.leaves(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(star_shape(s), std::make_pair(1, 2));
    EXPECT_EQ(to_literal(s), "S 1 2");
    EXPECT_THROW(make_star(0, 0), DomainError);
}

TEST(Tree, PathLayout)
{
    const auto p = make_oriented_path("+-+");
    const auto arcs = p.arcs();
    ASSERT_EQ(arcs.size(), 3u);
    EXPECT_EQ(arcs[0], (Arc{0, 1}));
    EXPECT_EQ(arcs[1], (Arc{2, 1}));
    EXPECT_EQ(arcs[2], (Arc{2, 3}));
    EXPECT_EQ(path_shape(p), "+-+");
    EXPECT_FALSE(star_shape(p));
    EXPECT_EQ(to_literal(p), "P +-+");
}

TEST(Tree, PathShapePrefersMorePlusSigns)
{
    // "--+" read from the other end is "-++"
    EXPECT_EQ(path_shape(make_oriented_path("--+")), "-++");
    EXPECT_EQ(path_shape(make_oriented_path("---")), "+++");
}

TEST(Tree, ArcListLiteral)
{
    const auto parsed = parse_tree_literal("0>1,2>1,1>3");
    EXPECT_EQ(parsed.tree.size(), 4);
    EXPECT_EQ(parsed.index.size(), 4u);
    EXPECT_EQ(parsed.index[0], 0);
    // vertex 1 has two in-arcs and one out-arc: the star S_{2,1}
    EXPECT_EQ(star_shape(parsed.tree), std::make_pair(2, 1));
    EXPECT_EQ(parse_tree_literal("0").tree.size(), 1);
}

TEST(Tree, LiteralRoundTripKeepsIsomorphismType)
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = random_tree(rng.between(1, 9), rng);
        const auto back = parse_tree_literal(to_literal(t)).tree;
        EXPECT_EQ(tree_code(back), tree_code(t)) << to_literal(t);
    }
}

TEST(Tree, CodeIsInvariantUnderRerooting)
{
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = random_tree(rng.between(1, 9), rng);
        const int root = rng.between(0, t.size() - 1);
        const auto re = t.rerooted(root);
        EXPECT_EQ(re.index[root], 0);
        EXPECT_EQ(tree_code(re.tree), tree_code(t));
        EXPECT_EQ(re.tree.to_digraph().arc_count(), static_cast<std::size_t>(t.arc_count()));
    }
}

TEST(Tree, CodeSeparatesOrientation)
{
    EXPECT_NE(tree_code(make_star(0, 3)), tree_code(make_star(3, 0)));
    EXPECT_NE(tree_code(make_oriented_path("+++")), tree_code(make_oriented_path("+-+")));
    EXPECT_EQ(tree_code(make_oriented_path("++-")), tree_code(make_oriented_path("+--")));
    EXPECT_EQ(tree_code(make_star(0, 1)), tree_code(make_star(1, 0)));
}

TEST(Tree, ReversedFlipsEveryArc)
{
    const auto t = make_star(1, 2);
    const auto r = t.reversed();
    EXPECT_EQ(star_shape(r), std::make_pair(2, 1));
    EXPECT_EQ(r.reversed(), t);
}

TEST(Tree, InvalidConstruction)
{
    EXPECT_THROW(RootedDirectedTree({-1, 1}, {ArcDir::Out, ArcDir::Out}), DomainError);
    EXPECT_THROW(RootedDirectedTree({}, {}), DomainError);
    const std::vector<Arc> cycle{{0, 1}, {1, 2}, {2, 0}};
    EXPECT_THROW(RootedDirectedTree::from_arcs(3, cycle, 0), DomainError);
}

TEST(Tree, MalformedLiteralsAreParseErrors)
{
    EXPECT_THROW(parse_tree_literal(""), ParseError);
    EXPECT_THROW(parse_tree_literal("S 1"), ParseError);
    EXPECT_THROW(parse_tree_literal("S 0 0"), ParseError);
    EXPECT_THROW(parse_tree_literal("P +x"), ParseError);
    EXPECT_THROW(parse_tree_literal("0>1,1>0"), ParseError);
    EXPECT_THROW(parse_tree_literal("0>1,2>3"), ParseError);
    EXPECT_THROW(parse_tree_literal("0>1,,1>2"), ParseError);
    EXPECT_THROW(parse_tree_literal("0>0"), ParseError);
}
