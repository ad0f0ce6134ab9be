#include "dihom/appendix.hpp"
#include "dihom/enumerate.hpp"
#include "dihom/order_search.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace dihom;

TEST(Appendix, NamedTreesAreTheEightThreeArcTrees)
{
    const auto& names = three_arc_tree_names();
    ASSERT_EQ(names.size(), 8u);
    std::set<std::string> codes;
    for (const auto& name : names) {
        const auto t = named_three_arc_tree(name);
        EXPECT_EQ(t.arc_count(), 3);
        codes.insert(tree_code(t));
    }
    std::set<std::string> expected;
    for (const auto& t : enumerate_directed_trees(3))
        expected.insert(tree_code(t));
    EXPECT_EQ(codes, expected);
}

TEST(Appendix, EveryRowAgreesWithBruteForce)
{
    const auto& rows = witness_table();
    ASSERT_EQ(rows.size(), 28u);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& row : rows) {
        const auto a = named_three_arc_tree(row.a);
        const auto b = named_three_arc_tree(row.b);
        pairs.insert(std::minmax(row.a, row.b));
        EXPECT_EQ(oracle::hom(a, row.gt.host), row.gt.count_a) << row.a << " vs " << row.b;
        EXPECT_EQ(oracle::hom(b, row.gt.host), row.gt.count_b) << row.a << " vs " << row.b;
        EXPECT_EQ(oracle::hom(a, row.lt.host), row.lt.count_a) << row.a << " vs " << row.b;
        EXPECT_EQ(oracle::hom(b, row.lt.host), row.lt.count_b) << row.a << " vs " << row.b;
        EXPECT_GT(row.gt.count_a, row.gt.count_b);
        EXPECT_LT(row.lt.count_a, row.lt.count_b);
    }
    EXPECT_EQ(pairs.size(), 28u);
}

TEST(Appendix, FiveVertexHost)
{
    const auto h = five_vertex_witness_host();
    EXPECT_EQ(h.n(), 5);
    EXPECT_EQ(oracle::hom(make_oriented_path("+++"), h), 37);
    EXPECT_EQ(oracle::hom(make_oriented_path("+-+"), h), 36);
    const auto d = delta_identity(h);
    EXPECT_TRUE(d.equal);
    EXPECT_EQ(d.lhs, -1);
}

TEST(Appendix, ReproductionSucceeds)
{
    const auto r = reproduce_appendix_table();
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.failures().empty());
    EXPECT_EQ(r.rows.size(), 28u);
    EXPECT_EQ(r.five_vertex_ppp, 37);
    EXPECT_EQ(r.five_vertex_pmp, 36);
    EXPECT_EQ(r.single_arc_ppp, 0);
    EXPECT_EQ(r.single_arc_pmp, 1);
}
