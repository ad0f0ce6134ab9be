#include "dihom/error.hpp"
#include "dihom/experiments.hpp"
#include "dihom/order_search.hpp"
#include "dihom/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dihom;

TEST(Rng, DeterministicAndBounded)
{
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i)
        EXPECT_EQ(a.next(), b.next());
    Rng r(6);
    for (int i = 0; i < 10000; ++i) {
        EXPECT_LT(r.below(7), 7u);
        const int x = r.between(-2, 2);
        EXPECT_GE(x, -2);
        EXPECT_LE(x, 2);
        const double u = r.uniform01();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(ErdosRenyi, ExtremesAndDensity)
{
    EXPECT_EQ(gen_erdos_renyi_digraph(8, 0.0, 1).arc_count(), 0u);
    EXPECT_EQ(gen_erdos_renyi_digraph(8, 1.0, 1), complete_digraph(8));
    EXPECT_EQ(gen_erdos_renyi_digraph(30, 0.3, 4), gen_erdos_renyi_digraph(30, 0.3, 4));
    const auto g = gen_erdos_renyi_digraph(64, 0.3, 2);
    EXPECT_NEAR(static_cast<double>(g.arc_count()) / (64 * 63), 0.3, 0.03);
}

TEST(RandomTree, ShapeInvariants)
{
    Rng rng(3);
    for (int k = 1; k <= 9; ++k) {
        const auto t = random_tree(k, rng);
        EXPECT_EQ(t.size(), k);
        EXPECT_TRUE(t.to_digraph().is_weakly_connected());
    }
}

TEST(DegreeMoments, SummaryOnStarHost)
{
    // H_{2,1}: centre din 2 dout 1, two sources dout 1, one sink din 1;
    // a 3-vertex pattern uses second powers
    const auto s = degree_moment_summary(make_star_host(2, 1), 3);
    EXPECT_EQ(s.mean_in_pow, Rational(5, 4));
    EXPECT_EQ(s.mean_out_pow, Rational(3, 4));
    EXPECT_EQ(s.mean_total_pow, 3);
    EXPECT_TRUE(s.sandwich_holds());
    EXPECT_THROW(degree_moment_summary(Digraph(3), 1), DomainError);
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial)
        EXPECT_TRUE(degree_moment_summary(gen_erdos_renyi_digraph(10, 0.4, rng), rng.between(2, 5)).sandwich_holds());
}

TEST(Exploration, AllTreesBounded)
{
    const auto r = exploration_bound_report(gen_erdos_renyi_digraph(9, 0.4, 7), 4);
    EXPECT_TRUE(r.all_hold);
    EXPECT_EQ(r.per_tree.size(), 8u);
    EXPECT_LT(r.worst, r.per_tree.size());
    EXPECT_THROW(exploration_bound_report(Digraph(3), 1), DomainError);
}

TEST(Pareto, SupportAndMassAtOne)
{
    const DiscretePareto law(0.5);
    Rng rng(8);
    int ones = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto d = law.sample(rng);
        ASSERT_GE(d, 1u);
        ASSERT_LE(d, law.cap());
        ones += d == 1 ? 1 : 0;
    }
    double norm = 0.0;
    for (std::uint64_t d = 1; d <= law.cap(); ++d)
        norm += std::pow(static_cast<double>(d), -1.5);
    EXPECT_NEAR(static_cast<double>(ones) / draws, 1.0 / norm, 0.01);
    EXPECT_THROW(DiscretePareto(0.0), DomainError);
}

TEST(TwoPath, EnvelopeValues)
{
    const std::vector<std::uint64_t> deg{1, 2, 3};
    const auto one = evaluate_two_path(deg, 1.0);
    EXPECT_EQ(one.hom, 6.0);
    EXPECT_NEAR(one.envelope, 6.0, 1e-12);
    EXPECT_TRUE(one.envelope_holds);
    const auto two = evaluate_two_path(deg, 2.0);
    EXPECT_NEAR(two.envelope, std::sqrt(3.0) * std::sqrt(14.0), 1e-12);
    EXPECT_THROW(evaluate_two_path(deg, 0.5), DomainError);
}

TEST(HeavyTail, SmallRunHoldsAndIsWorkerIndependent)
{
    HeavyTailParams p;
    p.samples = 3000;
    const auto a = heavy_tail_experiment(p, 1);
    const auto b = heavy_tail_experiment(p, 4);
    EXPECT_TRUE(a.envelope_holds);
    EXPECT_TRUE(a.moment_holds);
    EXPECT_EQ(a.envelope_violations, 0);
    EXPECT_EQ(a.mean_hom_r, b.mean_hom_r);
    EXPECT_NEAR(a.subadditive_bound, p.d_root * a.mean_degree_r, 1e-12 * a.subadditive_bound);
    HeavyTailParams bad;
    bad.r = Rational(3, 5);
    EXPECT_THROW(heavy_tail_experiment(bad), DomainError);
}
