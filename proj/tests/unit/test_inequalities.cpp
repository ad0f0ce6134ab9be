#include "dihom/error.hpp"
#include "dihom/inequalities.hpp"
#include "dihom/order_search.hpp"
#include "dihom/random.hpp"
#include "dihom/suites.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dihom;

namespace {

Digraph random_host(Rng& rng, int max_n)
{
    return gen_erdos_renyi_digraph(rng.between(1, max_n), rng.between(1, 9) / 10.0, rng);
}

} // namespace

TEST(MainTheorem, PureStarHasZeroSlack)
{
    // H_{3,1}: sum din^3 = 27 + 1 beats sum dout^3 = 3 + 1
    const auto h = make_star_host(3, 1);
    const auto r = check_main_theorem(make_star(3, 0), h);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(*r.slack().exact, 0);
    EXPECT_EQ(*r.lhs.exact, 28);
    EXPECT_EQ(*r.rhs.exact, 28);
}

TEST(MainTheorem, HoldsOnRandomInstances)
{
    Rng rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto r = check_main_theorem(random_tree(rng.between(1, 7), rng), random_host(rng, 8));
        EXPECT_TRUE(r.holds);
        EXPECT_TRUE(r.certified);
    }
}

TEST(StarHolder, Endpoints)
{
    Rng rng(2);
    const auto h = random_host(rng, 6);
    const auto pure_in = check_star_holder(3, 0, h);
    EXPECT_TRUE(pure_in.lhs.is_exact() && pure_in.rhs.is_exact());
    EXPECT_EQ(*pure_in.slack().exact, 0);
    EXPECT_EQ(*check_star_holder(3, 3, h).slack().exact, 0);
    EXPECT_THROW(check_star_holder(0, 0, h), DomainError);
    EXPECT_THROW(check_star_holder(3, 4, h), DomainError);
}

TEST(StarHolder, EqualityCaseIsCertifiedExactly)
{
    // regular host: every in- and out-degree equals 2, so both sides coincide
    const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 1}, {1, 0}};
    const Digraph h(3, arcs);
    const auto r = check_star_holder(4, 2, h);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.certified);
    EXPECT_EQ(*r.lhs.exact, 48);
    EXPECT_NEAR(r.rhs.approx, 48.0, 1e-9);
}

TEST(GeomMean, CandidatesPreserveArcsAndGainALeaf)
{
    const auto t = make_oriented_path("+-+");
    const auto sk = skeleton_leaves(t);
    ASSERT_EQ(sk.size(), 2u);
    const auto re = leaf_reallocation_candidates(t, sk[0], sk[1]);
    EXPECT_EQ(re.moved, 2);
    for (const auto& c : re.candidates) {
        EXPECT_EQ(c.arc_count(), t.arc_count());
        EXPECT_EQ(c.leaves().size(), t.leaves().size() + 1);
    }
}

TEST(GeomMean, StarHasNoSkeletonLeafPair)
{
    const auto s = make_star(1, 2);
    EXPECT_LT(skeleton_leaves(s).size(), 2u);
    EXPECT_THROW(leaf_reallocation_candidates(s, 0, 1), DomainError);
    EXPECT_THROW(leaf_reallocation_candidates(make_oriented_path("+-+"), 1, 1), DomainError);
}

TEST(GeomMean, EmptyHostGivesZeroSides)
{
    const auto t = make_oriented_path("+-+");
    const auto sk = skeleton_leaves(t);
    const auto g = check_geometric_mean(t, sk[0], sk[1], Digraph(4));
    EXPECT_TRUE(g.geometric.holds);
    EXPECT_EQ(*g.geometric.lhs.exact, 0);
    EXPECT_EQ(*g.geometric.rhs.exact, 0);
}

TEST(GeomMean, HoldsOnRandomInstances)
{
    Rng rng(3);
    int done = 0;
    while (done < 150) {
        const auto t = random_tree(rng.between(4, 7), rng);
        const auto sk = skeleton_leaves(t);
        if (sk.size() < 2)
            continue;
        const auto g = check_geometric_mean(t, sk.front(), sk.back(), random_host(rng, 5));
        EXPECT_TRUE(g.geometric.holds);
        EXPECT_TRUE(g.max_form.holds);
        ++done;
    }
}

TEST(ReallocationTrace, EndsAtPureStarWithEveryStepHolding)
{
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_tree(rng.between(2, 8), rng);
        const auto h = random_host(rng, 6);
        const auto steps = reallocation_trace(t, h);
        ASSERT_FALSE(steps.empty());
        EXPECT_LE(steps.size(), static_cast<std::size_t>(t.size()) + 3);
        for (const auto& s : steps) {
            EXPECT_TRUE(s.report.holds) << to_literal(t) << ": " << s.report.label;
            EXPECT_EQ(s.tree.arc_count(), t.arc_count());
        }
        const auto shape = star_shape(steps.back().tree);
        ASSERT_TRUE(shape);
        EXPECT_TRUE(shape->first == 0 || shape->second == 0);
        // the chain ends at the main-theorem bound
        EXPECT_EQ(*steps.back().report.lhs.exact, *check_main_theorem(t, h).rhs.exact);
    }
}

TEST(Tail, ParticularCaseAtZeroThreshold)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_tree(rng.between(1, 5), rng);
        const auto h = random_host(rng, 6);
        const auto r = check_tail_unweighted(t, h, 0);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(*r.lhs.exact, hom_tree(t, h));
    }
}

TEST(Tail, ThresholdAboveMaxDegree)
{
    const auto h = complete_digraph(3);
    const auto r = check_tail_theorem(make_star(0, 2), h, 5, WeightVector(3, Rational(1)));
    EXPECT_EQ(*r.lhs.exact, 0);
    EXPECT_EQ(*r.rhs.exact, 0);
    EXPECT_TRUE(r.holds);
    EXPECT_THROW(check_tail_theorem(make_star(0, 2), h, 0, WeightVector(3, Rational(1, 2))), DomainError);
}

TEST(Envelope, ExponentOneReproducesCounts)
{
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_tree(rng.between(1, 6), rng);
        const auto h = random_host(rng, 6);
        for (const auto& r : check_pointwise_envelope(t, h, Rational(1))) {
            EXPECT_TRUE(r.holds);
            EXPECT_EQ(r.rhs.approx, r.lhs.approx);
        }
    }
}

TEST(Envelope, TwoPathClosedForm)
{
    Rng rng(7);
    const auto t = make_oriented_path("++");
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = random_host(rng, 7);
        const auto env = pointwise_envelope(t, h, {Rational(1), Rational(2), Rational(2)});
        for (int v = 0; v < h.n(); ++v) {
            double sq = 0.0;
            for (int u = 0; u < h.n(); ++u)
                if (h.has_arc(v, u))
                    sq += static_cast<double>(h.deg_out(u)) * h.deg_out(u);
            EXPECT_NEAR(env[v], std::sqrt(h.deg_out(v)) * std::sqrt(sq), 1e-9);
        }
    }
    EXPECT_THROW(pointwise_envelope(t, complete_digraph(2), {Rational(1), Rational(1, 2), Rational(1)}), DomainError);
}

TEST(Weighted, ZeroMatrixAndAdjacencyBridge)
{
    const NonnegMatrix zero(3, std::vector<Rational>(9, Rational(0)));
    const auto z = check_weighted_tree(make_oriented_path("+-"), zero);
    EXPECT_EQ(*z.lhs.exact, 0);
    EXPECT_EQ(*z.rhs.exact, 0);
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto t = random_tree(rng.between(1, 5), rng);
        const auto h = random_host(rng, 5);
        const auto w = check_weighted_tree(t, NonnegMatrix::from_digraph(h));
        const auto m = check_main_theorem(t, h);
        EXPECT_EQ(*w.lhs.exact, *m.lhs.exact);
        EXPECT_EQ(*w.rhs.exact, *m.rhs.exact);
    }
}

TEST(MvPath, ExactAndBelowMaxBound)
{
    const NonnegMatrix zero(2, std::vector<Rational>(4, Rational(0)));
    EXPECT_TRUE(check_mv_path(2, zero).holds);
    EXPECT_EQ(*check_mv_path(2, zero).rhs.exact, 0);
    // A = [[1, 1/2], [0, 3]]: A^2 = [[1, 2], [0, 9]], sum 12
    const NonnegMatrix a(2, {Rational(1), Rational(1, 2), Rational(0), Rational(3)});
    EXPECT_EQ(matrix_power_sum(a, 2), 12);
    EXPECT_TRUE(check_mv_path(2, a).holds);
    EXPECT_THROW(check_mv_path(0, a), DomainError);
}

TEST(Moments, RescaledMainTheorem)
{
    const auto h = make_star_host(3, 0);
    const auto r = check_moment_domination(make_star(2, 0), h);
    EXPECT_EQ(*r.lhs.exact, Rational(9, 4));
    EXPECT_EQ(*r.rhs.exact, Rational(9, 4));
    EXPECT_THROW(check_moment_domination(make_star(2, 0), Digraph(0)), DomainError);
}

TEST(Suites, SmallRunsPassAndAreWorkerIndependent)
{
    for (const char* name : {"main", "star-holder", "geom-mean", "tail", "envelope", "weighted", "mv-path", "moments"}) {
        const auto which = parse_inequality(name);
        const auto a = run_suite(which, 40, 9, 1);
        const auto b = run_suite(which, 40, 9, 3);
        EXPECT_TRUE(a.passed()) << name << ": " << a.first_violation_instance;
        EXPECT_EQ(a.checks, b.checks);
        EXPECT_EQ(a.max_ratio, b.max_ratio);
        EXPECT_LE(a.max_ratio, 1.0 + 1e-9);
    }
    EXPECT_THROW(parse_inequality("nope"), ParseError);
}

TEST(Suites, TailRecordsUnscaledRatio)
{
    const auto r = run_suite(Inequality::Tail, 100, 3);
    EXPECT_GT(r.max_unscaled_tail_ratio, 0.0);
    EXPECT_LE(r.max_unscaled_tail_ratio, 4.0);
}
