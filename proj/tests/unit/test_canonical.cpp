#include "dihom/canonical.hpp"
#include "dihom/error.hpp"
#include "dihom/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace dihom;

TEST(Canonical, InvariantUnderRelabelling)
{
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = gen_erdos_renyi_digraph(rng.between(1, 8), rng.between(1, 9) / 10.0, rng);
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = g.n() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        const auto h = g.permuted(perm);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_TRUE(is_isomorphic(g, h));
    }
}

TEST(Canonical, SeparatesNonIsomorphic)
{
    const std::vector<Arc> path{{0, 1}, {1, 2}};
    const std::vector<Arc> out_star{{0, 1}, {0, 2}};
    EXPECT_FALSE(is_isomorphic(Digraph(3, path), Digraph(3, out_star)));
    // the directed 2-path is self-converse
    EXPECT_TRUE(is_isomorphic(Digraph(3, path), Digraph(3, path).reversed()));
    EXPECT_FALSE(is_isomorphic(Digraph(3, out_star), Digraph(3, out_star).reversed()));
}

TEST(Canonical, ClassCountsMatchUnlabelledDigraphs)
{
    // unlabelled loopless digraphs on n vertices: 1, 3, 16, 218
    const std::uint64_t expected[] = {0, 1, 3, 16, 218};
    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> forms;
        std::uint64_t representatives = 0;
        for (std::uint64_t i = 0; i < host_count(n); ++i) {
            const auto g = Digraph::from_index(n, i);
            forms.insert(canonical_form(g));
            representatives += is_canonical_representative(g) ? 1 : 0;
        }
        EXPECT_EQ(forms.size(), expected[n]) << "n=" << n;
        EXPECT_EQ(representatives, expected[n]) << "n=" << n;
    }
}

TEST(Canonical, FormLayout)
{
    const auto form = canonical_form(Digraph(3));
    ASSERT_FALSE(form.empty());
    EXPECT_EQ(form[0], char{3});
    EXPECT_THROW(canonical_form(Digraph(9)), DomainError);
}
