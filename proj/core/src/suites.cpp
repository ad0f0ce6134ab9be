#include "dihom/suites.hpp"
#include "dihom/error.hpp"
#include "dihom/inequalities.hpp"
#include "dihom/io.hpp"
#include "dihom/parallel.hpp"
#include "dihom/random.hpp"

#include <array>
#include <string>
#include <vector>

namespace dihom {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"main",     "star-holder", "geom-mean", "tail",
                                                    "envelope", "weighted",    "mv-path",   "moments"};

struct Instance {
    std::string description;
    std::vector<BoundReport> reports;
    double unscaled_tail_ratio = 0.0;
};

Digraph random_host(int max_n, Rng& rng)
{
    const int n = rng.between(1, max_n);
    return gen_erdos_renyi_digraph(n, rng.between(1, 9) / 10.0, rng);
}

std::string describe(const RootedDirectedTree& t, const Digraph& h)
{
    return "tree=" + to_literal(t) + " host=" + format_matrix_inline(h);
}

std::string describe(const NonnegMatrix& a)
{
    std::string s = "[";
    for (int i = 0; i < a.n(); ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < a.n(); ++j)
            s += (j ? "," : "") + to_string(a.at(i, j));
        s += "]";
    }
    return s + "]";
}

double ratio(const BoundReport& r)
{
    return r.rhs.approx > 0.0 ? r.lhs.approx / r.rhs.approx : 0.0;
}

Instance make_instance(Inequality which, Rng& rng)
{
    Instance out;
    switch (which) {
    case Inequality::Main: {
        const auto t = random_tree(rng.between(1, 7), rng);
        const auto h = random_host(10, rng);
        out.description = describe(t, h);
        out.reports.push_back(check_main_theorem(t, h));
        break;
    }
    case Inequality::StarHolder: {
        const int n = rng.between(1, 6);
        const int k = rng.between(0, n);
        const auto h = random_host(8, rng);
        out.description = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " host=" + format_matrix_inline(h);
        out.reports.push_back(check_star_holder(n, k, h));
        break;
    }
    case Inequality::GeomMean: {
        RootedDirectedTree t;
        std::vector<int> sk;
        do {
            t = random_tree(rng.between(4, 6), rng);
            sk = skeleton_leaves(t);
        } while (sk.size() < 2);
        const auto i = rng.below(sk.size());
        auto j = rng.below(sk.size() - 1);
        if (j >= i)
            ++j;
        const auto h = random_host(5, rng);
        out.description = describe(t, h) + " a=" + std::to_string(sk[i]) + " b=" + std::to_string(sk[j]);
        const auto check = check_geometric_mean(t, sk[i], sk[j], h);
        out.reports.push_back(check.geometric);
        out.reports.push_back(check.max_form);
        break;
    }
    case Inequality::Tail: {
        const auto t = random_tree(rng.between(1, 5), rng);
        const auto h = random_host(6, rng);
        const int delta = rng.between(0, 6);
        WeightVector alpha;
        std::string weights;
        for (int x = 0; x < t.size(); ++x) {
            alpha.emplace_back(rng.between(0, 2));
            weights += (x ? "," : "") + to_string(alpha.back());
        }
        out.description = describe(t, h) + " delta=" + std::to_string(delta) + " alpha=" + weights;
        out.reports.push_back(check_tail_theorem(t, h, delta, alpha));
        out.reports.push_back(check_tail_unweighted(t, h, delta));
        const auto& weighted = out.reports.front();
        if (weighted.rhs.approx > 0.0)
            out.unscaled_tail_ratio = 4.0 * weighted.lhs.approx / weighted.rhs.approx;
        break;
    }
    case Inequality::Envelope: {
        static const std::array<Rational, 4> ps = {Rational(1), Rational(3, 2), Rational(2), Rational(4)};
        const auto t = random_tree(rng.between(1, 6), rng);
        const auto h = random_host(6, rng);
        std::vector<Rational> exponents(t.size(), Rational(1));
        const bool mixed = rng.bernoulli(0.5);
        const Rational uniform = ps[rng.below(ps.size())];
        std::string listed;
        for (int x = 1; x < t.size(); ++x) {
            exponents[x] = mixed ? ps[rng.below(ps.size())] : uniform;
            listed += (x > 1 ? "," : "") + to_string(exponents[x]);
        }
        out.description = describe(t, h) + " p=" + listed;
        out.reports = check_pointwise_envelope(t, h, exponents);
        break;
    }
    case Inequality::Weighted: {
        const auto a = random_rational_matrix(rng.between(1, 4), 3, 4, rng);
        const auto t = random_tree(rng.between(1, 5), rng);
        out.description = "tree=" + to_literal(t) + " matrix=" + describe(a);
        out.reports.push_back(check_weighted_tree(t, a));
        break;
    }
    case Inequality::MvPath: {
        const auto a = random_rational_matrix(rng.between(1, 4), 3, 4, rng);
        const int p = rng.between(1, 3);
        out.description = "p=" + std::to_string(p) + " matrix=" + describe(a);
        out.reports.push_back(check_mv_path(p, a));
        // sqrt(XY) <= max{X, Y}, squared.
        Rational col = 0, row = 0;
        for (int i = 0; i < a.n(); ++i) {
            col += pow(a.column_sum(i), static_cast<unsigned long>(p));
            row += pow(a.row_sum(i), static_cast<unsigned long>(p));
        }
        const Rational best = std::max(col, row);
        out.reports.push_back(make_report("mv-path vs max", col * row, best * best));
        break;
    }
    case Inequality::Moments: {
        const auto t = random_tree(rng.between(1, 6), rng);
        const auto h = random_host(8, rng);
        out.description = describe(t, h);
        out.reports.push_back(check_moment_domination(t, h));
        break;
    }
    }
    return out;
}

} // namespace

Inequality parse_inequality(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<Inequality>(i);
    throw ParseError("unknown inequality '" + std::string(name) + "'");
}

std::string_view inequality_name(Inequality which) { return kNames[static_cast<std::size_t>(which)]; }

SuiteResult run_suite(Inequality which, int count, std::uint64_t seed, int workers)
{
    if (count < 0)
        throw DomainError("suite size must be nonnegative");
    std::vector<Instance> instances(static_cast<std::size_t>(count));
    parallel_for(instances.size(), resolve_workers(workers), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        instances[i] = make_instance(which, rng);
    });

    SuiteResult result;
    result.label = std::string(inequality_name(which));
    result.seed = seed;
    result.instances = count;
    for (const auto& inst : instances) {
        for (const auto& r : inst.reports) {
            ++result.checks;
            result.max_ratio = std::max(result.max_ratio, ratio(r));
            if (!r.holds) {
                ++result.violations;
                if (!result.first_violation) {
                    result.first_violation = r;
                    result.first_violation_instance = inst.description;
                }
            }
        }
        result.max_unscaled_tail_ratio = std::max(result.max_unscaled_tail_ratio, inst.unscaled_tail_ratio);
    }
    return result;
}

} // namespace dihom
