#include "dihom/inequalities.hpp"
#include "dihom/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace dihom {

namespace {

// Natural log of a positive integer without overflowing binary64.
double log_of(const BigCount& x)
{
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigCount max_pure_star(int arcs, const Digraph& h)
{
    return std::max(degree_moment(0, arcs, h), degree_moment(arcs, 0, h));
}

bool within_guard_band(double a, double b)
{
    return std::abs(a - b) <= kGuardBand * std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
}

} // namespace

BoundReport check_main_theorem(const RootedDirectedTree& t, const Digraph& h)
{
    return make_report("main", Rational(hom_tree(t, h)), Rational(max_pure_star(t.size() - 1, h)));
}

BoundReport check_star_holder(int n, int k, const Digraph& h)
{
    if (n < 1)
        throw DomainError("star Hoelder bound needs n >= 1");
    if (k < 0 || k > n)
        throw DomainError("star Hoelder bound needs 0 <= k <= n");
    const std::string label = "star-holder n=" + std::to_string(n) + " k=" + std::to_string(k);
    const BigCount lhs = degree_moment(n - k, k, h);
    const BigCount in_sum = degree_moment(n, 0, h);
    const BigCount out_sum = degree_moment(0, n, h);
    if (k == 0)
        return make_report(label, Rational(lhs), Rational(in_sum));
    if (k == n)
        return make_report(label, Rational(lhs), Rational(out_sum));
    if (in_sum == 0 || out_sum == 0)
        return make_report(label, Rational(lhs), Rational(0));

    const double nn = n;
    const double rhs = std::exp((n - k) / nn * log_of(in_sum) + k / nn * log_of(out_sum));
    BoundReport r;
    r.label = label;
    r.lhs = Quantity::of(lhs);
    r.rhs = Quantity::of_float(rhs);
    const double lhs_d = lhs.get_d();
    if (within_guard_band(lhs_d, rhs)) {
        r.holds = pow(lhs, n) <= pow(in_sum, n - k) * pow(out_sum, k);
        r.certified = true;
    } else {
        r.holds = lhs_d <= rhs;
    }
    return r;
}

std::vector<int> skeleton_leaves(const RootedDirectedTree& t)
{
    std::vector<int> out;
    for (int x = 0; x < t.size(); ++x) {
        if (t.degree(x) <= 1)
            continue;
        int inner = 0;
        for (int y : t.neighbours(x))
            inner += t.degree(y) > 1 ? 1 : 0;
        if (inner == 1)
            out.push_back(x);
    }
    return out;
}

Reallocation leaf_reallocation_candidates(const RootedDirectedTree& t, int a, int b)
{
    if (a == b)
        throw DomainError("leaf reallocation needs two distinct skeleton leaves");
    const auto sk = skeleton_leaves(t);
    auto is_sk_leaf = [&](int x) { return std::find(sk.begin(), sk.end(), x) != sk.end(); };
    if (!is_sk_leaf(a) || !is_sk_leaf(b))
        throw DomainError("vertices " + std::to_string(a) + ", " + std::to_string(b)
                          + " are not both leaves of the skeleton");

    const auto r = reduce_pendant_leaves(t, a, b);
    Reallocation out{r.reduced, r.a, r.b, r.in_leaves_a, r.out_leaves_a, r.in_leaves_b, r.out_leaves_b, 0,
                     {r.reduced, r.reduced, r.reduced, r.reduced}};
    out.moved = r.in_leaves_a + r.out_leaves_a + r.in_leaves_b + r.out_leaves_b;

    std::vector<int> parent;
    std::vector<ArcDir> dir;
    for (int x = 0; x < r.reduced.size(); ++x) {
        parent.push_back(r.reduced.parent(x));
        dir.push_back(r.reduced.dir(x));
    }
    auto attach = [&](int at, ArcDir d) {
        auto p = parent;
        auto o = dir;
        for (int i = 0; i < out.moved; ++i) {
            p.push_back(at);
            o.push_back(d);
        }
        return RootedDirectedTree(std::move(p), std::move(o));
    };
    out.candidates = {attach(r.a, ArcDir::In), attach(r.a, ArcDir::Out), attach(r.b, ArcDir::In),
                      attach(r.b, ArcDir::Out)};
    return out;
}

GeometricMeanCheck check_geometric_mean(const RootedDirectedTree& t, int a, int b, const Digraph& h)
{
    const auto re = leaf_reallocation_candidates(t, a, b);
    const BigCount lhs = hom_tree(t, h);
    GeometricMeanCheck out;
    for (int j = 0; j < 4; ++j)
        out.candidate_counts[j] = hom_tree(re.candidates[j], h);
    const auto e = re.exponents();
    const int m = re.moved;

    BigCount product = 1;
    bool zero = false;
    double log_rhs = 0.0;
    for (int j = 0; j < 4; ++j) {
        if (e[j] == 0)
            continue;
        product *= pow(out.candidate_counts[j], e[j]);
        if (out.candidate_counts[j] == 0)
            zero = true;
        else
            log_rhs += static_cast<double>(e[j]) / m * log_of(out.candidate_counts[j]);
    }
    BoundReport& g = out.geometric;
    g.label = "geom-mean";
    g.lhs = Quantity::of(lhs);
    g.rhs = zero ? Quantity::of(Rational(0)) : Quantity::of_float(std::exp(log_rhs));
    g.holds = pow(lhs, m) <= product;
    g.certified = true;

    const BigCount best = *std::max_element(out.candidate_counts.begin(), out.candidate_counts.end());
    out.max_form = make_report("geom-mean max-form", Rational(lhs), Rational(best));
    return out;
}

std::vector<TraceStep> reallocation_trace(const RootedDirectedTree& t, const Digraph& h)
{
    std::vector<TraceStep> steps;
    RootedDirectedTree current = t;
    for (int guard = 0; guard <= t.size(); ++guard) {
        const auto sk = skeleton_leaves(current);
        if (sk.size() < 2)
            break;
        const auto re = leaf_reallocation_candidates(current, sk[0], sk[1]);
        std::size_t pick = 0;
        BigCount best = -1;
        std::string best_code;
        for (std::size_t j = 0; j < 4; ++j) {
            const BigCount c = hom_tree(re.candidates[j], h);
            const auto code = tree_code(re.candidates[j]);
            if (c > best || (c == best && code < best_code)) {
                best = c;
                best_code = code;
                pick = j;
            }
        }
        steps.push_back({current, make_report("reallocation", Rational(hom_tree(current, h)), Rational(best))});
        current = re.candidates[pick];
    }
    const int arcs = current.arc_count();
    if (arcs == 0) {
        steps.push_back({current, make_report("pure-star", Rational(hom_tree(current, h)), Rational(hom_tree(current, h)),
                                              Relation::Equal)});
        return steps;
    }
    const BigCount out_star = degree_moment(0, arcs, h);
    const BigCount in_star = degree_moment(arcs, 0, h);
    const auto pure = out_star >= in_star ? make_star(0, arcs) : make_star(arcs, 0);
    if (tree_code(pure) != tree_code(current))
        steps.push_back({current, make_report("star-to-pure", Rational(hom_tree(current, h)),
                                              Rational(std::max(out_star, in_star)))});
    const BigCount final_count = std::max(out_star, in_star);
    steps.push_back({pure, make_report("pure-star", Rational(final_count), Rational(final_count), Relation::Equal)});
    return steps;
}

BigCount tail_degree_sum(const Digraph& h, int delta, unsigned long power)
{
    BigCount total = 0;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) >= delta)
            total += degree_power(h.degree(v), power);
    return total;
}

BoundReport check_tail_theorem(const RootedDirectedTree& t, const Digraph& h, int delta, const WeightVector& alpha)
{
    Rational weight = 0;
    for (const auto& a : alpha) {
        if (a.get_den() != 1)
            throw DomainError("the exact tail check needs integer weights");
        weight += a;
    }
    const auto lhs = hom_tail(t, h, delta, alpha);
    const unsigned long power = static_cast<unsigned long>(t.size() - 1) + weight.get_num().get_ui();
    return make_report("tail", Rational(lhs.value), Rational(4 * tail_degree_sum(h, delta, power)));
}

BoundReport check_tail_unweighted(const RootedDirectedTree& t, const Digraph& h, int delta)
{
    const auto lhs = hom_tail(t, h, delta, WeightVector(t.size(), Rational(0)));
    return make_report("tail-unweighted", Rational(lhs.value),
                       Rational(2 * tail_degree_sum(h, delta, static_cast<unsigned long>(t.size() - 1))));
}

std::vector<double> pointwise_envelope(const RootedDirectedTree& t, const Digraph& h,
                                       const std::vector<Rational>& exponents)
{
    const int k = t.size();
    const int n = h.n();
    if (static_cast<int>(exponents.size()) != k)
        throw DomainError("envelope needs one exponent per tree vertex (entry 0 unused)");
    for (int x = 1; x < k; ++x)
        if (exponents[x] < 1)
            throw DomainError("envelope exponents must satisfy p >= 1");
    std::vector<double> e(static_cast<std::size_t>(k) * n, 1.0);
    for (int x = k - 1; x >= 1; --x) {
        const double p = exponents[x].get_d();
        const int parent = t.parent(x);
        const bool out = t.dir(x) == ArcDir::Out;
        for (int v = 0; v < n; ++v) {
            double& target = e[parent * n + v];
            if (target == 0.0)
                continue;
            double psum = 0.0;
            const Row nb = out ? h.out_row(v) : h.in_row(v);
            for (Row bits = nb; bits; bits &= bits - 1)
                psum += std::pow(e[x * n + std::countr_zero(bits)], p);
            const double deg = out ? h.deg_out(v) : h.deg_in(v);
            target *= std::pow(deg, 1.0 - 1.0 / p) * std::pow(psum, 1.0 / p);
        }
    }
    e.resize(static_cast<std::size_t>(n));
    return e;
}

std::vector<BoundReport> check_pointwise_envelope(const RootedDirectedTree& t, const Digraph& h,
                                                  const std::vector<Rational>& exponents)
{
    const auto exact = rooted_counts(t, h);
    const auto envelope = pointwise_envelope(t, h, exponents);
    std::vector<BoundReport> out;
    for (int v = 0; v < h.n(); ++v) {
        BoundReport r;
        r.label = "envelope v=" + std::to_string(v);
        r.lhs = Quantity::of(exact[v]);
        r.rhs = Quantity::of_float(envelope[v]);
        r.holds = envelope[v] >= exact[v].get_d() * (1.0 - kGuardBand);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BoundReport> check_pointwise_envelope(const RootedDirectedTree& t, const Digraph& h, const Rational& p)
{
    return check_pointwise_envelope(t, h, std::vector<Rational>(t.size(), p));
}

BoundReport check_weighted_tree(const RootedDirectedTree& t, const NonnegMatrix& a)
{
    const unsigned long power = static_cast<unsigned long>(t.size() - 1);
    Rational col = 0, row = 0;
    for (int i = 0; i < a.n(); ++i) {
        col += pow(a.column_sum(i), power);
        row += pow(a.row_sum(i), power);
    }
    return make_report("weighted", hom_weighted(t, a), std::max(col, row));
}

Rational matrix_power_sum(const NonnegMatrix& a, int p)
{
    if (p < 1)
        throw DomainError("matrix power needs p >= 1");
    const int n = a.n();
    std::vector<Rational> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i * n + j] = a.at(i, j);
    for (int step = 1; step < p; ++step) {
        std::vector<Rational> next(static_cast<std::size_t>(n) * n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m[i * n + l] == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    next[i * n + j] += m[i * n + l] * a.at(l, j);
            }
        m = std::move(next);
    }
    Rational total = 0;
    for (const auto& e : m)
        total += e;
    return total;
}

BoundReport check_mv_path(int p, const NonnegMatrix& a)
{
    if (p < 1)
        throw DomainError("path bound needs p >= 1");
    const Rational lhs = matrix_power_sum(a, p);
    Rational col = 0, row = 0;
    for (int i = 0; i < a.n(); ++i) {
        col += pow(a.column_sum(i), static_cast<unsigned long>(p));
        row += pow(a.row_sum(i), static_cast<unsigned long>(p));
    }
    const Rational product = col * row;
    BoundReport r;
    r.label = "mv-path p=" + std::to_string(p);
    r.lhs = Quantity::of(lhs);
    if (mpz_perfect_square_p(product.get_num_mpz_t()) && mpz_perfect_square_p(product.get_den_mpz_t())) {
        BigCount num, den;
        mpz_sqrt(num.get_mpz_t(), product.get_num_mpz_t());
        mpz_sqrt(den.get_mpz_t(), product.get_den_mpz_t());
        r.rhs = Quantity::of(Rational(num, den));
    } else {
        r.rhs = Quantity::of_float(std::sqrt(product.get_d()));
    }
    r.holds = lhs * lhs <= product;
    r.certified = true;
    return r;
}

BoundReport check_moment_domination(const RootedDirectedTree& t, const Digraph& h)
{
    if (h.n() == 0)
        throw DomainError("moment domination needs a nonempty host");
    const Rational n = h.n();
    return make_report("moments", Rational(hom_tree(t, h)) / n, Rational(max_pure_star(t.size() - 1, h)) / n);
}

} // namespace dihom
