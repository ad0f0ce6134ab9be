#include "dihom/experiments.hpp"
#include "dihom/enumerate.hpp"
#include "dihom/error.hpp"
#include "dihom/inequalities.hpp"
#include "dihom/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace dihom {

bool DegreeMomentSummary::sandwich_holds() const
{
    const Rational sum = mean_in_pow + mean_out_pow;
    return sum <= mean_total_pow && mean_total_pow <= Rational(pow(BigCount(2), static_cast<unsigned long>(h - 1))) * sum;
}

DegreeMomentSummary degree_moment_summary(const Digraph& g, int h)
{
    if (h < 2)
        throw DomainError("degree moment summary needs h >= 2");
    if (g.n() == 0)
        throw DomainError("degree moment summary of an empty host");
    const auto power = static_cast<unsigned long>(h - 1);
    BigCount in = 0, out = 0, total = 0;
    for (int v = 0; v < g.n(); ++v) {
        in += degree_power(g.deg_in(v), power);
        out += degree_power(g.deg_out(v), power);
        total += degree_power(g.degree(v), power);
    }
    const Rational n = g.n();
    return DegreeMomentSummary{g.n(), h, Rational(in) / n, Rational(out) / n, Rational(total) / n};
}

ExplorationReport exploration_bound_report(const Digraph& g, int k)
{
    if (k < 2)
        throw DomainError("exploration bound needs k >= 2");
    ExplorationReport out;
    out.k = k;
    out.all_hold = true;
    for (const auto& t : enumerate_directed_trees(k - 1)) {
        out.per_tree.emplace_back(t, check_main_theorem(t, g));
        out.all_hold = out.all_hold && out.per_tree.back().second.holds;
    }
    for (std::size_t i = 1; i < out.per_tree.size(); ++i)
        if (*out.per_tree[i].second.slack().exact < *out.per_tree[out.worst].second.slack().exact)
            out.worst = i;
    return out;
}

DiscretePareto::DiscretePareto(double tail_exponent, std::uint64_t cap) : cap_(cap)
{
    if (!(tail_exponent > 0.0))
        throw DomainError("Pareto tail exponent must be positive");
    if (cap < 1)
        throw DomainError("Pareto truncation must be at least 1");
    cumulative_.reserve(cap);
    double acc = 0.0;
    for (std::uint64_t d = 1; d <= cap; ++d)
        cumulative_.push_back(acc += std::pow(static_cast<double>(d), -(1.0 + tail_exponent)));
}

std::uint64_t DiscretePareto::sample(Rng& rng) const
{
    const double u = rng.uniform01() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(it - cumulative_.begin()) + 1, cap_);
}

TwoPathSample evaluate_two_path(std::span<const std::uint64_t> neighbour_degrees, double p)
{
    if (!(p >= 1.0))
        throw DomainError("envelope exponent must satisfy p >= 1");
    TwoPathSample s;
    double psum = 0.0;
    for (auto d : neighbour_degrees) {
        s.hom += static_cast<double>(d);
        psum += std::pow(static_cast<double>(d), p);
    }
    const double deg = static_cast<double>(neighbour_degrees.size());
    s.envelope = std::pow(deg, 1.0 - 1.0 / p) * std::pow(psum, 1.0 / p);
    s.envelope_holds = s.envelope >= s.hom * (1.0 - kGuardBand);
    return s;
}

HeavyTailReport heavy_tail_experiment(const HeavyTailParams& params, int workers)
{
    if (params.d_root < 1)
        throw DomainError("root degree must be at least 1");
    if (params.samples < 1)
        throw DomainError("need at least one sample");
    if (params.tail_exponent <= 0 || params.tail_exponent >= 1)
        throw DomainError("tail exponent must lie in (0, 1)");
    if (params.r <= 0 || params.r >= 1)
        throw DomainError("moment order r must lie in (0, 1)");
    if (params.r >= params.tail_exponent)
        throw DomainError("moment order r must be below the tail exponent");
    if (params.p <= 1)
        throw DomainError("envelope exponent p must exceed 1");

    const DiscretePareto law(params.tail_exponent.get_d());
    const double r = params.r.get_d();
    const double p = params.p.get_d();
    const auto count = static_cast<std::size_t>(params.samples);
    std::vector<double> hom_r(count), degree_r(count);
    std::vector<char> ok(count);
    parallel_for(count, resolve_workers(workers), [&](std::size_t s) {
        Rng rng(derive_seed(params.seed, s));
        std::vector<std::uint64_t> degrees(static_cast<std::size_t>(params.d_root));
        double dr = 0.0;
        for (auto& d : degrees) {
            d = law.sample(rng);
            dr += std::pow(static_cast<double>(d), r);
        }
        const auto sample = evaluate_two_path(degrees, p);
        hom_r[s] = std::pow(sample.hom, r);
        degree_r[s] = dr;
        ok[s] = sample.envelope_holds ? 1 : 0;
    });

    auto kahan = [](const std::vector<double>& xs) {
        double sum = 0.0, c = 0.0;
        for (double x : xs) {
            const double y = x - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        return sum;
    };
    HeavyTailReport out;
    out.params = params;
    out.truncation = law.cap();
    out.envelope_violations = static_cast<int>(std::count(ok.begin(), ok.end(), 0));
    out.mean_hom_r = kahan(hom_r) / params.samples;
    out.mean_degree_r = kahan(degree_r) / (static_cast<double>(params.samples) * params.d_root);
    out.subadditive_bound = params.d_root * out.mean_degree_r;
    out.scaled_bound = std::pow(static_cast<double>(params.d_root), r) * out.mean_degree_r;
    out.subadditive_ratio = out.mean_hom_r / out.subadditive_bound;
    out.scaled_ratio = out.mean_hom_r / out.scaled_bound;
    out.envelope_holds = out.envelope_violations == 0;
    out.moment_holds = out.mean_hom_r <= out.subadditive_bound * 1.05;
    return out;
}

} // namespace dihom
