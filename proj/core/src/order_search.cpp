#include "dihom/order_search.hpp"
#include "dihom/enumerate.hpp"
#include "dihom/error.hpp"
#include "dihom/homcount.hpp"
#include "dihom/parallel.hpp"
#include "dihom/tree_counter.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dihom {

namespace {

struct Hit {
    std::uint64_t index = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
};

// One comparison inside a sweep: pattern a against pattern b, or against
// max(b, b_rev) when b_rev >= 0.
struct PairJob {
    int a = 0;
    int b = 0;
    int b_rev = -1;
    int gt_n = 0;
    int lt_n = 0;
    std::optional<Hit> gt;
    std::optional<Hit> lt;

    bool resolved() const { return gt && lt; }
};

struct PatternSet {
    std::vector<RootedDirectedTree> trees;
    std::map<std::string, int> by_code;

    int add(const RootedDirectedTree& t)
    {
        const auto [it, inserted] = by_code.emplace(tree_code(t), static_cast<int>(trees.size()));
        if (inserted)
            trees.push_back(t);
        return it->second;
    }
};

void check_n_max(int n_max)
{
    if (n_max < 1 || n_max > kMaxSweepVertices)
        throw DomainError("n_max must lie in [1, " + std::to_string(kMaxSweepVertices) + "]");
}

// Sweeps hosts n = 1..n_max; each job is settled at the first n where both
// strict directions have occurred. Hits are the first by enumeration index.
void sweep(const std::vector<RootedDirectedTree>& patterns, std::vector<PairJob>& jobs, int n_max, int workers)
{
    workers = resolve_workers(workers);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> active;
        for (std::size_t j = 0; j < jobs.size(); ++j)
            if (!jobs[j].resolved())
                active.push_back(j);
        if (active.empty())
            return;

        const std::uint64_t total = host_count(n);
        const auto slices = static_cast<std::size_t>(std::min<std::uint64_t>(workers, total));
        // per slice, per active job: first gt / lt hit inside the slice
        std::vector<std::vector<std::optional<Hit>>> gt(slices), lt(slices);
        parallel_slices(slices, static_cast<int>(slices), [&](std::size_t s_begin, std::size_t s_end, int) {
            for (std::size_t s = s_begin; s < s_end; ++s) {
                const std::uint64_t begin = total * s / slices;
                const std::uint64_t end = total * (s + 1) / slices;
                std::vector<TreeCounter> counters;
                counters.reserve(patterns.size());
                for (const auto& t : patterns)
                    counters.emplace_back(t);
                std::vector<std::uint64_t> counts(patterns.size());
                auto& my_gt = gt[s];
                auto& my_lt = lt[s];
                my_gt.assign(active.size(), std::nullopt);
                my_lt.assign(active.size(), std::nullopt);
                std::size_t open = 0;
                for (std::size_t i = 0; i < active.size(); ++i) {
                    const auto& job = jobs[active[i]];
                    open += (job.gt ? 0 : 1) + (job.lt ? 0 : 1);
                }
                for (std::uint64_t index = begin; index < end && open > 0; ++index) {
                    const Digraph host = Digraph::from_index(n, index);
                    for (std::size_t p = 0; p < patterns.size(); ++p)
                        counts[p] = counters[p].count(host);
                    for (std::size_t i = 0; i < active.size(); ++i) {
                        const auto& job = jobs[active[i]];
                        const std::uint64_t ca = counts[job.a];
                        std::uint64_t cb = counts[job.b];
                        if (job.b_rev >= 0)
                            cb = std::max(cb, counts[job.b_rev]);
                        if (ca > cb && !job.gt && !my_gt[i]) {
                            my_gt[i] = Hit{index, ca, cb};
                            --open;
                        } else if (ca < cb && !job.lt && !my_lt[i]) {
                            my_lt[i] = Hit{index, ca, cb};
                            --open;
                        }
                    }
                }
            }
        });
        for (std::size_t i = 0; i < active.size(); ++i) {
            auto& job = jobs[active[i]];
            for (std::size_t s = 0; s < slices; ++s) {
                if (!job.gt && gt[s][i]) {
                    job.gt = gt[s][i];
                    job.gt_n = n;
                }
                if (!job.lt && lt[s][i]) {
                    job.lt = lt[s][i];
                    job.lt_n = n;
                }
            }
        }
    }
}

HostWitness to_witness(int n, const Hit& hit)
{
    return HostWitness{Digraph::from_index(n, hit.index), hit.index, BigCount(hit.count_a), BigCount(hit.count_b)};
}

OrderVerdict to_verdict(const PairJob& job, const RootedDirectedTree& a, const RootedDirectedTree& b, int n_max)
{
    OrderVerdict v;
    v.n_max = n_max;
    v.a = a;
    v.b = b;
    v.max_order = job.b_rev >= 0;
    if (job.gt)
        v.gt = to_witness(job.gt_n, *job.gt);
    if (job.lt)
        v.lt = to_witness(job.lt_n, *job.lt);
    if (v.gt && v.lt)
        v.kind = VerdictKind::IncomparableWitnessed;
    else if (v.gt)
        v.kind = VerdictKind::DominatesUpTo;
    else if (v.lt)
        v.kind = VerdictKind::DominatedUpTo;
    else
        v.kind = VerdictKind::EqualUpTo;
    return v;
}

std::vector<OrderVerdict> run_pairs(const std::vector<std::pair<RootedDirectedTree, RootedDirectedTree>>& pairs,
                                    bool max_order, int n_max, int workers)
{
    check_n_max(n_max);
    PatternSet set;
    std::vector<PairJob> jobs;
    for (const auto& [a, b] : pairs) {
        if (max_order && a.size() != b.size())
            throw DomainError("max-order comparison needs trees of equal size");
        PairJob job;
        job.a = set.add(a);
        job.b = set.add(b);
        if (max_order)
            job.b_rev = set.add(b.reversed());
        jobs.push_back(job);
    }
    sweep(set.trees, jobs, n_max, workers);
    std::vector<OrderVerdict> out;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out.push_back(to_verdict(jobs[i], pairs[i].first, pairs[i].second, n_max));
    return out;
}

} // namespace

bool verify_witness(const WitnessRecord& w)
{
    const Digraph pa = w.a.to_digraph();
    const Digraph pb = w.b.to_digraph();
    const Digraph pb_rev = w.b.reversed().to_digraph();
    auto check = [&](const HostWitness& hw) {
        const BigCount ca = hom_general(pa, hw.host);
        BigCount cb = hom_general(pb, hw.host);
        if (w.max_order)
            cb = std::max(cb, hom_general(pb_rev, hw.host));
        return ca == hw.count_a && cb == hw.count_b;
    };
    return check(w.gt) && check(w.lt) && w.gt.count_a > w.gt.count_b && w.lt.count_a < w.lt.count_b;
}

std::string_view verdict_name(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::IncomparableWitnessed:
        return "incomparable";
    case VerdictKind::DominatesUpTo:
        return "dominates";
    case VerdictKind::DominatedUpTo:
        return "dominated";
    case VerdictKind::EqualUpTo:
        return "equal";
    }
    return "unknown";
}

std::optional<WitnessRecord> OrderVerdict::witness() const
{
    if (kind != VerdictKind::IncomparableWitnessed)
        return std::nullopt;
    return WitnessRecord{a, b, *gt, *lt, max_order};
}

OrderVerdict compare_over_hosts(const RootedDirectedTree& a, const RootedDirectedTree& b, int n_max, int workers)
{
    return run_pairs({{a, b}}, false, n_max, workers).front();
}

OrderVerdict compare_maxorder(const RootedDirectedTree& t, const RootedDirectedTree& s, int n_max, int workers)
{
    return run_pairs({{t, s}}, true, n_max, workers).front();
}

std::vector<OrderVerdict> compare_family(const std::vector<RootedDirectedTree>& trees, int n_max, int workers,
                                         bool max_order)
{
    std::vector<std::pair<RootedDirectedTree, RootedDirectedTree>> pairs;
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = 0; j < trees.size(); ++j)
            if (max_order ? i != j : i < j)
                pairs.emplace_back(trees[i], trees[j]);
    return run_pairs(pairs, max_order, n_max, workers);
}

DeltaIdentity delta_identity(const Digraph& h)
{
    DeltaIdentity d;
    d.lhs = BigInt(hom_tree(make_oriented_path("+-+"), h)) - BigInt(hom_tree(make_oriented_path("+++"), h));
    d.rhs = 0;
    for (const auto& arc : h.arcs())
        d.rhs += static_cast<long>(h.deg_in(arc.to)) * h.deg_out(arc.from)
            - static_cast<long>(h.deg_in(arc.from)) * h.deg_out(arc.to);
    d.equal = d.lhs == d.rhs;
    return d;
}

Digraph make_star_host(int sources, int sinks)
{
    if (sources < 0 || sinks < 0 || 1 + sources + sinks > kMaxVertices)
        throw DomainError("star host needs m, n >= 0 and 1 + m + n <= 64");
    std::vector<Arc> arcs;
    for (int u = 1; u <= sources; ++u)
        arcs.push_back({u, 0});
    for (int w = sources + 1; w <= sources + sinks; ++w)
        arcs.push_back({0, w});
    return Digraph(1 + sources + sinks, arcs);
}

std::vector<BoundReport> star_incomparability_suite(int h, int m, int n)
{
    if (h < 1 || m < 0 || n < 0)
        throw DomainError("star suite needs h >= 1 and m, n >= 0");
    auto label = [](std::string_view what, int a, int b, int m_, int n_) {
        return std::string(what) + " S_{" + std::to_string(a) + "," + std::to_string(b) + "} on H_{"
            + std::to_string(m_) + "," + std::to_string(n_) + "}";
    };
    std::vector<BoundReport> out;
    const Digraph mixed = make_star_host(m, n);
    for (int a = 1; a <= h - 1; ++a)
        out.push_back(make_report(label("closed form", a, h - a, m, n), Rational(star_hom(a, h - a, mixed)),
                                  Rational(pow(BigCount(m), a) * pow(BigCount(n), h - a)), Relation::Equal));

    // Pure in-host: sources have out-degree 1, so only c = 0 picks them up.
    const Digraph in_host = make_star_host(m, 0);
    for (int c = 0; c < h; ++c)
        out.push_back(make_report(label("pure in-host", c, h - c, m, 0), Rational(star_hom(c, h - c, in_host)),
                                  Rational(c == 0 ? m : 0), Relation::Equal));
    out.push_back(make_report(label("lower bound m^h <=", h, 0, m, 0), Rational(pow(BigCount(m), h)),
                              Rational(star_hom(h, 0, in_host))));

    const Digraph out_host = make_star_host(0, n);
    for (int c = 1; c <= h; ++c)
        out.push_back(make_report(label("pure out-host", c, h - c, 0, n), Rational(star_hom(c, h - c, out_host)),
                                  Rational(c == h ? n : 0), Relation::Equal));
    out.push_back(make_report(label("lower bound n^h <=", 0, h, 0, n), Rational(pow(BigCount(n), h)),
                              Rational(star_hom(0, h, out_host))));
    return out;
}

std::vector<RootedDirectedTree> tree_family(std::string_view family, int h)
{
    if (family == "trees-k3")
        return enumerate_directed_trees(3);
    if (family == "trees-k4")
        return enumerate_directed_trees(4);
    if (family == "stars-h") {
        if (h < 1)
            throw DomainError("stars-h needs h >= 1");
        std::vector<RootedDirectedTree> out;
        for (int a = 0; a <= h; ++a)
            out.push_back(make_star(a, h - a));
        return out;
    }
    throw ParseError("unknown tree family '" + std::string(family) + "'");
}

} // namespace dihom
