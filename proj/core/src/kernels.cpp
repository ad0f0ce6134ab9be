#include "dihom/kernels.hpp"
#include "dihom/error.hpp"
#include "dihom/homcount.hpp"
#include "dihom/parallel.hpp"
#include "dihom/random.hpp"

#include <cmath>
#include <sstream>

namespace dihom {

StepKernel::StepKernel(std::vector<Rational> masses, std::vector<Rational> values)
    : masses_(std::move(masses)), values_(std::move(values))
{
    const std::size_t n = masses_.size();
    if (n == 0)
        throw DomainError("step kernel needs at least one block");
    if (values_.size() != n * n)
        throw DomainError("step kernel needs N x N values");
    Rational total = 0;
    for (const auto& m : masses_) {
        if (m < 0)
            throw DomainError("block masses must be nonnegative");
        total += m;
    }
    if (total != 1)
        throw DomainError("block masses must sum to 1, got " + to_string(total));
    for (const auto& v : values_)
        if (v < 0 || v > 1)
            throw DomainError("kernel values must lie in [0, 1]");
}

StepKernel parse_kernel(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        std::string w;
        while (words >> w)
            tokens.push_back(w);
        if (!tokens.empty())
            lines.push_back(std::move(tokens));
    }
    if (lines.empty() || lines[0].size() != 1)
        throw ParseError("kernel file must start with a line holding N");
    const Rational header = parse_rational(lines[0][0]);
    if (header.get_den() != 1 || header < 1 || header > kMaxVertices)
        throw ParseError("kernel block count must be an integer in [1, 64]");
    const auto n = static_cast<std::size_t>(header.get_num().get_si());
    if (lines.size() != n + 2)
        throw ParseError("kernel file needs N, a mass line and N value lines");
    std::vector<Rational> masses, values;
    if (lines[1].size() != n)
        throw ParseError("mass line must hold N entries");
    for (const auto& t : lines[1])
        masses.push_back(parse_rational(t));
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i + 2].size() != n)
            throw ParseError("value line " + std::to_string(i + 1) + " must hold N entries");
        for (const auto& t : lines[i + 2])
            values.push_back(parse_rational(t));
    }
    return StepKernel(std::move(masses), std::move(values));
}

std::string format_kernel(const StepKernel& h)
{
    std::string out = std::to_string(h.blocks()) + "\n";
    for (int i = 0; i < h.blocks(); ++i)
        out += (i ? " " : "") + to_string(h.mass(i));
    out += "\n";
    for (int i = 0; i < h.blocks(); ++i) {
        for (int j = 0; j < h.blocks(); ++j)
            out += (j ? " " : "") + to_string(h.value(i, j));
        out += "\n";
    }
    return out;
}

namespace {

void accumulate(const Digraph& d, const StepKernel& h, std::vector<int>& label, int v, const Rational& weight,
                Rational& total)
{
    if (v == d.n()) {
        total += weight;
        return;
    }
    for (int b = 0; b < h.blocks(); ++b) {
        Rational w = weight * h.mass(b);
        // arcs between v and already labelled vertices
        for (int u = 0; u < v && w != 0; ++u) {
            if (d.has_arc(u, v))
                w *= h.value(label[u], b);
            if (d.has_arc(v, u))
                w *= h.value(b, label[u]);
        }
        if (w == 0)
            continue;
        label[v] = b;
        accumulate(d, h, label, v + 1, w, total);
    }
}

} // namespace

Rational config_product(const Digraph& d, const StepKernel& h)
{
    std::vector<int> label(static_cast<std::size_t>(d.n()), 0);
    Rational total = 0;
    accumulate(d, h, label, 0, Rational(1), total);
    return total;
}

StepKernel step_kernel_of_host(const Digraph& h)
{
    const int n = h.n();
    if (n < 1)
        throw DomainError("step kernel of an empty host");
    std::vector<Rational> masses(n, Rational(1, n));
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            values.emplace_back(h.has_arc(i, j) ? 1 : 0);
    return StepKernel(std::move(masses), std::move(values));
}

StepKernel duplicate_blocks(const StepKernel& h)
{
    const int n = h.blocks();
    std::vector<Rational> masses, values;
    for (int i = 0; i < 2 * n; ++i)
        masses.push_back(h.mass(i / 2) / 2);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            values.push_back(h.value(i / 2, j / 2));
    return StepKernel(std::move(masses), std::move(values));
}

Digraph sample_gnh(int n, const StepKernel& h, std::uint64_t seed)
{
    if (n < 1 || n > kMaxVertices)
        throw DomainError("G(n, h) needs 1 <= n <= 64");
    Rng rng(seed);
    std::vector<double> cumulative;
    double acc = 0.0;
    for (int b = 0; b < h.blocks(); ++b)
        cumulative.push_back(acc += h.mass(b).get_d());
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01() * acc;
        int b = 0;
        while (b + 1 < h.blocks() && (cumulative[b] <= u || h.mass(b) == 0))
            ++b;
        label[i] = b;
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const Rational& p = h.value(label[i], label[j]);
            // Draw even for p in {0, 1} so the stream position is kernel independent.
            const bool hit = rng.bernoulli(p.get_d());
            if (p == 1 || (p != 0 && hit))
                arcs.push_back({i, j});
        }
    return Digraph(n, arcs);
}

Rational hom_density(const Digraph& q, const Digraph& g)
{
    if (g.n() == 0)
        throw DomainError("homomorphism density on an empty host");
    return Rational(hom_general(q, g)) / Rational(pow(BigCount(g.n()), static_cast<unsigned long>(q.n())));
}

namespace {

McResult run_trials(const Digraph& q, const StepKernel& h, int n, int trials, std::uint64_t seed, int workers)
{
    std::vector<double> t(static_cast<std::size_t>(trials));
    const double scale = std::pow(static_cast<double>(n), q.n());
    parallel_for(t.size(), resolve_workers(workers), [&](std::size_t i) {
        const Digraph g = sample_gnh(n, h, seed ^ static_cast<std::uint64_t>(i));
        t[i] = hom_general(q, g).get_d() / scale;
    });
    // Kahan sums in index order keep the result independent of the worker count.
    auto kahan = [&](auto term) {
        double sum = 0.0, c = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double y = term(t[i]) - c;
            const double s = sum + y;
            c = (s - sum) - y;
            sum = s;
        }
        return sum;
    };
    McResult r;
    r.seed = seed;
    r.trials_used = trials;
    r.u = config_product(q, h);
    r.mean_t = kahan([](double x) { return x; }) / trials;
    const double mean = r.mean_t;
    const double var = trials > 1 ? kahan([mean](double x) { return (x - mean) * (x - mean); }) / (trials - 1) : 0.0;
    r.std_error = std::sqrt(var / trials);
    r.tolerance = 3.0 * r.std_error + kMcSlack;
    r.abs_err = std::abs(r.mean_t - r.u.get_d());
    r.within = r.abs_err < r.tolerance;
    return r;
}

} // namespace

McResult mc_density_check(const Digraph& q, const StepKernel& h, int n, int trials, std::uint64_t seed, int workers)
{
    if (trials < 1)
        throw DomainError("Monte-Carlo check needs at least one trial");
    if (q.n() < 1)
        throw DomainError("pattern must have at least one vertex");
    auto r = run_trials(q, h, n, trials, seed, workers);
    if (r.within)
        return r;
    auto again = run_trials(q, h, n, 4 * trials, seed, workers);
    again.reran = true;
    return again;
}

} // namespace dihom
