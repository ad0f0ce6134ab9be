#include "dihom/homcount.hpp"
#include "dihom/error.hpp"
#include "dihom/tree_counter.hpp"
#include "message_passing.hpp"

#include <bit>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dihom {

namespace {

Row all_vertices(int n) { return n == 64 ? ~Row{0} : (Row{1} << n) - 1; }

// Backtracking over the pattern in BFS order. Each position records which
// earlier positions it is joined to and in which direction.
class MapCounter {
public:
    MapCounter(const Digraph& pattern, const Digraph& host, bool injective)
        : pattern_(pattern), host_(host), injective_(injective)
    {
        const int k = pattern.n();
        if (k < 1)
            throw DomainError("pattern must have at least one vertex");
        // BFS order per weak component; later components start unconstrained.
        std::vector<int> position(k, -1);
        for (int start = 0; start < k; ++start) {
            if (position[start] != -1)
                continue;
            std::queue<int> queue;
            position[start] = static_cast<int>(order_.size());
            order_.push_back(start);
            queue.push(start);
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop();
                for (Row bits = pattern.out_row(v) | pattern.in_row(v); bits; bits &= bits - 1) {
                    int u = std::countr_zero(bits);
                    if (position[u] != -1)
                        continue;
                    position[u] = static_cast<int>(order_.size());
                    order_.push_back(u);
                    queue.push(u);
                }
            }
        }
        constraints_.resize(k);
        for (int i = 0; i < k; ++i) {
            const int v = order_[i];
            for (int j = 0; j < i; ++j) {
                const int u = order_[j];
                if (pattern.has_arc(u, v))
                    constraints_[i].push_back({j, true});
                if (pattern.has_arc(v, u))
                    constraints_[i].push_back({j, false});
            }
        }
        image_.resize(k);
    }

    BigCount count(Row first_candidates)
    {
        total_ = 0;
        used_ = 0;
        descend(0, first_candidates & all_vertices(host_.n()));
        return from_u64(total_);
    }

private:
    struct Constraint {
        int earlier;
        bool from_earlier; // arc earlier -> current
    };

    Row candidates(int position) const
    {
        Row c = all_vertices(host_.n());
        for (const auto& k : constraints_[position]) {
            const int img = image_[k.earlier];
            c &= k.from_earlier ? host_.out_row(img) : host_.in_row(img);
        }
        if (injective_)
            c &= ~used_;
        return c;
    }

    void descend(int position, Row cands)
    {
        const int k = pattern_.n();
        if (position == k - 1) {
            if (__builtin_add_overflow(total_, static_cast<std::uint64_t>(std::popcount(cands)), &total_))
                throw std::overflow_error("homomorphism count exceeds enumeration range");
            return;
        }
        for (Row bits = cands; bits; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            image_[position] = v;
            used_ |= Row{1} << v;
            descend(position + 1, candidates(position + 1));
            used_ &= ~(Row{1} << v);
        }
    }

    const Digraph& pattern_;
    const Digraph& host_;
    bool injective_;
    std::vector<int> order_;
    std::vector<std::vector<Constraint>> constraints_;
    std::vector<int> image_;
    Row used_ = 0;
    std::uint64_t total_ = 0;
};

void check_vertex(const Digraph& host, int v)
{
    if (v < 0 || v >= host.n())
        throw DomainError("host vertex " + std::to_string(v) + " out of range [0, " + std::to_string(host.n()) + ")");
}

} // namespace

BigCount hom_general(const Digraph& pattern, const Digraph& host)
{
    MapCounter counter(pattern, host, false);
    return counter.count(all_vertices(host.n()));
}

BigCount emb_injective(const Digraph& pattern, const Digraph& host)
{
    if (pattern.n() > host.n())
        return 0;
    MapCounter counter(pattern, host, true);
    return counter.count(all_vertices(host.n()));
}

BigCount emb_rooted(const RootedDirectedTree& t, const Digraph& host, int v)
{
    check_vertex(host, v);
    MapCounter counter(t.to_digraph(), host, true);
    return counter.count(Row{1} << v);
}

std::vector<BigCount> rooted_counts(const RootedDirectedTree& t, const Digraph& host)
{
    return detail::propagate<BigCount>(t, host, [](int, int) { return BigCount(1); });
}

BigCount hom_tree(const RootedDirectedTree& t, const Digraph& host)
{
    TreeCounter fast(t);
    if (auto c = fast.try_count(host))
        return from_u64(*c);
    BigCount total = 0;
    for (const auto& f : rooted_counts(t, host))
        total += f;
    return total;
}

BigCount hom_rooted(const RootedDirectedTree& t, const Digraph& host, int v)
{
    check_vertex(host, v);
    return rooted_counts(t, host)[v];
}

TailValue hom_tail(const RootedDirectedTree& t, const Digraph& host, int delta, const WeightVector& alpha)
{
    if (static_cast<int>(alpha.size()) != t.size())
        throw DomainError("weight vector must have one entry per tree vertex");
    if (delta < 0)
        throw DomainError("tail threshold must be nonnegative");
    bool integral = true;
    for (const auto& a : alpha) {
        if (a < 0)
            throw DomainError("weights must be nonnegative");
        integral = integral && a.get_den() == 1;
    }
    auto gate = [&](int x, int v) { return x != 0 || host.degree(v) >= delta; };

    TailValue out;
    if (integral) {
        auto root = detail::propagate<BigCount>(t, host, [&](int x, int v) -> BigCount {
            if (!gate(x, v))
                return 0;
            return degree_power(host.degree(v), alpha[x].get_num().get_ui());
        });
        out.exact = true;
        out.value = 0;
        for (const auto& f : root)
            out.value += f;
        out.approx = out.value.get_d();
        return out;
    }
    auto root = detail::propagate<double>(t, host, [&](int x, int v) -> double {
        if (!gate(x, v))
            return 0.0;
        const double a = alpha[x].get_d();
        const double d = host.degree(v);
        return a == 0.0 ? 1.0 : std::pow(d, a);
    });
    out.exact = false;
    out.approx = 0.0;
    for (double f : root)
        out.approx += f;
    return out;
}

BigCount PairCountTable::row_marginal(int u) const
{
    BigCount s = 0;
    for (int w = 0; w < host_size; ++w)
        s += at(u, w);
    return s;
}

BigCount PairCountTable::column_marginal(int w) const
{
    BigCount s = 0;
    for (int u = 0; u < host_size; ++u)
        s += at(u, w);
    return s;
}

BigCount PairCountTable::total() const
{
    BigCount s = 0;
    for (const auto& e : entries)
        s += e;
    return s;
}

PairReduction reduce_pendant_leaves(const RootedDirectedTree& t, int a, int b)
{
    const int k = t.size();
    if (a < 0 || a >= k || b < 0 || b >= k)
        throw DomainError("pair vertices out of range");
    if (a == b)
        throw DomainError("pair reduction needs two distinct vertices");

    const auto tree_arcs = t.arcs();
    std::vector<bool> removed(k, false);
    int in_a = 0, out_a = 0, in_b = 0, out_b = 0;
    for (const auto& arc : tree_arcs) {
        for (int end : {a, b}) {
            const int other = arc.from == end ? arc.to : arc.to == end ? arc.from : -1;
            if (other == -1 || other == a || other == b || !t.is_leaf(other))
                continue;
            removed[other] = true;
            const bool in_leaf = arc.to == end;
            if (end == a)
                (in_leaf ? in_a : out_a) += 1;
            else
                (in_leaf ? in_b : out_b) += 1;
        }
    }
    std::vector<int> keep(k, -1);
    int kept = 0;
    for (int x = 0; x < k; ++x)
        if (!removed[x])
            keep[x] = kept++;
    std::vector<Arc> reduced_arcs;
    for (const auto& arc : tree_arcs)
        if (!removed[arc.from] && !removed[arc.to])
            reduced_arcs.push_back({keep[arc.from], keep[arc.to]});
    auto relabeled = RootedDirectedTree::from_arcs(kept, reduced_arcs, keep[a]);
    return {relabeled.tree, relabeled.index[keep[a]], relabeled.index[keep[b]], in_a, out_a, in_b, out_b};
}

PairCountTable pair_counts(const RootedDirectedTree& t, int a, int b, const Digraph& host)
{
    auto r = reduce_pendant_leaves(t, a, b);
    PairCountTable table{host.n(), {}, std::move(r.reduced), r.a, r.b,
                         r.in_leaves_a, r.out_leaves_a, r.in_leaves_b, r.out_leaves_b};
    const int n = host.n();
    table.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int w = 0; w < n; ++w) {
        auto root = detail::propagate<BigCount>(table.reduced, host, [&](int x, int v) {
            return BigCount(x == table.b ? (v == w ? 1 : 0) : 1);
        });
        for (int u = 0; u < n; ++u)
            table.entries[u * n + w] = root[u];
    }
    return table;
}

BigCount reconstruct_hom(const PairCountTable& table, const Digraph& host)
{
    const int n = table.host_size;
    BigCount total = 0;
    for (int u = 0; u < n; ++u) {
        const BigCount fu = degree_power(host.deg_in(u), table.in_leaves_a) * degree_power(host.deg_out(u), table.out_leaves_a);
        if (fu == 0)
            continue;
        for (int w = 0; w < n; ++w) {
            if (table.at(u, w) == 0)
                continue;
            total += table.at(u, w) * fu * degree_power(host.deg_in(w), table.in_leaves_b)
                * degree_power(host.deg_out(w), table.out_leaves_b);
        }
    }
    return total;
}

BigCount degree_moment(int in_power, int out_power, const Digraph& host)
{
    if (in_power < 0 || out_power < 0)
        throw DomainError("degree powers must be nonnegative");
    BigCount total = 0;
    for (int v = 0; v < host.n(); ++v)
        total += degree_power(host.deg_in(v), in_power) * degree_power(host.deg_out(v), out_power);
    return total;
}

BigCount star_hom(int in_leaves, int out_leaves, const Digraph& host)
{
    if (in_leaves < 0 || out_leaves < 0 || in_leaves + out_leaves == 0)
        throw DomainError("star needs a + b >= 1 with a, b >= 0");
    return degree_moment(in_leaves, out_leaves, host);
}

NonnegMatrix::NonnegMatrix(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries))
{
    if (n < 0)
        throw DomainError("matrix size must be nonnegative");
    if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("matrix needs n*n entries");
    for (const auto& e : entries_)
        if (e < 0)
            throw DomainError("matrix entries must be nonnegative");
}

NonnegMatrix NonnegMatrix::from_digraph(const Digraph& g)
{
    const int n = g.n();
    std::vector<Rational> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[i * n + j] = g.has_arc(i, j) ? 1 : 0;
    return NonnegMatrix(n, std::move(e));
}

Rational NonnegMatrix::row_sum(int i) const
{
    Rational s = 0;
    for (int j = 0; j < n_; ++j)
        s += at(i, j);
    return s;
}

Rational NonnegMatrix::column_sum(int i) const
{
    Rational s = 0;
    for (int j = 0; j < n_; ++j)
        s += at(j, i);
    return s;
}

NonnegMatrix parse_matrix_rational(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w)
            tokens.push_back(w);
    }
    if (tokens.empty())
        throw ParseError("empty matrix input");
    const Rational header = parse_rational(tokens[0]);
    if (header.get_den() != 1 || header < 0 || header > kMaxVertices)
        throw ParseError("matrix header must be a size in [0, 64]");
    const int n = static_cast<int>(header.get_num().get_si());
    if (tokens.size() != 1 + static_cast<std::size_t>(n) * n)
        throw ParseError("expected " + std::to_string(n * n) + " matrix entries");
    std::vector<Rational> entries;
    for (std::size_t i = 1; i < tokens.size(); ++i)
        entries.push_back(parse_rational(tokens[i]));
    return NonnegMatrix(n, std::move(entries));
}

Rational hom_weighted(const RootedDirectedTree& t, const NonnegMatrix& a)
{
    const int n = a.n();
    const int k = t.size();
    std::vector<Rational> f(static_cast<std::size_t>(k) * n, Rational(1));
    for (int x = k - 1; x >= 1; --x) {
        const int p = t.parent(x);
        const bool out = t.dir(x) == ArcDir::Out;
        for (int v = 0; v < n; ++v) {
            Rational& target = f[p * n + v];
            if (target == 0)
                continue;
            Rational sum = 0;
            for (int u = 0; u < n; ++u)
                sum += (out ? a.at(v, u) : a.at(u, v)) * f[x * n + u];
            target *= sum;
        }
    }
    Rational total = 0;
    for (int v = 0; v < n; ++v)
        total += f[v];
    return total;
}

} // namespace dihom
