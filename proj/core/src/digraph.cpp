#include "dihom/digraph.hpp"
#include "dihom/error.hpp"

#include <bit>
#include <string>

namespace dihom {

namespace {

void check_size(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw DomainError("digraph size " + std::to_string(n) + " outside [0, 64]");
}

} // namespace

Digraph::Digraph(int n) : n_(n) { check_size(n); }

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n)
{
    for (const auto& arc : arcs)
        add_arc(arc.from, arc.to);
}

Digraph Digraph::from_rows(int n, std::span<const Row> out_rows)
{
    Digraph g(n);
    if (static_cast<int>(out_rows.size()) != n)
        throw DomainError("row count does not match vertex count");
    for (int u = 0; u < n; ++u)
        for (Row bits = out_rows[u]; bits; bits &= bits - 1)
            g.add_arc(u, std::countr_zero(bits));
    return g;
}

Digraph Digraph::from_index(int n, std::uint64_t index)
{
    Digraph g(n);
    const int length = n * (n - 1);
    if (length > 64)
        throw DomainError("host index only defined for n <= 8");
    int position = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if ((index >> (length - 1 - position)) & 1U) {
                g.out_[u] |= Row{1} << v;
                g.in_[v] |= Row{1} << u;
            }
            ++position;
        }
    }
    return g;
}

void Digraph::add_arc(int from, int to)
{
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw DomainError("arc " + std::to_string(from) + "->" + std::to_string(to) + " out of range");
    if (from == to)
        throw DomainError("loop at vertex " + std::to_string(from));
    out_[from] |= Row{1} << to;
    in_[to] |= Row{1} << from;
}

int Digraph::deg_out(int v) const { return std::popcount(out_[v]); }
int Digraph::deg_in(int v) const { return std::popcount(in_[v]); }

int Digraph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::size_t Digraph::arc_count() const
{
    std::size_t total = 0;
    for (int v = 0; v < n_; ++v)
        total += static_cast<std::size_t>(std::popcount(out_[v]));
    return total;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (Row bits = out_[u]; bits; bits &= bits - 1)
            out.push_back({u, std::countr_zero(bits)});
    return out;
}

DegreeProfile Digraph::degree_profile() const
{
    DegreeProfile p;
    p.in.resize(n_);
    p.out.resize(n_);
    p.total.resize(n_);
    for (int v = 0; v < n_; ++v) {
        p.in[v] = deg_in(v);
        p.out[v] = deg_out(v);
        p.total[v] = p.in[v] + p.out[v];
    }
    return p;
}

Digraph Digraph::reversed() const
{
    Digraph g(n_);
    g.out_ = in_;
    g.in_ = out_;
    return g;
}

Digraph Digraph::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw DomainError("permutation length does not match vertex count");
    Digraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (Row bits = out_[u]; bits; bits &= bits - 1)
            g.add_arc(perm[u], perm[std::countr_zero(bits)]);
    return g;
}

std::uint64_t Digraph::index() const
{
    const int length = n_ * (n_ - 1);
    if (length > 64)
        throw DomainError("host index only defined for n <= 8");
    std::uint64_t index = 0;
    int position = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (u == v)
                continue;
            if (has_arc(u, v))
                index |= std::uint64_t{1} << (length - 1 - position);
            ++position;
        }
    }
    return index;
}

bool Digraph::is_weakly_connected() const
{
    if (n_ == 0)
        return true;
    Row seen = 1, frontier = 1;
    while (frontier) {
        Row next = 0;
        for (Row bits = frontier; bits; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            next |= out_[v] | in_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    const Row all = n_ == 64 ? ~Row{0} : (Row{1} << n_) - 1;
    return seen == all;
}

bool operator==(const Digraph& a, const Digraph& b)
{
    if (a.n_ != b.n_)
        return false;
    for (int v = 0; v < a.n_; ++v)
        if (a.out_[v] != b.out_[v])
            return false;
    return true;
}

Digraph complete_digraph(int n)
{
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                arcs.push_back({u, v});
    return Digraph(n, arcs);
}

std::uint64_t host_count(int n)
{
    if (n < 0 || n > 8)
        throw DomainError("host_count defined for 0 <= n <= 8");
    const int length = n * (n - 1);
    return length == 64 ? 0 : std::uint64_t{1} << length;
}

} // namespace dihom
