#include "dihom/enumerate.hpp"
#include "dihom/canonical.hpp"
#include "dihom/error.hpp"
#include "dihom/parallel.hpp"

#include <map>
#include <string>

namespace dihom {

std::vector<RootedDirectedTree> enumerate_directed_trees(int k_arcs, int workers)
{
    if (k_arcs < 1 || k_arcs > kMaxTreeArcs)
        throw DomainError("k_arcs must lie in [1, " + std::to_string(kMaxTreeArcs) + "]");

    std::vector<RootedDirectedTree> level{make_star(0, 1)};
    for (int arcs = 2; arcs <= k_arcs; ++arcs) {
        std::vector<RootedDirectedTree> candidates;
        for (const auto& t : level) {
            std::vector<int> parent;
            std::vector<ArcDir> dir;
            for (int x = 0; x < t.size(); ++x) {
                parent.push_back(t.parent(x));
                dir.push_back(t.dir(x));
            }
            for (int x = 0; x < t.size(); ++x) {
                for (ArcDir d : {ArcDir::Out, ArcDir::In}) {
                    auto p = parent;
                    auto o = dir;
                    p.push_back(x);
                    o.push_back(d);
                    candidates.emplace_back(std::move(p), std::move(o));
                }
            }
        }
        std::vector<std::string> codes(candidates.size());
        parallel_for(candidates.size(), workers, [&](std::size_t i) { codes[i] = tree_code(candidates[i]); });

        std::map<std::string, std::size_t> first;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            first.emplace(codes[i], i);
        std::vector<RootedDirectedTree> next;
        next.reserve(first.size());
        for (const auto& [code, i] : first)
            next.push_back(candidates[i]);
        level = std::move(next);
    }
    return level;
}

HostRange::iterator::iterator(const HostRange* range, std::uint64_t index) : range_(range), index_(index)
{
    skip_non_canonical();
}

HostRange::iterator& HostRange::iterator::operator++()
{
    ++index_;
    skip_non_canonical();
    return *this;
}

void HostRange::iterator::skip_non_canonical()
{
    if (!range_->canonical_only_)
        return;
    while (index_ < range_->end_ && !is_canonical_representative(Digraph::from_index(range_->n_, index_)))
        ++index_;
}

HostRange::HostRange(int n, std::uint64_t begin, std::uint64_t end, bool canonical_only)
    : n_(n), begin_(begin), end_(end), canonical_only_(canonical_only)
{
}

HostRange enumerate_hosts(int n, bool canonical_only) { return enumerate_hosts(n, 0, host_count(n), canonical_only); }

HostRange enumerate_hosts(int n, std::uint64_t begin, std::uint64_t end, bool canonical_only)
{
    if (n < 1 || n > kMaxSweepVertices)
        throw DomainError("host enumeration supports 1 <= n <= 5, got " + std::to_string(n));
    if (begin > end || end > host_count(n))
        throw DomainError("host index range out of bounds");
    return HostRange(n, begin, end, canonical_only);
}

} // namespace dihom
