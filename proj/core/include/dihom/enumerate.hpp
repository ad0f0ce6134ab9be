#pragma once

#include "dihom/digraph.hpp"
#include "dihom/tree.hpp"

#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace dihom {

inline constexpr int kMaxTreeArcs = 8;
inline constexpr int kMaxSweepVertices = 5;

/// One representative per isomorphism class of directed trees with k_arcs
/// arcs, sorted by tree_code. Grows trees leaf by leaf from the smaller level.
std::vector<RootedDirectedTree> enumerate_directed_trees(int k_arcs, int workers = 1);

/// All labelled loopless hosts on n vertices, in index order. The range is a
/// lightweight view; Digraph values are produced on dereference.
class HostRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Digraph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const HostRange* range, std::uint64_t index);

        Digraph operator*() const { return Digraph::from_index(range_->n_, index_); }
        std::uint64_t index() const { return index_; }
        iterator& operator++();
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        void skip_non_canonical();

        const HostRange* range_ = nullptr;
        std::uint64_t index_ = 0;
    };

    HostRange(int n, std::uint64_t begin, std::uint64_t end, bool canonical_only);

    iterator begin() const { return iterator(this, begin_); }
    iterator end() const { return iterator(this, end_); }
    int n() const { return n_; }

private:
    int n_;
    std::uint64_t begin_;
    std::uint64_t end_;
    bool canonical_only_;
};

/// Hosts on n <= 5 vertices; canonical_only keeps one per isomorphism class.
HostRange enumerate_hosts(int n, bool canonical_only = false);
/// Index slice [begin, end) for partitioned sweeps.
HostRange enumerate_hosts(int n, std::uint64_t begin, std::uint64_t end, bool canonical_only = false);

} // namespace dihom
