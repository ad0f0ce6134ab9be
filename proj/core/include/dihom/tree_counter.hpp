#pragma once

#include "dihom/digraph.hpp"
#include "dihom/tree.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace dihom {

/// Reusable 64-bit message-passing counter for host sweeps.
///
/// Holds per-tree scratch so repeated counts allocate nothing. Not
/// thread-safe; give each worker its own instance.
class TreeCounter {
public:
    explicit TreeCounter(const RootedDirectedTree& t);

    /// Exact count, or nullopt if an intermediate value overflows 64 bits.
    std::optional<std::uint64_t> try_count(const Digraph& host);

    /// Exact count; throws std::overflow_error on overflow.
    std::uint64_t count(const Digraph& host);

    const RootedDirectedTree& tree() const { return tree_; }

private:
    RootedDirectedTree tree_;
    std::vector<std::array<std::uint64_t, kMaxVertices>> messages_;
};

} // namespace dihom
