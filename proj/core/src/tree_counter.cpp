#include "dihom/tree_counter.hpp"

#include <bit>
#include <stdexcept>

namespace dihom {

TreeCounter::TreeCounter(const RootedDirectedTree& t) : tree_(t), messages_(static_cast<std::size_t>(t.size())) {}

std::optional<std::uint64_t> TreeCounter::try_count(const Digraph& host)
{
    const int n = host.n();
    const int k = tree_.size();
    for (int x = 0; x < k; ++x)
        messages_[x].fill(1);
    for (int x = k - 1; x >= 1; --x) {
        auto& child = messages_[x];
        auto& target = messages_[tree_.parent(x)];
        const bool out = tree_.dir(x) == ArcDir::Out;
        for (int v = 0; v < n; ++v) {
            if (target[v] == 0)
                continue;
            std::uint64_t sum = 0;
            for (Row bits = out ? host.out_row(v) : host.in_row(v); bits; bits &= bits - 1)
                if (__builtin_add_overflow(sum, child[std::countr_zero(bits)], &sum))
                    return std::nullopt;
            if (__builtin_mul_overflow(target[v], sum, &target[v]))
                return std::nullopt;
        }
    }
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v)
        if (__builtin_add_overflow(total, messages_[0][v], &total))
            return std::nullopt;
    return total;
}

std::uint64_t TreeCounter::count(const Digraph& host)
{
    if (auto c = try_count(host))
        return *c;
    throw std::overflow_error("tree count exceeds 64 bits");
}

} // namespace dihom
