#pragma once

#include "dihom/digraph.hpp"
#include "dihom/tree.hpp"

#include <bit>
#include <cstddef>
#include <vector>

namespace dihom::detail {

// Bottom-up recursion F_x(v) = init(x, v) * prod over children of the
// neighbourhood sums of F_c. Returns F_root. Relies on parent(i) < i.
template <class V, class Init>
std::vector<V> propagate(const RootedDirectedTree& t, const Digraph& h, Init&& init)
{
    const int n = h.n();
    const int k = t.size();
    std::vector<V> f(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
    for (int x = 0; x < k; ++x)
        for (int v = 0; v < n; ++v)
            f[x * n + v] = init(x, v);
    for (int x = k - 1; x >= 1; --x) {
        const int p = t.parent(x);
        const bool out = t.dir(x) == ArcDir::Out;
        for (int v = 0; v < n; ++v) {
            V& target = f[p * n + v];
            if (target == 0)
                continue;
            V sum = 0;
            for (Row bits = out ? h.out_row(v) : h.in_row(v); bits; bits &= bits - 1)
                sum += f[x * n + std::countr_zero(bits)];
            target *= sum;
        }
    }
    f.resize(static_cast<std::size_t>(n));
    return f;
}

} // namespace dihom::detail
