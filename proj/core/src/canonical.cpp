#include "dihom/canonical.hpp"
#include "dihom/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace dihom {

namespace {

// Row-major adjacency bits of g under the labelling new -> assign[new], MSB first.
std::uint64_t key_of(const Digraph& g, const std::vector<int>& assign)
{
    const int n = g.n();
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) {
        const Row row = g.out_row(assign[i]);
        for (int j = 0; j < n; ++j)
            key = (key << 1) | ((row >> assign[j]) & 1U);
    }
    return key;
}

std::string encode(int n, std::uint64_t key)
{
    std::string out(1, static_cast<char>(n));
    const int bits = n * n;
    if (bits == 0)
        return out;
    const std::uint64_t aligned = bits == 64 ? key : key << (64 - bits);
    for (int byte = 0; byte < (bits + 7) / 8; ++byte)
        out.push_back(static_cast<char>((aligned >> (56 - 8 * byte)) & 0xFF));
    return out;
}

struct Search {
    const Digraph& g;
    std::vector<int> slot_class; // class id of each position
    std::vector<int> vertex_class;
    std::vector<int> assign;
    std::vector<bool> used;
    std::uint64_t best = ~std::uint64_t{0};

    void run(int position)
    {
        const int n = g.n();
        if (position == n) {
            best = std::min(best, key_of(g, assign));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || vertex_class[v] != slot_class[position])
                continue;
            used[v] = true;
            assign[position] = v;
            run(position + 1);
            used[v] = false;
        }
    }
};

} // namespace

std::string canonical_form(const Digraph& g)
{
    const int n = g.n();
    if (n > kMaxCanonicalVertices)
        throw DomainError("canonical_form supports at most 8 vertices, got " + std::to_string(n));
    std::vector<std::pair<int, int>> degrees(n);
    for (int v = 0; v < n; ++v)
        degrees[v] = {g.deg_in(v), g.deg_out(v)};
    auto sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto class_of = [&](std::pair<int, int> d) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), d) - sorted.begin());
    };

    Search search{g, {}, {}, std::vector<int>(n), std::vector<bool>(n, false)};
    for (int v = 0; v < n; ++v)
        search.vertex_class.push_back(class_of(degrees[v]));
    search.slot_class = search.vertex_class;
    std::sort(search.slot_class.begin(), search.slot_class.end());
    search.run(0);
    return encode(n, n == 0 ? 0 : search.best);
}

bool is_isomorphic(const Digraph& a, const Digraph& b)
{
    return a.n() == b.n() && a.arc_count() == b.arc_count() && canonical_form(a) == canonical_form(b);
}

bool is_canonical_representative(const Digraph& g)
{
    std::vector<int> identity(g.n());
    std::iota(identity.begin(), identity.end(), 0);
    return canonical_form(g) == encode(g.n(), key_of(g, identity));
}

} // namespace dihom
