#include "dihom/random.hpp"
#include "dihom/error.hpp"

namespace dihom {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    return mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold)
            return x % bound;
    }
}

int Rng::between(int lo, int hi)
{
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) { return uniform01() < p; }

Digraph gen_erdos_renyi_digraph(int n, double p, Rng& rng)
{
    if (n < 0 || n > kMaxVertices)
        throw DomainError("host size must be in [0, 64]");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("arc probability must lie in [0, 1]");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rng.bernoulli(p))
                arcs.push_back({i, j});
    return Digraph(n, arcs);
}

Digraph gen_erdos_renyi_digraph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    return gen_erdos_renyi_digraph(n, p, rng);
}

RootedDirectedTree random_tree(int k, Rng& rng)
{
    if (k < 1)
        throw DomainError("a tree needs at least one vertex");
    std::vector<int> parent(k, -1);
    std::vector<ArcDir> dir(k, ArcDir::Out);
    for (int i = 1; i < k; ++i) {
        parent[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
        dir[i] = rng.bernoulli(0.5) ? ArcDir::Out : ArcDir::In;
    }
    return RootedDirectedTree(std::move(parent), std::move(dir));
}

NonnegMatrix random_rational_matrix(int n, int max_value, int max_denominator, Rng& rng)
{
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
        const int den = rng.between(1, max_denominator);
        const int num = rng.between(0, max_value * den);
        Rational q(num, den);
        q.canonicalize();
        entries.push_back(q);
    }
    return NonnegMatrix(n, std::move(entries));
}

} // namespace dihom
