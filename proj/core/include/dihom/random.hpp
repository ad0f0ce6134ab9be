#pragma once

#include "dihom/digraph.hpp"
#include "dihom/homcount.hpp"
#include "dihom/tree.hpp"

#include <cstdint>
#include <random>

namespace dihom {

inline constexpr const char* kRngName = "mt19937_64/splitmix64-v1";

/// splitmix64 finaliser; used to derive independent per-instance seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator with portable derived distributions. The standard
/// library distributions are implementation-defined, so sampling goes
/// through these helpers to keep sweeps byte-reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi);
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p);

private:
    std::mt19937_64 engine_;
};

Digraph gen_erdos_renyi_digraph(int n, double p, std::uint64_t seed);
Digraph gen_erdos_renyi_digraph(int n, double p, Rng& rng);

/// Uniform random recursive tree (parent[i] uniform in [0, i)) with uniform orientations.
RootedDirectedTree random_tree(int k, Rng& rng);

/// Entries j/den with den uniform in [1, max_denominator] and j uniform in [0, max_value * den].
NonnegMatrix random_rational_matrix(int n, int max_value, int max_denominator, Rng& rng);

} // namespace dihom
