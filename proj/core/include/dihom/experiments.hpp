#pragma once

#include "dihom/bigint.hpp"
#include "dihom/digraph.hpp"
#include "dihom/random.hpp"
#include "dihom/report.hpp"
#include "dihom/tree.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dihom {

struct DegreeMomentSummary {
    int n = 0;
    int h = 0;
    Rational mean_in_pow;
    Rational mean_out_pow;
    Rational mean_total_pow;

    /// in + out <= total <= 2^{h-1} (in + out)
    bool sandwich_holds() const;
};

DegreeMomentSummary degree_moment_summary(const Digraph& g, int h);

struct ExplorationReport {
    int k = 0;
    std::vector<std::pair<RootedDirectedTree, BoundReport>> per_tree;
    std::size_t worst = 0; // index into per_tree with the smallest slack
    bool all_hold = false;
};

/// Main inequality for every k-vertex tree, aggregated by worst slack.
ExplorationReport exploration_bound_report(const Digraph& g, int k);

/// P(D = d) proportional to d^{-(1 + tail)} on 1..cap.
class DiscretePareto {
public:
    explicit DiscretePareto(double tail_exponent, std::uint64_t cap = 1'000'000);
    std::uint64_t sample(Rng& rng) const;
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
    std::vector<double> cumulative_;
};

/// Rooted 2-path count and its uniform-p envelope at a vertex whose
/// out-neighbours have the given out-degrees.
struct TwoPathSample {
    double hom = 0.0;
    double envelope = 0.0;
    bool envelope_holds = false; // within the relative guard band
};

TwoPathSample evaluate_two_path(std::span<const std::uint64_t> neighbour_degrees, double p);

struct HeavyTailParams {
    int d_root = 5;
    Rational tail_exponent{1, 2};
    Rational r{3, 10};
    Rational p{4};
    int samples = 20000;
    std::uint64_t seed = 1;
};

struct HeavyTailReport {
    HeavyTailParams params;
    std::uint64_t truncation = 0;
    int envelope_violations = 0;
    double mean_hom_r = 0.0;         // empirical E[hom^r]
    double mean_degree_r = 0.0;      // empirical E[D^r] over all sampled neighbour degrees
    double subadditive_bound = 0.0;  // d * E[D^r]
    double scaled_bound = 0.0;       // d^r * E[D^r], reported only
    double subadditive_ratio = 0.0;  // E[hom^r] / subadditive_bound
    double scaled_ratio = 0.0;       // E[hom^r] / scaled_bound
    bool envelope_holds = false;     // assertion (a)
    bool moment_holds = false;       // assertion (b) at 5% slack
};

HeavyTailReport heavy_tail_experiment(const HeavyTailParams& params, int workers = 1);

} // namespace dihom
