#pragma once

#include "dihom/bigint.hpp"
#include "dihom/digraph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dihom {

/// Block-constant kernel: values in [0,1] on N x N blocks, masses summing to 1.
class StepKernel {
public:
    StepKernel(std::vector<Rational> masses, std::vector<Rational> values);

    int blocks() const { return static_cast<int>(masses_.size()); }
    const Rational& mass(int i) const { return masses_[i]; }
    const Rational& value(int i, int j) const { return values_[i * blocks() + j]; }

private:
    std::vector<Rational> masses_;
    std::vector<Rational> values_;
};

StepKernel parse_kernel(std::string_view text);
std::string format_kernel(const StepKernel& h);

/// U_D(h): sum over block maps of arc values times vertex masses, exactly.
Rational config_product(const Digraph& d, const StepKernel& h);

/// Uniform masses 1/N and the adjacency indicator as values.
StepKernel step_kernel_of_host(const Digraph& h);

/// Splits every block into two half-mass copies with the same values.
StepKernel duplicate_blocks(const StepKernel& h);

/// G(n, h): labels from the block masses, then each ordered pair i != j an
/// arc with probability values[X_i][X_j].
Digraph sample_gnh(int n, const StepKernel& h, std::uint64_t seed);

/// t(Q, G) = hom(Q, G) / |V(G)|^{|V(Q)|}.
Rational hom_density(const Digraph& q, const Digraph& g);

struct McResult {
    double mean_t = 0.0;
    Rational u;
    double abs_err = 0.0;
    double std_error = 0.0;
    double tolerance = 0.0; // 3 * std_error + kMcSlack
    bool within = false;
    int trials_used = 0;
    bool reran = false;
    std::uint64_t seed = 0;
};

inline constexpr double kMcSlack = 0.01;

/// Averages t(Q, G(n, h)) over trials with trial seeds seed ^ t. If the
/// mean misses the tolerance, reruns once with 4x trials and reports that.
McResult mc_density_check(const Digraph& q, const StepKernel& h, int n, int trials, std::uint64_t seed,
                          int workers = 1);

} // namespace dihom
