#pragma once

#include "dihom/digraph.hpp"
#include "dihom/homcount.hpp"
#include "dihom/report.hpp"
#include "dihom/tree.hpp"

#include <array>
#include <vector>

namespace dihom {

/// hom(T, H) <= max{hom(S_{0,k-1}, H), hom(S_{k-1,0}, H)}.
BoundReport check_main_theorem(const RootedDirectedTree& t, const Digraph& h);

/// hom(S_{n-k,k}, H) <= (sum din^n)^{(n-k)/n} (sum dout^n)^{k/n}.
/// Near-ties within the guard band are settled by comparing n-th powers exactly.
BoundReport check_star_holder(int n, int k, const Digraph& h);

/// Leaf reallocation at two skeleton leaves a, b.
struct Reallocation {
    RootedDirectedTree reduced; // T(a, b)
    int a = 0;                  // indices in `reduced`
    int b = 0;
    int in_leaves_a = 0;
    int out_leaves_a = 0;
    int in_leaves_b = 0;
    int out_leaves_b = 0;
    int moved = 0; // m = total reallocated leaves
    // T_a^in, T_a^out, T_b^in, T_b^out.
    std::array<RootedDirectedTree, 4> candidates;

    std::array<int, 4> exponents() const { return {in_leaves_a, out_leaves_a, in_leaves_b, out_leaves_b}; }
};

/// Vertices of T whose degree in the skeleton (T minus its leaves) is one.
std::vector<int> skeleton_leaves(const RootedDirectedTree& t);

Reallocation leaf_reallocation_candidates(const RootedDirectedTree& t, int a, int b);

struct GeometricMeanCheck {
    BoundReport geometric; // hom(T)^m <= prod hom(cand)^{e}
    BoundReport max_form;  // hom(T) <= max hom(cand)
    std::array<BigCount, 4> candidate_counts;
};

GeometricMeanCheck check_geometric_mean(const RootedDirectedTree& t, int a, int b, const Digraph& h);

/// One step of the leaf-reallocation iteration.
struct TraceStep {
    RootedDirectedTree tree;
    BoundReport report; // hom(tree) <= hom(next tree)
};

/// Iterates reallocation (picking the candidate with the largest count,
/// ties to the smallest tree_code) until a star remains, then finishes with
/// the pure-star comparison. Every step's report must hold.
std::vector<TraceStep> reallocation_trace(const RootedDirectedTree& t, const Digraph& h);

/// Tail inequality with constant 4 and exponent k-1+|alpha|; integer alpha only.
BoundReport check_tail_theorem(const RootedDirectedTree& t, const Digraph& h, int delta, const WeightVector& alpha);
/// Unweighted form: hom_Delta(T,H) <= 2 sum d^{k-1} 1{d >= Delta}.
BoundReport check_tail_unweighted(const RootedDirectedTree& t, const Digraph& h, int delta);

/// sum_v d(v)^{power} 1{d(v) >= delta}.
BigCount tail_degree_sum(const Digraph& h, int delta, unsigned long power);

/// Pointwise envelope; `exponents[x]` is p on the arc between x and its parent
/// (entry 0 unused). Returns one report per host vertex.
std::vector<BoundReport> check_pointwise_envelope(const RootedDirectedTree& t, const Digraph& h,
                                                  const std::vector<Rational>& exponents);
std::vector<BoundReport> check_pointwise_envelope(const RootedDirectedTree& t, const Digraph& h,
                                                  const Rational& p);

/// The iterated envelope value at every host vertex, in binary64.
std::vector<double> pointwise_envelope(const RootedDirectedTree& t, const Digraph& h,
                                       const std::vector<Rational>& exponents);

/// hom(T, A) <= max{sum c_i^{k-1}, sum r_i^{k-1}}.
BoundReport check_weighted_tree(const RootedDirectedTree& t, const NonnegMatrix& a);
/// sum(A^p) <= (sum c_i^p)^{1/2} (sum r_i^p)^{1/2}, compared by squaring.
BoundReport check_mv_path(int p, const NonnegMatrix& a);
/// sum of all entries of A^p by repeated multiplication.
Rational matrix_power_sum(const NonnegMatrix& a, int p);

/// hom(T, H)/|V(H)| <= max of the mean in/out degree powers of order h-1.
BoundReport check_moment_domination(const RootedDirectedTree& t, const Digraph& h);

} // namespace dihom
