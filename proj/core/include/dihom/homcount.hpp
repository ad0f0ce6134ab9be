#pragma once

#include "dihom/bigint.hpp"
#include "dihom/digraph.hpp"
#include "dihom/tree.hpp"

#include <string_view>
#include <vector>

namespace dihom {

/// Per-vertex weights alpha_x on the pattern tree.
using WeightVector = std::vector<Rational>;

/// Exact count of arc-preserving maps pattern -> host, by backtracking over
/// the pattern in BFS order with bitset candidate pruning. Disconnected
/// patterns are handled component by component in the same search.
BigCount hom_general(const Digraph& pattern, const Digraph& host);

/// Tree count by bottom-up message passing.
BigCount hom_tree(const RootedDirectedTree& t, const Digraph& host);

/// F_root(v) for every host vertex v.
std::vector<BigCount> rooted_counts(const RootedDirectedTree& t, const Digraph& host);
BigCount hom_rooted(const RootedDirectedTree& t, const Digraph& host, int v);

/// Value of a tail-truncated weighted count. Integer weights give an exact
/// integer; otherwise only `approx` is meaningful.
struct TailValue {
    bool exact = true;
    BigCount value;
    double approx = 0.0;
};

/// Sum over homomorphisms with d(phi(root)) >= delta of prod_x d(phi(x))^{alpha_x},
/// d the total degree and 0^0 = 1.
TailValue hom_tail(const RootedDirectedTree& t, const Digraph& host, int delta, const WeightVector& alpha);

BigCount emb_injective(const Digraph& pattern, const Digraph& host);
BigCount emb_rooted(const RootedDirectedTree& t, const Digraph& host, int v);

/// T(a, b): T with the pendant leaves at a and b deleted, rooted at a.
struct PairReduction {
    RootedDirectedTree reduced;
    int a = 0; // index of a in `reduced`
    int b = 0; // index of b in `reduced`
    int in_leaves_a = 0;
    int out_leaves_a = 0;
    int in_leaves_b = 0;
    int out_leaves_b = 0;
};

PairReduction reduce_pendant_leaves(const RootedDirectedTree& t, int a, int b);

/// N(u, w) for the tree T(a, b) obtained by deleting the pendant leaves at a and b.
struct PairCountTable {
    int host_size = 0;
    std::vector<BigCount> entries; // row-major, entries[u * host_size + w]
    RootedDirectedTree reduced;    // T(a, b), rooted at a
    int a = 0;                     // index of a in `reduced`
    int b = 0;                     // index of b in `reduced`
    int in_leaves_a = 0;
    int out_leaves_a = 0;
    int in_leaves_b = 0;
    int out_leaves_b = 0;

    const BigCount& at(int u, int w) const { return entries[u * host_size + w]; }
    BigCount row_marginal(int u) const;
    BigCount column_marginal(int w) const;
    BigCount total() const;
};

PairCountTable pair_counts(const RootedDirectedTree& t, int a, int b, const Digraph& host);

/// Right-hand side of the bilinear identity: sum N(u,w) din(u)^ia dout(u)^oa din(w)^ib dout(w)^ob.
BigCount reconstruct_hom(const PairCountTable& table, const Digraph& host);

/// sum_v deg_in(v)^a deg_out(v)^b (0^0 = 1). Requires a + b >= 1.
BigCount star_hom(int in_leaves, int out_leaves, const Digraph& host);

/// sum_v deg_in(v)^a deg_out(v)^b without the a + b >= 1 guard.
BigCount degree_moment(int in_power, int out_power, const Digraph& host);

/// n x n nonnegative rational matrix; the diagonal may be nonzero.
class NonnegMatrix {
public:
    NonnegMatrix() = default;
    NonnegMatrix(int n, std::vector<Rational> entries);

    static NonnegMatrix from_digraph(const Digraph& g);

    int n() const { return n_; }
    const Rational& at(int i, int j) const { return entries_[i * n_ + j]; }
    Rational row_sum(int i) const;
    Rational column_sum(int i) const;

private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

NonnegMatrix parse_matrix_rational(std::string_view text);

/// sum over maps of prod over tree arcs of A[phi(u)][phi(v)].
Rational hom_weighted(const RootedDirectedTree& t, const NonnegMatrix& a);

} // namespace dihom
