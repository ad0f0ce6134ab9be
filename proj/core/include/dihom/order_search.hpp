#pragma once

#include "dihom/bigint.hpp"
#include "dihom/digraph.hpp"
#include "dihom/report.hpp"
#include "dihom/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dihom {

/// A host together with the two compared counts on it.
struct HostWitness {
    Digraph host;
    std::uint64_t index = 0; // enumeration index at size host.n()
    BigCount count_a;
    BigCount count_b;
};

/// Certificate that A and B are incomparable: count_a > count_b on `gt`
/// and count_a < count_b on `lt`.
struct WitnessRecord {
    RootedDirectedTree a;
    RootedDirectedTree b;
    HostWitness gt;
    HostWitness lt;
    bool max_order = false; // b side is max{hom(B), hom(B^rev)}
};

/// Recomputes both hosts with hom_general and checks the strict inequalities.
bool verify_witness(const WitnessRecord& w);

enum class VerdictKind {
    IncomparableWitnessed,
    DominatesUpTo, // hom(A) >= hom(B) on every searched host, strictly somewhere
    DominatedUpTo,
    EqualUpTo,
};

std::string_view verdict_name(VerdictKind kind);

struct OrderVerdict {
    VerdictKind kind = VerdictKind::EqualUpTo;
    int n_max = 0;
    RootedDirectedTree a;
    RootedDirectedTree b;
    bool max_order = false;
    std::optional<HostWitness> gt; // first host (smallest n, then index) with A > B
    std::optional<HostWitness> lt; // first host with A < B

    std::optional<WitnessRecord> witness() const;
};

/// Sweeps all labelled hosts with 1..n_max <= 5 vertices in enumeration
/// order and stops at the first size where both strict directions occurred.
OrderVerdict compare_over_hosts(const RootedDirectedTree& a, const RootedDirectedTree& b, int n_max,
                                int workers = 1);

/// Same sweep with the B side replaced by max{hom(S, H), hom(S^rev, H)}.
OrderVerdict compare_maxorder(const RootedDirectedTree& t, const RootedDirectedTree& s, int n_max,
                              int workers = 1);

/// All unordered pairs (i < j) of `trees` (or all ordered pairs i != j for
/// the max order) in one memoised sweep: each host's counts are computed
/// once per tree. Each verdict equals the corresponding pairwise call.
std::vector<OrderVerdict> compare_family(const std::vector<RootedDirectedTree>& trees, int n_max,
                                         int workers = 1, bool max_order = false);

/// hom(P_{+-+}, H) - hom(P_{+++}, H) against the arc-sum expression.
struct DeltaIdentity {
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

DeltaIdentity delta_identity(const Digraph& h);

/// H_{m,n}: centre 0, sources 1..m with u -> 0, sinks m+1..m+n with 0 -> w.
Digraph make_star_host(int sources, int sinks);

/// Closed forms on H_{m,n}, H_{m,0} and H_{0,n} for stars with h arcs.
std::vector<BoundReport> star_incomparability_suite(int h, int m, int n);

/// Named tree families for the search command.
std::vector<RootedDirectedTree> tree_family(std::string_view family, int h = 3);

} // namespace dihom
