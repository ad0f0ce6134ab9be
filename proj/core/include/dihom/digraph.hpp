#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dihom {

inline constexpr int kMaxVertices = 64;

using Row = std::uint64_t;

struct Arc {
    int from;
    int to;
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct DegreeProfile {
    std::vector<int> in;
    std::vector<int> out;
    std::vector<int> total;
};

/// Finite simple loopless digraph on vertices 0..n-1, n <= 64.
///
/// Each vertex owns one 64-bit out-row and one 64-bit in-row, so the object
/// is a fixed-size value (no heap) and cheap to build inside host sweeps.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);

    static Digraph from_rows(int n, std::span<const Row> out_rows);

    /// Host number `index` in the lexicographic order of the off-diagonal
    /// bit string read row-major: pair (0,1) is the most significant bit.
    static Digraph from_index(int n, std::uint64_t index);

    int n() const { return n_; }
    bool has_arc(int from, int to) const { return (out_[from] >> to) & 1U; }
    Row out_row(int v) const { return out_[v]; }
    Row in_row(int v) const { return in_[v]; }

    int deg_out(int v) const;
    int deg_in(int v) const;
    int degree(int v) const { return deg_in(v) + deg_out(v); }
    int max_degree() const;

    std::size_t arc_count() const;
    std::vector<Arc> arcs() const;
    DegreeProfile degree_profile() const;

    Digraph reversed() const;
    /// Relabels vertex v as perm[v].
    Digraph permuted(std::span<const int> perm) const;

    /// Inverse of from_index; requires n(n-1) <= 64.
    std::uint64_t index() const;

    /// Weak connectivity of the underlying undirected graph (n = 0 counts as connected).
    bool is_weakly_connected() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

private:
    void add_arc(int from, int to);

    int n_ = 0;
    std::array<Row, kMaxVertices> out_{};
    std::array<Row, kMaxVertices> in_{};
};

Digraph complete_digraph(int n);

/// Number of labelled loopless digraphs on n vertices, 2^{n(n-1)}.
std::uint64_t host_count(int n);

} // namespace dihom
