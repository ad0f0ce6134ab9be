#pragma once

#include "dihom/digraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dihom {

/// Orientation of the arc between a vertex and its parent.
enum class ArcDir : std::uint8_t {
    Out, // parent -> child
    In,  // child -> parent
};

struct Relabeled;

/// Directed tree stored as a parent array rooted at vertex 0.
///
/// Invariants: parent(0) == -1 and parent(i) < i for i >= 1. Vertex indices
/// therefore form a topological order from the root, which the counting
/// kernels exploit by sweeping i = k-1 .. 1.
class RootedDirectedTree {
public:
    /// The single-vertex tree.
    RootedDirectedTree() : RootedDirectedTree({-1}, {ArcDir::Out}) {}
    RootedDirectedTree(std::vector<int> parent, std::vector<ArcDir> dir);

    /// Builds the tree spanned by `arcs` on k vertices, re-indexed in BFS
    /// order from `root`. Throws DomainError unless the arcs form a tree.
    static Relabeled from_arcs(int k, std::span<const Arc> arcs, int root = 0);

    int size() const { return static_cast<int>(parent_.size()); }
    int arc_count() const { return size() - 1; }
    int parent(int x) const { return parent_[x]; }
    ArcDir dir(int x) const { return dir_[x]; }

    std::span<const int> out_children(int x) const { return out_children_[x]; }
    std::span<const int> in_children(int x) const { return in_children_[x]; }

    int degree(int x) const;
    bool is_leaf(int x) const { return degree(x) == 1; }
    std::vector<int> leaves() const;
    std::vector<int> neighbours(int x) const;

    /// Arcs in tree orientation, one per non-root vertex.
    std::vector<Arc> arcs() const;
    Digraph to_digraph() const;

    RootedDirectedTree reversed() const;
    Relabeled rerooted(int new_root) const;

    friend bool operator==(const RootedDirectedTree& a, const RootedDirectedTree& b)
    {
        return a.parent_ == b.parent_ && a.dir_ == b.dir_;
    }

private:
    std::vector<int> parent_;
    std::vector<ArcDir> dir_;
    std::vector<std::vector<int>> out_children_;
    std::vector<std::vector<int>> in_children_;
};

/// A tree together with index[old_vertex] -> new vertex (or -1 if dropped).
struct Relabeled {
    RootedDirectedTree tree;
    std::vector<int> index;
};

/// S_{a,b}: centre 0 with a in-leaves (1..a) and b out-leaves (a+1..a+b).
RootedDirectedTree make_star(int in_leaves, int out_leaves);

/// P_signs rooted at v0; '+' is v_i -> v_{i+1}, '-' is v_{i+1} -> v_i.
RootedDirectedTree make_oriented_path(std::string_view signs);

/// Single vertex tree.
RootedDirectedTree make_point();

/// (a, b) if the tree is a star S_{a,b} with a + b >= 2, or the single arc as (0, 1).
std::optional<std::pair<int, int>> star_shape(const RootedDirectedTree& t);

/// Sign string read from the preferred end if the tree is an oriented path.
std::optional<std::string> path_shape(const RootedDirectedTree& t);

/// Isomorphism invariant of the unrooted directed tree (centre-rooted AHU code).
std::string tree_code(const RootedDirectedTree& t);

/// Literal accepted by parse_tree_literal: "S a b", "P +-+", arc list "0>1,2>1", or "0".
std::string to_literal(const RootedDirectedTree& t);

struct ParsedTree {
    RootedDirectedTree tree;
    /// Maps literal vertex ids to tree vertices.
    std::vector<int> index;
};

ParsedTree parse_tree_literal(std::string_view literal);

} // namespace dihom
