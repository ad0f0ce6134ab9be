#pragma once

#include "dihom/digraph.hpp"

#include <string>

namespace dihom {

inline constexpr int kMaxCanonicalVertices = 8;

/// Canonical byte encoding: byte 0 is n, followed by the row-major
/// adjacency bit string (MSB first) of the relabelling that minimises it.
/// Only relabellings that list vertices by ascending (deg_in, deg_out) are
/// tried, which keeps the result an isomorphism invariant. n <= 8.
std::string canonical_form(const Digraph& g);

bool is_isomorphic(const Digraph& a, const Digraph& b);

/// True iff g is the unique labelled member of its isomorphism class whose
/// own encoding equals the canonical encoding.
bool is_canonical_representative(const Digraph& g);

} // namespace dihom
