#pragma once

#include "dihom/bigint.hpp"
#include "dihom/digraph.hpp"
#include "dihom/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dihom {

/// One printed witness: a host and the two counts claimed on it.
struct PrintedWitness {
    Digraph host;
    unsigned long count_a = 0;
    unsigned long count_b = 0;
};

struct WitnessTableRow {
    std::string a; // e.g. "S_{0,3}", "P_{+-+}"
    std::string b;
    PrintedWitness gt;
    PrintedWitness lt;
};

/// The 28 rows of the 3-arc witness table, transcribed verbatim.
const std::vector<WitnessTableRow>& witness_table();

/// The eight 3-arc trees with the vertex labelling used by the table.
RootedDirectedTree named_three_arc_tree(std::string_view name);
const std::vector<std::string>& three_arc_tree_names();

/// The 5-vertex host separating P_{+++} from P_{+-+}.
Digraph five_vertex_witness_host();

struct RowCheck {
    const WitnessTableRow* row = nullptr;
    BigCount gt_a, gt_b, lt_a, lt_b;
    bool ok = false;
};

struct AppendixReproduction {
    std::vector<RowCheck> rows;
    BigCount five_vertex_ppp;  // hom(P_{+++}, H5), printed 37
    BigCount five_vertex_pmp;  // hom(P_{+-+}, H5), printed 36
    BigInt five_vertex_delta;  // printed -1
    bool delta_identity_ok = false;
    BigCount single_arc_ppp;   // printed 0
    BigCount single_arc_pmp;   // printed 1
    bool ok = false;

    std::vector<std::string> failures() const;
};

/// Recomputes every printed value; never throws on mismatch.
AppendixReproduction check_witness_table();

/// As check_witness_table, but throws MathViolation naming the first bad row.
AppendixReproduction reproduce_appendix_table();

} // namespace dihom
