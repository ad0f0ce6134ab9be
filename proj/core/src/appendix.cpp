#include "dihom/appendix.hpp"
#include "dihom/error.hpp"
#include "dihom/homcount.hpp"
#include "dihom/order_search.hpp"

#include <algorithm>

namespace dihom {

namespace {

struct RawWitness {
    const char* rows; // comma-separated 0/1 rows
    unsigned long a;
    unsigned long b;
};

struct RawRow {
    const char* a;
    const char* b;
    RawWitness gt;
    RawWitness lt;
};

constexpr const char* kFiveVertexHost = "01100,00111,11000,10000,10000";

// Rows in table order; the last pair is separated by the 5-vertex host.
constexpr RawRow kRawTable[] = {
        {"S_{0,3}", "S_{3,0}", {"000,000,110", 8, 2}, {"000,100,100", 2, 8}},
        {"S_{0,3}", "S_{1,2}", {"00,10", 1, 0}, {"0110,1000,1000,1000", 11, 14}},
        {"S_{0,3}", "S_{2,1}", {"00,10", 1, 0}, {"0001,0001,0001,0110", 11, 20}},
        {"S_{0,3}", "P_{+++}", {"00,10", 1, 0}, {"0001,0011,0101,0110", 25, 28}},
        {"S_{0,3}", "P_{++-}", {"00,10", 1, 0}, {"001,001,010", 3, 4}},
        {"S_{0,3}", "P_{+-+}", {"000,000,110", 8, 4}, {"000,100,100", 2, 4}},
        {"S_{0,3}", "P_{-++}", {"00,10", 1, 0}, {"0001,0011,0101,0110", 25, 26}},
        {"S_{3,0}", "S_{1,2}", {"00,10", 1, 0}, {"0000,0001,0001,1110", 11, 20}},
        {"S_{3,0}", "S_{2,1}", {"00,10", 1, 0}, {"0111,1000,1000,0000", 11, 14}},
        {"S_{3,0}", "P_{+++}", {"00,10", 1, 0}, {"0000,0011,0101,1110", 25, 28}},
        {"S_{3,0}", "P_{++-}", {"00,10", 1, 0}, {"0000,0011,0101,1110", 25, 26}},
        {"S_{3,0}", "P_{+-+}", {"000,100,100", 8, 4}, {"000,000,110", 2, 4}},
        {"S_{3,0}", "P_{-++}", {"00,10", 1, 0}, {"000,001,110", 3, 4}},
        {"S_{2,1}", "S_{1,2}", {"001,001,010", 5, 3}, {"000,001,110", 3, 5}},
        {"S_{1,2}", "P_{+++}", {"000,001,100", 1, 0}, {"0110,1000,0100,0100", 8, 9}},
        {"S_{1,2}", "P_{++-}", {"011,100,000", 5, 3}, {"000,100,110", 1, 2}},
        {"S_{1,2}", "P_{+-+}", {"001,001,110", 10, 8}, {"00,10", 0, 1}},
        {"S_{1,2}", "P_{-++}", {"011,100,000", 5, 4}, {"011,001,000", 1, 2}},
        {"S_{2,1}", "P_{+++}", {"000,001,100", 1, 0}, {"0111,1000,0100,0000", 8, 9}},
        {"S_{2,1}", "P_{++-}", {"010,100,100", 5, 4}, {"000,100,110", 1, 2}},
        {"S_{2,1}", "P_{+-+}", {"001,001,110", 10, 8}, {"00,10", 0, 1}},
        {"S_{2,1}", "P_{-++}", {"010,100,100", 5, 3}, {"000,100,110", 1, 2}},
        {"P_{+++}", "P_{++-}", {"0000,0001,0100,1110", 9, 8}, {"000,001,100", 0, 1}},
        {"P_{+++}", "P_{-++}", {"0001,0001,0100,1100", 10, 9}, {"000,001,100", 0, 1}},
        {"P_{++-}", "P_{+-+}", {"0001,0011,0101,0110", 32, 31}, {"00,10", 0, 1}},
        {"P_{++-}", "P_{-++}", {"001,001,010", 4, 3}, {"000,001,110", 3, 4}},
        {"P_{+-+}", "P_{-++}", {"00,10", 1, 0}, {"0000,0011,0101,1110", 31, 32}},
    {"P_{+++}", "P_{+-+}", {kFiveVertexHost, 37, 36}, {"00,10", 0, 1}},
};

Digraph host_from_rows(std::string_view rows)
{
    std::vector<std::string_view> lines;
    for (std::size_t start = 0;;) {
        const auto comma = rows.find(',', start);
        lines.push_back(rows.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    const int n = static_cast<int>(lines.size());
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lines[i][j] == '1')
                arcs.push_back({i, j});
    return Digraph(n, arcs);
}

PrintedWitness to_printed(const RawWitness& w) { return PrintedWitness{host_from_rows(w.rows), w.a, w.b}; }

RootedDirectedTree tree_on_four(std::initializer_list<Arc> arcs)
{
    const std::vector<Arc> list(arcs);
    return RootedDirectedTree::from_arcs(4, list, 0).tree;
}

} // namespace

const std::vector<WitnessTableRow>& witness_table()
{
    static const std::vector<WitnessTableRow> table = [] {
        std::vector<WitnessTableRow> out;
        for (const auto& raw : kRawTable)
            out.push_back({raw.a, raw.b, to_printed(raw.gt), to_printed(raw.lt)});
        return out;
    }();
    return table;
}

const std::vector<std::string>& three_arc_tree_names()
{
    static const std::vector<std::string> names = {"S_{0,3}", "S_{3,0}", "S_{1,2}", "S_{2,1}",
                                                   "P_{+++}", "P_{++-}", "P_{+-+}", "P_{-++}"};
    return names;
}

RootedDirectedTree named_three_arc_tree(std::string_view name)
{
    if (name == "S_{0,3}")
        return tree_on_four({{0, 1}, {0, 2}, {0, 3}});
    if (name == "S_{3,0}")
        return tree_on_four({{1, 0}, {2, 0}, {3, 0}});
    if (name == "S_{1,2}")
        return tree_on_four({{0, 1}, {0, 2}, {3, 0}});
    if (name == "S_{2,1}")
        return tree_on_four({{1, 0}, {2, 0}, {0, 3}});
    if (name == "P_{+++}")
        return tree_on_four({{0, 1}, {1, 2}, {2, 3}});
    if (name == "P_{++-}")
        return tree_on_four({{0, 1}, {1, 2}, {3, 2}});
    if (name == "P_{+-+}")
        return tree_on_four({{0, 1}, {2, 1}, {2, 3}});
    if (name == "P_{-++}")
        return tree_on_four({{1, 0}, {1, 2}, {2, 3}});
    throw DomainError("unknown 3-arc tree name '" + std::string(name) + "'");
}

Digraph five_vertex_witness_host() { return host_from_rows(kFiveVertexHost); }

std::vector<std::string> AppendixReproduction::failures() const
{
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (r.ok)
            continue;
        out.push_back(r.row->a + " || " + r.row->b + ": got " + r.gt_a.get_str() + ">" + r.gt_b.get_str() + " and "
                      + r.lt_a.get_str() + "<" + r.lt_b.get_str() + ", printed "
                      + std::to_string(r.row->gt.count_a) + ">" + std::to_string(r.row->gt.count_b) + " and "
                      + std::to_string(r.row->lt.count_a) + "<" + std::to_string(r.row->lt.count_b));
    }
    if (five_vertex_ppp != 37 || five_vertex_pmp != 36 || five_vertex_delta != -1 || !delta_identity_ok)
        out.push_back("5-vertex host: got " + five_vertex_ppp.get_str() + " vs " + five_vertex_pmp.get_str()
                      + ", delta " + five_vertex_delta.get_str() + ", printed 37 vs 36, delta -1");
    if (single_arc_ppp != 0 || single_arc_pmp != 1)
        out.push_back("single-arc host: got " + single_arc_ppp.get_str() + " vs " + single_arc_pmp.get_str()
                      + ", printed 0 vs 1");
    return out;
}

AppendixReproduction check_witness_table()
{
    AppendixReproduction out;
    for (const auto& row : witness_table()) {
        const auto a = named_three_arc_tree(row.a).to_digraph();
        const auto b = named_three_arc_tree(row.b).to_digraph();
        RowCheck check;
        check.row = &row;
        check.gt_a = hom_general(a, row.gt.host);
        check.gt_b = hom_general(b, row.gt.host);
        check.lt_a = hom_general(a, row.lt.host);
        check.lt_b = hom_general(b, row.lt.host);
        check.ok = check.gt_a == row.gt.count_a && check.gt_b == row.gt.count_b && check.lt_a == row.lt.count_a
            && check.lt_b == row.lt.count_b && check.gt_a > check.gt_b && check.lt_a < check.lt_b;
        out.rows.push_back(std::move(check));
    }
    const auto ppp = named_three_arc_tree("P_{+++}").to_digraph();
    const auto pmp = named_three_arc_tree("P_{+-+}").to_digraph();
    const auto h5 = five_vertex_witness_host();
    out.five_vertex_ppp = hom_general(ppp, h5);
    out.five_vertex_pmp = hom_general(pmp, h5);
    const auto delta = delta_identity(h5);
    out.five_vertex_delta = delta.rhs;
    out.delta_identity_ok = delta.equal && delta.lhs == BigInt(out.five_vertex_pmp) - BigInt(out.five_vertex_ppp);
    const auto edge = host_from_rows("00,10");
    out.single_arc_ppp = hom_general(ppp, edge);
    out.single_arc_pmp = hom_general(pmp, edge);
    out.ok = std::all_of(out.rows.begin(), out.rows.end(), [](const RowCheck& r) { return r.ok; })
        && out.failures().empty();
    return out;
}

AppendixReproduction reproduce_appendix_table()
{
    auto out = check_witness_table();
    if (!out.ok)
        throw MathViolation("appendix table mismatch: " + out.failures().front());
    return out;
}

} // namespace dihom
