#include "dihom/json.hpp"
#include "dihom/error.hpp"
#include "dihom/random.hpp"

namespace dihom {

Json to_json(const Digraph& g)
{
    Json matrix = Json::array();
    for (int i = 0; i < g.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.n(); ++j)
            row.push_back(g.has_arc(i, j) ? 1 : 0);
        matrix.push_back(std::move(row));
    }
    return Json{{"n", g.n()}, {"matrix", std::move(matrix)}};
}

Digraph digraph_from_json(const Json& j)
{
    try {
        const int n = j.at("n").get<int>();
        const auto& matrix = j.at("matrix");
        if (n < 0 || n > kMaxVertices || matrix.size() != static_cast<std::size_t>(n))
            throw ParseError("digraph JSON: matrix size does not match n");
        std::vector<Arc> arcs;
        for (int a = 0; a < n; ++a) {
            if (matrix[a].size() != static_cast<std::size_t>(n))
                throw ParseError("digraph JSON: row " + std::to_string(a) + " has the wrong length");
            for (int b = 0; b < n; ++b) {
                const int e = matrix[a][b].get<int>();
                if (e != 0 && e != 1)
                    throw ParseError("digraph JSON: entries must be 0 or 1");
                if (e == 1) {
                    if (a == b)
                        throw ParseError("digraph JSON: loops are not allowed");
                    arcs.push_back({a, b});
                }
            }
        }
        return Digraph(n, arcs);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("digraph JSON: ") + e.what());
    }
}

Json to_json(const Quantity& q)
{
    if (q.exact)
        return to_string(*q.exact);
    return q.approx;
}

Json to_json(const BoundReport& r)
{
    return Json{{"label", r.label},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"relation", r.relation == Relation::Equal ? "==" : "<="},
                {"holds", r.holds},
                {"certified", r.certified},
                {"slack", to_json(r.slack())}};
}

Json to_json(const SuiteResult& r)
{
    Json j{{"inequality", r.label},
           {"seed", r.seed},
           {"rng", kRngName},
           {"instances", r.instances},
           {"checks", r.checks},
           {"violations", r.violations},
           {"max_ratio", r.max_ratio}};
    if (r.label == "tail")
        j["max_unscaled_tail_ratio"] = r.max_unscaled_tail_ratio;
    if (r.first_violation) {
        j["first_violation"] = to_json(*r.first_violation);
        j["first_violation_instance"] = r.first_violation_instance;
    }
    j["passed"] = r.passed();
    return j;
}

Json to_json(const HostWitness& w)
{
    Json j = to_json(w.host);
    j["index"] = w.index;
    j["counts"] = Json::array({to_decimal(w.count_a), to_decimal(w.count_b)});
    return j;
}

Json to_json(const WitnessRecord& w)
{
    return Json{{"pair", Json::array({to_literal(w.a), to_literal(w.b)})},
                {"max_order", w.max_order},
                {"host_gt", to_json(w.gt)},
                {"host_lt", to_json(w.lt)}};
}

Json to_json(const OrderVerdict& v)
{
    Json j{{"pair", Json::array({to_literal(v.a), to_literal(v.b)})},
           {"verdict", std::string(verdict_name(v.kind))},
           {"n_max", v.n_max},
           {"max_order", v.max_order}};
    j["host_gt"] = v.gt ? to_json(*v.gt) : Json(nullptr);
    j["host_lt"] = v.lt ? to_json(*v.lt) : Json(nullptr);
    return j;
}

Json to_json(const McResult& r)
{
    return Json{{"mean_t", r.mean_t},
                {"U", to_string(r.u)},
                {"U_float", r.u.get_d()},
                {"abs_err", r.abs_err},
                {"std_error", r.std_error},
                {"tolerance", r.tolerance},
                {"within", r.within},
                {"trials", r.trials_used},
                {"reran", r.reran},
                {"seed", r.seed},
                {"rng", kRngName}};
}

Json to_json(const HeavyTailReport& r)
{
    return Json{{"d_root", r.params.d_root},
                {"tail_exponent", to_string(r.params.tail_exponent)},
                {"r", to_string(r.params.r)},
                {"p", to_string(r.params.p)},
                {"samples", r.params.samples},
                {"seed", r.params.seed},
                {"rng", kRngName},
                {"truncation", r.truncation},
                {"envelope_violations", r.envelope_violations},
                {"mean_hom_r", r.mean_hom_r},
                {"mean_degree_r", r.mean_degree_r},
                {"subadditive_bound", r.subadditive_bound},
                {"subadditive_ratio", r.subadditive_ratio},
                {"scaled_bound", r.scaled_bound},
                {"scaled_ratio", r.scaled_ratio},
                {"envelope_holds", r.envelope_holds},
                {"moment_holds", r.moment_holds}};
}

Json to_json(const DegreeMomentSummary& s)
{
    return Json{{"n", s.n},
                {"h", s.h},
                {"mean_in_pow", to_string(s.mean_in_pow)},
                {"mean_out_pow", to_string(s.mean_out_pow)},
                {"mean_total_pow", to_string(s.mean_total_pow)},
                {"sandwich_holds", s.sandwich_holds()}};
}

namespace {

Json printed_host(const PrintedWitness& w, const BigCount& a, const BigCount& b)
{
    Json j = to_json(w.host);
    j["printed"] = Json::array({std::to_string(w.count_a), std::to_string(w.count_b)});
    j["computed"] = Json::array({to_decimal(a), to_decimal(b)});
    return j;
}

} // namespace

Json to_json(const AppendixReproduction& r)
{
    Json rows = Json::array();
    for (const auto& c : r.rows)
        rows.push_back(Json{{"pair", Json::array({c.row->a, c.row->b})},
                            {"host_gt", printed_host(c.row->gt, c.gt_a, c.gt_b)},
                            {"host_lt", printed_host(c.row->lt, c.lt_a, c.lt_b)},
                            {"ok", c.ok}});
    return Json{{"rows", std::move(rows)},
                {"five_vertex", Json{{"hom_ppp", to_decimal(r.five_vertex_ppp)},
                                     {"hom_pmp", to_decimal(r.five_vertex_pmp)},
                                     {"delta", to_decimal(r.five_vertex_delta)},
                                     {"delta_identity", r.delta_identity_ok}}},
                {"single_arc", Json{{"hom_ppp", to_decimal(r.single_arc_ppp)}, {"hom_pmp", to_decimal(r.single_arc_pmp)}}},
                {"ok", r.ok}};
}

} // namespace dihom
