#include "cli.hpp"

#include "dihom/appendix.hpp"
#include "dihom/enumerate.hpp"
#include "dihom/error.hpp"
#include "dihom/experiments.hpp"
#include "dihom/homcount.hpp"
#include "dihom/inequalities.hpp"
#include "dihom/io.hpp"
#include "dihom/json.hpp"
#include "dihom/kernels.hpp"
#include "dihom/order_search.hpp"
#include "dihom/random.hpp"
#include "dihom/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dihom::cli {

namespace {

struct Options {
    bool json = false;
    int workers = 1;

    std::string tree;
    std::string pattern;
    std::string host;
    std::string matrix;
    std::optional<int> rooted;
    std::optional<int> tail;
    std::string alpha;
    bool weighted = false;

    std::string inequality;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> a;
    std::optional<int> b;
    std::optional<int> delta;
    std::string p;
    std::optional<int> suite;
    std::uint64_t seed = 1;

    std::string family;
    int h = 3;
    int nmax = 4;
    bool maxorder = false;
    bool reproduce_appendix = false;

    std::string op;
    std::string kernel;
    int sample_n = 30;
    int trials = 500;

    std::string name = "heavy-tail";
    int d_root = 5;
    std::string tail_exponent = "1/2";
    std::string r = "3/10";
    int samples = 20000;

    std::string what;
    int size = 0;
    bool canonical = false;
};

// A pattern given either as a tree literal or as a digraph file.
struct Pattern {
    std::string name;
    Digraph digraph;
    std::optional<RootedDirectedTree> tree;
    std::vector<int> index; // literal vertex -> tree vertex
};

bool is_tree(const Digraph& g)
{
    return g.n() >= 1 && g.arc_count() == static_cast<std::size_t>(g.n() - 1) && g.is_weakly_connected();
}

Pattern load_pattern(const Options& o, std::string_view fallback_literal = {})
{
    if (!o.tree.empty() && !o.pattern.empty())
        throw ParseError("give either --tree or --pattern, not both");
    if (!o.pattern.empty()) {
        if (std::filesystem::exists(o.pattern)) {
            Pattern p;
            p.name = o.pattern;
            p.digraph = read_digraph_file(o.pattern);
            if (is_tree(p.digraph)) {
                auto re = RootedDirectedTree::from_arcs(p.digraph.n(), p.digraph.arcs(), 0);
                p.tree = re.tree;
                p.index = re.index;
            }
            return p;
        }
    }
    std::string literal = !o.tree.empty() ? o.tree : !o.pattern.empty() ? o.pattern : std::string(fallback_literal);
    if (literal.empty())
        throw ParseError("a pattern is required (--tree <literal> or --pattern <file>)");
    auto parsed = parse_tree_literal(literal);
    return Pattern{to_literal(parsed.tree), parsed.tree.to_digraph(), parsed.tree, parsed.index};
}

const RootedDirectedTree& require_tree(const Pattern& p)
{
    if (!p.tree)
        throw DomainError("pattern '" + p.name + "' is not a directed tree");
    return *p.tree;
}

Digraph load_host(const Options& o)
{
    if (o.host.empty())
        throw ParseError("--host <file> is required");
    return read_digraph_file(o.host);
}

NonnegMatrix load_matrix(const Options& o)
{
    if (o.matrix.empty())
        throw ParseError("--matrix <file> is required");
    return parse_matrix_rational(read_text_file(o.matrix));
}

template <class T>
T require(const std::optional<T>& v, const char* flag)
{
    if (!v)
        throw ParseError(std::string(flag) + " is required");
    return *v;
}

// "--alpha 1" broadcasts; "--alpha 0,1,2" gives one weight per tree vertex.
WeightVector parse_alpha(const std::string& text, int k)
{
    if (text.empty())
        return WeightVector(k, Rational(0));
    WeightVector out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        out.push_back(parse_rational(token));
    if (out.size() == 1)
        return WeightVector(k, out.front());
    if (static_cast<int>(out.size()) != k)
        throw DomainError("--alpha needs one weight or one per tree vertex (" + std::to_string(k) + ")");
    return out;
}

int tree_vertex(const Pattern& p, int literal_id)
{
    if (literal_id < 0 || literal_id >= static_cast<int>(p.index.size()) || p.index[literal_id] < 0)
        throw DomainError("tree vertex " + std::to_string(literal_id) + " out of range");
    return p.index[literal_id];
}

std::string relation_symbol(const BoundReport& r) { return r.relation == Relation::Equal ? "==" : "<="; }

void print_report(std::ostream& out, const BoundReport& r)
{
    out << r.label << ": " << r.lhs.to_string() << ' ' << relation_symbol(r) << ' ' << r.rhs.to_string() << "  "
        << (r.holds ? "holds" : "VIOLATED") << '\n';
}

Json envelope(const char* command)
{
    return Json{{"schema", kJsonSchema}, {"command", command}};
}

Digraph directed_triangle()
{
    const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
    return Digraph(3, arcs);
}

std::string witness_cell(const HostWitness& w, char sign)
{
    return "n=" + std::to_string(w.host.n()) + " " + format_matrix_inline(w.host) + " " + to_decimal(w.count_a) + sign
        + to_decimal(w.count_b);
}

// ---------------------------------------------------------------- count

int cmd_count(const Options& o, std::ostream& out)
{
    const auto pattern = load_pattern(o);
    Json j = envelope("count");
    j["pattern"] = pattern.name;

    if (o.weighted) {
        const auto a = parse_matrix_rational(read_text_file(o.host.empty() ? o.matrix : o.host));
        const auto value = hom_weighted(require_tree(pattern), a);
        if (o.json) {
            j["host"] = o.host.empty() ? o.matrix : o.host;
            j["count"] = to_string(value);
            out << j.dump(2) << '\n';
        } else {
            out << to_string(value) << '\n';
        }
        return kOk;
    }

    const Digraph host = load_host(o);
    j["host"] = to_json(host);
    std::string text;
    if (o.tail) {
        const auto& t = require_tree(pattern);
        const auto tail = hom_tail(t, host, *o.tail, parse_alpha(o.alpha, t.size()));
        j["delta"] = *o.tail;
        if (tail.exact) {
            text = to_decimal(tail.value);
            j["count"] = text;
        } else {
            std::ostringstream s;
            s.precision(17);
            s << tail.approx;
            text = s.str();
            j["count"] = tail.approx;
        }
    } else if (o.rooted) {
        const auto& t = require_tree(pattern);
        text = to_decimal(hom_rooted(t, host, *o.rooted));
        j["rooted"] = *o.rooted;
        j["count"] = text;
    } else {
        text = to_decimal(pattern.tree ? hom_tree(*pattern.tree, host) : hom_general(pattern.digraph, host));
        j["count"] = text;
    }
    if (o.json)
        out << j.dump(2) << '\n';
    else
        out << text << '\n';
    return kOk;
}

// ---------------------------------------------------------------- check

std::vector<BoundReport> check_instance(Inequality which, const Options& o)
{
    switch (which) {
    case Inequality::Main:
        return {check_main_theorem(require_tree(load_pattern(o)), load_host(o))};
    case Inequality::StarHolder:
        return {check_star_holder(require(o.n, "--n"), require(o.k, "--k"), load_host(o))};
    case Inequality::GeomMean: {
        const auto p = load_pattern(o);
        const auto& t = require_tree(p);
        const auto g = check_geometric_mean(t, tree_vertex(p, require(o.a, "--a")), tree_vertex(p, require(o.b, "--b")),
                                            load_host(o));
        return {g.geometric, g.max_form};
    }
    case Inequality::Tail: {
        const auto& t = require_tree(load_pattern(o));
        const auto host = load_host(o);
        const int delta = o.delta.value_or(0);
        return {check_tail_theorem(t, host, delta, parse_alpha(o.alpha, t.size())),
                check_tail_unweighted(t, host, delta)};
    }
    case Inequality::Envelope: {
        const auto& t = require_tree(load_pattern(o));
        return check_pointwise_envelope(t, load_host(o), o.p.empty() ? Rational(2) : parse_rational(o.p));
    }
    case Inequality::Weighted:
        return {check_weighted_tree(require_tree(load_pattern(o)), load_matrix(o))};
    case Inequality::MvPath: {
        if (o.p.empty())
            throw ParseError("--p is required");
        const Rational p = parse_rational(o.p);
        if (p.get_den() != 1)
            throw DomainError("mv-path needs an integer --p");
        return {check_mv_path(static_cast<int>(p.get_num().get_si()), load_matrix(o))};
    }
    case Inequality::Moments:
        return {check_moment_domination(require_tree(load_pattern(o)), load_host(o))};
    }
    return {};
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Inequality which = parse_inequality(o.inequality);
    Json j = envelope("check");
    j["inequality"] = std::string(inequality_name(which));

    if (o.suite) {
        const auto result = run_suite(which, *o.suite, o.seed, o.workers);
        if (o.json) {
            j["suite"] = to_json(result);
            out << j.dump(2) << '\n';
        } else {
            out << result.label << ": " << result.instances << " instances, " << result.checks << " checks, "
                << result.violations << " violations (seed " << result.seed << ")\n";
            out << "max lhs/rhs: " << result.max_ratio << '\n';
            if (which == Inequality::Tail)
                out << "max lhs / sum d^(k-1+|alpha|) 1{d >= delta}: " << result.max_unscaled_tail_ratio << '\n';
            if (result.first_violation) {
                out << "first violation: " << result.first_violation_instance << '\n';
                print_report(out, *result.first_violation);
            }
        }
        return result.passed() ? kOk : kViolation;
    }

    const auto reports = check_instance(which, o);
    bool all = true;
    Json list = Json::array();
    for (const auto& r : reports) {
        all = all && r.holds;
        list.push_back(to_json(r));
    }
    if (o.json) {
        j["reports"] = std::move(list);
        j["holds"] = all;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            print_report(out, r);
    }
    return all ? kOk : kViolation;
}

// ---------------------------------------------------------------- search

int cmd_search(const Options& o, std::ostream& out)
{
    if (o.family.empty() && !o.reproduce_appendix)
        throw ParseError("search needs --family and/or --reproduce-appendix");
    Json j = envelope("search");
    int code = kOk;

    if (o.reproduce_appendix) {
        const auto rep = check_witness_table();
        if (o.json) {
            j["appendix"] = to_json(rep);
        } else {
            out << "witness table: " << rep.rows.size() << " rows\n";
            for (const auto& row : rep.rows)
                out << "  " << row.row->a << " || " << row.row->b << "  " << row.gt_a.get_str() << '>'
                    << row.gt_b.get_str() << "  " << row.lt_a.get_str() << '<' << row.lt_b.get_str() << "  "
                    << (row.ok ? "ok" : "MISMATCH") << '\n';
            out << "5-vertex host: hom(P+++)=" << rep.five_vertex_ppp.get_str()
                << " hom(P+-+)=" << rep.five_vertex_pmp.get_str() << " delta=" << rep.five_vertex_delta.get_str()
                << '\n';
            out << "single-arc host: hom(P+++)=" << rep.single_arc_ppp.get_str()
                << " hom(P+-+)=" << rep.single_arc_pmp.get_str() << '\n';
            for (const auto& f : rep.failures())
                out << "mismatch: " << f << '\n';
            out << (rep.ok ? "all rows verified" : "appendix reproduction FAILED") << '\n';
        }
        if (!rep.ok)
            code = kViolation;
    }

    if (!o.family.empty()) {
        const auto trees = tree_family(o.family, o.h);
        const auto verdicts = compare_family(trees, o.nmax, o.workers, o.maxorder);
        Json list = Json::array();
        for (const auto& v : verdicts) {
            if (auto w = v.witness(); w && !verify_witness(*w))
                throw MathViolation("witness for " + to_literal(v.a) + " || " + to_literal(v.b) + " does not recompute");
            if (o.json) {
                list.push_back(to_json(v));
                continue;
            }
            const char* rel = o.maxorder ? " vs max " : " || ";
            out << to_literal(v.a) << rel << to_literal(v.b) << "  " << verdict_name(v.kind);
            if (v.gt)
                out << "  H>: " << witness_cell(*v.gt, '>');
            if (v.lt)
                out << "  H<: " << witness_cell(*v.lt, '<');
            out << '\n';
        }
        if (o.json) {
            j["family"] = o.family;
            j["n_max"] = o.nmax;
            j["max_order"] = o.maxorder;
            j["verdicts"] = std::move(list);
        }
    }
    if (o.json)
        out << j.dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------- kernel

int cmd_kernel(const Options& o, std::ostream& out)
{
    const StepKernel h = o.kernel.empty() ? step_kernel_of_host(directed_triangle())
                                          : parse_kernel(read_text_file(o.kernel));
    const auto pattern = load_pattern(o, "P ++");
    Json j = envelope("kernel");
    j["op"] = o.op;
    j["pattern"] = pattern.name;

    if (o.op == "eval") {
        const auto u = config_product(pattern.digraph, h);
        j["U"] = to_string(u);
        if (o.json)
            out << j.dump(2) << '\n';
        else
            out << to_string(u) << '\n';
        return kOk;
    }
    if (o.op == "mc") {
        const auto r = mc_density_check(pattern.digraph, h, o.sample_n, o.trials, o.seed, o.workers);
        if (o.json) {
            j["n"] = o.sample_n;
            j["result"] = to_json(r);
            out << j.dump(2) << '\n';
        } else {
            out << "mean t = " << r.mean_t << ", U = " << to_string(r.u) << " (" << r.u.get_d() << ")\n";
            out << "|mean - U| = " << r.abs_err << ", tolerance = " << r.tolerance << " (3 SE + " << kMcSlack
                << "), trials = " << r.trials_used << (r.reran ? " after rerun" : "") << '\n';
            out << (r.within ? "within tolerance" : "OUTSIDE tolerance") << '\n';
        }
        return r.within ? kOk : kViolation;
    }
    throw ParseError("--op must be eval or mc");
}

// ---------------------------------------------------------------- experiment

int cmd_experiment(const Options& o, std::ostream& out)
{
    Json j = envelope("experiment");
    j["name"] = o.name;
    if (o.name == "heavy-tail") {
        HeavyTailParams params;
        params.d_root = o.d_root;
        params.tail_exponent = parse_rational(o.tail_exponent);
        params.r = parse_rational(o.r);
        params.p = o.p.empty() ? Rational(4) : parse_rational(o.p);
        params.samples = o.samples;
        params.seed = o.seed;
        const auto rep = heavy_tail_experiment(params, o.workers);
        if (o.json) {
            j["report"] = to_json(rep);
            out << j.dump(2) << '\n';
        } else {
            out << "samples " << params.samples << ", d_root " << params.d_root << ", tail "
                << to_string(params.tail_exponent) << ", r " << to_string(params.r) << ", p " << to_string(params.p)
                << ", truncation " << rep.truncation << '\n';
            out << "(a) envelope violations: " << rep.envelope_violations << '\n';
            out << "(b) E[hom^r] = " << rep.mean_hom_r << " vs d E[D^r] = " << rep.subadditive_bound
                << " (ratio " << rep.subadditive_ratio << ")\n";
            out << "    d^r E[D^r] = " << rep.scaled_bound << " (ratio " << rep.scaled_ratio << ", not asserted)\n";
        }
        return rep.envelope_holds && rep.moment_holds ? kOk : kViolation;
    }
    if (o.name == "degree-moments") {
        const auto s = degree_moment_summary(load_host(o), o.h);
        if (o.json) {
            j["summary"] = to_json(s);
            out << j.dump(2) << '\n';
        } else {
            out << "mean deg_in^" << s.h - 1 << " = " << to_string(s.mean_in_pow) << ", mean deg_out^" << s.h - 1
                << " = " << to_string(s.mean_out_pow) << ", mean d^" << s.h - 1 << " = "
                << to_string(s.mean_total_pow) << '\n';
        }
        return s.sandwich_holds() ? kOk : kViolation;
    }
    if (o.name == "exploration") {
        const auto rep = exploration_bound_report(load_host(o), o.k.value_or(4));
        Json list = Json::array();
        for (const auto& [t, r] : rep.per_tree) {
            if (o.json) {
                Json e = to_json(r);
                e["tree"] = to_literal(t);
                list.push_back(std::move(e));
            } else {
                out << to_literal(t) << "  ";
                print_report(out, r);
            }
        }
        if (o.json) {
            j["k"] = rep.k;
            j["per_tree"] = std::move(list);
            j["worst"] = to_literal(rep.per_tree[rep.worst].first);
            j["all_hold"] = rep.all_hold;
            out << j.dump(2) << '\n';
        } else {
            out << "worst slack: " << to_literal(rep.per_tree[rep.worst].first) << '\n';
        }
        return rep.all_hold ? kOk : kViolation;
    }
    throw ParseError("unknown experiment '" + o.name + "'");
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, std::ostream& out)
{
    Json j = envelope("enumerate");
    j["what"] = o.what;
    j["size"] = o.size;
    Json list = Json::array();
    if (o.what == "trees") {
        for (const auto& t : enumerate_directed_trees(o.size, o.workers)) {
            if (o.json)
                list.push_back(to_literal(t));
            else
                out << to_literal(t) << '\n';
        }
    } else if (o.what == "hosts") {
        const auto hosts = enumerate_hosts(o.size, o.canonical);
        for (auto it = hosts.begin(); it != hosts.end(); ++it) {
            const Digraph g = *it;
            if (o.json) {
                Json e = to_json(g);
                e["index"] = it.index();
                list.push_back(std::move(e));
            } else {
                out << it.index() << ' ' << format_matrix_inline(g) << '\n';
            }
        }
    } else {
        throw ParseError("--what must be trees or hosts");
    }
    if (o.json) {
        j["count"] = list.size();
        j["items"] = std::move(list);
        out << j.dump(2) << '\n';
    }
    return kOk;
}

int resolve_env_workers(int flag_value)
{
    const char* env = std::getenv("DIHOM_WORKERS");
    if (!env || !*env)
        return flag_value;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("DIHOM_WORKERS must be an integer, got '") + env + "'");
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Directed tree homomorphism counts, inequality checks and order search", "dihom"};
    // "-h" stays free for the star size option.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("--workers", o.workers, "Worker threads (<= 0: all cores; DIHOM_WORKERS overrides)");

    std::function<int(const Options&, std::ostream&)> action;

    auto* count = app.add_subcommand("count", "Count homomorphisms of a pattern into a host");
    count->add_option("--tree", o.tree, "Tree literal: 'S a b', 'P +-+', '0>1,2>1'");
    count->add_option("--pattern", o.pattern, "Pattern digraph file (or literal)");
    count->add_option("--host", o.host, "Host digraph file (matrix or edge list)");
    count->add_option("--rooted", o.rooted, "Count maps sending the root to this host vertex");
    count->add_option("--tail", o.tail, "Tail threshold Delta on the root degree");
    count->add_option("--alpha", o.alpha, "Vertex weights: one value or a comma list");
    count->add_flag("--weighted", o.weighted, "Host file is a nonnegative rational matrix");
    count->add_option("--matrix", o.matrix, "Rational matrix file for --weighted");
    count->callback([&] { action = cmd_count; });

    auto* check = app.add_subcommand("check", "Check an inequality on one instance or a seeded suite");
    check->add_option("--inequality", o.inequality,
                      "main|star-holder|geom-mean|tail|envelope|weighted|mv-path|moments")
        ->required();
    check->add_option("--tree", o.tree, "Tree literal");
    check->add_option("--pattern", o.pattern, "Pattern digraph file");
    check->add_option("--host", o.host, "Host digraph file");
    check->add_option("--matrix", o.matrix, "Rational matrix file");
    check->add_option("--n", o.n, "Star size n (star-holder)");
    check->add_option("--k", o.k, "Out-leaf count k (star-holder)");
    check->add_option("--a", o.a, "First skeleton leaf (geom-mean)");
    check->add_option("--b", o.b, "Second skeleton leaf (geom-mean)");
    check->add_option("--delta", o.delta, "Tail threshold (tail)");
    check->add_option("--alpha", o.alpha, "Vertex weights (tail)");
    check->add_option("--p", o.p, "Exponent: rational p >= 1 (envelope) or integer path length (mv-path)");
    check->add_option("--suite", o.suite, "Run a seeded random suite of this many instances");
    check->add_option("--seed", o.seed, "Suite seed");
    check->callback([&] { action = cmd_check; });

    auto* search = app.add_subcommand("search", "Sweep hosts to compare tree families");
    search->add_option("--family", o.family, "trees-k3|trees-k4|stars-h");
    search->add_option("--h", o.h, "Arc count for stars-h");
    search->add_option("--nmax", o.nmax, "Largest host size (<= 5)");
    search->add_flag("--maxorder", o.maxorder, "Compare against max{hom(S), hom(S reversed)}");
    search->add_flag("--reproduce-appendix", o.reproduce_appendix, "Recompute the 3-arc witness table");
    search->callback([&] { action = cmd_search; });

    auto* kernel = app.add_subcommand("kernel", "Step-kernel configuration products and G(n, h) sampling");
    kernel->add_option("--op", o.op, "eval|mc")->required();
    kernel->add_option("--kernel", o.kernel, "Kernel file (default: directed triangle)");
    kernel->add_option("--pattern", o.pattern, "Pattern literal or digraph file (default 'P ++')");
    kernel->add_option("--tree", o.tree, "Pattern tree literal");
    kernel->add_option("--n", o.sample_n, "Sampled digraph size");
    kernel->add_option("--trials", o.trials, "Monte-Carlo trials");
    kernel->add_option("--seed", o.seed, "Monte-Carlo seed");
    kernel->callback([&] { action = cmd_kernel; });

    auto* experiment = app.add_subcommand("experiment", "Random-model experiments");
    experiment->add_option("--name", o.name, "heavy-tail|degree-moments|exploration");
    experiment->add_option("--d-root", o.d_root, "Root out-degree (heavy-tail)");
    experiment->add_option("--tail", o.tail_exponent, "Pareto tail exponent (heavy-tail)");
    experiment->add_option("--r", o.r, "Fractional moment order (heavy-tail)");
    experiment->add_option("--p", o.p, "Envelope exponent (heavy-tail)");
    experiment->add_option("--samples", o.samples, "Sample count (heavy-tail)");
    experiment->add_option("--seed", o.seed, "Seed");
    experiment->add_option("--host", o.host, "Host file (degree-moments, exploration)");
    experiment->add_option("--h", o.h, "Pattern vertex count h (degree-moments)");
    experiment->add_option("--k", o.k, "Tree vertex count k (exploration)");
    experiment->callback([&] { action = cmd_experiment; });

    auto* enumerate = app.add_subcommand("enumerate", "List trees or hosts");
    enumerate->add_option("--what", o.what, "trees|hosts")->required();
    enumerate->add_option("--size", o.size, "Arc count for trees, vertex count for hosts")->required();
    enumerate->add_flag("--canonical", o.canonical, "Hosts: one per isomorphism class");
    enumerate->callback([&] { action = cmd_enumerate; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        o.workers = resolve_env_workers(o.workers);
        return action(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const MathViolation& e) {
        err << "violation: " << e.what() << '\n';
        return kViolation;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace dihom::cli
