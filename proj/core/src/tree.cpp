#include "dihom/tree.hpp"
#include "dihom/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <string>

namespace dihom {

RootedDirectedTree::RootedDirectedTree(std::vector<int> parent, std::vector<ArcDir> dir)
    : parent_(std::move(parent)), dir_(std::move(dir))
{
    const int k = size();
    if (k < 1)
        throw DomainError("a tree needs at least one vertex");
    if (static_cast<int>(dir_.size()) != k)
        throw DomainError("parent and orientation arrays differ in length");
    if (parent_[0] != -1)
        throw DomainError("vertex 0 must be the root");
    for (int i = 1; i < k; ++i)
        if (parent_[i] < 0 || parent_[i] >= i)
            throw DomainError("parent[" + std::to_string(i) + "] must lie in [0, " + std::to_string(i) + ")");
    out_children_.resize(k);
    in_children_.resize(k);
    for (int i = 1; i < k; ++i)
        (dir_[i] == ArcDir::Out ? out_children_ : in_children_)[parent_[i]].push_back(i);
}

Relabeled RootedDirectedTree::from_arcs(int k, std::span<const Arc> arcs, int root)
{
    if (k < 1)
        throw DomainError("a tree needs at least one vertex");
    if (static_cast<int>(arcs.size()) != k - 1)
        throw DomainError("a tree on " + std::to_string(k) + " vertices has " + std::to_string(k - 1) + " arcs");
    if (root < 0 || root >= k)
        throw DomainError("root out of range");
    // neighbour, dir as seen from the vertex: Out if vertex -> neighbour
    std::vector<std::vector<std::pair<int, ArcDir>>> adj(k);
    for (const auto& a : arcs) {
        if (a.from < 0 || a.from >= k || a.to < 0 || a.to >= k)
            throw DomainError("tree arc endpoint out of range");
        if (a.from == a.to)
            throw DomainError("tree arcs cannot be loops");
        adj[a.from].push_back({a.to, ArcDir::Out});
        adj[a.to].push_back({a.from, ArcDir::In});
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end(), [](auto& x, auto& y) { return x.first < y.first; });

    std::vector<int> index(k, -1);
    std::vector<int> parent{-1};
    std::vector<ArcDir> dir{ArcDir::Out};
    std::queue<int> queue;
    index[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (auto [u, d] : adj[v]) {
            if (index[u] != -1)
                continue;
            index[u] = static_cast<int>(parent.size());
            parent.push_back(index[v]);
            dir.push_back(d);
            queue.push(u);
        }
    }
    if (static_cast<int>(parent.size()) != k)
        throw DomainError("arcs do not span a connected tree");
    return {RootedDirectedTree(std::move(parent), std::move(dir)), std::move(index)};
}

int RootedDirectedTree::degree(int x) const
{
    return static_cast<int>(out_children_[x].size() + in_children_[x].size()) + (x == 0 ? 0 : 1);
}

std::vector<int> RootedDirectedTree::leaves() const
{
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (is_leaf(x))
            out.push_back(x);
    return out;
}

std::vector<int> RootedDirectedTree::neighbours(int x) const
{
    std::vector<int> out;
    if (x != 0)
        out.push_back(parent_[x]);
    out.insert(out.end(), out_children_[x].begin(), out_children_[x].end());
    out.insert(out.end(), in_children_[x].begin(), in_children_[x].end());
    return out;
}

std::vector<Arc> RootedDirectedTree::arcs() const
{
    std::vector<Arc> out;
    for (int i = 1; i < size(); ++i)
        out.push_back(dir_[i] == ArcDir::Out ? Arc{parent_[i], i} : Arc{i, parent_[i]});
    return out;
}

Digraph RootedDirectedTree::to_digraph() const
{
    auto a = arcs();
    return Digraph(size(), a);
}

RootedDirectedTree RootedDirectedTree::reversed() const
{
    auto dir = dir_;
    for (int i = 1; i < size(); ++i)
        dir[i] = dir[i] == ArcDir::Out ? ArcDir::In : ArcDir::Out;
    return RootedDirectedTree(parent_, std::move(dir));
}

Relabeled RootedDirectedTree::rerooted(int new_root) const
{
    auto a = arcs();
    return from_arcs(size(), a, new_root);
}

RootedDirectedTree make_star(int in_leaves, int out_leaves)
{
    if (in_leaves < 0 || out_leaves < 0)
        throw DomainError("star leaf counts must be nonnegative");
    if (in_leaves + out_leaves == 0)
        throw DomainError("degenerate star S_{0,0}");
    const int k = in_leaves + out_leaves + 1;
    std::vector<int> parent(k, 0);
    std::vector<ArcDir> dir(k, ArcDir::Out);
    parent[0] = -1;
    for (int i = 1; i <= in_leaves; ++i)
        dir[i] = ArcDir::In;
    return RootedDirectedTree(std::move(parent), std::move(dir));
}

RootedDirectedTree make_oriented_path(std::string_view signs)
{
    if (signs.empty())
        throw DomainError("oriented path needs at least one sign");
    std::vector<int> parent{-1};
    std::vector<ArcDir> dir{ArcDir::Out};
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != '+' && signs[i] != '-')
            throw DomainError(std::string("path sign must be '+' or '-', got '") + signs[i] + "'");
        parent.push_back(static_cast<int>(i));
        dir.push_back(signs[i] == '+' ? ArcDir::Out : ArcDir::In);
    }
    return RootedDirectedTree(std::move(parent), std::move(dir));
}

RootedDirectedTree make_point() { return RootedDirectedTree({-1}, {ArcDir::Out}); }

std::optional<std::pair<int, int>> star_shape(const RootedDirectedTree& t)
{
    const int k = t.size();
    if (k == 2)
        return std::pair{0, 1};
    if (k < 3)
        return std::nullopt;
    for (int c = 0; c < k; ++c) {
        if (t.degree(c) != k - 1)
            continue;
        int in = 0, out = 0;
        for (const auto& a : t.arcs())
            (a.to == c ? in : out) += 1;
        return std::pair{in, out};
    }
    return std::nullopt;
}

std::optional<std::string> path_shape(const RootedDirectedTree& t)
{
    const int k = t.size();
    if (k < 2)
        return std::nullopt;
    for (int x = 0; x < k; ++x)
        if (t.degree(x) > 2)
            return std::nullopt;
    const auto g = t.to_digraph();
    auto read_from = [&](int start) {
        std::string signs;
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int y : t.neighbours(cur))
                if (y != prev)
                    next = y;
            if (next == -1)
                break;
            signs += g.has_arc(cur, next) ? '+' : '-';
            prev = cur;
            cur = next;
        }
        return signs;
    };
    std::vector<int> ends;
    for (int x = 0; x < k; ++x)
        if (t.degree(x) == 1)
            ends.push_back(x);
    auto first = read_from(ends.front());
    auto second = read_from(ends.back());
    auto plus = [](const std::string& s) { return std::count(s.begin(), s.end(), '+'); };
    if (plus(first) != plus(second))
        return plus(first) > plus(second) ? first : second;
    return std::min(first, second);
}

namespace {

std::string rooted_code(const RootedDirectedTree& t, const Digraph& g, int x, int from)
{
    std::vector<std::string> parts;
    for (int c : t.neighbours(x)) {
        if (c == from)
            continue;
        parts.push_back((g.has_arc(x, c) ? 'o' : 'i') + rooted_code(t, g, c, x));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts)
        out += p;
    out += ')';
    return out;
}

std::vector<int> centres(const RootedDirectedTree& t)
{
    const int k = t.size();
    std::vector<int> degree(k);
    std::vector<int> layer;
    for (int x = 0; x < k; ++x) {
        degree[x] = t.degree(x);
        if (degree[x] <= 1)
            layer.push_back(x);
    }
    int remaining = k;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int x : layer)
            for (int y : t.neighbours(x))
                if (--degree[y] == 1)
                    next.push_back(y);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace

std::string tree_code(const RootedDirectedTree& t)
{
    const auto g = t.to_digraph();
    std::string best;
    for (int c : centres(t)) {
        auto code = rooted_code(t, g, c, -1);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

std::string to_literal(const RootedDirectedTree& t)
{
    if (t.size() == 1)
        return "0";
    if (auto star = star_shape(t))
        return "S " + std::to_string(star->first) + " " + std::to_string(star->second);
    if (auto path = path_shape(t))
        return "P " + *path;
    std::string out;
    for (const auto& a : t.arcs()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(a.from) + ">" + std::to_string(a.to);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_nonneg(std::string_view s, std::string_view literal)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0 || s.empty())
        throw ParseError("bad integer in tree literal '" + std::string(literal) + "'");
    return value;
}

std::vector<int> identity(int k)
{
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i)
        out[i] = i;
    return out;
}

} // namespace

ParsedTree parse_tree_literal(std::string_view literal)
{
    const auto s = trim(literal);
    if (s.empty())
        throw ParseError("empty tree literal");
    try {
        if (s.size() >= 2 && s[0] == 'S' && std::isspace(static_cast<unsigned char>(s[1]))) {
            auto rest = trim(s.substr(1));
            auto space = rest.find_first_of(" \t");
            if (space == std::string_view::npos)
                throw ParseError("star literal is 'S a b'");
            auto t = make_star(parse_nonneg(rest.substr(0, space), literal), parse_nonneg(rest.substr(space), literal));
            return {t, identity(t.size())};
        }
        if (s[0] == 'P' && (s.size() == 1 || std::isspace(static_cast<unsigned char>(s[1])) || s[1] == '+' || s[1] == '-')) {
            std::string signs;
            for (char c : s.substr(1))
                if (!std::isspace(static_cast<unsigned char>(c)))
                    signs += c;
            auto t = make_oriented_path(signs);
            return {t, identity(t.size())};
        }
        std::vector<Arc> arcs;
        int max_id = -1;
        std::size_t start = 0;
        while (start <= s.size()) {
            auto comma = s.find(',', start);
            auto token = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (token.empty())
                throw ParseError("empty token in tree literal '" + std::string(literal) + "'");
            if (auto gt = token.find('>'); gt != std::string_view::npos) {
                Arc a{parse_nonneg(token.substr(0, gt), literal), parse_nonneg(token.substr(gt + 1), literal)};
                max_id = std::max({max_id, a.from, a.to});
                arcs.push_back(a);
            } else {
                max_id = std::max(max_id, parse_nonneg(token, literal));
            }
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (max_id > kMaxVertices)
            throw ParseError("tree literal has too many vertices");
        auto relabeled = RootedDirectedTree::from_arcs(max_id + 1, arcs, 0);
        return {std::move(relabeled.tree), std::move(relabeled.index)};
    } catch (const DomainError& e) {
        throw ParseError("invalid tree literal '" + std::string(literal) + "': " + e.what());
    }
}

} // namespace dihom
