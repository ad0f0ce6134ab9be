#include "dihom/io.hpp"
#include "dihom/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dihom {

namespace {

std::vector<std::string> non_empty_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    return lines;
}

std::vector<long> integers(const std::string& line)
{
    std::istringstream in(line);
    std::vector<long> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            throw ParseError("expected integer, got '" + token + "'");
        }
        if (used != token.size())
            throw ParseError("expected integer, got '" + token + "'");
        out.push_back(value);
    }
    return out;
}

int parse_vertex_count(long n)
{
    if (n < 0 || n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " outside [0, 64]");
    return static_cast<int>(n);
}

} // namespace

Digraph parse_matrix(std::string_view text)
{
    auto lines = non_empty_lines(text);
    if (lines.empty())
        throw ParseError("empty digraph input");
    auto header = integers(lines[0]);
    if (header.size() != 1)
        throw ParseError("matrix header must be a single vertex count");
    const int n = parse_vertex_count(header[0]);
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
        auto row = integers(lines[u + 1]);
        if (static_cast<int>(row.size()) != n)
            throw ParseError("matrix row " + std::to_string(u) + " has " + std::to_string(row.size()) + " entries");
        for (int v = 0; v < n; ++v) {
            if (row[v] != 0 && row[v] != 1)
                throw ParseError("matrix entries must be 0 or 1");
            if (row[v] == 1) {
                if (u == v)
                    throw ParseError("loop at vertex " + std::to_string(u));
                arcs.push_back({u, v});
            }
        }
    }
    return Digraph(n, arcs);
}

Digraph parse_edge_list(std::string_view text)
{
    auto lines = non_empty_lines(text);
    if (lines.empty())
        throw ParseError("empty digraph input");
    auto header = integers(lines[0]);
    if (header.size() != 2)
        throw ParseError("edge-list header must be 'n m'");
    const int n = parse_vertex_count(header[0]);
    const long m = header[1];
    if (m < 0 || static_cast<long>(lines.size()) != m + 1)
        throw ParseError("expected " + std::to_string(m) + " arc lines");
    std::vector<Arc> arcs;
    for (long i = 0; i < m; ++i) {
        auto uv = integers(lines[i + 1]);
        if (uv.size() != 2)
            throw ParseError("arc line must be 'u v'");
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw ParseError("arc endpoint out of range");
        if (uv[0] == uv[1])
            throw ParseError("loop at vertex " + std::to_string(uv[0]));
        const Arc arc{static_cast<int>(uv[0]), static_cast<int>(uv[1])};
        if (std::find(arcs.begin(), arcs.end(), arc) != arcs.end())
            throw ParseError("duplicate arc " + std::to_string(arc.from) + " " + std::to_string(arc.to));
        arcs.push_back(arc);
    }
    return Digraph(n, arcs);
}

Digraph parse_digraph(std::string_view text)
{
    auto lines = non_empty_lines(text);
    if (lines.empty())
        throw ParseError("empty digraph input");
    const auto header = integers(lines[0]);
    if (header.size() == 1)
        return parse_matrix(text);
    if (header.size() == 2)
        return parse_edge_list(text);
    throw ParseError("unrecognised digraph header");
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Digraph read_digraph_file(const std::filesystem::path& path) { return parse_digraph(read_text_file(path)); }

std::string format_matrix(const Digraph& g)
{
    std::string out = std::to_string(g.n()) + "\n";
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (v)
                out += ' ';
            out += g.has_arc(u, v) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string format_edge_list(const Digraph& g)
{
    auto arcs = g.arcs();
    std::string out = std::to_string(g.n()) + " " + std::to_string(arcs.size()) + "\n";
    for (const auto& a : arcs)
        out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    return out;
}

std::string format_matrix_inline(const Digraph& g)
{
    std::string out = "[";
    for (int u = 0; u < g.n(); ++u) {
        if (u)
            out += ',';
        out += '[';
        for (int v = 0; v < g.n(); ++v) {
            if (v)
                out += ',';
            out += g.has_arc(u, v) ? '1' : '0';
        }
        out += ']';
    }
    out += ']';
    return out;
}

} // namespace dihom
