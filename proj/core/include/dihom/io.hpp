#pragma once

#include "dihom/digraph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace dihom {

// Matrix form: "n" then n rows of n 0/1 entries.
Digraph parse_matrix(std::string_view text);
// Edge-list form: "n m" then m lines "u v" (arc u -> v).
Digraph parse_edge_list(std::string_view text);
// Dispatches on the number of integers on the first non-empty line.
Digraph parse_digraph(std::string_view text);
Digraph read_digraph_file(const std::filesystem::path& path);

std::string format_matrix(const Digraph& g);
std::string format_edge_list(const Digraph& g);
// Single-line row format "[[0,0],[1,0]]".
std::string format_matrix_inline(const Digraph& g);

std::string read_text_file(const std::filesystem::path& path);

} // namespace dihom
