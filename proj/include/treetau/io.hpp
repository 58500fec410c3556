#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treetau/degree_sequence.hpp"
#include "treetau/graphs.hpp"
#include "treetau/trees.hpp"

namespace treetau {

/// One integer per line or a comma-separated single line; blank lines and
/// '#' comments ignored.
std::vector<int> read_degree_list(std::istream& in);
std::vector<int> read_degree_list_file(const std::string& path);
std::vector<int> parse_degree_list(const std::string& text);

/// Edge-list format: first line n, then one "u v" per line, 1-indexed.
struct EdgeListFile {
    int n = 0;
    std::vector<Edge> edges;  // 0-based after reading
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges);

/// FNV-1a hash of raw bytes, hex-encoded; used to stamp inputs into reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace treetau
