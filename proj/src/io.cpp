#include "treetau/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treetau {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<int> parse_degree_list(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream stream(cleaned);
    std::vector<int> out;
    int value;
    while (stream >> value) out.push_back(value);
    std::string rest;
    if (stream.clear(), stream >> rest)
        throw std::invalid_argument("bad token in degree list: " + rest);
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

std::vector<int> read_degree_list(std::istream& in) {
    std::vector<int> out;
    std::string line;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (s.empty()) continue;
        for (int v : parse_degree_list(s)) out.push_back(v);
    }
    return out;
}

std::vector<int> read_degree_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_degree_list(in);
}

EdgeListFile read_edge_list(std::istream& in) {
    EdgeListFile out;
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        const std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream stream(s);
        if (!have_n) {
            if (!(stream >> out.n) || out.n < 1) throw std::invalid_argument("bad vertex count");
            have_n = true;
            continue;
        }
        int u, v;
        if (!(stream >> u >> v)) throw std::invalid_argument("bad edge line: " + s);
        if (u < 1 || v < 1 || u > out.n || v > out.n)
            throw std::invalid_argument("edge endpoint out of range: " + s);
        out.edges.emplace_back(u - 1, v - 1);
    }
    if (!have_n) throw std::invalid_argument("empty edge-list input");
    return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges) {
    out << n << "\n";
    for (const auto& [u, v] : edges) out << (u + 1) << " " << (v + 1) << "\n";
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace treetau
