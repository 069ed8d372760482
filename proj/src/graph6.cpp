#include "hbar/graph6.hpp"

#include <fstream>
#include <iostream>

#include "hbar/error.hpp"

namespace hbar {

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) fail("BadGraph6", "empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) fail("BadGraph6", "character outside graph6 range", s);
    if (s[0] == 126) fail("TooLarge", "graph6 orders above 62 are not supported", s);
    const int n = s[0] - 63;
    if (n > kMaxVertices) fail("TooLarge", "graph order exceeds 24", s);
    const std::size_t bits = std::size_t(n) * (n - 1) / 2;
    if (s.size() != 1 + (bits + 5) / 6) fail("BadGraph6", "length does not match order", s);
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (; k % 6 != 0; ++k) {
        int byte = s[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) fail("BadGraph6", "nonzero padding bits", s);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string s(1, char(63 + n));
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | int(g.adjacent(i, j));
            if (++used == 6) {
                s.push_back(char(63 + acc));
                acc = used = 0;
            }
        }
    if (used) s.push_back(char(63 + (acc << (6 - used))));
    return s;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    if (path == "-") return read_graph6_stream(std::cin);
    std::ifstream f(path);
    if (!f) fail("IoError", "cannot open graph file", path);
    return read_graph6_stream(f);
}

} // namespace hbar
