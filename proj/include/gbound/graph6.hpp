#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbound/graph.hpp"

namespace gbound::core {

// graph6 (McKay): single header byte n+63 for n <= 62, then the upper-triangle
// adjacency bits in column-major order (columns j = 1..n-1, rows i = 0..j-1),
// packed big-endian into 6-bit groups, each emitted as byte value + 63.
inline std::string graph6_encode(const Graph& g) {
    if (g.n() > 62)
        throw std::invalid_argument("graph6 short form supports at most 62 vertices; got " +
                                    std::to_string(g.n()));
    std::string out(1, static_cast<char>(g.n() + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126)
            throw std::invalid_argument("invalid graph6 byte at offset " + std::to_string(i));
    }
    if (text[0] == '~')
        throw std::invalid_argument("graph6 long form (n > 62) is not supported; "
                                    "split the corpus or re-encode with n <= 62");
    int n = text[0] - 63;
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t payload = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != 1 + payload)
        throw std::invalid_argument("truncated or overlong graph6 payload: expected " +
                                    std::to_string(payload) + " bytes after the header, got " +
                                    std::to_string(text.size() - 1) + " (offset " +
                                    std::to_string(text.size()) + ")");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[static_cast<std::size_t>(1 + bit / 6)] - 63;
            if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    return build_graph(n, edges);
}

// Reads one graph per line, skipping blank lines. Errors carry the line number.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace gbound::core
