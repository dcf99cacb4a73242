#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbound::core {

// Coordinate label with half-integer precision, stored as doubled integers:
// Point{3, 1} is the lattice point (3/2, 1/2). Exact arithmetic only.
struct Point {
    int x2 = 0;
    int y2 = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Orders points by (y, x), the id-assignment order used by the lattice
// generators.
struct PointYXLess {
    bool operator()(const Point& a, const Point& b) const {
        return a.y2 != b.y2 ? a.y2 < b.y2 : a.x2 < b.x2;
    }
};

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// sorted; a packed bit matrix backs O(1) membership tests. Optional coordinate
// labels are carried for the lattice families but never affect equality.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int v, int w) const {
        return bits_[static_cast<std::size_t>(v) * words_ + w / 64] >> (w % 64) & 1u;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
        return d;
    }

    // Edge list with v < w, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[v])
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    bool has_coords() const { return !coords_.empty(); }
    const Point& coord(int v) const { return coords_.at(v); }
    const std::vector<Point>& coords() const { return coords_; }

    // Coordinate labels are reporting metadata; equality is adjacency only.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                             std::vector<Point> coords);

private:
    int n_ = 0;
    long long m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<Point> coords_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         std::vector<Point> coords = {}) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!coords.empty()) {
        if (static_cast<int>(coords.size()) != n)
            throw std::invalid_argument("coordinate label count must equal vertex count");
        auto sorted = coords;
        std::sort(sorted.begin(), sorted.end(), PointYXLess{});
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw std::invalid_argument("coordinate labels must be pairwise distinct");
    }
    Graph g;
    g.n_ = n;
    g.words_ = static_cast<std::size_t>((n + 63) / 64);
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.coords_ = std::move(coords);
    for (auto [v, w] : edges) {
        if (v < 0 || v >= n || w < 0 || w >= n)
            throw std::invalid_argument("edge (" + std::to_string(v) + "," + std::to_string(w) +
                                        ") has a vertex id outside [0," + std::to_string(n) + ")");
        if (v == w)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        if (g.has_edge(v, w)) continue;
        g.bits_[static_cast<std::size_t>(v) * g.words_ + w / 64] |= std::uint64_t{1} << (w % 64);
        g.bits_[static_cast<std::size_t>(w) * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        g.adj_[static_cast<std::size_t>(v)].push_back(w);
        g.adj_[static_cast<std::size_t>(w)].push_back(v);
        ++g.m_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

// Restriction to `vertices` (ascending original-id order becomes 0..k-1),
// keeping all edges among kept vertices and their coordinate labels.
inline Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> newid(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("induced subgraph vertex " + std::to_string(v) + " out of range");
        newid[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (v < w && newid[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(newid[static_cast<std::size_t>(v)], newid[static_cast<std::size_t>(w)]);
    std::vector<Point> coords;
    if (g.has_coords()) {
        coords.reserve(vertices.size());
        for (int v : vertices) coords.push_back(g.coord(v));
    }
    return build_graph(static_cast<int>(vertices.size()), edges, std::move(coords));
}

}  // namespace gbound::core
