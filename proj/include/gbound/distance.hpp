#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbound/graph.hpp"

namespace gbound::core {

// All-pairs shortest-path hop counts of a connected graph. Entries are always
// finite; construction rejects disconnected input.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

    int n() const { return n_; }
    int at(int v, int w) const { return d_[static_cast<std::size_t>(v) * n_ + w]; }
    int& at(int v, int w) { return d_[static_cast<std::size_t>(v) * n_ + w]; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

namespace detail {

inline void bfs_row(const Graph& g, int src, std::vector<int>& dist) {
    dist.assign(static_cast<std::size_t>(g.n()), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::vector<int> frontier{src};
    for (int depth = 1; !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = depth;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<int> dist;
    detail::bfs_row(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Components as sorted vertex lists, ordered by their smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> dist;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        detail::bfs_row(g, s, dist);
        std::vector<int> comp;
        for (int v = 0; v < g.n(); ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0) {
                comp.push_back(v);
                seen[static_cast<std::size_t>(v)] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix dm(g.n());
    std::vector<int> dist;
    for (int v = 0; v < g.n(); ++v) {
        detail::bfs_row(g, v, dist);
        for (int w = 0; w < g.n(); ++w) {
            if (dist[static_cast<std::size_t>(w)] < 0)
                throw std::invalid_argument("graph is disconnected: no path between vertices " +
                                            std::to_string(v) + " and " + std::to_string(w));
            dm.at(v, w) = dist[static_cast<std::size_t>(w)];
        }
    }
    return dm;
}

inline int eccentricity(const DistanceMatrix& dm, int v) {
    int e = 0;
    for (int w = 0; w < dm.n(); ++w) e = std::max(e, dm.at(v, w));
    return e;
}

inline int diameter(const DistanceMatrix& dm) {
    int d = 0;
    for (int v = 0; v < dm.n(); ++v) d = std::max(d, eccentricity(dm, v));
    return d;
}

inline std::vector<int> peripheral_vertices(const DistanceMatrix& dm) {
    int d = diameter(dm);
    std::vector<int> out;
    for (int v = 0; v < dm.n(); ++v)
        if (eccentricity(dm, v) == d) out.push_back(v);
    return out;
}

namespace detail {

// Vertices of g reachable from src without passing through `removed`.
inline int reachable_avoiding(const Graph& g, int src, int removed, std::vector<int>& mark, int stamp) {
    std::vector<int> stack{src};
    mark[static_cast<std::size_t>(src)] = stamp;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (w == removed || mark[static_cast<std::size_t>(w)] == stamp) continue;
            mark[static_cast<std::size_t>(w)] = stamp;
            ++count;
            stack.push_back(w);
        }
    }
    return count;
}

}  // namespace detail

inline std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("cut vertices are defined for connected graphs only");
    std::vector<int> out;
    if (g.n() <= 2) return out;
    std::vector<int> mark(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        int src = v == 0 ? 1 : 0;
        if (detail::reachable_avoiding(g, src, v, mark, v) < g.n() - 1) out.push_back(v);
    }
    return out;
}

// True iff some simple cycle of length >= 3 passes through v, i.e. some
// component of G - v contains two distinct neighbors of v.
inline bool has_cycle_through(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    if (g.degree(v) < 2) return false;
    std::vector<int> mark(static_cast<std::size_t>(g.n()), -1);
    for (int u : g.neighbors(v)) {
        if (mark[static_cast<std::size_t>(u)] >= 0) return true;  // shares a component with an earlier neighbor
        detail::reachable_avoiding(g, u, v, mark, u);
    }
    return false;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n() - 1;
}

inline std::vector<int> leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

}  // namespace gbound::core
