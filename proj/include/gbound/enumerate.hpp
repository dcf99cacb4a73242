#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gbound/graph.hpp"

namespace gbound::core {

namespace detail {

// Edge-mask scratch graph for n <= 7: adjacency as one byte per vertex. Pair
// (i,j), i<j, maps to mask bit j(j-1)/2 + i (column-major upper triangle,
// matching the graph6 bit order).
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 7> adj{};

    static SmallGraph from_mask(int n, std::uint32_t mask) {
        SmallGraph g{n, {}};
        int p = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++p)
                if (mask >> p & 1) {
                    g.adj[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
                    g.adj[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
                }
        return g;
    }

    bool connected() const {
        std::uint8_t reached = 1, prev = 0;
        while (reached != prev) {
            prev = reached;
            for (int v = 0; v < n; ++v)
                if (reached >> v & 1) reached |= adj[static_cast<std::size_t>(v)];
        }
        return reached == (1u << n) - 1u;
    }

    int edge_total() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += std::popcount(adj[static_cast<std::size_t>(v)]);
        return m / 2;
    }
};

// Allocation-free refinement for SmallGraph. Signatures pack the previous
// color (3 bits) above per-color neighbor counts (7 x 3 bits).
inline std::array<std::uint32_t, 7> small_refine(const SmallGraph& g, std::array<std::uint8_t, 7>& color) {
    for (int v = 0; v < g.n; ++v)
        color[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>(std::popcount(g.adj[static_cast<std::size_t>(v)]));
    std::array<std::uint32_t, 7> sig{};
    int classes = 0;
    for (int round = 0; round < g.n; ++round) {
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t s = static_cast<std::uint32_t>(color[static_cast<std::size_t>(v)]) << 21;
            std::uint8_t nb = g.adj[static_cast<std::size_t>(v)];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= static_cast<std::uint8_t>(nb - 1);
                s += 1u << (3 * color[static_cast<std::size_t>(w)]);
            }
            sig[static_cast<std::size_t>(v)] = s;
        }
        std::array<std::uint32_t, 7> uniq{};
        int k = 0;
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t s = sig[static_cast<std::size_t>(v)];
            int pos = 0;
            while (pos < k && uniq[static_cast<std::size_t>(pos)] < s) ++pos;
            if (pos == k || uniq[static_cast<std::size_t>(pos)] != s) {
                for (int t = k; t > pos; --t) uniq[static_cast<std::size_t>(t)] = uniq[static_cast<std::size_t>(t - 1)];
                uniq[static_cast<std::size_t>(pos)] = s;
                ++k;
            }
        }
        for (int v = 0; v < g.n; ++v) {
            std::uint32_t s = sig[static_cast<std::size_t>(v)];
            int pos = 0;
            while (uniq[static_cast<std::size_t>(pos)] != s) ++pos;
            color[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(pos);
        }
        if (k == classes) break;
        classes = k;
    }
    return sig;
}

inline std::uint64_t small_invariant(const SmallGraph& g) {
    std::array<std::uint8_t, 7> color{};
    std::array<std::uint32_t, 7> sig = small_refine(g, color);
    std::array<std::uint32_t, 7> sorted = sig;
    for (int i = 1; i < g.n; ++i)
        for (int j = i; j > 0 && sorted[static_cast<std::size_t>(j - 1)] > sorted[static_cast<std::size_t>(j)]; --j)
            std::swap(sorted[static_cast<std::size_t>(j - 1)], sorted[static_cast<std::size_t>(j)]);
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(g.n);
    for (int v = 0; v < g.n; ++v)
        h = (h ^ sorted[static_cast<std::size_t>(v)]) * 1099511628211ull;
    return h;
}

inline bool small_iso_extend(const SmallGraph& a, const SmallGraph& b,
                             const std::array<std::uint8_t, 7>& ca, const std::array<std::uint8_t, 7>& cb,
                             const std::array<std::uint8_t, 7>& order, int k,
                             std::array<std::uint8_t, 7>& map, std::uint8_t& used) {
    if (k == a.n) return true;
    int v = order[static_cast<std::size_t>(k)];
    for (int u = 0; u < b.n; ++u) {
        if (used >> u & 1) continue;
        if (cb[static_cast<std::size_t>(u)] != ca[static_cast<std::size_t>(v)]) continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            int x = order[static_cast<std::size_t>(j)];
            bool ea = a.adj[static_cast<std::size_t>(v)] >> x & 1;
            bool eb = b.adj[static_cast<std::size_t>(u)] >> map[static_cast<std::size_t>(x)] & 1;
            ok = ea == eb;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(u);
        used |= static_cast<std::uint8_t>(1u << u);
        if (small_iso_extend(a, b, ca, cb, order, k + 1, map, used)) return true;
        used &= static_cast<std::uint8_t>(~(1u << u));
    }
    return false;
}

inline bool small_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n || a.edge_total() != b.edge_total()) return false;
    std::array<std::uint8_t, 7> ca{}, cb{};
    small_refine(a, ca);
    small_refine(b, cb);
    std::array<std::uint8_t, 7> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.begin() + a.n);
    std::sort(hb.begin(), hb.begin() + b.n);
    if (ha != hb) return false;
    std::array<std::uint8_t, 7> class_size{};
    for (int v = 0; v < a.n; ++v) ++class_size[ca[static_cast<std::size_t>(v)]];
    std::array<std::uint8_t, 7> order{};
    for (int v = 0; v < a.n; ++v) order[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    std::sort(order.begin(), order.begin() + a.n, [&](std::uint8_t x, std::uint8_t y) {
        std::uint8_t sx = class_size[ca[static_cast<std::size_t>(x)]];
        std::uint8_t sy = class_size[ca[static_cast<std::size_t>(y)]];
        if (sx != sy) return sx < sy;
        if (ca[static_cast<std::size_t>(x)] != ca[static_cast<std::size_t>(y)]) return ca[static_cast<std::size_t>(x)] < ca[static_cast<std::size_t>(y)];
        return x < y;
    });
    std::array<std::uint8_t, 7> map{};
    std::uint8_t used = 0;
    return small_iso_extend(a, b, ca, cb, order, 0, map, used);
}

inline Graph small_to_graph(const SmallGraph& s) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < s.n; ++j)
        for (int i = 0; i < j; ++i)
            if (s.adj[static_cast<std::size_t>(i)] >> j & 1) edges.emplace_back(i, j);
    return build_graph(s.n, edges);
}

}  // namespace detail

// Streams exactly one representative per isomorphism class of connected graphs
// on n vertices (1 <= n <= 7), in ascending order of the first labeled
// edge-mask reaching each class. Larger n must come in via graph6 files.
inline void enumerate_connected(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("built-in enumeration covers 1 <= n <= 7; "
                                    "supply larger corpora as graph6 files");
    const int pairs = n * (n - 1) / 2;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        detail::SmallGraph g = detail::SmallGraph::from_mask(n, mask);
        if (!g.connected()) continue;
        auto& bucket = buckets[detail::small_invariant(g)];
        bool seen = false;
        for (std::uint32_t rep : bucket)
            if (detail::small_isomorphic(g, detail::SmallGraph::from_mask(n, rep))) {
                seen = true;
                break;
            }
        if (!seen) {
            bucket.push_back(mask);
            reps.push_back(mask);
        }
    }
    for (std::uint32_t rep : reps) fn(detail::small_to_graph(detail::SmallGraph::from_mask(n, rep)));
}

inline std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    enumerate_connected(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace gbound::core
