#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gbound/graph.hpp"

namespace gbound::core {

// Iterated neighborhood-degree refinement. Colors are canonical per graph:
// each round maps the sorted set of (color, sorted neighbor colors) signatures
// to dense ids, so isomorphic graphs get identical color histograms.
inline std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    int classes = 0;
    for (int round = 0; round < g.n(); ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        std::vector<Sig> sig(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size());
            for (int w : g.neighbors(v)) nb.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(nb)};
        }
        std::map<Sig, int> dense;
        for (const auto& s : sig) dense.emplace(s, 0);
        int next = 0;
        for (auto& [_, id] : dense) id = next++;
        for (int v = 0; v < g.n(); ++v)
            color[static_cast<std::size_t>(v)] = dense[sig[static_cast<std::size_t>(v)]];
        if (next == classes) break;  // stable partition
        classes = next;
    }
    return color;
}

// Label-invariant fingerprint used to bucket candidate isomorphs.
inline std::uint64_t invariant_hash(const Graph& g) {
    std::vector<int> color = refine_colors(g);
    std::sort(color.begin(), color.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(g.n()));
    mix(static_cast<std::uint64_t>(g.edge_count()));
    for (int c : color) mix(static_cast<std::uint64_t>(c));
    return h;
}

namespace detail {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& color_g;
    const std::vector<int>& color_h;
    std::vector<int> order;     // g's vertices, most-constrained first
    std::vector<int> mapping;   // g vertex -> h vertex, -1 while unassigned
    std::vector<char> used;     // h vertex already targeted

    bool extend(std::size_t k) {
        if (k == order.size()) return true;
        int v = order[k];
        for (int u = 0; u < h.n(); ++u) {
            if (used[static_cast<std::size_t>(u)] ||
                color_h[static_cast<std::size_t>(u)] != color_g[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < k; ++j) {
                int x = order[j];
                if (g.has_edge(v, x) != h.has_edge(u, mapping[static_cast<std::size_t>(x)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = 1;
            if (extend(k + 1)) return true;
            mapping[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(u)] = 0;
        }
        return false;
    }
};

}  // namespace detail

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    if (g.n() == 0) return true;
    std::vector<int> dg(static_cast<std::size_t>(g.n())), dh(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < g.n(); ++v) {
        dg[static_cast<std::size_t>(v)] = g.degree(v);
        dh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    std::vector<int> color_g = refine_colors(g), color_h = refine_colors(h);
    std::vector<int> hist_g = color_g, hist_h = color_h;
    std::sort(hist_g.begin(), hist_g.end());
    std::sort(hist_h.begin(), hist_h.end());
    if (hist_g != hist_h) return false;

    // Small color classes first; within a class, favor vertices adjacent to
    // vertices placed earlier so adjacency constraints bite immediately.
    std::vector<int> class_size(static_cast<std::size_t>(g.n()), 0);
    for (int c : color_g) ++class_size[static_cast<std::size_t>(c)];
    detail::IsoSearch s{g, h, color_g, color_h, {}, {}, {}};
    s.order.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) s.order[static_cast<std::size_t>(v)] = v;
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        int ca = class_size[static_cast<std::size_t>(color_g[static_cast<std::size_t>(a)])];
        int cb = class_size[static_cast<std::size_t>(color_g[static_cast<std::size_t>(b)])];
        if (ca != cb) return ca < cb;
        if (color_g[static_cast<std::size_t>(a)] != color_g[static_cast<std::size_t>(b)])
            return color_g[static_cast<std::size_t>(a)] < color_g[static_cast<std::size_t>(b)];
        return a < b;
    });
    s.mapping.assign(static_cast<std::size_t>(g.n()), -1);
    s.used.assign(static_cast<std::size_t>(h.n()), 0);
    return s.extend(0);
}

}  // namespace gbound::core
