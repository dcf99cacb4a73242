#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gbound/boundary.hpp"
#include "gbound/families.hpp"
#include "gbound/graph.hpp"
#include "gbound/isomorphism.hpp"

// Structural recognition of connected graphs with Steinerberger boundary at
// most four, cross-validated against the direct boundary computation.
//
// Recognition never looks at the input's boundary: trees are classified by
// leaf count, tripods by their unique triangle, and the remaining families by
// regenerating candidate core-plus-path instances and testing isomorphism.
// classify() then keeps a structural answer only when its implied boundary
// size matches the directly computed one.

namespace gbound::classifier {

using core::Graph;

enum class FamilyTag { SingleVertex, Path, ThreeLeafTree, Tripod, FourLeafTree, Fig2Core,
                       Unclassified };

inline std::string tag_str(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::SingleVertex: return "SingleVertex";
        case FamilyTag::Path: return "Path";
        case FamilyTag::ThreeLeafTree: return "ThreeLeafTree";
        case FamilyTag::Tripod: return "Tripod";
        case FamilyTag::FourLeafTree: return "FourLeafTree";
        case FamilyTag::Fig2Core: return "Fig2Core";
        case FamilyTag::Unclassified: return "Unclassified";
    }
    throw std::invalid_argument("unknown family tag");
}

struct FamilyDescriptor {
    FamilyTag tag = FamilyTag::Unclassified;
    int boundary_size = 0;  // the directly computed |boundary|

    int path_length = 0;    // Path: number of vertices
    // ThreeLeafTree / Tripod: the three arm lengths, descending.
    // FourLeafTree: four arm lengths; with bridge = 0 all four meet at one
    // degree-4 center, otherwise the first two sit at one degree-3 center and
    // the last two at the other, the centers `bridge` apart.
    std::vector<int> arms;
    int bridge = 0;
    families::CoreName core = families::CoreName::N11;  // Fig2Core: which core
    int core_c = 0;         // Fig2Core: chain parameter, 0 when not applicable
    std::vector<int> paths;  // Fig2Core: attached path length per core site
};

inline int implied_boundary_size(const FamilyDescriptor& d) {
    switch (d.tag) {
        case FamilyTag::SingleVertex: return 1;
        case FamilyTag::Path: return 2;
        case FamilyTag::ThreeLeafTree:
        case FamilyTag::Tripod: return 3;
        case FamilyTag::FourLeafTree:
        case FamilyTag::Fig2Core: return 4;
        case FamilyTag::Unclassified: return d.boundary_size;
    }
    throw std::invalid_argument("unknown family tag");
}

namespace detail {

// Walks the pendant chain hanging off `start` away from `from`; returns its
// edge count. Pre: every vertex on the chain has degree at most 2.
inline int chain_length(const Graph& g, int from, int start) {
    int len = 1, prev = from, cur = start;
    while (g.degree(cur) == 2) {
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
    }
    return len;
}

inline std::vector<int> bfs_dist(const Graph& g, int s) {
    std::vector<int> d(static_cast<std::size_t>(g.n()), -1);
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> q{s};
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int w : g.neighbors(q[i]))
            if (d[static_cast<std::size_t>(w)] < 0) {
                d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(q[i])] + 1;
                q.push_back(w);
            }
    return d;
}

inline std::optional<FamilyDescriptor> recognize_tree(const Graph& g) {
    if (!core::is_tree(g)) return std::nullopt;
    std::vector<int> leaves, branch;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 1) leaves.push_back(v);
        if (g.degree(v) >= 3) branch.push_back(v);
    }
    if (leaves.size() == 2 && branch.empty()) {
        FamilyDescriptor d;
        d.tag = FamilyTag::Path;
        d.path_length = g.n();
        return d;
    }
    if (leaves.size() == 3 && branch.size() == 1 && g.degree(branch[0]) == 3) {
        auto dist = bfs_dist(g, branch[0]);
        FamilyDescriptor d;
        d.tag = FamilyTag::ThreeLeafTree;
        for (int leaf : leaves) d.arms.push_back(dist[static_cast<std::size_t>(leaf)]);
        std::sort(d.arms.rbegin(), d.arms.rend());
        return d;
    }
    if (leaves.size() == 4) {
        FamilyDescriptor d;
        d.tag = FamilyTag::FourLeafTree;
        if (branch.size() == 1 && g.degree(branch[0]) == 4) {
            auto dist = bfs_dist(g, branch[0]);
            for (int leaf : leaves) d.arms.push_back(dist[static_cast<std::size_t>(leaf)]);
            std::sort(d.arms.rbegin(), d.arms.rend());
            d.bridge = 0;
            return d;
        }
        if (branch.size() == 2 && g.degree(branch[0]) == 3 && g.degree(branch[1]) == 3) {
            auto d0 = bfs_dist(g, branch[0]), d1 = bfs_dist(g, branch[1]);
            d.bridge = d1[static_cast<std::size_t>(branch[0])];
            std::vector<int> near0, near1;
            for (int leaf : leaves) {
                auto i = static_cast<std::size_t>(leaf);
                // the leaf hangs off the center its path to the other center
                // passes through
                if (d1[i] == d0[i] + d.bridge)
                    near0.push_back(d0[i]);
                else
                    near1.push_back(d1[i]);
            }
            if (near0.size() != 2 || near1.size() != 2) return std::nullopt;
            std::sort(near0.rbegin(), near0.rend());
            std::sort(near1.rbegin(), near1.rend());
            if (near0 < near1) std::swap(near0, near1);
            d.arms = {near0[0], near0[1], near1[0], near1[1]};
            return d;
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyDescriptor> recognize_tripod(const Graph& g) {
    if (g.edge_count() != g.n()) return std::nullopt;  // tripods are unicyclic
    // peel leaves until only the unique cycle remains
    std::vector<int> degree(static_cast<std::size_t>(g.n()));
    std::vector<int> queue;
    for (int v = 0; v < g.n(); ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) == 1) queue.push_back(v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        removed[static_cast<std::size_t>(v)] = true;
        for (int w : g.neighbors(v))
            if (!removed[static_cast<std::size_t>(w)] &&
                --degree[static_cast<std::size_t>(w)] == 1)
                queue.push_back(w);
    }
    std::vector<int> cycle;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) cycle.push_back(v);
    if (cycle.size() != 3) return std::nullopt;
    for (int v : cycle)
        if (g.degree(v) > 3) return std::nullopt;
    for (int v = 0; v < g.n(); ++v)
        if (removed[static_cast<std::size_t>(v)] && g.degree(v) > 2) return std::nullopt;
    FamilyDescriptor d;
    d.tag = FamilyTag::Tripod;
    for (int v : cycle) {
        int arm = 0;
        for (int w : g.neighbors(v))
            if (removed[static_cast<std::size_t>(w)]) arm = chain_length(g, v, w);
        d.arms.push_back(arm);
    }
    std::sort(d.arms.rbegin(), d.arms.rend());
    return d;
}

// Core vertices eligible for path attachment: those with beta exactly 1.
inline std::vector<int> attachment_sites(const Graph& core) {
    auto analysis = boundary::full_analysis(core);
    std::vector<int> sites;
    for (int v = 0; v < core.n(); ++v)
        if (analysis.vertices[static_cast<std::size_t>(v)].beta == 1) sites.push_back(v);
    return sites;
}

inline Graph attach_all(Graph g, const std::vector<int>& sites, const std::vector<int>& lens) {
    for (std::size_t i = 0; i < sites.size(); ++i)
        g = families::attach_path(g, sites[i], lens[i]);
    return g;
}

// Enumerates compositions of `total` into `parts` non-negative summands in
// descending-lex order and reports the first one whose regenerated instance
// is isomorphic to `target`.
inline bool find_attachment(const Graph& target, const Graph& core,
                            const std::vector<int>& sites, std::vector<int>& out) {
    const int total = target.n() - core.n();
    if (sites.empty()) {
        if (total != 0) return false;
        out.clear();
        return core::are_isomorphic(target, core);
    }
    std::vector<int> lens(sites.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> bool {
        if (i + 1 == lens.size()) {
            lens[i] = left;
            if (!core::are_isomorphic(target, attach_all(core, sites, lens))) return false;
            out = lens;
            return true;
        }
        for (int take = left; take >= 0; --take) {
            lens[i] = take;
            if (self(self, i + 1, left - take)) return true;
        }
        return false;
    };
    return rec(rec, 0, total);
}

inline std::optional<FamilyDescriptor> recognize_fig2(const Graph& g) {
    using families::CoreName;
    auto try_core = [&g](CoreName name, int c) -> std::optional<FamilyDescriptor> {
        Graph core = families::fig2_core(name, c);
        if (core.n() > g.n()) return std::nullopt;
        auto sites = attachment_sites(core);
        std::vector<int> lens;
        if (!find_attachment(g, core, sites, lens)) return std::nullopt;
        FamilyDescriptor d;
        d.tag = FamilyTag::Fig2Core;
        d.core = name;
        d.core_c = c;
        d.paths = lens;
        return d;
    };
    for (CoreName name : {CoreName::N11, CoreName::C4, CoreName::K4, CoreName::T11,
                          CoreName::D11})
        if (auto d = try_core(name, 0)) return d;
    // chain cores: c starts at 2 because X1c(1) and X1c_open(1) are K4 and
    // D11, already covered above
    for (CoreName name : {CoreName::X1c, CoreName::X1c_open})
        for (int c = 2; c + 3 <= g.n(); ++c)
            if (auto d = try_core(name, c)) return d;
    return std::nullopt;
}

}  // namespace detail

// Purely structural recognition; never computes the input's boundary. Tags
// are tried in enum order, so ties resolve to the earliest tag and, within
// Fig2Core, to the earliest core in {N11, C4, K4, T11, D11, X1c, X1c_open}.
inline std::optional<FamilyDescriptor> recognize(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("cannot classify an empty graph");
    if (g.n() == 1) {
        FamilyDescriptor d;
        d.tag = FamilyTag::SingleVertex;
        return d;
    }
    if (auto d = detail::recognize_tree(g)) return d;
    if (auto d = detail::recognize_tripod(g)) return d;
    if (auto d = detail::recognize_fig2(g)) return d;
    return std::nullopt;
}

// Rebuilds the instance a descriptor denotes; inverse of recognition up to
// isomorphism.
inline Graph regenerate(const FamilyDescriptor& d) {
    switch (d.tag) {
        case FamilyTag::SingleVertex: return core::build_graph(1, {});
        case FamilyTag::Path: return families::path(d.path_length);
        case FamilyTag::ThreeLeafTree: {
            Graph g = core::build_graph(1, {});
            for (int arm : d.arms) g = families::attach_path(g, 0, arm);
            return g;
        }
        case FamilyTag::Tripod:
            return families::tripod(d.arms.at(0), d.arms.at(1), d.arms.at(2));
        case FamilyTag::FourLeafTree:
            if (d.bridge == 0)
                return families::spider(d.arms.at(0), d.arms.at(1), d.arms.at(2), d.arms.at(3));
            return families::double_spider(d.arms.at(0), d.arms.at(1), d.arms.at(2),
                                           d.arms.at(3), d.bridge);
        case FamilyTag::Fig2Core: {
            Graph core = families::fig2_core(d.core, d.core_c);
            return detail::attach_all(core, detail::attachment_sites(core), d.paths);
        }
        case FamilyTag::Unclassified:
            throw std::invalid_argument("cannot regenerate an unclassified graph");
    }
    throw std::invalid_argument("unknown family tag");
}

// Structural classification checked against the direct boundary computation:
// a structural match is kept only when its implied boundary size equals the
// computed |boundary|; everything else is Unclassified with that size.
inline FamilyDescriptor classify(const Graph& g) {
    auto analysis = boundary::full_analysis(g);  // rejects empty or disconnected input
    const int size = static_cast<int>(boundary::steinerberger_set(analysis).size());
    if (auto d = recognize(g); d && implied_boundary_size(*d) == size) {
        d->boundary_size = size;
        return *d;
    }
    FamilyDescriptor d;
    d.tag = FamilyTag::Unclassified;
    d.boundary_size = size;
    return d;
}

// True when the structural and computed answers agree in both directions: a
// family was found if and only if the boundary has the matching size <= 4.
inline bool cross_validate(const Graph& g) {
    auto analysis = boundary::full_analysis(g);
    const int size = static_cast<int>(boundary::steinerberger_set(analysis).size());
    if (auto d = recognize(g)) return implied_boundary_size(*d) == size;
    return size > 4;
}

inline int cejz_size(const Graph& g) {
    auto analysis = boundary::full_analysis(g);
    return static_cast<int>(boundary::cejz_set(analysis).size());
}

inline nlohmann::ordered_json to_json(const FamilyDescriptor& d) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    switch (d.tag) {
        case FamilyTag::Path:
            params["length"] = d.path_length;
            break;
        case FamilyTag::ThreeLeafTree:
        case FamilyTag::Tripod:
            params["arms"] = d.arms;
            break;
        case FamilyTag::FourLeafTree:
            params["arms"] = d.arms;
            params["bridge"] = d.bridge;
            break;
        case FamilyTag::Fig2Core:
            params["core"] = families::core_name_str(d.core);
            if (families::core_takes_parameter(d.core)) params["c"] = d.core_c;
            params["paths"] = d.paths;
            break;
        case FamilyTag::SingleVertex:
        case FamilyTag::Unclassified:
            break;
    }
    return nlohmann::ordered_json{
        {"tag", tag_str(d.tag)}, {"params", std::move(params)}, {"boundary_size", d.boundary_size}};
}

}  // namespace gbound::classifier
