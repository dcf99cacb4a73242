#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbound/graph.hpp"
#include "gbound/lattice.hpp"

// Generators for the named graph families, the two composition operations
// (path attachment and edge-join), and the seven small hard-coded cores.
//
// Lattice-based generators attach exact half-integer coordinate labels and
// assign vertex ids by sorting points with integer sites first, then by
// (y, x). The composition operations return unlabeled graphs.

namespace gbound::families {

using core::Graph;
using core::Point;

namespace detail {

inline int coord_id(const Graph& g, Point p) {
    for (int v = 0; v < g.n(); ++v)
        if (g.coord(v) == p) return v;
    throw std::invalid_argument("no vertex labeled " + lattice::point_str(p));
}

inline Graph remove_edge_at(const Graph& g, Point p, Point q) {
    int v = coord_id(g, p), w = coord_id(g, q);
    if (!g.has_edge(v, w))
        throw std::invalid_argument("no edge between " + lattice::point_str(p) + " and " +
                                    lattice::point_str(q));
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : g.edges())
        if (!(x == std::min(v, w) && y == std::max(v, w))) edges.emplace_back(x, y);
    return core::build_graph(g.n(), edges, g.coords());
}

inline bool contains_point(const std::vector<Point>& pts, Point p) {
    for (Point q : pts)
        if (q == p) return true;
    return false;
}

}  // namespace detail

// Integer sites only; edges between sites at Euclidean distance exactly 1.
inline Graph grid(int a, int c) {
    auto spec = lattice::make_lattice_spec(a, c);
    return lattice::build_unit_distance_graph(spec.v0, /*within=*/false);
}

// Integer sites plus cell centers (or an axis-slice-convex selection w of the
// centers); edges between vertices at Euclidean distance at most 1.
inline Graph n_graph(int a, int c, std::optional<std::vector<Point>> w = {}) {
    auto spec = lattice::make_lattice_spec(a, c, std::move(w));
    std::vector<Point> pts = spec.v0;
    if (spec.subset_w) {
        for (Point p : *spec.subset_w)
            if (!detail::contains_point(spec.v1, p))
                throw std::invalid_argument("selection w contains " + lattice::point_str(p) +
                                            ", which is not a cell center of the lattice");
        pts.insert(pts.end(), spec.subset_w->begin(), spec.subset_w->end());
    } else {
        pts.insert(pts.end(), spec.v1.begin(), spec.v1.end());
    }
    return lattice::build_unit_distance_graph(std::move(pts), /*within=*/true);
}

// Four defining branches, in order: for a > 2 the n-graph on the (a-1)-by-c
// lattice with the non-corner integer sites of the top and bottom rows
// removed; for a = 2 the n-graph on the 1-by-c lattice minus its two
// horizontal end edges; for a = 1 < c the transposed graph; and K4 for
// a = c = 1.
inline Graph x_graph(int a, int c) {
    if (a < 1 || c < 1)
        throw std::invalid_argument("lattice parameters must be positive, got a=" +
                                    std::to_string(a) + " c=" + std::to_string(c));
    if (a > 2) {
        auto spec = lattice::make_lattice_spec(a - 1, c);
        std::vector<Point> pts;
        for (Point p : spec.v0)
            if (!(0 < p.x2 && p.x2 < 2 * (a - 1) && (p.y2 == 0 || p.y2 == 2 * c)))
                pts.push_back(p);
        pts.insert(pts.end(), spec.v1.begin(), spec.v1.end());
        return lattice::build_unit_distance_graph(std::move(pts), /*within=*/true);
    }
    if (a == 2) {
        Graph g = n_graph(1, c);
        g = detail::remove_edge_at(g, {0, 0}, {2, 0});
        return detail::remove_edge_at(g, {0, 2 * c}, {2, 2 * c});
    }
    if (c > 1) return x_graph(c, a);
    return core::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                             {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
}

// Subgraph of the a-by-(c+1) n-graph without the leftmost integer column and
// without the non-corner integer sites of the top and bottom rows; an
// optional selection w further restricts the integer sites kept, and must be
// axis slice convex and contain (a,0) and (a,c+1).
inline Graph t_graph(int a, int c, std::optional<std::vector<Point>> w = {}) {
    auto spec = lattice::make_lattice_spec(a, c + 1);
    std::vector<Point> ints;
    for (Point p : spec.v0) {
        if (p.x2 == 0) continue;
        if (p.x2 < 2 * a && (p.y2 == 0 || p.y2 == 2 * (c + 1))) continue;
        ints.push_back(p);
    }
    if (w) {
        for (Point p : *w)
            if (!detail::contains_point(spec.v0, p))
                throw std::invalid_argument("selection w contains " + lattice::point_str(p) +
                                            ", which is not an integer site of the lattice");
        for (Point corner : {Point{2 * a, 0}, Point{2 * a, 2 * (c + 1)}})
            if (!detail::contains_point(*w, corner))
                throw std::invalid_argument("selection w must contain the corner " +
                                            lattice::point_str(corner));
        if (!lattice::validate_axis_slice_convex(*w))
            throw std::invalid_argument("selection w is not axis slice convex");
        std::vector<Point> kept;
        for (Point p : ints)
            if (detail::contains_point(*w, p)) kept.push_back(p);
        ints = std::move(kept);
    }
    ints.insert(ints.end(), spec.v1.begin(), spec.v1.end());
    return lattice::build_unit_distance_graph(std::move(ints), /*within=*/true);
}

namespace detail {

// Two a-by-c grid layers v and w identified along the frame, with vertical
// edges at interior sites and one diagonal per cell. Interior w-layer sites
// are labeled at the cell midpoint (x+1/2, y+1/2); frame w-sites coincide
// with their v-sites. Dropping the interior w-layer yields the l-graph.
inline Graph double_grid(int a, int c, bool keep_interior) {
    auto w_site = [a, c](int x, int y) -> Point {
        if (x == 0 || x == a || y == 0 || y == c) return {2 * x, 2 * y};
        return {2 * x + 1, 2 * y + 1};
    };
    std::vector<Point> pts = lattice::integer_points(a, c);
    if (keep_interior)
        for (int y = 1; y < c; ++y)
            for (int x = 1; x < a; ++x) pts.push_back({2 * x + 1, 2 * y + 1});
    std::sort(pts.begin(), pts.end(), lattice::PointIdLess{});
    auto id = [&pts](Point p) -> int {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::set<std::pair<int, int>> es;
    auto add = [&](Point p, Point q) {
        int i = id(p), j = id(q);
        if (i < 0 || j < 0 || i == j) return;
        es.emplace(std::min(i, j), std::max(i, j));
    };
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= c; ++y) {
            Point v{2 * x, 2 * y};
            if (x < a) {
                add(v, {2 * x + 2, 2 * y});
                add(w_site(x, y), w_site(x + 1, y));
            }
            if (y < c) {
                add(v, {2 * x, 2 * y + 2});
                add(w_site(x, y), w_site(x, y + 1));
            }
            add(v, w_site(x, y));
        }
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < c; ++y) add({2 * x + 2, 2 * y}, w_site(x, y + 1));
    std::vector<std::pair<int, int>> edges(es.begin(), es.end());
    const int n = static_cast<int>(pts.size());
    return core::build_graph(n, edges, std::move(pts));
}

}  // namespace detail

inline Graph d_graph(int a, int c) {
    if (a < 1 || c < 1)
        throw std::invalid_argument("lattice parameters must be positive, got a=" +
                                    std::to_string(a) + " c=" + std::to_string(c));
    return detail::double_grid(a, c, /*keep_interior=*/true);
}

inline Graph l_graph(int a, int c) {
    if (a < 1 || c < 1)
        throw std::invalid_argument("lattice parameters must be positive, got a=" +
                                    std::to_string(a) + " c=" + std::to_string(c));
    return detail::double_grid(a, c, /*keep_interior=*/false);
}

// Appends a path of `length` new vertices, the first joined to v. A length of
// zero returns the input unchanged; otherwise coordinate labels are dropped.
inline Graph attach_path(const Graph& g, int v, int length) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("attachment vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(g.n()) + ")");
    if (length < 0) throw std::invalid_argument("path length must be non-negative");
    if (length == 0) return g;
    auto edges = g.edges();
    int prev = v;
    for (int i = 0; i < length; ++i) {
        int next = g.n() + i;
        edges.emplace_back(prev, next);
        prev = next;
    }
    return core::build_graph(g.n() + length, edges);
}

// Disjoint union with the second graph's ids shifted by |V1|, plus the single
// bridge edge v1 -- (v2 + |V1|). Coordinate labels are dropped.
inline Graph join_with_edge(const Graph& g1, int v1, const Graph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.n())
        throw std::invalid_argument("junction vertex " + std::to_string(v1) +
                                    " out of range [0," + std::to_string(g1.n()) + ")");
    if (v2 < 0 || v2 >= g2.n())
        throw std::invalid_argument("junction vertex " + std::to_string(v2) +
                                    " out of range [0," + std::to_string(g2.n()) + ")");
    auto edges = g1.edges();
    for (auto [x, y] : g2.edges()) edges.emplace_back(x + g1.n(), y + g1.n());
    edges.emplace_back(v1, v2 + g1.n());
    return core::build_graph(g1.n() + g2.n(), edges);
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return core::build_graph(n, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return core::build_graph(n, edges);
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return core::build_graph(n, edges);
}

// Star K_{1,k} with center 0 and leaves 1..k.
inline Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return core::build_graph(k + 1, edges);
}

// Subdivision of K_{1,4}: center 0 with four arms of the given lengths.
inline Graph spider(int arm1, int arm2, int arm3, int arm4) {
    for (int arm : {arm1, arm2, arm3, arm4})
        if (arm < 1) throw std::invalid_argument("spider arms must have length at least 1");
    Graph g = core::build_graph(1, {});
    for (int arm : {arm1, arm2, arm3, arm4}) g = attach_path(g, 0, arm);
    return g;
}

// Tree with exactly four leaves and two degree-3 centers `bridge` apart: a
// center path with two arms at each end.
inline Graph double_spider(int arm1, int arm2, int arm3, int arm4, int bridge = 1) {
    for (int arm : {arm1, arm2, arm3, arm4})
        if (arm < 1) throw std::invalid_argument("double spider arms must have length at least 1");
    if (bridge < 1) throw std::invalid_argument("double spider centers must be distinct");
    Graph g = path(bridge + 1);
    int left = 0, right = bridge;
    g = attach_path(g, left, arm1);
    g = attach_path(g, left, arm2);
    g = attach_path(g, right, arm3);
    g = attach_path(g, right, arm4);
    return g;
}

// Triangle 0-1-2 with paths of lengths p, q, r attached to its vertices.
inline Graph tripod(int p, int q, int r) {
    for (int len : {p, q, r})
        if (len < 0) throw std::invalid_argument("tripod arm lengths must be non-negative");
    Graph g = complete(3);
    g = attach_path(g, 0, p);
    g = attach_path(g, 1, q);
    g = attach_path(g, 2, r);
    return g;
}

// Two disjoint K_n joined by a single edge between vertices 0 and n.
inline Graph barbell(int n) {
    if (n < 2) throw std::invalid_argument("barbell needs cliques of at least 2 vertices");
    return join_with_edge(complete(n), 0, complete(n), 0);
}

// The seven small cores with boundary size four used by the classifier; X1c
// and X1c_open take the chain-length parameter c.
enum class CoreName { N11, C4, K4, T11, D11, X1c, X1c_open };

inline bool core_takes_parameter(CoreName name) {
    return name == CoreName::X1c || name == CoreName::X1c_open;
}

inline std::string core_name_str(CoreName name) {
    switch (name) {
        case CoreName::N11: return "N11";
        case CoreName::C4: return "C4";
        case CoreName::K4: return "K4";
        case CoreName::T11: return "T11";
        case CoreName::D11: return "D11";
        case CoreName::X1c: return "X1c";
        case CoreName::X1c_open: return "X1c_open";
    }
    throw std::invalid_argument("unknown core name");
}

inline Graph fig2_core(CoreName name, int c = 0) {
    if (core_takes_parameter(name) && c < 1)
        throw std::invalid_argument("core " + core_name_str(name) +
                                    " needs a chain-length parameter c >= 1");
    switch (name) {
        case CoreName::N11: return n_graph(1, 1);
        case CoreName::C4: return cycle(4);
        case CoreName::K4: return x_graph(1, 1);
        case CoreName::T11: return t_graph(1, 1);
        case CoreName::D11: return d_graph(1, 1);
        case CoreName::X1c: return x_graph(1, c);
        case CoreName::X1c_open:
            // The open variant loses the frame edge of one end triangle; the
            // end survives at (0,0)-(0,1) across every branch of x_graph(1,c).
            return detail::remove_edge_at(x_graph(1, c), {0, 0}, {0, 2});
    }
    throw std::invalid_argument("unknown core name");
}

// Parses "N11", "C4", "K4", "T11", "D11", "X1c(c)" or "X1c_open(c)".
inline std::pair<CoreName, int> parse_core_name(const std::string& text) {
    for (CoreName plain : {CoreName::N11, CoreName::C4, CoreName::K4, CoreName::T11,
                           CoreName::D11})
        if (text == core_name_str(plain)) return {plain, 0};
    for (CoreName open : {CoreName::X1c, CoreName::X1c_open}) {
        const std::string prefix = core_name_str(open) + "(";
        if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
            text.back() == ')') {
            const std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
            std::size_t used = 0;
            int c = 0;
            try {
                c = std::stoi(inner, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad core parameter in '" + text + "'");
            }
            if (used != inner.size() || c < 1)
                throw std::invalid_argument("bad core parameter in '" + text + "'");
            return {open, c};
        }
    }
    throw std::invalid_argument("unknown core name '" + text + "'");
}

inline Graph fig2_core(const std::string& text) {
    auto [name, c] = parse_core_name(text);
    return fig2_core(name, c);
}

// A small fixture graph together with a marked vertex v and witness u at
// distance exactly 2.
struct BaseCase {
    Graph graph;
    int v = -1;
    int u = -1;
};

// The nine hard-coded fixture graphs G1..G9 with their marked (v, u) pairs.
inline BaseCase base_case_fixture(int i) {
    switch (i) {
        case 1:
            return {core::build_graph(8, {{0, 1}, {0, 2}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {1, 7},
                                          {2, 3}, {2, 6}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 7},
                                          {5, 7}, {6, 7}}),
                    1, 5};
        case 2:
            return {core::build_graph(7, {{0, 1}, {0, 2}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {2, 3},
                                          {2, 6}, {3, 5}, {3, 6}, {4, 5}}),
                    1, 5};
        case 3:
            return {core::build_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}),
                    1, 5};
        case 4:
            return {core::build_graph(8, {{0, 1}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 3},
                                          {2, 6}, {3, 5}, {3, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}}),
                    1, 2};
        case 5:
            return {core::build_graph(8, {{0, 1}, {0, 2}, {0, 7}, {1, 3}, {1, 7}, {2, 3}, {2, 4},
                                          {2, 5}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {5, 6}}),
                    3, 4};
        case 6:
            return {core::build_graph(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5},
                                          {3, 6}, {4, 5}, {5, 6}}),
                    3, 4};
        case 7:
            return {core::build_graph(7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 5},
                                          {2, 6}, {3, 4}, {4, 5}, {5, 6}}),
                    5, 0};
        case 8:
            return {core::build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                           {2, 3}, {2, 4}, {2, 7}, {2, 8}, {3, 4}, {3, 6}, {3, 8},
                                           {4, 6}, {4, 8}, {4, 9}, {5, 6}, {6, 9}, {7, 8}, {8, 9}}),
                    2, 1};
        case 9:
            return {core::build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                          {3, 5}, {4, 5}}),
                    1, 2};
        default:
            throw std::invalid_argument("base case index must be in 1..9, got " +
                                        std::to_string(i));
    }
}

}  // namespace gbound::families
