#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gbound/graph.hpp"

// Half-integer lattice machinery shared by the graph-family generators.
//
// Every point is stored as a pair of doubled integers (core::Point), so the
// integer sites V0 = {(x,y) : 0<=x<=a, 0<=y<=c} have even components and the
// cell centers V1 = {(x+1/2,y+1/2) : 0<=x<a, 0<=y<c} have odd components.
// All geometry is exact; no floating point anywhere.

namespace gbound::lattice {

using core::Point;

inline bool is_integer_point(Point p) { return p.x2 % 2 == 0 && p.y2 % 2 == 0; }
inline bool is_center_point(Point p) { return p.x2 % 2 != 0 && p.y2 % 2 != 0; }

// Id-assignment order: integer points before centers, then by (y, x).
struct PointIdLess {
    bool operator()(const Point& a, const Point& b) const {
        bool ha = is_center_point(a), hb = is_center_point(b);
        if (ha != hb) return hb;
        return core::PointYXLess{}(a, b);
    }
};

inline std::string point_str(Point p) {
    auto part = [](int v2) {
        if (v2 % 2 == 0) return std::to_string(v2 / 2);
        return std::to_string(v2) + "/2";
    };
    return "(" + part(p.x2) + "," + part(p.y2) + ")";
}

// The integer sites V0 for an a-by-c lattice, in id order.
inline std::vector<Point> integer_points(int a, int c) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>((a + 1) * (c + 1)));
    for (int y = 0; y <= c; ++y)
        for (int x = 0; x <= a; ++x) pts.push_back({2 * x, 2 * y});
    return pts;
}

// The cell centers V1 for an a-by-c lattice, in id order.
inline std::vector<Point> center_points(int a, int c) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(a * c));
    for (int y = 0; y < c; ++y)
        for (int x = 0; x < a; ++x) pts.push_back({2 * x + 1, 2 * y + 1});
    return pts;
}

// A point set is axis slice convex when, for any two members sharing a row
// (resp. column), every point between them at unit steps along that row
// (resp. column) is also a member.
inline bool validate_axis_slice_convex(const std::vector<Point>& points) {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(points.size());
    for (Point p : points) pts.emplace_back(p.x2, p.y2);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto present = [&](int x2, int y2) {
        return std::binary_search(pts.begin(), pts.end(), std::make_pair(x2, y2));
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto [x1, y1] = pts[i];
            auto [x2, y2] = pts[j];
            if (y1 == y2)
                for (int x = std::min(x1, x2) + 2; x < std::max(x1, x2); x += 2)
                    if (!present(x, y1)) return false;
            if (x1 == x2)
                for (int y = std::min(y1, y2) + 2; y < std::max(y1, y2); y += 2)
                    if (!present(x1, y)) return false;
        }
    return true;
}

// Parameters and point sets for one lattice instance, plus an optional
// axis-slice-convex selection used by the n/t generators.
struct LatticeSpec {
    int a = 0;
    int c = 0;
    std::vector<Point> v0;
    std::vector<Point> v1;
    std::optional<std::vector<Point>> subset_w;
};

inline LatticeSpec make_lattice_spec(int a, int c,
                                     std::optional<std::vector<Point>> subset_w = {}) {
    if (a < 1 || c < 1)
        throw std::invalid_argument("lattice parameters must be positive, got a=" +
                                    std::to_string(a) + " c=" + std::to_string(c));
    if (subset_w && !validate_axis_slice_convex(*subset_w))
        throw std::invalid_argument("selection w is not axis slice convex");
    return {a, c, integer_points(a, c), center_points(a, c), std::move(subset_w)};
}

// Builds the unit-distance graph on `points`. When `within` is true, edges
// join points at Euclidean distance at most 1; otherwise exactly 1. With
// doubled components the squared distance scales by 4, so the thresholds are
// d2 <= 4 and d2 == 4. Only eight displacement vectors can satisfy d2 <= 4
// between valid lattice points, so neighbors are found by offset lookup.
inline core::Graph build_unit_distance_graph(std::vector<Point> points, bool within) {
    std::sort(points.begin(), points.end(), PointIdLess{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<std::pair<int, int>> lookup;
    lookup.reserve(points.size());
    for (Point p : points) lookup.emplace_back(p.x2, p.y2);
    std::sort(lookup.begin(), lookup.end());
    std::vector<int> ids(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto it = std::lower_bound(lookup.begin(), lookup.end(),
                                   std::make_pair(points[i].x2, points[i].y2));
        ids[static_cast<std::size_t>(it - lookup.begin())] = static_cast<int>(i);
    }
    auto find = [&](int x2, int y2) -> int {
        auto it = std::lower_bound(lookup.begin(), lookup.end(), std::make_pair(x2, y2));
        if (it == lookup.end() || *it != std::make_pair(x2, y2)) return -1;
        return ids[static_cast<std::size_t>(it - lookup.begin())];
    };
    constexpr std::pair<int, int> kUnit[] = {{2, 0}, {0, 2}};           // d2 == 4
    constexpr std::pair<int, int> kDiag[] = {{1, 1}, {1, -1}};          // d2 == 2
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto add = [&](int dx, int dy) {
            int j = find(points[i].x2 + dx, points[i].y2 + dy);
            if (j >= 0) edges.emplace_back(static_cast<int>(i), j);
        };
        for (auto [dx, dy] : kUnit) add(dx, dy);
        if (within)
            for (auto [dx, dy] : kDiag) add(dx, dy);
    }
    const int n = static_cast<int>(points.size());
    return core::build_graph(n, edges, std::move(points));
}

// JSON sidecar of coordinate labels: {"coords": [[x_num,x_den,y_num,y_den], ...]}
// with each fraction in lowest terms (denominator 1 or 2).
inline nlohmann::ordered_json coords_json(const core::Graph& g) {
    if (!g.has_coords())
        throw std::invalid_argument("graph carries no coordinate labels");
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int v = 0; v < g.n(); ++v) {
        Point p = g.coord(v);
        auto frac = [](int v2) {
            return v2 % 2 == 0 ? std::pair<int, int>{v2 / 2, 1} : std::pair<int, int>{v2, 2};
        };
        auto [xn, xd] = frac(p.x2);
        auto [yn, yd] = frac(p.y2);
        arr.push_back({xn, xd, yn, yd});
    }
    return nlohmann::ordered_json{{"coords", std::move(arr)}};
}

}  // namespace gbound::lattice
