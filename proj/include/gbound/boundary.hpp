#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gbound/distance.hpp"
#include "gbound/graph.hpp"

namespace gbound::boundary {

struct VertexBoundary {
    bool in_cejz = false;
    bool in_steinerberger = false;
    int beta = 0;                     // max over u of beta_pair(v, u)
    std::vector<int> beta_witnesses;  // every u attaining that max
    std::vector<int> cejz_witnesses;  // every u with no neighbor of v farther from u than v
    int eccentricity = 0;
};

struct BoundaryAnalysis {
    int vertex_count = 0;
    int diameter = 0;
    int max_degree = 0;
    std::vector<VertexBoundary> vertices;
};

// Sum over neighbors w of v of d(v,u) - d(w,u). Each term is in {-1, 0, 1};
// beta_pair(v, v) is always -deg(v).
inline int beta_pair(const core::Graph& g, const core::DistanceMatrix& dm, int v, int u) {
    int s = 0;
    for (int w : g.neighbors(v)) s += dm.at(v, u) - dm.at(w, u);
    return s;
}

// Maximum of beta_pair over all u (u = v included; it never attains the max
// for n >= 2), plus the full argmax set.
inline std::pair<int, std::vector<int>> beta(const core::Graph& g, const core::DistanceMatrix& dm, int v) {
    int best = beta_pair(g, dm, v, 0);
    std::vector<int> witnesses{0};
    for (int u = 1; u < g.n(); ++u) {
        int b = beta_pair(g, dm, v, u);
        if (b > best) {
            best = b;
            witnesses.assign(1, u);
        } else if (b == best) {
            witnesses.push_back(u);
        }
    }
    return {best, std::move(witnesses)};
}

// The literal averaged membership test: mean distance of v's neighbors to u is
// strictly below d(v,u). Kept as the independent cross-check for the integer
// criterion beta(v) >= 1.
inline bool literal_mean_witness(const core::Graph& g, const core::DistanceMatrix& dm, int v, int u) {
    long long total = 0;
    for (int w : g.neighbors(v)) total += dm.at(w, u);
    return total < static_cast<long long>(g.degree(v)) * dm.at(v, u);
}

// No neighbor of v is farther from u than v is.
inline bool cejz_witness(const core::Graph& g, const core::DistanceMatrix& dm, int v, int u) {
    for (int w : g.neighbors(v))
        if (dm.at(w, u) > dm.at(v, u)) return false;
    return true;
}

inline BoundaryAnalysis full_analysis(const core::Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("boundary analysis needs at least one vertex");
    BoundaryAnalysis a;
    a.vertex_count = g.n();
    a.max_degree = g.max_degree();
    if (g.n() == 1) {
        // Convention: the single vertex is boundary in both senses, beta = 0.
        a.diameter = 0;
        a.vertices.push_back({true, true, 0, {0}, {0}, 0});
        return a;
    }
    core::DistanceMatrix dm = core::distance_matrix(g);
    a.diameter = core::diameter(dm);
    a.vertices.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        VertexBoundary vb;
        auto [b, witnesses] = beta(g, dm, v);
        vb.beta = b;
        vb.beta_witnesses = std::move(witnesses);
        vb.in_steinerberger = b >= 1;
        for (int u = 0; u < g.n(); ++u)
            if (cejz_witness(g, dm, v, u)) vb.cejz_witnesses.push_back(u);
        vb.in_cejz = !vb.cejz_witnesses.empty();
        vb.eccentricity = core::eccentricity(dm, v);
        a.vertices.push_back(std::move(vb));
    }
    return a;
}

// Both boundary entry points share the full computation; they differ only in
// which fields a caller reads.
inline BoundaryAnalysis steinerberger_boundary(const core::Graph& g) { return full_analysis(g); }
inline BoundaryAnalysis cejz_boundary(const core::Graph& g) { return full_analysis(g); }

inline std::vector<int> steinerberger_set(const BoundaryAnalysis& a) {
    std::vector<int> out;
    for (int v = 0; v < a.vertex_count; ++v)
        if (a.vertices[static_cast<std::size_t>(v)].in_steinerberger) out.push_back(v);
    return out;
}

inline std::vector<int> cejz_set(const BoundaryAnalysis& a) {
    std::vector<int> out;
    for (int v = 0; v < a.vertex_count; ++v)
        if (a.vertices[static_cast<std::size_t>(v)].in_cejz) out.push_back(v);
    return out;
}

struct IsoperimetricCheck {
    int boundary_size = 0;
    long long bound_num = 0;  // |V| / (2 * max_degree * diameter), reduced
    long long bound_den = 1;
    bool holds = false;
};

// |boundary| >= |V| / (2 * max_degree * diameter), decided by integer
// cross-multiplication; the reduced rational bound is reported for display.
inline IsoperimetricCheck isoperimetric_check(const BoundaryAnalysis& a) {
    if (a.vertex_count < 2)
        throw std::invalid_argument("isoperimetric bound needs at least two vertices (diameter > 0)");
    IsoperimetricCheck c;
    c.boundary_size = static_cast<int>(steinerberger_set(a).size());
    long long num = a.vertex_count;
    long long den = 2ll * a.max_degree * a.diameter;
    long long g = std::gcd(num, den);
    c.bound_num = num / g;
    c.bound_den = den / g;
    c.holds = static_cast<long long>(c.boundary_size) * den >= num;
    return c;
}

// For a degree-2 vertex, boundary membership is exactly cycle membership.
inline bool degree2_boundary_criterion(const core::Graph& g, int v) {
    if (g.degree(v) != 2)
        throw std::invalid_argument("degree-2 criterion queried at a vertex of degree " +
                                    std::to_string(g.degree(v)));
    return core::has_cycle_through(g, v);
}

inline nlohmann::ordered_json to_json(const BoundaryAnalysis& a) {
    nlohmann::ordered_json j;
    j["n"] = a.vertex_count;
    j["diameter"] = a.diameter;
    j["max_degree"] = a.max_degree;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < a.vertex_count; ++v) {
        const VertexBoundary& vb = a.vertices[static_cast<std::size_t>(v)];
        nlohmann::ordered_json e;
        e["id"] = v;
        e["ecc"] = vb.eccentricity;
        e["beta"] = vb.beta;
        e["beta_witnesses"] = vb.beta_witnesses;
        e["cejz"] = vb.in_cejz;
        e["steinerberger"] = vb.in_steinerberger;
        j["vertices"].push_back(std::move(e));
    }
    return j;
}

}  // namespace gbound::boundary
