#pragma once

#include <string>

#include "gbound/boundary.hpp"
#include "gbound/graph.hpp"

namespace gbound::dot {

namespace detail {

// Lattice coordinates are stored doubled so half-integers stay exact; DOT
// wants the plain value.
inline std::string half(int doubled) {
    std::string s = std::to_string(doubled / 2);
    if (doubled % 2 != 0) {
        if (doubled < 0 && doubled / 2 == 0) s = "-" + s;
        s += ".5";
    }
    return s;
}

inline std::string pos_attr(const core::Graph& g, int v) {
    if (!g.has_coords()) return "";
    core::Point p = g.coord(v);
    return ", pos=\"" + half(p.x2) + "," + half(p.y2) + "!\"";
}

}  // namespace detail

// Graphviz text for the bare graph: one node line per vertex (with a pinned
// position when the graph carries lattice coordinates) and one line per edge.
inline std::string to_dot(const core::Graph& g) {
    std::string out = "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"" +
               detail::pos_attr(g, v) + "];\n";
    for (auto [v, w] : g.edges())
        out += "  " + std::to_string(v) + " -- " + std::to_string(w) + ";\n";
    out += "}\n";
    return out;
}

// Same, but annotated: each vertex carries its stability number as an
// exterior label and boundary vertices are filled red.
inline std::string to_dot(const core::Graph& g, const boundary::BoundaryAnalysis& a) {
    std::string out = "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        const auto& vb = a.vertices[static_cast<std::size_t>(v)];
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) +
               "\", xlabel=\"" + std::to_string(vb.beta) + "\"";
        if (vb.in_steinerberger) out += ", style=filled, fillcolor=red";
        out += detail::pos_attr(g, v) + "];\n";
    }
    for (auto [v, w] : g.edges())
        out += "  " + std::to_string(v) + " -- " + std::to_string(w) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace gbound::dot
