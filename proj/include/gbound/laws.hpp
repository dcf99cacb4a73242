#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gbound/boundary.hpp"
#include "gbound/classifier.hpp"
#include "gbound/distance.hpp"
#include "gbound/enumerate.hpp"
#include "gbound/families.hpp"
#include "gbound/graph.hpp"
#include "gbound/graph6.hpp"

namespace gbound::laws {

using core::Graph;

// Every law obtains boundary data through this hook. The default is the real
// computation; the corrupt variants exist as negative controls so the harness
// can prove it actually detects broken analyses.
using AnalysisHook = std::function<boundary::BoundaryAnalysis(const Graph&)>;

inline AnalysisHook default_hook() {
    return [](const Graph& g) { return boundary::full_analysis(g); };
}

// Marks every vertex as a CEJZ member; breaks containment wherever the
// Steinerberger set is proper.
inline AnalysisHook corrupt_cejz_hook() {
    return [](const Graph& g) {
        boundary::BoundaryAnalysis a = boundary::full_analysis(g);
        for (auto& vb : a.vertices) vb.in_cejz = true;
        return a;
    };
}

// Shifts every stability number up by one without touching membership flags;
// breaks the criterion-equivalence law on any graph with a beta-zero vertex.
inline AnalysisHook corrupt_beta_hook() {
    return [](const Graph& g) {
        boundary::BoundaryAnalysis a = boundary::full_analysis(g);
        for (auto& vb : a.vertices) vb.beta += 1;
        return a;
    };
}

struct Violation {
    std::string graph6;
    std::vector<int> vertices;
    std::string note;
};

struct LawResult {
    std::string id;
    long long checked = 0;
    long long skipped = 0;
    std::string note;
    std::vector<Violation> violations;
};

struct VerificationReport {
    std::string corpus_source;
    int corpus_size = 0;  // connected graphs actually used
    int skipped_disconnected = 0;
    int min_n = 0;
    int max_n = 0;
    std::vector<LawResult> laws;
    long long wall_ms = 0;
    bool pass = true;
};

inline const std::vector<std::string>& law_registry() {
    static const std::vector<std::string> ids = {
        "containment",    "isoperimetric",      "deg2-cycle", "deg2-cut",
        "beta-attach",    "boundary-attach",    "neighbor-lipschitz", "diam2",
        "main-thm",       "criterion-equiv",    "peripheral-cejz",
        "subgraph-witness"};
    return ids;
}

inline bool is_law_id(const std::string& id) {
    const auto& reg = law_registry();
    return std::find(reg.begin(), reg.end(), id) != reg.end();
}

// Expands "all" and reorders a selection into registry order, dropping
// duplicates. Unknown ids are an error.
inline std::vector<std::string> expand_law_selection(const std::vector<std::string>& requested) {
    const auto& reg = law_registry();
    for (const auto& id : requested)
        if (id != "all" && !is_law_id(id))
            throw std::invalid_argument("unknown law id '" + id + "'");
    if (requested.empty() ||
        std::find(requested.begin(), requested.end(), "all") != requested.end())
        return reg;
    std::vector<std::string> out;
    for (const auto& id : reg)
        if (std::find(requested.begin(), requested.end(), id) != requested.end())
            out.push_back(id);
    return out;
}

namespace detail {

struct GraphLawEval {
    bool skipped = false;
    std::vector<int> vertices;  // offending vertices; empty means the law held
    std::string note;
};

inline GraphLawEval eval_containment(const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    for (int v = 0; v < a.vertex_count; ++v) {
        const auto& vb = a.vertices[static_cast<std::size_t>(v)];
        if (vb.in_cejz && !vb.in_steinerberger) e.vertices.push_back(v);
    }
    if (!e.vertices.empty()) e.note = "CEJZ vertices missing from the Steinerberger set";
    return e;
}

inline GraphLawEval eval_isoperimetric(const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    if (a.vertex_count < 2) {
        e.skipped = true;
        return e;
    }
    boundary::IsoperimetricCheck c = boundary::isoperimetric_check(a);
    if (!c.holds) {
        e.note = "boundary size " + std::to_string(c.boundary_size) + " below bound " +
                 std::to_string(c.bound_num) + "/" + std::to_string(c.bound_den);
        e.vertices.push_back(-1);  // graph-level failure, no single vertex to blame
    }
    return e;
}

inline GraphLawEval eval_deg2_cycle(const Graph& g, const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) continue;
        bool boundary_member = a.vertices[static_cast<std::size_t>(v)].in_steinerberger;
        if (boundary_member != core::has_cycle_through(g, v)) e.vertices.push_back(v);
    }
    if (!e.vertices.empty()) e.note = "degree-2 boundary membership disagrees with cycle membership";
    return e;
}

inline GraphLawEval eval_deg2_cut(const Graph& g, const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    std::vector<int> cuts;
    bool cuts_ready = false;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 2) continue;
        if (a.vertices[static_cast<std::size_t>(v)].in_steinerberger) continue;
        if (!cuts_ready) {
            cuts = core::cut_vertices(g);
            cuts_ready = true;
        }
        if (!std::binary_search(cuts.begin(), cuts.end(), v)) e.vertices.push_back(v);
    }
    if (!e.vertices.empty()) e.note = "degree-2 vertex is neither boundary nor a cut vertex";
    return e;
}

inline GraphLawEval eval_neighbor_lipschitz(const Graph& g, const core::DistanceMatrix& dm) {
    GraphLawEval e;
    for (auto [v, w] : g.edges())
        for (int u = 0; u < g.n(); ++u)
            if (std::abs(dm.at(v, u) - dm.at(w, u)) > 1) {
                e.vertices.push_back(v);
                e.vertices.push_back(w);
            }
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    if (!e.vertices.empty()) e.note = "adjacent vertices with distances differing by more than one";
    return e;
}

inline GraphLawEval eval_diam2(const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    if (a.diameter > 2) {
        e.skipped = true;
        return e;
    }
    std::vector<int> hubs;  // vertices adjacent to everything else
    for (int v = 0; v < a.vertex_count; ++v)
        if (a.vertices[static_cast<std::size_t>(v)].eccentricity == 1) hubs.push_back(v);
    for (int v = 0; v < a.vertex_count; ++v) {
        bool expected = !(hubs.size() == 1 && v == hubs.front());
        if (a.vertices[static_cast<std::size_t>(v)].in_steinerberger != expected)
            e.vertices.push_back(v);
    }
    if (!e.vertices.empty()) e.note = "diameter-2 boundary differs from the predicted split";
    return e;
}

inline GraphLawEval eval_main_thm(const Graph& g) {
    GraphLawEval e;
    if (classifier::cross_validate(g)) return e;
    classifier::FamilyDescriptor d = classifier::classify(g);
    e.vertices.push_back(-1);
    e.note = "classified " + std::string(classifier::tag_str(d.tag)) +
             " but the direct boundary size is " + std::to_string(d.boundary_size);
    return e;
}

inline GraphLawEval eval_criterion_equiv(const Graph& g, const boundary::BoundaryAnalysis& a,
                                         const core::DistanceMatrix& dm) {
    GraphLawEval e;
    for (int v = 0; v < g.n(); ++v) {
        const auto& vb = a.vertices[static_cast<std::size_t>(v)];
        if (g.n() == 1) {
            if (!(vb.beta == 0 && vb.in_steinerberger)) e.vertices.push_back(v);
            continue;
        }
        bool integer_test = vb.beta >= 1;
        bool literal = false;
        for (int u = 0; u < g.n() && !literal; ++u)
            literal = boundary::literal_mean_witness(g, dm, v, u);
        if (integer_test != literal || vb.in_steinerberger != integer_test)
            e.vertices.push_back(v);
    }
    if (!e.vertices.empty())
        e.note = "integer criterion, strict-mean inequality, and membership flag disagree";
    return e;
}

inline GraphLawEval eval_peripheral_cejz(const boundary::BoundaryAnalysis& a) {
    GraphLawEval e;
    for (int v = 0; v < a.vertex_count; ++v) {
        const auto& vb = a.vertices[static_cast<std::size_t>(v)];
        if (vb.eccentricity == a.diameter && !vb.in_cejz) e.vertices.push_back(v);
    }
    if (!e.vertices.empty()) e.note = "peripheral vertex outside the CEJZ boundary";
    return e;
}

// Edge-preserving injective embedding of `fix` into `host` that pins fix's
// vertex fv onto host's vertex hv and additionally requires degree equality
// there, which together force N_host(hv) to be exactly the image of N_fix(fv).
inline bool embeds_with_anchor(const Graph& fix, int fv, const Graph& host, int hv) {
    if (host.degree(hv) != fix.degree(fv)) return false;
    std::vector<int> order{fv};
    std::vector<char> seen(static_cast<std::size_t>(fix.n()), 0);
    seen[static_cast<std::size_t>(fv)] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : fix.neighbors(order[i]))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                order.push_back(w);
            }
    if (static_cast<int>(order.size()) != fix.n()) return false;  // fixture not connected

    std::vector<int> phi(static_cast<std::size_t>(fix.n()), -1);
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    phi[static_cast<std::size_t>(fv)] = hv;
    used[static_cast<std::size_t>(hv)] = 1;

    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == order.size()) return true;
        int x = order[k];
        int placed_nb = -1;
        for (int y : fix.neighbors(x))
            if (phi[static_cast<std::size_t>(y)] >= 0) {
                placed_nb = y;
                break;
            }
        for (int cand : host.neighbors(phi[static_cast<std::size_t>(placed_nb)])) {
            if (used[static_cast<std::size_t>(cand)] || host.degree(cand) < fix.degree(x)) continue;
            bool consistent = true;
            for (int y : fix.neighbors(x)) {
                int img = phi[static_cast<std::size_t>(y)];
                if (img >= 0 && !host.has_edge(cand, img)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            phi[static_cast<std::size_t>(x)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (place(k + 1)) return true;
            phi[static_cast<std::size_t>(x)] = -1;
            used[static_cast<std::size_t>(cand)] = 0;
        }
        return false;
    };
    return place(1);
}

}  // namespace detail

// One row of the subgraph-witness table: fixture index, a lattice host named
// by its generator call, and the host coordinate the fixture's marked vertex
// must land on.
struct WitnessHost {
    int fixture = 0;
    std::string host_name;
    Graph host;
    core::Point anchor;
};

inline std::vector<WitnessHost> witness_hosts() {
    namespace f = gbound::families;
    std::vector<WitnessHost> t;
    t.push_back({1, "n(2,1)", f::n_graph(2, 1), {2, 0}});
    t.push_back({1, "n(3,2)", f::n_graph(3, 2), {2, 0}});
    t.push_back({2, "n(2,1,{(1/2,1/2)})", f::n_graph(2, 1, {{core::Point{1, 1}}}), {2, 0}});
    t.push_back({2, "n(3,1,{(1/2,1/2)})", f::n_graph(3, 1, {{core::Point{1, 1}}}), {2, 0}});
    t.push_back({3, "grid(2,1)", f::grid(2, 1), {2, 0}});
    t.push_back({3, "grid(3,2)", f::grid(3, 2), {2, 0}});
    t.push_back({4, "x(2,2)", f::x_graph(2, 2), {0, 2}});
    t.push_back({4, "x(2,3)", f::x_graph(2, 3), {0, 2}});
    t.push_back({5, "x(3,3)", f::x_graph(3, 3), {1, 1}});
    t.push_back({5, "t(2,1)", f::t_graph(2, 1), {3, 3}});
    t.push_back({6, "t(2,1,right-column)",
                 f::t_graph(2, 1, {{core::Point{4, 0}, core::Point{4, 2}, core::Point{4, 4}}}),
                 {3, 3}});
    t.push_back({7, "t(1,2)", f::t_graph(1, 2), {2, 2}});
    t.push_back({8, "d(2,2)", f::d_graph(2, 2), {0, 2}});
    t.push_back({9, "l(2,1)", f::l_graph(2, 1), {2, 0}});
    t.push_back({9, "l(3,1)", f::l_graph(3, 1), {2, 0}});
    t.push_back({9, "d(1,2)", f::d_graph(1, 2), {0, 2}});
    return t;
}

struct VerifyOptions {
    std::string corpus_source = "corpus";
    int threads = 1;
    AnalysisHook hook = default_hook();
};

namespace detail {

// A violation tagged with its position in the scan so multi-threaded runs can
// be merged back into corpus order.
struct Tagged {
    long long seq = 0;
    int law = 0;  // index into the selected-law list
    Violation v;
};

inline void sort_tagged(std::vector<Tagged>& ts) {
    std::sort(ts.begin(), ts.end(), [](const Tagged& a, const Tagged& b) {
        return a.seq != b.seq ? a.seq < b.seq : a.law < b.law;
    });
}

}  // namespace detail

inline VerificationReport verify_laws(const std::vector<Graph>& corpus_in,
                                      const std::vector<std::string>& law_selection,
                                      const VerifyOptions& opt = {}) {
    auto start = std::chrono::steady_clock::now();
    if (opt.threads < 1) throw std::invalid_argument("thread count must be at least 1");
    std::vector<std::string> selected = expand_law_selection(law_selection);

    VerificationReport report;
    report.corpus_source = opt.corpus_source;

    std::vector<const Graph*> corpus;
    for (const Graph& g : corpus_in) {
        if (g.n() >= 1 && core::is_connected(g)) {
            corpus.push_back(&g);
        } else {
            ++report.skipped_disconnected;
        }
    }
    report.corpus_size = static_cast<int>(corpus.size());
    for (const Graph* g : corpus) {
        if (report.min_n == 0 || g->n() < report.min_n) report.min_n = g->n();
        report.max_n = std::max(report.max_n, g->n());
    }

    const int n_laws = static_cast<int>(selected.size());
    std::vector<LawResult> results(static_cast<std::size_t>(n_laws));
    for (int i = 0; i < n_laws; ++i) results[static_cast<std::size_t>(i)].id = selected[static_cast<std::size_t>(i)];
    auto law_index = [&](const std::string& id) {
        auto it = std::find(selected.begin(), selected.end(), id);
        return it == selected.end() ? -1 : static_cast<int>(it - selected.begin());
    };

    const int li_containment = law_index("containment");
    const int li_isoperimetric = law_index("isoperimetric");
    const int li_deg2_cycle = law_index("deg2-cycle");
    const int li_deg2_cut = law_index("deg2-cut");
    const int li_beta_attach = law_index("beta-attach");
    const int li_boundary_attach = law_index("boundary-attach");
    const int li_lipschitz = law_index("neighbor-lipschitz");
    const int li_diam2 = law_index("diam2");
    const int li_main_thm = law_index("main-thm");
    const int li_criterion = law_index("criterion-equiv");
    const int li_peripheral = law_index("peripheral-cejz");
    const int li_witness = law_index("subgraph-witness");

    // ---- per-graph laws --------------------------------------------------
    const bool any_analysis = li_containment >= 0 || li_isoperimetric >= 0 ||
                              li_deg2_cycle >= 0 || li_deg2_cut >= 0 || li_diam2 >= 0 ||
                              li_criterion >= 0 || li_peripheral >= 0;
    const bool any_dm = li_lipschitz >= 0 || li_criterion >= 0;
    const bool any_per_graph = any_analysis || any_dm || li_main_thm >= 0;

    std::vector<detail::Tagged> per_graph_violations;
    std::vector<std::vector<long long>> checked(static_cast<std::size_t>(n_laws)),
        skipped(static_cast<std::size_t>(n_laws));
    const int workers = std::clamp(opt.threads, 1, std::max(1, static_cast<int>(corpus.size())));
    for (auto& c : checked) c.assign(static_cast<std::size_t>(workers), 0);
    for (auto& s : skipped) s.assign(static_cast<std::size_t>(workers), 0);

    if (any_per_graph && !corpus.empty()) {
        std::vector<std::vector<detail::Tagged>> shard(static_cast<std::size_t>(workers));
        auto run_shard = [&](int t) {
            for (std::size_t i = static_cast<std::size_t>(t); i < corpus.size();
                 i += static_cast<std::size_t>(workers)) {
                const Graph& g = *corpus[i];
                std::string g6;
                auto record = [&](int law, detail::GraphLawEval e) {
                    if (law < 0) return;
                    if (e.skipped) {
                        ++skipped[static_cast<std::size_t>(law)][static_cast<std::size_t>(t)];
                        return;
                    }
                    ++checked[static_cast<std::size_t>(law)][static_cast<std::size_t>(t)];
                    if (e.vertices.empty()) return;
                    if (g6.empty()) g6 = core::graph6_encode(g);
                    if (e.vertices.size() == 1 && e.vertices.front() == -1) e.vertices.clear();
                    shard[static_cast<std::size_t>(t)].push_back(
                        {static_cast<long long>(i), law, {g6, std::move(e.vertices), std::move(e.note)}});
                };
                boundary::BoundaryAnalysis a;
                if (any_analysis) a = opt.hook(g);
                core::DistanceMatrix dm;
                if (any_dm) dm = core::distance_matrix(g);
                if (li_containment >= 0) record(li_containment, detail::eval_containment(a));
                if (li_isoperimetric >= 0) record(li_isoperimetric, detail::eval_isoperimetric(a));
                if (li_deg2_cycle >= 0) record(li_deg2_cycle, detail::eval_deg2_cycle(g, a));
                if (li_deg2_cut >= 0) record(li_deg2_cut, detail::eval_deg2_cut(g, a));
                if (li_lipschitz >= 0) record(li_lipschitz, detail::eval_neighbor_lipschitz(g, dm));
                if (li_diam2 >= 0) record(li_diam2, detail::eval_diam2(a));
                if (li_main_thm >= 0) record(li_main_thm, detail::eval_main_thm(g));
                if (li_criterion >= 0) record(li_criterion, detail::eval_criterion_equiv(g, a, dm));
                if (li_peripheral >= 0) record(li_peripheral, detail::eval_peripheral_cejz(a));
            }
        };
        if (workers == 1) {
            run_shard(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(run_shard, t);
            for (auto& th : pool) th.join();
        }
        for (auto& s : shard)
            per_graph_violations.insert(per_graph_violations.end(),
                                        std::make_move_iterator(s.begin()),
                                        std::make_move_iterator(s.end()));
        detail::sort_tagged(per_graph_violations);
    }

    // ---- pair laws over the small-graph subsample ------------------------
    std::vector<detail::Tagged> pair_violations;
    long long pair_count = 0, join_count = 0;
    std::size_t subsample_size = 0;
    if (li_beta_attach >= 0 || li_boundary_attach >= 0) {
        std::vector<const Graph*> sub;
        for (const Graph* g : corpus)
            if (g->n() <= 5) sub.push_back(g);
        subsample_size = sub.size();
        std::vector<boundary::BoundaryAnalysis> sub_analysis(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i) sub_analysis[i] = opt.hook(*sub[i]);
        const long long m = static_cast<long long>(sub.size());
        pair_count = m * m;
        for (std::size_t i = 0; i < sub.size(); ++i)
            for (std::size_t j = 0; j < sub.size(); ++j)
                join_count += static_cast<long long>(sub[i]->n()) * sub[j]->n();

        const int pair_workers =
            std::clamp(opt.threads, 1, std::max(1, static_cast<int>(std::min<long long>(pair_count, 64))));
        std::vector<std::vector<detail::Tagged>> shard(static_cast<std::size_t>(pair_workers));
        auto run_pairs = [&](int t) {
            for (long long p = t; p < pair_count; p += pair_workers) {
                const std::size_t i = static_cast<std::size_t>(p / m);
                const std::size_t j = static_cast<std::size_t>(p % m);
                const Graph& g1 = *sub[i];
                const Graph& g2 = *sub[j];
                const auto& a1 = sub_analysis[i];
                const auto& a2 = sub_analysis[j];
                for (int v1 = 0; v1 < g1.n(); ++v1)
                    for (int v2 = 0; v2 < g2.n(); ++v2) {
                        Graph joined = families::join_with_edge(g1, v1, g2, v2);
                        boundary::BoundaryAnalysis aj = opt.hook(joined);
                        const long long seq = (p * 36) + v1 * 6 + v2;
                        std::string context = "G1=" + core::graph6_encode(g1) + " v1=" +
                                              std::to_string(v1) + "; G2=" + core::graph6_encode(g2) +
                                              " v2=" + std::to_string(v2);
                        if (li_beta_attach >= 0 && g1.n() >= 2) {
                            std::vector<int> bad;
                            for (int v = 0; v < g1.n(); ++v) {
                                int expected = a1.vertices[static_cast<std::size_t>(v)].beta -
                                               (v == v1 ? 1 : 0);
                                if (aj.vertices[static_cast<std::size_t>(v)].beta != expected)
                                    bad.push_back(v);
                            }
                            if (!bad.empty())
                                shard[static_cast<std::size_t>(t)].push_back(
                                    {seq, li_beta_attach,
                                     {core::graph6_encode(joined), std::move(bad),
                                      "stability numbers moved off the attachment law; " + context}});
                        }
                        if (li_boundary_attach >= 0) {
                            std::vector<int> bad;
                            for (int v = 0; v < joined.n(); ++v) {
                                bool from_first = v < g1.n();
                                const auto& side = from_first ? a1 : a2;
                                int local = from_first ? v : v - g1.n();
                                int junction = from_first ? v1 : v2;
                                const auto& vb = side.vertices[static_cast<std::size_t>(local)];
                                bool expected = vb.in_steinerberger &&
                                                !(local == junction && vb.beta == 1);
                                if (aj.vertices[static_cast<std::size_t>(v)].in_steinerberger != expected)
                                    bad.push_back(v);
                            }
                            std::size_t bj = boundary::steinerberger_set(aj).size();
                            bool size_ok =
                                bj >= boundary::steinerberger_set(a1).size() &&
                                bj >= boundary::steinerberger_set(a2).size();
                            if (!bad.empty() || !size_ok)
                                shard[static_cast<std::size_t>(t)].push_back(
                                    {seq, li_boundary_attach,
                                     {core::graph6_encode(joined), std::move(bad),
                                      "joined boundary differs from the attachment law; " + context}});
                        }
                    }
            }
        };
        if (pair_workers == 1) {
            run_pairs(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < pair_workers; ++t) pool.emplace_back(run_pairs, t);
            for (auto& th : pool) th.join();
        }
        for (auto& s : shard)
            pair_violations.insert(pair_violations.end(), std::make_move_iterator(s.begin()),
                                   std::make_move_iterator(s.end()));
        detail::sort_tagged(pair_violations);
    }

    // ---- subgraph-witness fixtures ---------------------------------------
    std::vector<Violation> witness_violations;
    long long witness_checked = 0;
    if (li_witness >= 0) {
        for (const WitnessHost& row : witness_hosts()) {
            ++witness_checked;
            families::BaseCase bc = families::base_case_fixture(row.fixture);
            std::string label = "G" + std::to_string(row.fixture) + " in " + row.host_name;
            core::DistanceMatrix dmf = core::distance_matrix(bc.graph);
            if (dmf.at(bc.v, bc.u) != 2 ||
                boundary::beta_pair(bc.graph, dmf, bc.v, bc.u) < 1) {
                witness_violations.push_back({core::graph6_encode(bc.graph),
                                              {bc.v, bc.u},
                                              label + ": fixture premise failed"});
                continue;
            }
            int hv = -1;
            for (int v = 0; v < row.host.n(); ++v)
                if (row.host.coord(v) == row.anchor) hv = v;
            if (hv < 0) {
                witness_violations.push_back(
                    {core::graph6_encode(row.host), {}, label + ": anchor coordinate missing"});
                continue;
            }
            if (!detail::embeds_with_anchor(bc.graph, bc.v, row.host, hv)) {
                witness_violations.push_back({core::graph6_encode(row.host),
                                              {hv},
                                              label + ": no neighborhood-preserving embedding"});
                continue;
            }
            boundary::BoundaryAnalysis ah = opt.hook(row.host);
            if (!ah.vertices[static_cast<std::size_t>(hv)].in_steinerberger)
                witness_violations.push_back({core::graph6_encode(row.host),
                                              {hv},
                                              label + ": anchor not a boundary vertex"});
        }
    }

    // ---- assemble --------------------------------------------------------
    for (int law = 0; law < n_laws; ++law) {
        LawResult& r = results[static_cast<std::size_t>(law)];
        long long c = 0, s = 0;
        for (int t = 0; t < workers; ++t) {
            c += checked[static_cast<std::size_t>(law)][static_cast<std::size_t>(t)];
            s += skipped[static_cast<std::size_t>(law)][static_cast<std::size_t>(t)];
        }
        r.checked = c;
        r.skipped = s;
    }
    for (auto& t : per_graph_violations)
        results[static_cast<std::size_t>(t.law)].violations.push_back(std::move(t.v));
    for (auto& t : pair_violations)
        results[static_cast<std::size_t>(t.law)].violations.push_back(std::move(t.v));

    const std::string pair_note =
        "all ordered pairs and junction choices over the " + std::to_string(subsample_size) +
        "-graph subsample with at most 5 vertices (" + std::to_string(pair_count) + " pairs, " +
        std::to_string(join_count) + " joined graphs)";
    if (li_beta_attach >= 0) {
        LawResult& r = results[static_cast<std::size_t>(li_beta_attach)];
        r.checked = static_cast<long long>(subsample_size);
        r.skipped = report.corpus_size - r.checked;
        r.note = pair_note + "; single-vertex first graphs contribute no beta assertions";
    }
    if (li_boundary_attach >= 0) {
        LawResult& r = results[static_cast<std::size_t>(li_boundary_attach)];
        r.checked = static_cast<long long>(subsample_size);
        r.skipped = report.corpus_size - r.checked;
        r.note = pair_note;
    }
    if (li_isoperimetric >= 0)
        results[static_cast<std::size_t>(li_isoperimetric)].note =
            "single-vertex graphs are skipped (diameter 0)";
    if (li_diam2 >= 0)
        results[static_cast<std::size_t>(li_diam2)].note = "graphs with diameter above 2 are skipped";
    if (li_witness >= 0) {
        LawResult& r = results[static_cast<std::size_t>(li_witness)];
        r.checked = witness_checked;
        r.skipped = 0;
        r.note = "fixture/host embedding table; corpus-independent";
        r.violations = std::move(witness_violations);
    }

    report.laws = std::move(results);
    for (const LawResult& r : report.laws)
        if (!r.violations.empty()) report.pass = false;
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

inline nlohmann::ordered_json to_json(const Violation& v) {
    nlohmann::ordered_json j;
    j["graph6"] = v.graph6;
    j["vertices"] = v.vertices;
    j["note"] = v.note;
    return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["corpus"] = nlohmann::ordered_json::object();
    j["corpus"]["source"] = r.corpus_source;
    j["corpus"]["graphs"] = r.corpus_size;
    j["corpus"]["skipped_disconnected"] = r.skipped_disconnected;
    j["corpus"]["min_n"] = r.min_n;
    j["corpus"]["max_n"] = r.max_n;
    j["laws"] = nlohmann::ordered_json::array();
    for (const LawResult& law : r.laws) {
        nlohmann::ordered_json e;
        e["id"] = law.id;
        e["checked"] = law.checked;
        e["skipped"] = law.skipped;
        e["note"] = law.note;
        e["violations"] = nlohmann::ordered_json::array();
        for (const Violation& v : law.violations) e["violations"].push_back(to_json(v));
        j["laws"].push_back(std::move(e));
    }
    j["wall_ms"] = r.wall_ms;
    j["pass"] = r.pass;
    return j;
}

// Negative control: the harness must detect deliberately corrupted analyses.
// Runs the clean laws on the small built-in corpus, then re-runs two focused
// laws under the corrupt hooks and demands violations.
struct SelftestResult {
    bool clean_pass = false;
    bool cejz_control_fired = false;
    bool beta_control_fired = false;
    bool ok() const { return clean_pass && cejz_control_fired && beta_control_fired; }
};

inline SelftestResult run_selftest() {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 5; ++n)
        for (Graph& g : core::enumerate_connected(n)) corpus.push_back(std::move(g));
    SelftestResult out;
    VerifyOptions clean;
    clean.corpus_source = "built-in enumeration, n <= 5";
    out.clean_pass = verify_laws(corpus, {"all"}, clean).pass;

    VerifyOptions cejz = clean;
    cejz.hook = corrupt_cejz_hook();
    out.cejz_control_fired = !verify_laws(corpus, {"containment"}, cejz).pass;

    VerifyOptions beta = clean;
    beta.hook = corrupt_beta_hook();
    out.beta_control_fired = !verify_laws(corpus, {"criterion-equiv"}, beta).pass;
    return out;
}

}  // namespace gbound::laws
