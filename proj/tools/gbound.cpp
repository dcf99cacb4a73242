#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbound/boundary.hpp"
#include "gbound/classifier.hpp"
#include "gbound/dot.hpp"
#include "gbound/enumerate.hpp"
#include "gbound/families.hpp"
#include "gbound/graph.hpp"
#include "gbound/graph6.hpp"
#include "gbound/laws.hpp"

namespace {

using gbound::core::Graph;

// The graph argument of analyze/classify is either a literal graph6 string or
// the path of a file holding one graph per line.
std::vector<Graph> load_graph_arg(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return gbound::core::read_graph6_file(arg);
    return {gbound::core::graph6_decode(arg)};
}

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("expected an integer, got '" + text + "'");
    return value;
}

void need_params(const std::string& family, const std::vector<std::string>& params,
                 std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
        std::string expect = std::to_string(lo);
        if (hi != lo) expect += ".." + std::to_string(hi);
        throw std::invalid_argument("family '" + family + "' takes " + expect +
                                    " parameter(s), got " + std::to_string(params.size()));
    }
}

Graph make_family(const std::string& family, const std::vector<std::string>& params) {
    namespace f = gbound::families;
    auto p = [&](std::size_t i) { return parse_int(params.at(i)); };
    if (family == "path") { need_params(family, params, 1, 1); return f::path(p(0)); }
    if (family == "cycle") { need_params(family, params, 1, 1); return f::cycle(p(0)); }
    if (family == "complete") { need_params(family, params, 1, 1); return f::complete(p(0)); }
    if (family == "star") { need_params(family, params, 1, 1); return f::star(p(0)); }
    if (family == "barbell") { need_params(family, params, 1, 1); return f::barbell(p(0)); }
    if (family == "tripod") { need_params(family, params, 3, 3); return f::tripod(p(0), p(1), p(2)); }
    if (family == "spider") {
        need_params(family, params, 4, 4);
        return f::spider(p(0), p(1), p(2), p(3));
    }
    if (family == "double_spider") {
        need_params(family, params, 4, 5);
        return params.size() == 4 ? f::double_spider(p(0), p(1), p(2), p(3))
                                  : f::double_spider(p(0), p(1), p(2), p(3), p(4));
    }
    if (family == "grid") { need_params(family, params, 2, 2); return f::grid(p(0), p(1)); }
    if (family == "n") { need_params(family, params, 2, 2); return f::n_graph(p(0), p(1)); }
    if (family == "x") { need_params(family, params, 2, 2); return f::x_graph(p(0), p(1)); }
    if (family == "t") { need_params(family, params, 2, 2); return f::t_graph(p(0), p(1)); }
    if (family == "d") { need_params(family, params, 2, 2); return f::d_graph(p(0), p(1)); }
    if (family == "l") { need_params(family, params, 2, 2); return f::l_graph(p(0), p(1)); }
    if (family == "core") {
        // Name syntax: N11, C4, K4, T11, D11, X1c(c), X1c_open(c).
        need_params(family, params, 1, 1);
        return f::fig2_core(params.at(0));
    }
    if (family == "base") { need_params(family, params, 1, 1); return f::base_case_fixture(p(0)).graph; }
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (known: path cycle complete star barbell tripod spider double_spider grid n x t d l "
        "core base)");
}

std::vector<Graph> built_in_corpus(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : gbound::core::enumerate_connected(n)) out.push_back(std::move(g));
    return out;
}

int run_analyze(const std::string& input, bool compact) {
    for (const Graph& g : load_graph_arg(input)) {
        auto a = gbound::boundary::full_analysis(g);
        std::cout << gbound::boundary::to_json(a).dump(compact ? -1 : 2) << "\n";
    }
    return 0;
}

int run_classify(const std::string& input) {
    for (const Graph& g : load_graph_arg(input))
        std::cout << gbound::classifier::to_json(gbound::classifier::classify(g)).dump() << "\n";
    return 0;
}

int run_generate(const std::string& family, const std::vector<std::string>& params, bool as_dot) {
    Graph g = make_family(family, params);
    if (as_dot) {
        auto a = gbound::boundary::full_analysis(g);
        std::cout << gbound::dot::to_dot(g, a);
    } else {
        std::cout << gbound::core::graph6_encode(g) << "\n";
    }
    return 0;
}

int run_verify(const std::vector<std::string>& law_ids, int max_n, const std::string& corpus_path,
               int threads, const std::string& mutate) {
    std::vector<Graph> corpus;
    gbound::laws::VerifyOptions opt;
    opt.threads = threads;
    if (mutate == "cejz") {
        opt.hook = gbound::laws::corrupt_cejz_hook();
    } else if (mutate == "beta") {
        opt.hook = gbound::laws::corrupt_beta_hook();
    } else if (mutate != "none") {
        throw std::invalid_argument("--mutate takes none, cejz, or beta");
    }
    if (!corpus_path.empty()) {
        corpus = gbound::core::read_graph6_file(corpus_path);
        opt.corpus_source = corpus_path;
        if (max_n >= 1) {
            std::erase_if(corpus, [max_n](const Graph& g) { return g.n() > max_n; });
            opt.corpus_source += " (capped at n <= " + std::to_string(max_n) + ")";
        }
    } else {
        if (max_n < 1)
            throw std::invalid_argument("verify needs --max-n (built-in corpus) or --corpus FILE");
        if (max_n > 7)
            throw std::invalid_argument(
                "built-in enumeration is capped at --max-n 7; larger corpora go through --corpus");
        corpus = built_in_corpus(max_n);
        opt.corpus_source = "built-in enumeration, n <= " + std::to_string(max_n);
    }
    auto report = gbound::laws::verify_laws(corpus, law_ids, opt);
    std::cout << gbound::laws::to_json(report).dump(2) << "\n";
    return report.pass ? 0 : 1;
}

int run_selftest() {
    auto s = gbound::laws::run_selftest();
    auto line = [](bool ok, const char* what) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    };
    line(s.clean_pass, "all laws hold on the built-in corpus");
    line(s.cejz_control_fired, "containment law detects a corrupted CEJZ computation");
    line(s.beta_control_fired, "criterion law detects corrupted stability numbers");
    return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary computation toolkit: analyze graphs, classify small boundaries, "
                 "generate families, and verify the structural laws"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "print the full boundary analysis of a graph");
    std::string analyze_input;
    bool analyze_compact = false;
    analyze->add_option("graph", analyze_input, "graph6 string or file with one graph per line")
        ->required();
    analyze->add_flag("--json", analyze_compact, "compact single-line JSON instead of indented");

    auto* classify = app.add_subcommand("classify", "name the family of a graph with small boundary");
    std::string classify_input;
    classify->add_option("graph", classify_input, "graph6 string or file with one graph per line")
        ->required();

    auto* generate = app.add_subcommand("generate", "emit a generated family member");
    std::string gen_family;
    std::vector<std::string> gen_params;
    bool gen_g6 = false, gen_dot = false;
    generate->add_option("family", gen_family, "family name (see error text for the list)")
        ->required();
    generate->add_option("params", gen_params, "family parameters");
    generate->add_flag("--g6", gen_g6, "graph6 output (default)");
    generate->add_flag("--dot", gen_dot, "Graphviz output with stability labels");

    auto* verify = app.add_subcommand("verify", "run structural laws over a corpus");
    std::vector<std::string> verify_laws_arg;
    int verify_max_n = -1;
    std::string verify_corpus;
    int verify_threads = 1;
    verify->add_option("--laws", verify_laws_arg, "law ids, comma separated, or 'all'")
        ->required()
        ->delimiter(',');
    verify->add_option("--max-n", verify_max_n, "built-in corpus bound (at most 7)");
    verify->add_option("--corpus", verify_corpus, "graph6 file, one graph per line");
    verify->add_option("--threads", verify_threads, "worker threads (default 1)");
    std::string verify_mutate = "none";
    verify->add_option("--mutate", verify_mutate,
                       "negative-control mode: corrupt the analysis (none, cejz, beta)");

    app.add_subcommand("selftest", "verify the harness catches corrupted analyses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("analyze")) return run_analyze(analyze_input, analyze_compact);
        if (app.got_subcommand("classify")) return run_classify(classify_input);
        if (app.got_subcommand("generate")) {
            if (gen_g6 && gen_dot)
                throw std::invalid_argument("--g6 and --dot are mutually exclusive");
            return run_generate(gen_family, gen_params, gen_dot);
        }
        if (app.got_subcommand("verify"))
            return run_verify(verify_laws_arg, verify_max_n, verify_corpus, verify_threads,
                              verify_mutate);
        if (app.got_subcommand("selftest")) return run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
