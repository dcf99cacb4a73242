#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "gbound/classifier.hpp"
#include "gbound/families.hpp"
#include "gbound/graph6.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;  // stdout and stderr merged
};

// Runs the installed binary through the shell. graph6 arguments must be
// single-quoted by the caller; graph6 bytes (63..126) never contain a quote.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GBOUND_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

std::string g6(const gbound::core::Graph& g) { return gbound::core::graph6_encode(g); }

// Scratch file that removes itself.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("generate mirrors the library generators") {
    auto tripod = run_cli("generate tripod 2 0 1 --g6");
    CHECK(tripod.exit_code == 0);
    CHECK(tripod.out == g6(gbound::families::tripod(2, 0, 1)) + "\n");

    auto dflt = run_cli("generate tripod 2 0 1");
    CHECK(dflt.out == tripod.out);  // graph6 is the default output

    auto core = run_cli("generate core K4");
    CHECK(core.exit_code == 0);
    CHECK(core.out == g6(gbound::families::fig2_core("K4")) + "\n");

    auto open_core = run_cli("generate core 'X1c_open(3)'");
    CHECK(open_core.exit_code == 0);
    CHECK(open_core.out == g6(gbound::families::fig2_core("X1c_open(3)")) + "\n");

    auto base = run_cli("generate base 9");
    CHECK(base.exit_code == 0);
    CHECK(base.out == g6(gbound::families::base_case_fixture(9).graph) + "\n");
}

TEST_CASE("generate renders annotated DOT") {
    auto r = run_cli("generate grid 2 2 --dot");
    CHECK(r.exit_code == 0);
    CHECK_THAT(r.out, StartsWith("graph G {"));
    CHECK_THAT(r.out, ContainsSubstring("xlabel="));
    CHECK_THAT(r.out, ContainsSubstring("fillcolor=red"));
    CHECK_THAT(r.out, ContainsSubstring("pos=\"0,0!\""));
    CHECK_THAT(r.out, ContainsSubstring(" -- "));
    CHECK_THAT(r.out, ContainsSubstring("}\n"));

    // Half-integer lattice coordinates print as .5 positions.
    auto x = run_cli("generate x 1 2 --dot");
    CHECK_THAT(x.out, ContainsSubstring(".5,"));
}

TEST_CASE("analyze prints the boundary analysis") {
    auto r = run_cli("analyze " + q(g6(gbound::families::complete(4))) + " --json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 4);
    REQUIRE(j["vertices"].size() == 4);
    for (const auto& v : j["vertices"]) {
        CHECK(v["beta"] == 1);
        CHECK(v["steinerberger"] == true);
    }

    // Without --json the output is indented but parses to the same object.
    auto pretty = run_cli("analyze " + q(g6(gbound::families::complete(4))));
    CHECK(pretty.exit_code == 0);
    CHECK_THAT(pretty.out, StartsWith("{\n"));
    CHECK(json::parse(pretty.out) == j);
}

TEST_CASE("classify prints the family descriptor") {
    auto star = run_cli("classify " + q(g6(gbound::families::star(4))));
    REQUIRE(star.exit_code == 0);
    CHECK(star.out ==
          gbound::classifier::to_json(gbound::classifier::classify(gbound::families::star(4)))
                  .dump() +
              "\n");
    CHECK_THAT(star.out, ContainsSubstring("\"tag\":\"FourLeafTree\""));

    auto path = run_cli("classify " + q(g6(gbound::families::path(5))));
    CHECK_THAT(path.out, ContainsSubstring("\"tag\":\"Path\""));
}

TEST_CASE("file arguments process one graph per line") {
    TempFile corpus("gbound_cli_corpus.g6", g6(gbound::families::path(2)) + "\n" +
                                                g6(gbound::families::cycle(3)) + "\n\n" +
                                                g6(gbound::families::cycle(4)) + "\n");
    auto analyzed = run_cli("analyze " + q(corpus.path.string()) + " --json");
    REQUIRE(analyzed.exit_code == 0);
    CHECK(std::count(analyzed.out.begin(), analyzed.out.end(), '\n') == 3);

    auto classified = run_cli("classify " + q(corpus.path.string()));
    REQUIRE(classified.exit_code == 0);
    CHECK_THAT(classified.out, ContainsSubstring("\"tag\":\"Path\""));
    CHECK_THAT(classified.out, ContainsSubstring("\"tag\":\"Tripod\""));
    CHECK_THAT(classified.out, ContainsSubstring("\"tag\":\"Fig2Core\""));
}

TEST_CASE("verify over the built-in corpus") {
    auto r = run_cli("verify --laws all --max-n 6");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["corpus"]["source"] == "built-in enumeration, n <= 6");
    CHECK(j["corpus"]["graphs"] == 143);
    CHECK(j["laws"].size() == 12);
    CHECK(j["pass"] == true);
    for (const auto& law : j["laws"]) CHECK(law["violations"].empty());
}

TEST_CASE("verify reads corpus files and applies the n cap") {
    TempFile corpus("gbound_cli_verify.g6",
                    g6(gbound::families::cycle(4)) + "\n" + g6(gbound::families::path(5)) + "\n" +
                        g6(gbound::core::build_graph(2, {})) + "\n");

    auto all = run_cli("verify --laws containment,main-thm --corpus " + q(corpus.path.string()));
    REQUIRE(all.exit_code == 0);
    json j = json::parse(all.out);
    CHECK(j["corpus"]["source"] == corpus.path.string());
    CHECK(j["corpus"]["graphs"] == 2);
    CHECK(j["corpus"]["skipped_disconnected"] == 1);

    auto capped = run_cli("verify --laws containment --corpus " + q(corpus.path.string()) +
                          " --max-n 4");
    json jc = json::parse(capped.out);
    CHECK(jc["corpus"]["graphs"] == 1);
    CHECK_THAT(jc["corpus"]["source"].get<std::string>(), ContainsSubstring("capped at n <= 4"));
}

TEST_CASE("verify reports are deterministic across runs and thread counts") {
    auto normalize = [](const std::string& text) {
        json j = json::parse(text);
        j["wall_ms"] = 0;
        return j.dump();
    };
    auto a = run_cli("verify --laws all --max-n 5");
    auto b = run_cli("verify --laws all --max-n 5");
    auto c = run_cli("verify --laws all --max-n 5 --threads 4");
    REQUIRE(a.exit_code == 0);
    CHECK(normalize(a.out) == normalize(b.out));
    CHECK(normalize(a.out) == normalize(c.out));
}

TEST_CASE("mutation mode proves violations are detectable") {
    auto cejz = run_cli("verify --laws containment --max-n 4 --mutate cejz");
    CHECK(cejz.exit_code == 1);
    json j = json::parse(cejz.out);
    CHECK(j["pass"] == false);
    CHECK(j["laws"][0]["violations"].size() > 0);

    auto beta = run_cli("verify --laws criterion-equiv --max-n 4 --mutate beta");
    CHECK(beta.exit_code == 1);
    CHECK(json::parse(beta.out)["pass"] == false);

    auto bogus = run_cli("verify --laws all --max-n 4 --mutate sideways");
    CHECK(bogus.exit_code == 2);
    CHECK_THAT(bogus.out, ContainsSubstring("--mutate takes"));
}

TEST_CASE("selftest runs its negative controls") {
    auto r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK_THAT(r.out, ContainsSubstring("[PASS] all laws hold"));
    CHECK_THAT(r.out, !ContainsSubstring("[FAIL]"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);

    auto badlaw = run_cli("verify --laws gravity --max-n 3");
    CHECK(badlaw.exit_code == 2);
    CHECK_THAT(badlaw.out, ContainsSubstring("unknown law id 'gravity'"));

    auto nolaws = run_cli("verify --max-n 3");
    CHECK(nolaws.exit_code == 2);

    auto nocorpus = run_cli("verify --laws all");
    CHECK(nocorpus.exit_code == 2);
    CHECK_THAT(nocorpus.out, ContainsSubstring("--max-n"));

    auto toobig = run_cli("verify --laws all --max-n 8");
    CHECK(toobig.exit_code == 2);
    CHECK_THAT(toobig.out, ContainsSubstring("capped"));

    auto badg6 = run_cli("analyze '++notgraph6'");
    CHECK(badg6.exit_code == 2);
    CHECK_THAT(badg6.out, ContainsSubstring("error:"));

    auto missingfile = run_cli("verify --laws all --corpus /definitely/not/here.g6");
    CHECK(missingfile.exit_code == 2);
    CHECK_THAT(missingfile.out, ContainsSubstring("cannot open"));

    auto badfamily = run_cli("generate moebius 4");
    CHECK(badfamily.exit_code == 2);
    CHECK_THAT(badfamily.out, ContainsSubstring("unknown family"));

    auto badarity = run_cli("generate grid 3");
    CHECK(badarity.exit_code == 2);
    CHECK_THAT(badarity.out, ContainsSubstring("2 parameter"));

    auto bothflags = run_cli("generate grid 2 2 --g6 --dot");
    CHECK(bothflags.exit_code == 2);
    CHECK_THAT(bothflags.out, ContainsSubstring("mutually exclusive"));

    auto badint = run_cli("generate path seven");
    CHECK(badint.exit_code == 2);
    CHECK_THAT(badint.out, ContainsSubstring("expected an integer"));
}
