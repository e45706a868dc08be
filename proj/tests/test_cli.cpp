#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "dexact/session.hpp"

using namespace dexact;
using json = nlohmann::json;

namespace {

std::string bin() {
    const char* b = std::getenv("DEXACT_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string data(const std::string& name) {
    const char* d = std::getenv("DEXACT_DATA");
    REQUIRE(d != nullptr);
    return std::string(d) + "/" + name;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& text) {
    std::string path = std::string("/tmp/cli_case_") + std::to_string(rand()) + ".alg";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fwrite(text.data(), 1, text.size(), f);
    fclose(f);
    return path;
}

const char* kSample = R"(# sample
[quiver]
vertices 3
arrow a: 1 -> 2
arrow b: 2 -> 3

[relations]
b*a = 0

[field]
rational

[subcat T]
dim (1,1,0)
dim (0,1,1)
dim (0,0,1)
dim (1,0,0)

[config]
d = 2
ambient = dct T
dim_cap = 20
seed = 7
)";

} // namespace

TEST_CASE("the sample file parses into the expected structure") {
    AlgFile f = parse_alg_text(kSample);
    CHECK(f.quiver.n_vertices == 3);
    REQUIRE(f.quiver.arrows.size() == 2);
    CHECK(f.quiver.arrows[0].name == "a");
    REQUIRE(f.relations.size() == 1);
    REQUIRE(f.relations[0].terms.size() == 1);
    CHECK(f.relations[0].terms[0].second.arrows == std::vector<std::size_t>{0, 1});
    CHECK(f.field == Field::rational());
    REQUIRE(f.subcats.size() == 1);
    CHECK(f.subcats[0].name == "T");
    CHECK(f.subcats[0].dim_selectors.size() == 4);
    CHECK(f.d == 2);
    CHECK(f.ambient.kind == "dct");
    CHECK(f.ambient.t_name == "T");
    CHECK(f.dim_cap == 20);
    CHECK(f.seed == 7);
}

TEST_CASE("relations accept signs and fractional coefficients") {
    std::string text = R"(
[quiver]
vertices 3
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 1 -> 2

[relations]
b*a - 1/2 * b*c = 0
-b*c + b*a = 0
)";
    AlgFile f = parse_alg_text(text);
    REQUIRE(f.relations.size() == 2);
    REQUIRE(f.relations[0].terms.size() == 2);
    CHECK(f.relations[0].terms[0].first == 1);
    CHECK(f.relations[0].terms[1].first == mpq_class(-1, 2));
    CHECK(f.relations[1].terms[0].first == -1);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_alg_text(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("[quiver]\nvertices 2\narrow a: 1 -> 5\n", 3);          // bad vertex
    expect_line("[quiver]\nvertices 2\narrow a: 1 -> 2\nnope\n", 4);    // bad quiver line
    expect_line("[quiver]\nvertices 2\narrow a: 1 -> 2\n[relations]\na*a = 0\n", 5); // not composable
    expect_line("[bogus]\n", 1);
    expect_line("stray\n", 1);
}

TEST_CASE("session construction wires subcategories and the ambient") {
    Session s = build_session(parse_alg_text(kSample));
    CHECK(s.catalog.size() == 5);
    CHECK(s.subcat("T").size() == 4);
    CHECK(s.ambient.kind == AmbientStructure::Kind::DClusterTilting);
    CHECK(s.ambient.d == 2);
    CHECK_THROWS_AS(s.subcat("missing"), ParseError);
    CHECK(object_by_dims(s, {0, 1, 0}).dims() == std::vector<std::size_t>{0, 1, 0});
    CHECK_THROWS_AS(object_by_dims(s, {9, 9, 9}), ParseError);
}

TEST_CASE("torsion ambient configuration builds") {
    std::string text = std::string(kSample) + "\n[subcat U]\ndim (0,1,1)\ndim (0,0,1)\n";
    // rewrite the ambient line by appending a config override is not
    // supported; build a fresh file instead
    std::string torsion = R"(
[quiver]
vertices 3
arrow a: 1 -> 2
arrow b: 2 -> 3

[relations]
b*a = 0

[subcat T]
dim (1,1,0)
dim (0,1,1)
dim (0,0,1)
dim (1,0,0)

[subcat U]
dim (0,1,1)
dim (0,0,1)

[config]
d = 2
ambient = torsion U T
)";
    Session s = build_session(parse_alg_text(torsion));
    CHECK(s.ambient.kind == AmbientStructure::Kind::DTorsionClass);
    REQUIRE(s.ambient.inner != nullptr);
    CHECK(s.ambient.inner->kind == AmbientStructure::Kind::DClusterTilting);
}

TEST_CASE("catalog command emits the catalog as structured output") {
    RunResult r = run("catalog --config " + data("ka2.alg") + " --format structured");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["check"] == "catalog");
    CHECK(j["objects"].size() == 3);
    CHECK(j["hom_dims"].size() == 3);
}

TEST_CASE("index command reports the classical index") {
    RunResult r = run("index --config " + data("ka2.alg") +
                      " --subcat proj --object \"(1,0)\" --format structured");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["resolution_terms"].size() == 2);
    CHECK(j["index"] == json::array({"1", "-1"}));
    CHECK(j["relative_rank"] == 2);
    REQUIRE(j["caveats"].size() == 1);
    CHECK(j["caveats"][0] == "relative to enumerated relations");
}

TEST_CASE("verify commands exit zero on the bundled examples") {
    CHECK(run("verify --which theorem-a --subcat proj --config " + data("ka2.alg")).exit_code == 0);
    CHECK(run("verify --which thm11 --subcat T --config " + data("aus_ka2.alg")).exit_code == 0);
}

TEST_CASE("failing verification exits with code 1") {
    RunResult r = run("verify --which gen --subcat s1 --config " + data("ka2.alg"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("parse failures exit with code 2") {
    std::string bad = write_temp("this is not a config\n");
    RunResult r = run("catalog --config " + bad);
    CHECK(r.exit_code == 2);
    std::remove(bad.c_str());
    CHECK(run("catalog --config /nonexistent.alg").exit_code == 2);
}

TEST_CASE("infinite-dimensional algebras exit with code 3") {
    std::string loop = write_temp("[quiver]\nvertices 1\narrow l: 1 -> 1\n");
    RunResult r = run("catalog --config " + loop);
    CHECK(r.exit_code == 3);
    std::remove(loop.c_str());
}

TEST_CASE("resolution failures exit with code 4") {
    // d = 1 but the algebra has global dimension 2: the simple at the
    // source has no length-one projective resolution
    std::string cfg = write_temp(R"(
[quiver]
vertices 3
arrow a: 1 -> 2
arrow b: 2 -> 3

[relations]
b*a = 0

[subcat proj]
dim (1,1,0)
dim (0,1,1)
dim (0,0,1)

[config]
d = 1
ambient = module
)");
    RunResult r = run("index --config " + cfg + " --subcat proj --object \"(1,0,0)\"");
    CHECK(r.exit_code == 4);
    std::remove(cfg.c_str());
}

TEST_CASE("structured reports round-trip through the json parser") {
    RunResult r = run("verify --which schanuel --config " + data("ka2.alg") + " --format structured");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["instances"].size() >= 100);
    for (const auto& inst : j["instances"]) CHECK(inst["ok"] == true);
}

TEST_CASE("DEXACT_THREADS is validated and echoed") {
    std::string cmd = "DEXACT_THREADS=4 " + bin() + " catalog --config " + data("ka2.alg") +
                      " --format structured 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    json j = json::parse(out);
    CHECK(j["threads"] == 4);
}
