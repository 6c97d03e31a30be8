#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfcalc.hpp"

using namespace cfcalc;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    auto d = std::filesystem::temp_directory_path() / "cfcalc_test_cli";
    std::filesystem::create_directories(d);
    return d;
}

std::string write_fixture(const std::string& name) {
    auto p = scratch_dir() / (name + ".json");
    std::ofstream(p, std::ios::binary) << io::dump(io::to_json(fixtures::make(name).complex));
    return p.string();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("euler on a circle file") {
    auto r = run_cli({"euler", "--complex", write_fixture("circle"), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(io::parse_text(r.out) == io::json{{"euler", true}});
    CHECK(r.err.empty());

    auto p = run_cli({"euler", "--complex", write_fixture("path")});
    CHECK(p.code == 1);
    CHECK(p.out.find("euler: false") != std::string::npos);
}

TEST_CASE("completely-euler on ak-X fails with a witness") {
    auto r = run_cli({"completely-euler", "--complex", write_fixture("ak-X"), "--format", "json"});
    CHECK(r.code == 1);
    auto j = io::parse_text(r.out);
    CHECK(j.at("verdict") == false);
    CHECK_FALSE(j.at("failing_witnesses").empty());
}

TEST_CASE("integrate ones over the 2-sphere") {
    auto r = run_cli({"integrate", "--complex", write_fixture("sphere2"), "--function", "ones"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    auto j = run_cli({"integrate", "--complex", "fixture:sphere2", "--format", "json"});
    CHECK(j.out == "{\n  \"integral\": 2\n}\n");
}

TEST_CASE("operators and maps through the command line") {
    auto l = run_cli({"link", "--complex", "fixture:path", "--format", "json"});
    REQUIRE(l.code == 0);
    auto phi = io::function_from_json(io::parse_text(l.out), std::filesystem::path{});
    CHECK(phi == link_op(ConstructibleFunction::constant(fixtures::path(), 1)));

    auto d = run_cli({"dual", "--complex", "fixture:sphere2", "--format", "json"});
    CHECK(d.code == 0);

    auto la = run_cli({"link-along", "--complex", "fixture:path", "--set", R"([["b"]])", "--format", "json"});
    REQUIRE(la.code == 0);
    auto lphi = io::function_from_json(io::parse_text(la.out), std::filesystem::path{});
    CHECK(lphi.at(Simplex{"b"}) == 2);

    auto push = run_cli({"pushforward", "--map", "fixture:fold-map", "--format", "json"});
    REQUIRE(push.code == 0);
    auto pushed = io::function_from_json(io::parse_text(push.out), std::filesystem::path{});
    CHECK(pushed.at(Simplex{"0", "1"}) == 2);
    CHECK(pushed.at(Simplex{"1"}) == 2);
    CHECK(pushed.at(Simplex{"0"}) == 1);

    auto pull = run_cli({"pullback", "--map", "fixture:double-cover", "--format", "json"});
    CHECK(pull.code == 0);

    // map from a file
    auto mp = scratch_dir() / "fold.json";
    std::ofstream(mp, std::ios::binary) << io::dump(io::to_json(fixtures::fold_map()));
    CHECK(run_cli({"pushforward", "--map", mp.string()}).code == 0);
}

TEST_CASE("analysis commands") {
    CHECK(run_cli({"ak", "--complex", "fixture:sphere2"}).code == 0);
    CHECK(run_cli({"ak", "--complex", "fixture:ak-X"}).code == 1);
    CHECK(run_cli({"ak", "--complex", "fixture:ak-X", "--strat", "fixture:ak-X"}).code == 1);
    CHECK(run_cli({"ak-stratified", "--complex", "fixture:ak-X"}).code == 1);
    CHECK(run_cli({"ak-stratified", "--strat", "fixture:ak-Y"}).code == 0);
    CHECK(run_cli({"completely-euler", "--complex", "fixture:sphere3"}).code == 0);

    auto it = run_cli({"iterated-link", "--complex", "fixture:ak-Y", "--set", "vertex:a", "--format", "json"});
    REQUIRE(it.code == 0);
    auto j = io::parse_text(it.out);
    CHECK(j.at("divisibility").at("divisible") == true);

    CHECK(run_cli({"selftest"}).code == 0);
}

TEST_CASE("fixture command") {
    auto r = run_cli({"fixture", "sphere2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(io::complex_from_json(io::parse_text(r.out)) == fixtures::sphere_boundary(3));
    CHECK(run_cli({"fixture", "ak-X", "--kind", "strat", "--format", "json"}).code == 0);
    CHECK(run_cli({"fixture", "fold-map", "--kind", "map", "--format", "json"}).code == 0);
    CHECK(run_cli({"fixture", "fold-map", "--kind", "function"}).code == 0);
    CHECK(run_cli({"fixture", "nope"}).code == 2);
    CHECK(run_cli({"fixture", "circle", "--kind", "map"}).code == 2);
}

TEST_CASE("input errors exit 2 with diagnostics on the error stream") {
    auto missing = run_cli({"euler", "--complex", "/nonexistent/x.json"});
    CHECK(missing.code == 2);
    CHECK(missing.out.empty());
    CHECK_FALSE(missing.err.empty());

    auto bad = scratch_dir() / "bad.json";
    std::ofstream(bad, std::ios::binary) << "{\n  \"maximal_simplices\": [[\"a\", \"b\"]],\n  oops\n}\n";
    auto r = run_cli({"euler", "--complex", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"euler"}).code == 2);
    CHECK(run_cli({"euler", "--complex", "fixture:circle", "--format", "xml"}).code == 2);
    CHECK(run_cli({"link-along", "--complex", "fixture:path", "--set", R"([["a","b"]])"}).code == 2);
    CHECK(run_cli({"link-along", "--complex", "fixture:path", "--set", "skeleton-x"}).code == 2);
    CHECK(run_cli({"completely-euler", "--complex", "fixture:sphere3", "--function", "fixture:fold-map"}).code == 2);
    CHECK(run_cli({"ak", "--complex", "fixture:path"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("json output is byte-stable and --out writes a file") {
    auto a = run_cli({"ak", "--complex", "fixture:ak-X", "--format", "json"});
    auto b = run_cli({"ak", "--complex", "fixture:ak-X", "--format", "json"});
    CHECK(a.out == b.out);
    CHECK(a.out.back() == '\n');

    auto target = scratch_dir() / "out.json";
    std::filesystem::remove(target);
    auto c = run_cli({"ak", "--complex", "fixture:ak-X", "--format", "json", "--out", target.string()});
    CHECK(c.code == a.code);
    CHECK(c.out.empty());
    CHECK(slurp(target) == a.out);

    auto v = run_cli({"euler", "--complex", "fixture:circle", "--verbose"});
    CHECK_FALSE(v.err.empty());
}

TEST_CASE("golden reports") {
    const std::filesystem::path golden(CFCALC_GOLDEN_DIR);
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"circle.json", {"completely-euler", "--complex", "fixture:circle", "--format", "json"}},
        {"sphere2.json", {"completely-euler", "--complex", "fixture:sphere2", "--format", "json"}},
        {"ak-X.json", {"completely-euler", "--complex", "fixture:ak-X", "--format", "json"}},
        {"fold-map.json", {"pushforward", "--map", "fixture:fold-map", "--format", "json"}},
    };
    for (const auto& [file, args] : cases) {
        INFO(file);
        CHECK(run_cli(args).out == slurp(golden / file));
    }
}
