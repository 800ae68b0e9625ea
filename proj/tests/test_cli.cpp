#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "strata/cli.hpp"

using namespace strata;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("compare distinguishes the cylinder from the Moebius strip") {
    auto r = run({"compare", "examples:cylinder", "examples:moebius"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verdict: distinguished"));
    CHECK(has(r.out, "cokernel [] vs [2]"));
    auto j = nlohmann::json::parse(run({"compare", "examples:moebius", "examples:cylinder", "--format", "json"}).out);
    CHECK(j["verdict"] == "distinguished");
    CHECK(has(j["witness"].get<std::string>(), "cokernel [2] vs []"));
}

TEST_CASE("check-fibrant on the horn prints a witness") {
    auto r = run({"check-fibrant", "examples:horn-p0p0p1-1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verdict: not fibrant"));
    CHECK(has(r.out, "witness: horn [p0,p0,p1] at 1, no filler for e0->@e0 e01->@e01 e1->@e1 e12->@e12 e2->@e2"));
    auto ok = run({"check-fibrant", "fixtures:delta-p", "--dim-bound", "3"});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "verdict: fibrant up to D"));
}

TEST_CASE("subdivide the segment") {
    auto r = run({"subdivide", "--mode", "filtered", "fixtures:delta-p0p1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "counts: 4/3\n"));
    auto back = parse_complex(r.out.substr(r.out.find('\n') + 1));
    CHECK(back->counts() == std::vector<int>{4, 3});
    auto j = nlohmann::json::parse(run({"subdivide", "fixtures:delta-p0p1", "--format", "json", "--iterations", "2"}).out);
    CHECK(j["complex"]["counts"] == nlohmann::json::array({8, 7}));
    CHECK(has(run({"subdivide", "fixtures:delta-p0p1", "--format", "dot"}).out, "digraph complex"));
}

TEST_CASE("spi0 output formats") {
    auto r = run({"spi0", "examples:glued_spheres", "--stage", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "[p0,p1]: 4 classes, stable"));
    CHECK(has(r.out, "evidence, not proof"));
    auto j = nlohmann::json::parse(run({"spi0", "examples:pinched_torus", "--format", "json", "--stage", "1"}).out);
    CHECK(j["diagram"]["values"][2]["classes"] == 2);
    CHECK(has(run({"spi0", "examples:pinched_torus", "--format", "dot", "--stage", "0"}).out, "\"[p0,p1]#1\""));
}

TEST_CASE("spi1 routes") {
    auto a = run({"spi1", "examples:solid_torus_pair_b"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "[p0,p1]: [0,0]"));
    CHECK(has(a.out, "cokernel [2]"));
    auto t = run({"spi1", "fixtures:hexagon-over-circle3", "--stage", "1"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "[p]: [0], stable"));
    CHECK(run({"spi1", "fixtures:circle3", "--route", "assembled"}).code == 1);
}

TEST_CASE("ex levels and sampled fillers") {
    auto r = run({"ex", "fixtures:delta-p0p1", "--stage", "1", "--word", "[p0,p1]"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "[p0,p1]: 1 elements, 1 non-degenerate"));
    auto f = run({"ex", "fixtures:delta-p0p0p1", "--fillers", "5", "--seed", "3"});
    CHECK(f.code == 0);
    CHECK(has(f.out, "fillers: 5 of 5 valid"));
    CHECK(run({"ex", "fixtures:delta-p0p0p1", "--fillers", "5", "--seed", "3"}).out == f.out);
}

TEST_CASE("anodyne presentations") {
    auto g = run({"gen-fsae", "--word", "[p0,p0,p1]", "--k", "1"});
    CHECK(g.code == 0);
    CHECK(has(g.out, "pair "));
    auto v = run({"verify-fsae", "--word", "[p0,p0,p1]", "--k", "1"});
    CHECK(v.code == 0);
    CHECK(has(v.out, "verdict: ok"));
    auto e = run({"verify-fsae", "fixtures:circle3", "--dim-bound", "2"});
    CHECK(e.code == 0);
    CHECK(has(e.out, "verdict: ok"));
    auto bad = run({"verify-fsae", "fixtures:delta-p0p0p1", "--dim-bound", "2"});
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "condition: bijection"));
    CHECK(run({"gen-fsae", "--word", "[p0,p0,p1]", "--k", "0"}).code == 0);
    CHECK(run({"gen-fsae", "--word", "[p0,p1,p1]", "--k", "0"}).code == 1);
}

TEST_CASE("examples verb") {
    CHECK(has(run({"examples", "--list"}).out, "pinched_torus"));
    auto e = run({"examples", "--emit", "circle3"});
    CHECK(e.code == 0);
    CHECK(emit_complex(parse_complex(e.out)) == emit_complex(example("circle3").complex));
    CHECK(run({"examples", "--emit", "nope"}).code == 1);
    CHECK(run({"examples"}).code == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"spi0"}).code == 1);
    CHECK(run({"spi0", "fixtures:no-such-fixture"}).code == 1);
    CHECK(run({"subdivide", "fixtures:broken-identity"}).code == 1);
    CHECK(run({"spi0", "examples:moebius", "--budget", "5"}).code == 2);
    CHECK(run({"spi1", "fixtures:circle3", "--stage", "1", "--budget", "5"}).code == 2);
    CHECK(run({"ex", "examples:moebius", "--stage", "2", "--budget", "5"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    auto a = run({"spi0", "examples:pinched_torus", "--stage", "1", "--format", "json"});
    auto b = run({"spi0", "examples:pinched_torus", "--stage", "1", "--format", "json"});
    CHECK(a.out == b.out);
}
