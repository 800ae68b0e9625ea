#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "strata/cli.hpp"

using namespace strata;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string fixture(const std::string& name) { return slurp(cli::fixtures_dir() + "/" + name + ".complex"); }

}  // namespace

TEST_CASE("fixtures of the example library equal the built-in complexes") {
    for (auto& name : example_names()) {
        CAPTURE(name);
        auto doc = parse_document(fixture(name));
        CHECK(emit_complex(doc.complex) == emit_complex(example(name).complex));
        CHECK(doc.complex->counts() == example(name).complex->counts());
    }
}

TEST_CASE("emit is canonical and round-trips") {
    for (const auto& entry : std::filesystem::directory_iterator(cli::fixtures_dir())) {
        const std::string path = entry.path().string();
        if (entry.path().stem() == "broken-identity") continue;
        CAPTURE(path);
        auto doc = parse_document(slurp(path));
        const std::string once = emit_document(doc);
        auto again = parse_document(once);
        CHECK(emit_document(again) == once);
        CHECK(again.pointing == doc.pointing);
        CHECK(again.map.has_value() == doc.map.has_value());
    }
    // generator order in the input does not matter
    const std::string shuffled =
        "strata-complex 1\nposet\n  element p0\n  element p1\n  cover p0 < p1\ngenerators\n"
        "  e01 [p0,p1] : @e1 @e0  # faces first\n  e1 [p1]\n  e0 [p0]\n";
    CHECK(emit_complex(parse_complex(shuffled)) == emit_complex(example("delta-p0p1").complex));
}

TEST_CASE("the broken fixture is rejected with a named witness") {
    try {
        parse_document(fixture("broken-identity"));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        CHECK(what.find("simplicial identity") != std::string::npos);
        CHECK(what.find("'t'") != std::string::npos);
    }
}

TEST_CASE("parse errors carry line and column") {
    auto expect = [](const std::string& text, int line, int column) {
        try {
            parse_document(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column == column);
        }
    };
    expect("", 1, 1);
    expect("strata-complex 2\n", 1, 16);
    expect("strata-complex 1\nposet\n  element p\ngenerators\n  a [q]\n", 5, 5);
    expect("strata-complex 1\nposet\n  element p\ngenerators\n  a [p]\n  e [p,p] : @a\n", 6, 13);
    expect("strata-complex 1\nposet\n  element p\ngenerators\n  a [p]\n  e [p,p] : @a @zz\n", 6, 16);
    expect("strata-complex 1\nposet\n  element p\n  element q\n  cover p < q\n  cover q < p\n", 6, 9);
    expect("strata-complex 1\ngenerators\n", 2, 1);
    expect("strata-complex 1\nposet\n  element p\nwhatever\n", 4, 1);
    expect("strata-complex 1\nposet\n  element p\ngenerators\n  a [p]\npointing @b\n", 6, 10);
}

TEST_CASE("pointing and map blocks") {
    auto doc = parse_document(fixture("hexagon-over-circle3"));
    REQUIRE(doc.pointing);
    REQUIRE(doc.map);
    CHECK(doc.map->target == "examples:circle3");
    auto target = cli::load_reference(doc.map->target).doc.complex;
    auto f = resolve_document_map(doc, target);
    auto gs = edge_path_pi1(doc.complex, doc.complex->parse_label(*doc.pointing).gen);
    auto gt = edge_path_pi1(target, target->of_dim(0)[0]);
    CHECK(cokernel_invariants(gs.group, gt.group, induced_by_map(f, gs, gt)) == std::vector<long>{2});
    ComplexDocument partial = doc;
    partial.map->images.pop_back();
    CHECK_THROWS_AS(resolve_document_map(partial, target), ValidationError);
}
