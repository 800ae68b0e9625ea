#include "doctest.h"
#include "strata/constructions.hpp"

using namespace strata;

namespace {

ComplexPtr rp2() {
    std::vector<std::vector<int>> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                    {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    return ordered_complex(Poset::point(), {"a", "b", "c", "d", "e", "f"}, ColorWord(6, 0), f);
}

std::vector<long> pi1(const ComplexPtr& k, bool reverse = false) {
    return abelian_invariants(edge_path_pi1(k, k->of_dim(0)[0], reverse).group);
}

}  // namespace

TEST_CASE("edge-path groups") {
    CHECK(pi1(plain_circle(3)) == std::vector<long>{0});
    CHECK(pi1(example("torus7").complex) == std::vector<long>{0, 0});
    CHECK(pi1(rp2()) == std::vector<long>{2});
    CHECK(pi1(filtered_cone(plain_circle(3), 0)).empty());
    CHECK(pi1(standard_simplex(Poset::point(), {0, 0, 0})).empty());
    for (auto& k : {plain_circle(4), example("torus7").complex, rp2(), example("pinched_torus").complex})
        CHECK(pi1(k) == pi1(k, true));
    auto two = disjoint_union(plain_circle(3), standard_simplex(Poset::point(), {0}));
    CHECK(edge_path_pi1(two, two->of_dim(0).back()).group.generators == 0);
    CHECK_THROWS(edge_path_pi1(two, two->of_dim(1)[0]));
}

TEST_CASE("induced homomorphisms") {
    auto cover = circle_cover(3, 2);
    auto gs = edge_path_pi1(cover.domain(), cover.domain()->of_dim(0)[0]);
    auto gt = edge_path_pi1(cover.codomain(), cover.image(cover.domain()->of_dim(0)[0]).gen);
    auto im = induced_by_map(cover, gs, gt);
    CHECK(cokernel_invariants(gs.group, gt.group, im) == std::vector<long>{2});
    CHECK(kernel_invariants(gs.group, gt.group, im).empty());
    auto c = plain_circle(3);
    auto g = edge_path_pi1(c, c->of_dim(0)[0]);
    CHECK(cokernel_invariants(g.group, g.group, induced_by_map(identity_map(c), g, g)).empty());
}

TEST_CASE("sπ_0 of a representable is one class per word") {
    auto x = standard_simplex(Poset::chain(2), {0, 1});
    for (int k = 0; k <= 2; ++k) {
        auto d = spi0(x, k);
        REQUIRE(d.values.size() == 3);
        for (auto& v : d.values) CHECK(v.classes == 1);
        CHECK(d.stable == (k > 0));
        CHECK(d.transitions.size() == 2);
    }
}

TEST_CASE("sπ_0 of the pinched torus and of the glued spheres") {
    auto a = example("pinched_torus").complex;
    auto b = example("glued_spheres").complex;
    for (int k = 0; k <= 2; ++k) {
        auto da = spi0(a, k), db = spi0(b, k);
        CHECK(da.values[da.find({0})].classes == 1);
        CHECK(da.values[da.find({1})].classes == 1);
        CHECK(da.values[da.find({0, 1})].classes == 2);
        CHECK(db.values[db.find({0})].classes == 2);
        CHECK(db.values[db.find({1})].classes == 2);
        CHECK(db.values[db.find({0, 1})].classes == 4);
        if (k > 0) {
            CHECK(da.stable);
            CHECK(db.stable);
        }
        // every singular class of B meets every regular class through exactly one path class
        for (auto& t : db.transitions) {
            std::vector<int> hit(2, 0);
            for (int c : t.class_map) ++hit[c];
            CHECK(hit == std::vector<int>{2, 2});
        }
        for (auto& t : da.transitions) CHECK(t.class_map == std::vector<int>{0, 0});
        CHECK(compare_diagrams(da, db).verdict == "distinguished");
        CHECK(compare_diagrams(da, da).verdict == "isomorphic-on-abelianized-invariants");
    }
}

TEST_CASE("sπ_1 tower") {
    auto p = Poset::point();
    auto v = standard_simplex(p, {0});
    auto r = spi1_tower(v, simplex_pointing(v, v->ref(0)), {0}, 1);
    CHECK(r.invariants.empty());
    CHECK(r.stable);
    auto c = plain_circle(3);
    for (int k = 0; k <= 1; ++k) {
        auto rc = spi1_tower(c, simplex_pointing(c, c->ref(c->of_dim(0)[0])), {0}, k);
        CHECK(rc.invariants == std::vector<long>{0});
        CHECK(rc.stable == (k > 0));
    }
    auto seg = standard_simplex(Poset::chain(2), {0, 1});
    auto d = spi1(seg, simplex_pointing(seg, seg->ref(seg->of_dim(1)[0])), 1);
    REQUIRE(d.values.size() == 3);
    for (auto& val : d.values) CHECK(val.invariants.empty());
    CHECK(d.transitions.size() == 2);
}

TEST_CASE("homotopic pointings give equal sπ_1 invariants") {
    auto c = plain_circle(3);
    const auto& vs = c->of_dim(0);
    auto p0 = simplex_pointing(c, c->ref(vs[0]));
    auto p1 = simplex_pointing(c, c->ref(vs[1]));
    REQUIRE(are_homotopic(p0.phi, p1.phi).homotopic);
    CHECK(spi1_tower(c, p0, {0}, 1).invariants == spi1_tower(c, p1, {0}, 1).invariants);
    auto a = example("pinched_torus").complex;
    std::vector<int> edges;
    for (int e : a->of_dim(1))
        if (a->gen(e).color == ColorWord{0, 1}) edges.push_back(e);
    REQUIRE(edges.size() == 6);
    for (int e : edges) {
        auto pe = simplex_pointing(a, a->ref(e));
        auto pf = simplex_pointing(a, a->ref(edges[0]));
        if (!are_homotopic(pe.phi, pf.phi).homotopic) continue;
        CHECK(spi1_tower(a, pe, {0, 1}, 0).invariants == spi1_tower(a, pf, {0, 1}, 0).invariants);
    }
}

TEST_CASE("homotopic maps induce equal maps on sπ_0") {
    auto x = standard_simplex(Poset::chain(2), {0, 1});
    auto a = example("pinched_torus").complex;
    auto [st, maps] = enumerate_maps(x, a);
    REQUIRE(maps.size() == 6);
    for (int k = 0; k <= 1; ++k)
        for (auto& f : maps)
            for (auto& g : maps) {
                const bool h = are_homotopic(f, g).homotopic;
                const bool same = spi0_induced(f, k) == spi0_induced(g, k);
                if (h) CHECK(same);
            }
}

TEST_CASE("degenerate words reduce to their support") {
    auto a = example("pinched_torus").complex;
    const Poset& P = a->poset();
    for (int k = 0; k <= 1; ++k)
        for (const ColorWord& w : {ColorWord{0, 0}, ColorWord{0, 1, 1}, ColorWord{0, 0, 1}, ColorWord{1, 1}}) {
            auto full = spi0_level(a, w, k);
            auto supp = nondegenerate_support(w);
            auto base = spi0_level(a, supp, k);
            CHECK(full.classes == base.classes);
            // precomposition with the collapse Δ^w -> Δ^supp is a bijection on classes
            std::vector<int> theta;
            for (size_t i = 0, j = 0; i < w.size(); ++i) {
                if (i > 0 && w[i] != w[i - 1]) ++j;
                theta.push_back(static_cast<int>(j));
            }
            auto op = ex_operator(P, supp, theta, k);
            std::vector<int> hit(full.classes, 0);
            for (size_t e = 0; e < base.elements.size(); ++e) ++hit[*full.class_of(compose(base.elements[e], op))];
            for (int h : hit) CHECK(h > 0);
        }
}

TEST_CASE("assembled sπ_1 diagrams") {
    auto cyl = assemble_spi(*example("cylinder").bundle);
    auto moe = assemble_spi(*example("moebius").bundle);
    for (auto& v : cyl.values) CHECK(v.invariants == std::vector<long>{0});
    auto cmp = compare_diagrams(cyl, moe);
    CHECK(cmp.verdict == "distinguished");
    CHECK(cmp.witness.rfind("cokernel [] vs [2]", 0) == 0);
    CHECK(compare_diagrams(moe, cyl).witness.rfind("cokernel [2] vs []", 0) == 0);
    CHECK(compare_diagrams(cyl, cyl).verdict == "isomorphic-on-abelianized-invariants");
    auto a = assemble_spi(*example("solid_torus_pair_a").bundle);
    auto b = assemble_spi(*example("solid_torus_pair_b").bundle);
    CHECK(a.values[a.find({0, 1})].invariants == std::vector<long>{0, 0});
    CHECK(b.values[b.find({0, 1})].invariants == std::vector<long>{0, 0});
    auto cab = compare_diagrams(a, b);
    CHECK(cab.verdict == "distinguished");
    CHECK(cab.witness.rfind("cokernel [] vs [2]", 0) == 0);
}

TEST_CASE("tower sπ_0 agrees with the assembled diagram") {
    for (const char* name : {"cylinder", "moebius"}) {
        const auto& ex = example(name);
        auto assembled = assemble_spi(*ex.bundle, 0);
        auto tower = spi0(ex.complex, 2);
        CHECK(tower.stable);
        CHECK(compare_diagrams(assembled, tower).verdict == "isomorphic-on-abelianized-invariants");
    }
}
