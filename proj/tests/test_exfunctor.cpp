#include "doctest.h"
#include "oracles.hpp"
#include "strata/exfunctor.hpp"

using namespace strata;

TEST_CASE("Ex levels") {
    Poset p = Poset::chain(2);
    auto x = standard_simplex(p, {0, 1});
    for (int k = 0; k <= 2; ++k) {
        CHECK(ex_level(x, {0}, k).elements.size() == 1);
        CHECK(ex_level(x, {1}, k).elements.size() == 1);
    }
    auto l1 = ex_level(x, {0, 1}, 1);
    CHECK(static_cast<long>(l1.elements.size()) == oracle::map_count(*l1.domain, *x));
    auto l0 = ex_level(x, {0, 1}, 0);
    CHECK(l0.elements.size() == 1);
    CHECK(ex_level(x, {0, 0}, 0).elements.size() == 1);
    auto e = ex_level(x, {0, 0, 1}, 1);
    CHECK(static_cast<long>(e.elements.size()) == oracle::map_count(*e.domain, *x));
}

TEST_CASE("faces of Ex elements land in the face levels") {
    Poset p = Poset::chain(2);
    auto circle = graph_complex(p, {"a", "b", "c"}, {0, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
    for (auto& w : monotone_words(p, 2)) {
        auto level = ex_level(circle, w, 1);
        CHECK(static_cast<long>(level.elements.size()) == oracle::map_count(*level.domain, *circle));
        for (int i = 0; i < 2; ++i) {
            auto fl = ex_level(circle, face(w, i), 1);
            for (auto& el : level.elements) CHECK(fl.find(ex_face(el, w, i)).has_value());
        }
        for (int i = 0; i < 2; ++i) {
            auto dl = ex_level(circle, degeneracy(w, i), 1);
            for (auto& el : level.elements) {
                auto s = ex_degeneracy(el, w, i);
                CHECK(dl.find(s).has_value());
                CHECK(ex_face(s, degeneracy(w, i), i).images() == el.images());
                CHECK((ex_degeneracy_mask(s, degeneracy(w, i)) & (1u << i)) != 0);
            }
        }
    }
}

TEST_CASE("iota") {
    Poset p = Poset::chain(2);
    auto x = standard_simplex(p, {0, 0, 1});
    for (int g = 0; g < x->size(); ++g) {
        auto s = x->ref(g);
        const auto w = x->color(s);
        auto e = iota(x, s);
        CHECK_NOTHROW(e.validate());
        if (is_strict(p, w) || nondegenerate_support(w).size() == 1) CHECK(gamma_degree(e, w) == 0);
        CHECK(ex_degeneracy_mask(e, w) == 0);
        for (int i = 0; i < static_cast<int>(w.size()) && w.size() > 1; ++i)
            CHECK(ex_face(e, w, i).images() == iota(x, x->face(s, i)).images());
        for (int h = 0; h < g; ++h)
            if (x->color(x->ref(h)) == w) CHECK(iota(x, x->ref(h)).images() != e.images());
    }
    auto v = standard_simplex(p, {1});
    auto iv = iota(v, v->ref(0), 2);
    CHECK(iv.domain()->size() == 1);
    // naturality along the inclusion of a face
    auto face_sub = standard_simplex_sub(p, {0, 1});
    auto full = standard_simplex_sub(p, {0, 0, 1});
    auto inc = simplex_operator(face_sub, full, std::vector<int>{1, 2});
    for (int g = 0; g < face_sub.complex->size(); ++g) {
        auto s = face_sub.complex->ref(g);
        CHECK(compose(inc, iota(face_sub.complex, s)).images() == iota(full.complex, inc.apply(s)).images());
    }
}

TEST_CASE("gamma filtration") {
    Poset p = Poset::chain(2);
    auto x = standard_simplex(p, {0, 0, 1});
    for (int len = 1; len <= 3; ++len)
        for (auto& w : monotone_words(p, len)) {
            auto level = ex_level(x, w, 1);
            auto g = gamma_filtration(level);
            CHECK(g.monotone);
            CHECK(g.top_is_everything);
            long zero = 0;
            for (int d : g.degree) zero += d == 0;
            const long xs = count_maps(canonical_simplex(p, w).complex, x);
            if (nondegenerate_support(w).size() == 1) CHECK(zero == xs);
            if (is_strict(p, w)) CHECK(zero >= xs);
        }
    // Γ^0 is larger than ι(X) on [p0,p1]: the vertex (e01,p0) is free
    auto level = ex_level(x, {0, 1}, 1);
    long zero = 0;
    for (int d : gamma_filtration(level).degree) zero += d == 0;
    CHECK(zero == 3);
    CHECK(count_maps(canonical_simplex(p, {0, 1}).complex, x) == 2);
}

TEST_CASE("iota leaves gamma zero on a repeated color followed by another") {
    Poset p = Poset::chain(2);
    const ColorWord w{0, 0, 1};
    auto x = standard_simplex(p, w);
    const int top = x->of_dim(2)[0];
    auto e = iota(x, x->ref(top));
    CHECK_FALSE(in_gamma(e, w, 0));
    CHECK(gamma_degree(e, w) == 2);
    const auto& sub = canonical_simplex(p, w);
    auto sd = subdivide(sub.complex);
    auto j0 = structural_map_on(StructuralKind::j, 0, sub, sub);
    // ({e0,e2},p0) goes to e0 under ι, its j^0 image ({e0,e1,e2},p0) goes to e1
    auto sv = sd->locate(sub.complex->ref(*sub.gen(0b111)), SdChain{{0b101, 0}});
    REQUIRE(sv.dim == 0);
    CHECK(sub.mask[e.image(sv.gen).gen] == 0b001);
    CHECK(sub.mask[e.image(j0.image(sv.gen).gen).gen] == 0b010);
}

namespace {

long run_fillers(const ComplexPtr& x, const Poset& p, const ColorWord& w, long limit) {
    long done = 0;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        if (!is_admissible(w, k)) continue;
        auto h = horn_inclusion(p, w, k);
        auto sdl = subdivide(h.horn.complex);
        auto [st, maps] = enumerate_maps(sdl->complex, x);
        for (auto& lam : maps) {
            if (done >= limit) return done;
            auto f = ex_filler(h, lam);
            CHECK_NOTHROW(validate_ex_filler(h, lam, f));
            ++done;
        }
    }
    return done;
}

}  // namespace

TEST_CASE("Ex fillers") {
    Poset p = Poset::chain(2);
    auto v = standard_simplex(p, {0});
    CHECK(run_fillers(v, p, {0, 0}, 10) == 2);
    auto x = standard_simplex(p, {0, 0, 1});
    CHECK(run_fillers(x, p, {0, 0, 1}, 40) > 0);
    CHECK(run_fillers(x, p, {0, 1, 1}, 20) > 0);
    // a genuine horn in X: λ factors through ι
    auto h = horn_inclusion(p, {0, 0, 1}, 0);
    auto sdl = subdivide(h.horn.complex);
    auto into_x = sub_inclusion(h.horn, standard_simplex_sub(p, {0, 0, 1}));
    auto lam = compose(into_x, last_vertex_map(*sdl));
    auto lam_x = FilteredMap(sdl->complex, x, lam.images());
    auto f = ex_filler(h, lam_x);
    CHECK_NOTHROW(validate_ex_filler(h, lam_x, f));
}
