#include "doctest.h"
#include "oracles.hpp"
#include "strata/search.hpp"
#include "strata/subdivision.hpp"

using namespace strata;

namespace {

std::vector<int> coface_theta(int n, int k) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i) t.push_back(i < k ? i : i + 1);
    return t;
}

std::vector<int> codegeneracy_theta(int n, int k) {
    std::vector<int> t;
    for (int i = 0; i <= n + 1; ++i) t.push_back(i <= k ? i : i - 1);
    return t;
}

void check_naturality(const FilteredMap& f) {
    auto sx = subdivide(f.domain());
    auto sy = subdivide(f.codomain());
    auto sf = sd_map(*sx, *sy, f);
    CHECK_NOTHROW(sf.validate());
    CHECK(compose(f, last_vertex_map(*sx)).images() == compose(last_vertex_map(*sy), sf).images());
}

}  // namespace

TEST_CASE("subdivision counts match the chain oracle") {
    long compared = 0;
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 4; ++len)
            for (auto& w : monotone_words(p, len)) {
                auto sd = subdivide(standard_simplex(p, w));
                CHECK_NOTHROW(sd->complex->validate());
                auto counts = sd->complex->counts();
                CHECK(std::vector<long>(counts.begin(), counts.end()) == oracle::sd_counts(p, w));
                ++compared;
            }
    CHECK(compared > 100);
}

TEST_CASE("small subdivisions") {
    Poset p = Poset::chain(2);
    auto sd = subdivide(standard_simplex(p, {0, 1}));
    auto c = sd->complex->counts();
    CHECK(std::vector<long>(c.begin(), c.end()) == std::vector<long>{4, 3});
    auto naive = subdivide(standard_simplex(p, {0, 1}), SdMode::naive);
    auto cn = naive->complex->counts();
    CHECK(std::vector<long>(cn.begin(), cn.end()) == std::vector<long>{3, 2});
    std::multiset<int> colors;
    for (int g : naive->complex->of_dim(0)) colors.insert(naive->complex->gen(g).color[0]);
    CHECK(colors == std::multiset<int>{0, 1, 1});
    auto classical = subdivide(plain_simplex(2), SdMode::classical);
    auto cc = classical->complex->counts();
    CHECK(std::vector<long>(cc.begin(), cc.end()) == std::vector<long>{7, 12, 6});
    CHECK_NOTHROW(last_vertex_map(*classical).validate());
    CHECK_THROWS(parse_mode("barycentric"));
    CHECK(parse_mode(mode_name(SdMode::naive)) == SdMode::naive);
}

TEST_CASE("last vertex map is natural for faces and degeneracies") {
    for (auto& p : oracle::posets_up_to(2))
        for (int len = 1; len <= 4; ++len)
            for (auto& w : monotone_words(p, len)) {
                auto to = standard_simplex_sub(p, w);
                CHECK_NOTHROW(last_vertex_map(*subdivide(to.complex)).validate());
                const int n = len - 1;
                for (int k = 0; k <= n && n >= 1; ++k) {
                    auto from = standard_simplex_sub(p, face(w, k));
                    check_naturality(simplex_operator(from, to, coface_theta(n, k)));
                }
                if (len <= 3)
                    for (int k = 0; k <= n; ++k) {
                        auto from = standard_simplex_sub(p, degeneracy(w, k));
                        check_naturality(simplex_operator(from, to, codegeneracy_theta(n, k)));
                    }
            }
}

TEST_CASE("last vertex map pointwise") {
    Poset p = Poset::chain(2);
    const ColorWord w{0, 1, 1};
    auto sub = standard_simplex_sub(p, w);
    auto sd = subdivide(sub.complex);
    auto lv = last_vertex_map(*sd);
    for (int c = 0; c < sd->complex->size(); ++c) {
        if (sd->complex->gen(c).dim != 0) continue;
        auto g = global_chain(*sd, sub, c);
        const auto [s, q] = g[0];
        int best = -1;
        for (int i = 0; i < 3; ++i)
            if ((s >> i & 1u) && w[i] == q) best = i;
        auto img = lv.image(c);
        REQUIRE(img.dim == 0);
        CHECK(sub.mask[img.gen] == 1u << best);
    }
}

TEST_CASE("iterated subdivision") {
    Poset p = Poset::chain(2);
    auto x = standard_simplex(p, {0, 1});
    auto stages = subdivide_iterated(x, 2);
    REQUIRE(stages.size() == 2);
    CHECK(stages[1]->source == stages[0]->complex);
    auto lv = last_vertex_iterated(x, 2);
    CHECK_NOTHROW(lv.validate());
    CHECK(lv.domain() == stages[1]->complex);
    auto id = sd_map_iterated(x, x, identity_map(x), 2);
    CHECK(id.images() == identity_map(stages[1]->complex).images());
    CHECK(subdivide(x) == stages[0]);
}

TEST_CASE("subdivision commutes with disjoint union") {
    Poset p = Poset::chain(2);
    auto a = standard_simplex(p, {0, 1});
    auto b = horn(p, {0, 0, 1}, 1);
    auto u = disjoint_union(a, b);
    auto su = subdivide(u)->complex;
    auto sa = subdivide(a)->complex;
    auto sb = subdivide(b)->complex;
    auto ua = disjoint_union(sa, sb);
    auto [st, iso] = find_isomorphism(su, ua);
    CHECK(iso.has_value());
}

TEST_CASE("subdivision of a horn embeds") {
    Poset p = Poset::chain(2);
    for (auto& w : monotone_words(p, 3))
        for (int k = 0; k < 3; ++k) {
            auto h = horn_sub(p, w, k);
            auto s = standard_simplex_sub(p, w);
            auto inc = sub_inclusion(h, s);
            auto sinc = sd_map(*subdivide(h.complex), *subdivide(s.complex), inc);
            CHECK_NOTHROW(sinc.validate());
            CHECK(sinc.is_monomorphism());
        }
}

TEST_CASE("structural maps") {
    for (auto& p : oracle::posets_up_to(2))
        for (int len = 1; len <= 3; ++len)
            for (auto& w : monotone_words(p, len)) {
                const int n = len - 1;
                auto jn = structural_map(StructuralKind::j, n, p, w);
                CHECK(jn.map.images() == identity_map(jn.map.domain()).images());
                for (int k = 0; k <= n; ++k) {
                    auto jk = structural_map(StructuralKind::j, k, p, w);
                    CHECK_NOTHROW(jk.map.validate());
                    for (int l = k; l <= n; ++l) {
                        auto jl = structural_map_on(StructuralKind::j, l, jk.from, jk.to);
                        CHECK(compose(jk.map, jl).images() == jk.map.images());
                    }
                    auto s = structural_map(StructuralKind::sd_s, k, p, w);
                    auto op = simplex_operator(s.from, s.to, codegeneracy_theta(n, k));
                    CHECK(s.map.images() == sd_map(*subdivide(s.from.complex), *subdivide(s.to.complex), op).images());
                    if (n >= 1) {
                        auto d = structural_map(StructuralKind::sd_d, k, p, w);
                        auto fop = simplex_operator(d.from, d.to, coface_theta(n, k));
                        CHECK(d.map.images() == sd_map(*subdivide(d.from.complex), *subdivide(d.to.complex), fop).images());
                    }
                    if (k >= 1) {
                        auto r = structural_map(StructuralKind::r, k, p, w);
                        CHECK_NOTHROW(r.map.validate());
                        auto nr = structural_map_on(StructuralKind::r, k, r.from, r.to, SdMode::naive);
                        CHECK(functor_G(r.from, r.to, nr).images() == r.map.images());
                    }
                    auto nj = structural_map_on(StructuralKind::j, k, jk.from, jk.to, SdMode::naive);
                    CHECK(functor_G(jk.from, jk.to, nj).images() == jk.map.images());
                }
                auto sub = standard_simplex_sub(p, w);
                auto nid = identity_map(subdivide(sub.complex, SdMode::naive)->complex);
                CHECK(functor_G(sub, sub, nid).images() == identity_map(subdivide(sub.complex)->complex).images());
            }
}
