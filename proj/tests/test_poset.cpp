#include "doctest.h"
#include "oracles.hpp"
#include "strata/poset.hpp"

using namespace strata;

TEST_CASE("face and degeneracy on words") {
    Poset p = Poset::chain(3);
    CHECK(face({0, 1, 1}, 2) == ColorWord{0, 1});
    CHECK(face({0, 0, 1}, 0) == ColorWord{0, 1});
    CHECK(face({0, 1, 2}, 1) == ColorWord{0, 2});
    CHECK(degeneracy({0, 1}, 0) == ColorWord{0, 0, 1});
    CHECK(degeneracy({0}, 0) == ColorWord{0, 0});
    CHECK(degeneracy({0, 1}, 1) == ColorWord{0, 1, 1});
    CHECK_THROWS(face({0, 1}, 2));
    CHECK_THROWS(face({0}, 0));
    CHECK_THROWS(degeneracy({0, 1}, 2));
    CHECK(format_word(p, {0, 1, 1}) == "[p0,p1,p1]");
    CHECK(parse_word(p, "[p0, p1,p2]") == ColorWord{0, 1, 2});
    CHECK_THROWS(parse_word(p, "[p1,p0]"));
}

TEST_CASE("non-degenerate support") {
    CHECK(nondegenerate_support({0, 0, 1}) == ColorWord{0, 1});
    CHECK(nondegenerate_support({0}) == ColorWord{0});
    CHECK(nondegenerate_support({0, 1, 1, 2}) == ColorWord{0, 1, 2});
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 5; ++len)
            for (auto& w : monotone_words(p, len)) {
                auto s = nondegenerate_support(w);
                CHECK(nondegenerate_support(s) == s);
                CHECK(is_strict(p, s));
            }
}

TEST_CASE("monotone words agree with the filtered enumeration") {
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 5; ++len) CHECK(monotone_words(p, len) == oracle::words(p, len));
}

TEST_CASE("simplicial identities on words, exhaustive") {
    long checked = 0;
    for (auto& p : oracle::posets_up_to(3))
        for (int len = 1; len <= 5; ++len)
            for (auto& w : monotone_words(p, len)) {
                const int n = len - 1;
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (n >= 2) CHECK(face(face(w, j), i) == face(face(w, i), j - 1));
                for (int j = 0; j <= n; ++j) {
                    auto s = degeneracy(w, j);
                    CHECK(is_monotone(p, s));
                    CHECK(face(s, j) == w);
                    CHECK(face(s, j + 1) == w);
                    for (int i = 0; i < j && n >= 1; ++i) CHECK(face(s, i) == degeneracy(face(w, i), j - 1));
                    for (int i = j + 2; i <= n + 1 && n >= 1; ++i) CHECK(face(s, i) == degeneracy(face(w, i - 1), j));
                    for (int i = 0; i <= j; ++i) CHECK(degeneracy(degeneracy(w, j), i) == degeneracy(degeneracy(w, i), j + 1));
                    ++checked;
                }
            }
    CHECK(checked > 0);
}

TEST_CASE("poset construction") {
    CHECK_THROWS(Poset({"a", "b"}, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Poset({"a", "a"}, {}));
    Poset v({"a", "b", "c"}, {{0, 2}, {1, 2}});
    CHECK(v.leq(0, 2));
    CHECK_FALSE(v.comparable(0, 1));
    Poset c({"x", "y", "z"}, {{0, 1}, {1, 2}});
    CHECK(c.leq(0, 2));
    CHECK(c.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(oracle::all_posets(3).size() == 19);
    CHECK(nerve_words(Poset::chain(3)).size() == 7);
}
