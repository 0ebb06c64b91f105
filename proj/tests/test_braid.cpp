// Braid words, parsing, closures and the word-level helpers.

#include "braidforge/braid.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace braidforge;

namespace {
std::mt19937 rng(7151);

BraidWord random_word(int strands, int len) {
    std::uniform_int_distribution<int> dg(1, strands - 1);
    std::uniform_int_distribution<int> ds(0, 1);
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) {
        int g = dg(rng);
        ls.push_back(ds(rng) ? g : -g);
    }
    return BraidWord(strands, std::move(ls));
}
} // namespace

TEST_CASE("parse braid text forms") {
    CHECK(parse_braid("(3,0,3;0,-1,0)", 4) == BraidWord(4, {1, 1, 1, 3, 3, 3, -2}));
    CHECK(parse_braid("1", 2) == BraidWord(2, {1}));
    CHECK(parse_braid("(6,-1)", 3) == BraidWord(3, {1, 1, 1, 1, 1, 1, -2}));
    CHECK(parse_braid("1,1,1,3,3,3,-2", 4) == BraidWord(4, {1, 1, 1, 3, 3, 3, -2}));
    CHECK(parse_braid("1 -2 1 -2", 3) == BraidWord(3, {1, -2, 1, -2}));
    CHECK(parse_braid("", 3) == BraidWord(3, {}));
    CHECK_THROWS_AS(parse_braid("3", 3), domain_error);
    CHECK_THROWS_AS(parse_braid("x,1", 3), domain_error);
    CHECK_THROWS_AS(parse_braid("0", 4), domain_error);
}

TEST_CASE("writhe") {
    CHECK(writhe(BraidWord(4, {1, 1, 1, 3, 3, 3, -2})) == 5);
    CHECK(writhe(BraidWord(3, {})) == 0);
    CHECK(writhe(delta(4)) == 6);
    BraidWord a = random_word(4, 11), b = random_word(4, 7);
    CHECK(writhe(compose(a, b)) == writhe(a) + writhe(b));
}

TEST_CASE("closure info") {
    CHECK(closure_info(BraidWord(3, {})).components == 3);
    CHECK(closure_info(parse_braid("(6,-1)", 3)).components == 2);
    CHECK(closure_info(BraidWord(4, {1, 2, 3})).is_knot());
}

TEST_CASE("delta, compose, power") {
    CHECK(delta(4) == BraidWord(4, {1, 2, 3, 1, 2, 1}));
    CHECK(power(BraidWord(2, {1}), -1) == BraidWord(2, {-1}));
    CHECK(writhe(power(delta(4), 2)) == 12);
    CHECK_THROWS_AS(compose(BraidWord(3, {1}), BraidWord(4, {1})), domain_error);

    // delta induces the order-reversing permutation; delta^2 is pure
    for (int n = 2; n <= 6; ++n) {
        auto p = induced_permutation(delta(n));
        for (int i = 0; i < n; ++i) CHECK(p[size_t(i)] == n - 1 - i);
        auto p2 = induced_permutation(power(delta(n), 2));
        for (int i = 0; i < n; ++i) CHECK(p2[size_t(i)] == i);
    }

    // composing with delta^2 never changes the component count
    for (int t = 0; t < 50; ++t) {
        BraidWord w = random_word(4, int(rng() % 9));
        CHECK(closure_info(compose(w, power(delta(4), 2))).components ==
              closure_info(w).components);
    }
}

TEST_CASE("sigma3 -> sigma1 projection") {
    CHECK(project_sigma3_to_sigma1(BraidWord(4, {1, 1, 1, 3, 3, 3, -2})) ==
          BraidWord(3, {1, 1, 1, 1, 1, 1, -2}));
    CHECK(project_sigma3_to_sigma1(BraidWord(4, {1, -2, 1})) == BraidWord(3, {1, -2, 1}));
    CHECK(project_sigma3_to_sigma1(BraidWord(4, {3})) == BraidWord(3, {1}));
    CHECK_THROWS_AS(project_sigma3_to_sigma1(BraidWord(3, {1})), domain_error);
}

TEST_CASE("canonical cyclic rotation") {
    CHECK(canonical_cyclic(BraidWord(3, {2, 1, 1})) == BraidWord(3, {1, 1, 2}));
    CHECK(canonical_cyclic(BraidWord(2, {1, 1, 1})) == BraidWord(2, {1, 1, 1}));
    CHECK(canonical_cyclic(BraidWord(4, {3, 1, 2})) == BraidWord(4, {1, 2, 3}));
    for (int t = 0; t < 100; ++t) {
        BraidWord w = random_word(4, 1 + int(rng() % 10));
        BraidWord c = canonical_cyclic(w);
        CHECK(canonical_cyclic(c) == c); // idempotent
        // rotation invariance
        std::vector<int> rot(w.letters.begin() + 1, w.letters.end());
        if (!w.letters.empty()) rot.push_back(w.letters.front());
        CHECK(canonical_cyclic(BraidWord(4, rot)) == c);
    }
}

TEST_CASE("braid json") {
    BraidWord w(4, {1, -3, 2});
    CHECK(braid_from_json(to_json(w)) == w);
}
