// Admissible regions, the unitarity probe, sector eigenvalues and the braid
// screen on known-pass / known-fail parameterizations.

#include "braidforge/eigenscreen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace braidforge;

namespace {
std::mt19937 rng(314159);

BraidWord random_word3(int len) {
    std::uniform_int_distribution<int> dg(1, 2), ds(0, 1);
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) {
        int g = dg(rng);
        ls.push_back(ds(rng) ? g : -g);
    }
    return BraidWord(3, std::move(ls));
}
} // namespace

TEST_CASE("admissible k regions") {
    CHECK(admissible_k(8.0, 4));   // boundary, cos = 0
    CHECK_FALSE(admissible_k(7.0, 4));
    CHECK(admissible_k(6.0, 3));   // boundary, 1 + 2cos(2pi/3) = 0
    CHECK(admissible_k(9.0, 4));
    CHECK(admissible_k(150.0, 4));
    CHECK_FALSE(admissible_k(5.0, 3)); // cos(4pi/5) < -1/2
    CHECK(admissible_k(2.0, 4));   // inside the z = 1 window [8/5, 8/3]
    CHECK_FALSE(admissible_k(3.0, 4));
    CHECK_FALSE(admissible_k(4.0, 4));
    CHECK(admissible_k(0.1, 4));   // cos(40 pi) = 1
    CHECK_THROWS_AS(admissible_k(8.0, 5), domain_error);
    // frozen default-grid census (4-strand regions): 1440 of 1500 points
    CHECK(admissible_points(KGrid{}, 4).size() == 1440);
}

TEST_CASE("unitarity probe") {
    CHECK(unitarity_U(12.0).deviation < 1e-10);
    CHECK(unitarity_U(12.0).unitary);
    // k = 5: 1 + 2cos(4pi/5) < 0 makes sqrt([3]) imaginary; off-diagonals survive
    CHECK(unitarity_U(5.0).deviation > 1e-3);
    CHECK_FALSE(unitarity_U(5.0).unitary);
    // classical limit
    CHECK(unitarity_U(1e6).deviation < 1e-6);
    CHECK_THROWS_AS(unitarity_U(4.0), domain_error);
}

TEST_CASE("sector eigenvalues: trivial word and [2,2] product") {
    Cplx q0 = std::polar(1.0, 2.0 * M_PI / 9.0);
    // identity braid: a_{[3,1]} = 3, W = 0, roots all 1
    auto lam = sector_eigenvalues(Cplx(3, 0), Cplx(3, 0), 0, {3, 1}, q0);
    for (Cplx l : lam) CHECK(std::abs(l - Cplx(1, 0)) < 1e-8);
    // [2,2]: product of the two roots is -1 by construction
    auto mu = sector_eigenvalues(Cplx(0.7, 0.3), Cplx(0, 0), 5, {2, 2}, q0);
    CHECK(std::abs(mu[0] * mu[1] + Cplx(1, 0)) < 1e-12);
    CHECK_THROWS_AS(sector_eigenvalues(Cplx(1, 0), Cplx(1, 0), 1, {5}, q0), domain_error);
}

TEST_CASE("cubic roots match exact traces on real words") {
    // eigenvalues from the characteristic data of an actual word reproduce the
    // numeric eigenvalue relation lambda^{[3,1]}(q) = -lambda^{[2,1,1]}(1/q);
    // the sign comes from (-1)^W, so the relation is the odd-writhe statement
    int done = 0, t = 0;
    while (done < 20) {
        ++t;
        BraidWord w(4, {});
        {
            std::uniform_int_distribution<int> dg(1, 3), ds(0, 1);
            std::vector<int> ls;
            int len = 1 + int(rng() % 8);
            for (int i = 0; i < len; ++i) {
                int g = dg(rng);
                ls.push_back(ds(rng) ? g : -g);
            }
            w = BraidWord(4, ls);
        }
        int W = writhe(w);
        if (W % 2 == 0) continue;
        ++done;
        LaurentPoly a31 = sector_word_matrix(SectorFamily::B4_31, w.letters).trace();
        LaurentPoly a211 = sector_word_matrix(SectorFamily::B4_211, w.letters).trace();
        Cplx q0 = std::polar(1.0, 0.35 + 0.01 * double(t));
        auto l31 = sector_eigenvalues(a31.eval(q0), a31.eval(1.0 / q0), W, {3, 1}, q0);
        auto l211 = sector_eigenvalues(a211.eval(1.0 / q0), a211.eval(q0), W, {2, 1, 1}, 1.0 / q0);
        // multisets {l31} and {-l211(1/q)} agree
        std::vector<Cplx> lhs = l31, rhs;
        for (Cplx l : l211) rhs.push_back(-l);
        for (Cplx l : lhs) {
            double best = 1e9;
            for (Cplx r : rhs) best = std::min(best, std::abs(l - r));
            CHECK(best < 1e-8 * (1.0 + std::abs(l)));
        }
    }
}

TEST_CASE("newton power sums agree with numeric eigenvalue powers") {
    for (int t = 0; t < 20; ++t) {
        BraidWord w = random_word3(3 + int(rng() % 6));
        if (writhe(w) % 2 == 0) continue;
        LaurentPoly a22 = sector_word_matrix(SectorFamily::B3_21, w.letters).trace();
        CharCoeffs c = acoef_solve(1, RationalFn{BiLaurent(a22)});
        const RationalFn& a31 = c.a.at({3, 1});
        int W = c.writhe;
        Cplx q0 = std::polar(1.0, 0.21 + 0.013 * double(t));
        RationalFn det31{BiLaurent(LaurentPoly::q_power(W, (W % 2 == 0) ? 1 : -1))};
        auto psums = detail::newton_power_sums(a31, det31 * a31.invert_q(), det31, 7);
        auto lam = sector_eigenvalues(a31.eval(q0), a31.eval(1.0 / q0), W, {3, 1}, q0);
        for (int k = 1; k <= 7; ++k) {
            Cplx direct = 0;
            for (Cplx l : lam) direct += std::pow(l, double(k));
            CHECK(std::abs(psums[size_t(k)].eval(q0) - direct) < 1e-8 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("screen_braid pass and fail cases") {
    ScreenConfig cfg;
    // the paper's surviving braid (-1,1;2,3)
    ScreenReport pass = screen_braid(parse_braid("(-1,1;2,3)", 3), 0, cfg);
    CHECK(pass.pass);
    CHECK(pass.max_deviation < 1e-9);
    CHECK(pass.evaluated == 1440);
    // the (6,-1) torus parameterization fails the screen
    ScreenReport fail = screen_braid(parse_braid("(6,-1)", 3), 0, cfg);
    CHECK_FALSE(fail.pass);
    CHECK(!fail.failed_k.empty());
    // early exit stops at the first failure
    CHECK(fail.failed_k.size() == 1);
    // determinism: rerun matches
    ScreenReport fail2 = screen_braid(parse_braid("(6,-1)", 3), 0, cfg);
    CHECK(fail.failed_k == fail2.failed_k);
    CHECK(fail.evaluated == fail2.evaluated);

    CHECK_THROWS_AS(screen_braid(parse_braid("1,1,1", 3), 0, cfg), domain_error); // knot closure
    CHECK_THROWS_AS(screen_braid(parse_braid("(6,1)", 3), 0, cfg), domain_error); // writhe 7 != 5
}

TEST_CASE("b3 conjugacy keys") {
    // conjugation invariance on random words
    for (int t = 0; t < 50; ++t) {
        BraidWord w = random_word3(1 + int(rng() % 8));
        BraidWord u = random_word3(1 + int(rng() % 4));
        std::vector<int> conj = u.letters;
        conj.insert(conj.end(), w.letters.begin(), w.letters.end());
        BraidWord ui = inverse(u);
        conj.insert(conj.end(), ui.letters.begin(), ui.letters.end());
        CHECK(b3_conjugacy_key(BraidWord(3, conj)) == b3_conjugacy_key(w));
    }
    // the two same-class paper survivors: (-2,2;1,4) is conjugate to (-1,1;2,3)
    CHECK(b3_conjugacy_key(parse_braid("(-2,2;1,4)", 3)) ==
          b3_conjugacy_key(parse_braid("(-1,1;2,3)", 3)));
    // different writhe cannot collide
    CHECK(b3_conjugacy_key(parse_braid("1,1,1", 3)) != b3_conjugacy_key(parse_braid("1", 3)));
    // trefoil braid is not conjugate to the identity-writhe words
    CHECK(b3_conjugacy_key(parse_braid("1,1,1", 3)) !=
          b3_conjugacy_key(parse_braid("1,2,1", 3)));
}

TEST_CASE("screen json and csv shapes") {
    ScreenReport r = screen_braid(parse_braid("(6,-1)", 3), 0, {});
    auto j = to_json(r);
    CHECK(j["pass"].get<bool>() == false);
    CHECK(j["writhe"].get<int>() == 5);
    std::string csv = screen_csv({r});
    CHECK(csv.find("c1,b1,c2,b2") == 0);
}
