#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "hgk3/frobenius_k3.hpp"

using namespace hgk3;

namespace {
Rational r(long long n, long long d = 1) { return Rational(n, d); }
}

TEST_CASE("cubic assembly from the factored form") {
    // (1 - e1 p T)(1 - A T + p^2 T^2):
    //   c1 = -(A + e1 p),  c2 = p^2 + e1 p A,  c3 = -e1 p^3
    for (int e1 : {+1, -1})
        for (std::int64_t p : {5, 7, 11})
            for (std::int64_t A = -2 * p; A <= 2 * p; ++A) {
                CharPoly3 cp = charpoly_from_factors(e1, A, p);
                CHECK(cp.c1 == -(A + e1 * p));
                CHECK(cp.c2 == p * p + e1 * p * A);
                CHECK(cp.c3 == -e1 * p * p * p);
                CHECK(cp.e1 == e1);
                CHECK(cp.A == A);
            }
    CHECK_THROWS_AS(charpoly_from_factors(0, 2, 5), BadParameter);
    CHECK_THROWS_AS(charpoly_from_factors(2, 2, 5), BadParameter);
}

TEST_CASE("rendered polynomial strings") {
    CharPoly3 cp = charpoly_from_factors(+1, 2, 7);
    CHECK(charpoly_factored_string(cp) == "(1 - 7T)(1 - 2T + 49T^2)");
    CHECK(charpoly_string(cp) == "1 - 9T + 63T^2 - 343T^3");
}

TEST_CASE("frozen predictions") {
    // split ordinary: a = 2, p = 5 (sqrt(-1) = 2 mod 5 exists)
    CharPoly3 a25 = predict_charpoly(HGTriple::half(), r(2), 5);
    CHECK(a25.c1 == 1);
    CHECK(a25.c2 == -5);
    CHECK(a25.c3 == -125);
    AResult ar25 = compute_A(HGTriple::half(), r(2), 5);
    CHECK(ar25.split_case == SplitCase::SplitField);
    CHECK(ar25.A == -6); // a_p^2 - 2p with a_p = +-2

    // split ordinary: a = 4, p = 7
    CharPoly3 a47 = predict_charpoly(HGTriple::half(), r(4), 7);
    CHECK(a47.c1 == -9);
    CHECK(a47.c2 == 63);
    CHECK(a47.c3 == -343);

    // split supersingular: a = -1, p = 7 (a_p = 0, so A = -2p)
    AResult am17 = compute_A(HGTriple::half(), r(-1), 7);
    CHECK(am17.split_case == SplitCase::SplitField);
    CHECK(am17.trace == 0);
    CHECK(am17.A == -14);

    // inert ordinary: a = 3, p = 7 (1 - a = -2 is a non-residue mod 7)
    AResult a37 = compute_A(HGTriple::half(), r(3), 7);
    CHECK(a37.split_case == SplitCase::InertOrdinary);
    CHECK(a37.trace == -10);
    CHECK(a37.A == 10); // legendre(-1,7) * a_{p^2} = -1 * -10
    REQUIRE(a37.counts.size() == 1);
    CHECK(a37.counts[0] == 60); // 49 + 1 - (-10)

    CHECK(split_case_name(SplitCase::InertOrdinary) == std::string("inert_ordinary"));
}

TEST_CASE("root choice independence") {
    for (const HGTriple& tr : HGTriple::all())
        for (std::int64_t p : {5, 7, 11, 13})
            for (std::int64_t a = 2; a < p; ++a)
                CHECK(predict_charpoly(tr, r(a), p, +1, RootChoice::Canonical) ==
                      predict_charpoly(tr, r(a), p, +1, RootChoice::Conjugate));
}

TEST_CASE("character twist") {
    // chi flips the two odd coefficients and fixes c2
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t a = 2; a < p; ++a) {
            CharPoly3 plus = predict_charpoly(HGTriple::quarter(), r(a), p, +1);
            CharPoly3 minus = predict_charpoly(HGTriple::quarter(), r(a), p, -1);
            CHECK(minus.c1 == -plus.c1);
            CHECK(minus.c2 == plus.c2);
            CHECK(minus.c3 == -plus.c3);
        }
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(2), 5, 3), BadParameter);
}

TEST_CASE("split points match the symmetric square") {
    for (const HGTriple& tr : HGTriple::all())
        for (std::int64_t p : {5, 7, 11, 13})
            for (std::int64_t a = 2; a < p; ++a) {
                if (legendre(1 - a, p) != 1) continue;
                AResult res = compute_A(tr, r(a), p);
                REQUIRE(res.split_case == SplitCase::SplitField);
                CharPoly3 sym2 = sym2_charpoly(res.trace, p);
                CHECK(predict_charpoly(tr, r(a), p) == sym2);
                // a_q enters only through its square
                CHECK(sym2_charpoly(-res.trace, p) == sym2);
            }
    CHECK_THROWS_AS(sym2_charpoly(6, 5), HasseViolation);
}

TEST_CASE("weil audit") {
    for (const HGTriple& tr : HGTriple::all())
        for (std::int64_t p : {5, 7, 11, 13})
            for (std::int64_t a = 2; a < p; ++a)
                for (int chi : {+1, -1}) {
                    CharPoly3 cp = predict_charpoly(tr, r(a), p, chi);
                    WeilCheck w = verify_weil(cp, p);
                    CHECK(w.ok);
                    CHECK(w.reason.empty());
                }

    // tampered coefficients are caught with a reason
    CharPoly3 cp = predict_charpoly(HGTriple::half(), r(2), 5);
    cp.c2 += 1;
    WeilCheck bad = verify_weil(cp, 5);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.reason.empty());

    CharPoly3 wild; // |A| beyond the Weil bound
    wild.p = 5;
    wild.e1 = +1;
    wild.A = 11;
    wild.c1 = -(11 + 5);
    wild.c2 = 25 + 5 * 11;
    wild.c3 = -125;
    CHECK_FALSE(verify_weil(wild, 5).ok);

    // supersingular shape: root multiset {p, p, -p} up to a global sign, so
    // the linear root and the doubled quadratic root must have opposite signs
    CHECK(verify_weil(charpoly_from_factors(-1, 10, 5), 5).ok);  // {-5, 5, 5}
    CHECK(verify_weil(charpoly_from_factors(+1, -10, 5), 5).ok); // {5, -5, -5}
    CHECK_FALSE(verify_weil(charpoly_from_factors(+1, 10, 5), 5).ok);  // {5,5,5}
    CHECK_FALSE(verify_weil(charpoly_from_factors(-1, -10, 5), 5).ok); // {-5,-5,-5}
}

TEST_CASE("truncated period polynomial") {
    std::vector<std::int64_t> h5 = hasse_polynomial_mod_p(HGTriple::half(), 5);
    CHECK(h5 == std::vector<std::int64_t>{1, 4, 1, 0, 0});
    // always length p, leading block vanishing beyond (p-1)/2 for the half triple
    for (std::int64_t p : {5, 7, 11}) {
        std::vector<std::int64_t> h = hasse_polynomial_mod_p(HGTriple::half(), p);
        CHECK(static_cast<std::int64_t>(h.size()) == p);
        for (std::size_t i = (static_cast<std::size_t>(p) + 1) / 2; i < h.size(); ++i)
            CHECK(h[i] == 0); // (1/2)_i has p in the numerator past (p-1)/2
    }
    CHECK_THROWS_AS(hasse_polynomial_mod_p(HGTriple::half(), 3), BadParameter);
}

TEST_CASE("unit-root congruences") {
    int inert_seen = 0, split_seen = 0;
    for (const HGTriple& tr : HGTriple::all())
        for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23})
            for (std::int64_t a = 2; a < p; ++a) {
                UnitRootReport rep;
                try {
                    rep = verify_unit_root_congruences(tr, r(a), p);
                } catch (const SupersingularInput&) {
                    continue; // ordinary fibers only
                }
                CHECK(rep.ok);
                CHECK(rep.trace_congruence);
                CHECK(rep.f_value != 0);
                if (rep.split_case == SplitCase::SplitField) {
                    ++split_seen;
                    CHECK(rep.sigma == cartier_twist_sign(tr, p));
                    CHECK(rep.ratio == 0);
                } else {
                    ++inert_seen;
                    CHECK(rep.ratio_congruence);
                    CHECK(rep.ratio == rep.d_symbol);
                    CHECK(rep.d_symbol == legendre(d_alpha(tr), p));
                }
            }
    CHECK(split_seen > 100);
    CHECK(inert_seen > 100);
    CHECK_THROWS_AS(verify_unit_root_congruences(HGTriple::half(), r(-1), 7),
                    SupersingularInput);
}

TEST_CASE("triple and family metadata") {
    CHECK(d_alpha(HGTriple::half()) == -1);
    CHECK(d_alpha(HGTriple::third()) == -3);
    CHECK(d_alpha(HGTriple::quarter()) == -2);
    CHECK(d_alpha(HGTriple::sixth()) == -1);

    CHECK(family_of_triple(HGTriple::half()) == CurveFamily::half);
    CHECK(family_of_triple(HGTriple::third()) == CurveFamily::third);
    CHECK(family_of_triple(HGTriple::quarter()) == CurveFamily::quarter);
    CHECK(family_of_triple(HGTriple::sixth()) == CurveFamily::sixth);
    CHECK_THROWS_AS(family_of_triple(HGTriple{{r(1, 5), r(4, 5), r(1, 2)}}),
                    InadmissibleTriple);

    // Cartier signs of the four models
    for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29}) {
        CHECK(cartier_twist_sign(HGTriple::half(), p) == legendre(-1, p));
        CHECK(cartier_twist_sign(HGTriple::third(), p) == legendre(-3, p));
        CHECK(cartier_twist_sign(HGTriple::quarter(), p) == 1);
        CHECK(cartier_twist_sign(HGTriple::sixth(), p) == legendre(6, p));
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(5), 5), BadParameter);  // a = 0 mod p
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(8), 7), BadParameter);  // a = 1 mod p
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(2), 9), BadParameter);  // not prime
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(2), 3), BadParameter);  // p too small
    CHECK_THROWS_AS(predict_charpoly(HGTriple::half(), r(1, 5), 5), BadParameter);
    CHECK_THROWS_AS(predict_charpoly_C(HGTriple::third(), r(2), 7), BadParameter);
    // the auxiliary route exists for half and sixth
    (void)predict_charpoly_C(HGTriple::half(), r(2), 7);
    (void)predict_charpoly_C(HGTriple::sixth(), r(2), 7);
}

TEST_CASE("auxiliary-model route agrees on a spot grid") {
    // the full cross-formula grid is acceptance criterion territory; keep a
    // fast slice here so unit runs catch regressions early
    for (const HGTriple& tr : {HGTriple::half(), HGTriple::sixth()})
        for (std::int64_t p : {5, 7, 11, 13})
            for (std::int64_t a = 2; a < p; ++a)
                for (int chi : {+1, -1})
                    CHECK(predict_charpoly(tr, r(a), p, chi) ==
                          predict_charpoly_C(tr, r(a), p, chi));
}
