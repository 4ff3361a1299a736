#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgk3/polyq.hpp"

using namespace hgk3;

namespace {
Rational r(long long n, long long d = 1) { return Rational(n, d); }
} // namespace

TEST_CASE("polynomial ring basics") {
    Poly a = Poly::of_ints({1, 1});  // 1 + s
    Poly b = Poly::of_ints({1, -1}); // 1 - s
    CHECK(a * b == Poly::of_ints({1, 0, -1}));
    CHECK(a + b == Poly::of_ints({2}));
    CHECK((a - a).is_zero());
    CHECK(Poly().degree() == -1);

    // trailing zeros are stripped on construction
    Poly c({r(1), r(2), r(0), r(0)});
    CHECK(c.degree() == 1);
    CHECK(c.coeff(5) == 0);

    // Horner evaluation: (1 + 2s + 3s^2)(2) = 17
    CHECK(Poly::of_ints({1, 2, 3}).eval(r(2)) == r(17));
    CHECK(Poly::of_ints({1, 2, 3}).eval(r(1, 2)) == r(11, 4));
}

TEST_CASE("euclidean division") {
    Poly a = Poly::of_ints({-1, 0, 0, 1}); // s^3 - 1
    Poly b = Poly::of_ints({-1, 1});       // s - 1
    Poly q, rem;
    poly_divmod(a, b, q, rem);
    CHECK(q == Poly::of_ints({1, 1, 1}));
    CHECK(rem.is_zero());
    CHECK(a / b == q);
    CHECK((a % Poly::of_ints({0, 1})) == Poly::of_ints({-1})); // value at s = 0

    // inexact division throws
    CHECK_THROWS_AS(Poly::of_ints({1, 1, 1}) / b, error);
    CHECK_THROWS_AS(poly_divmod(a, Poly(), q, rem), error);

    // gcd is monic: gcd(s^2 - 1, s^2 + 2s + 1) = s + 1
    CHECK(poly_gcd(Poly::of_ints({-1, 0, 1}), Poly::of_ints({1, 2, 1})) == Poly::of_ints({1, 1}));
    CHECK(poly_gcd(Poly(), Poly::of_ints({0, 3})) == Poly::of_ints({0, 1}));
    // coprime inputs give gcd 1
    CHECK(poly_gcd(Poly::of_ints({-1, 1}), Poly::of_ints({1, 1})) == Poly::of_ints({1}));
}

TEST_CASE("derivations") {
    Poly f = Poly::of_ints({5, 3, 0, 2}); // 5 + 3s + 2s^3
    CHECK(poly_derivative(f) == Poly::of_ints({3, 0, 6}));
    CHECK(poly_Ds(f) == Poly::of_ints({0, 3, 0, 6})); // s d/ds keeps degree
    // product rule: Ds(fg) = Ds(f) g + f Ds(g)
    Poly g = Poly::of_ints({1, -2, 1});
    CHECK(poly_Ds(f * g) == poly_Ds(f) * g + f * poly_Ds(g));
    CHECK(poly_derivative(Poly::of_ints({7})).is_zero());
}

TEST_CASE("rational function canonical form") {
    // (2s^2 - 2)/(2s - 2) = s + 1 after gcd reduction and monic denominator
    RationalFunction f(Poly::of_ints({-2, 0, 2}), Poly::of_ints({-2, 2}));
    CHECK(f == RationalFunction::from_poly(Poly::of_ints({1, 1})));
    CHECK(f.den == Poly::of_ints({1}));

    // the stored denominator is always monic
    RationalFunction g(Poly::of_ints({1}), Poly::of_ints({0, 2}));
    CHECK(g.den == Poly::of_ints({0, 1}));
    CHECK(g.num == Poly::constant(r(1, 2)));

    // equality is by cross-multiplication
    RationalFunction h(Poly::of_ints({1, 1}), Poly::of_ints({0, 0, 1}));
    RationalFunction k(Poly::of_ints({1, 2, 1}), Poly::of_ints({0, 0, 1, 1}));
    CHECK(h == k);

    CHECK_THROWS_AS(RationalFunction(Poly::of_ints({1}), Poly()), error);
    CHECK_THROWS_AS(h / RationalFunction(), error);

    // field ops against the canonical forms
    CHECK(h - h == RationalFunction());
    CHECK(h / h == RationalFunction::constant(r(1)));
    CHECK(h * RationalFunction::constant(r(3)) == r(3) * h);
}

TEST_CASE("logarithmic derivation on rational functions") {
    // Ds(s/(1-s)) = s/(1-s)^2
    RationalFunction f(Poly::of_ints({0, 1}), Poly::of_ints({1, -1}));
    RationalFunction expect(Poly::of_ints({0, 1}), Poly::of_ints({1, -2, 1}));
    CHECK(rf_Ds(f) == expect);
    // quotient rule against the polynomial route: Ds(p) for polynomial p
    Poly p = Poly::of_ints({4, 0, 3, 1});
    CHECK(rf_Ds(RationalFunction::from_poly(p)) == RationalFunction::from_poly(poly_Ds(p)));
}

TEST_CASE("pole locus divisibility") {
    // 1/(2s-1)^3 has denominator dividing (2s-1)^3 but not (2s-1)^2
    Poly d = Poly::of_ints({-1, 2});
    RationalFunction f(Poly::of_ints({1}), d * d * d);
    CHECK(denominator_divides_power(f, d, 3));
    CHECK_FALSE(denominator_divides_power(f, d, 2));
    CHECK_FALSE(denominator_divides_power(f, Poly::of_ints({1, 1}), 5));
    CHECK(denominator_divides_power(RationalFunction::constant(r(2)), d, 0));
}

TEST_CASE("polynomial viewed as a series") {
    QSeries s = poly_to_series(Poly::of_ints({1, 0, -3}), 5);
    CHECK(s.order() == 5);
    CHECK(s[0] == 1);
    CHECK(s[2] == -3);
    CHECK(s[4] == 0);
}
