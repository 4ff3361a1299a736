#pragma once
/// @file polyq.hpp
/// @brief Dense univariate polynomials and rational functions over Q, enough
///        for exact Gauss-Manin / Picard-Fuchs bookkeeping: ring ops, Euclid
///        gcd, canonical forms, and the logarithmic derivation D = s d/ds.

#include <string>
#include <vector>

#include "hgk3/errors.hpp"
#include "hgk3/rational.hpp"
#include "hgk3/series.hpp"

namespace hgk3 {

/// Polynomial in s with rational coefficients, low degree first.  The zero
/// polynomial is the empty coefficient vector.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c(coeffs) { strip(); }
    explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { strip(); }
    static Poly constant(const Rational& v) { return Poly({v}); }
    /// c0 + c1 s + ... from low-to-high integer initializers.
    static Poly of_ints(std::initializer_list<long long> coeffs) {
        std::vector<Rational> v;
        for (long long x : coeffs) v.emplace_back(x);
        return Poly(std::move(v));
    }

    void strip() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    Rational lead() const { return is_zero() ? Rational(0) : c.back(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)]
                                                          : Rational(0);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        std::vector<Rational> r = a.c;
        for (Rational& x : r) x *= s;
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) { return Rational(-1) * a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& s) const {
        Rational r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * s + c[i];
        return r;
    }
};

/// Quotient and remainder of Euclidean division.
inline void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw error("poly_divmod: division by zero polynomial");
    q = Poly();
    r = a;
    const Rational li = Rational(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.lead() * li;
        std::vector<Rational> qc(static_cast<std::size_t>(shift + 1), Rational(0));
        qc[static_cast<std::size_t>(shift)] = f;
        Poly term(std::move(qc));
        q = q + term;
        r = r - term * b;
    }
}

inline Poly operator%(const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    return r;
}
inline Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    if (!r.is_zero()) throw error("poly operator/: inexact division");
    return q;
}

/// Monic gcd by Euclid's algorithm (gcd of zero polynomials is zero).
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = (Rational(1) / a.lead()) * a;
    return a;
}

/// d/ds.
inline Poly poly_derivative(const Poly& a) {
    if (a.c.size() <= 1) return Poly();
    std::vector<Rational> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = Rational(static_cast<long long>(i)) * a.c[i];
    return Poly(std::move(r));
}

/// The logarithmic derivation D_s = s d/ds (degree-preserving: s^i -> i s^i).
inline Poly poly_Ds(const Poly& a) {
    std::vector<Rational> r = a.c;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= Rational(static_cast<long long>(i));
    return Poly(std::move(r));
}

/// View the polynomial as a truncated power series of the given order.
inline QSeries poly_to_series(const Poly& a, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    for (std::size_t i = 0; i < a.c.size() && i < c.size(); ++i) c[i] = a.c[i];
    return QSeries(std::move(c));
}

/// Rational function num/den in canonical form: gcd removed and the
/// denominator monic.  Equality is by cross-multiplication.
struct RationalFunction {
    Poly num; // canonical: gcd(num, den) = 1, den monic
    Poly den = Poly::constant(Rational(1));

    RationalFunction() : num() {}
    RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { canonicalize(); }
    static RationalFunction from_poly(Poly p) { return RationalFunction(std::move(p), Poly::constant(Rational(1))); }
    static RationalFunction constant(const Rational& v) { return from_poly(Poly::constant(v)); }

    void canonicalize() {
        if (den.is_zero()) throw error("RationalFunction: zero denominator");
        if (num.is_zero()) {
            den = Poly::constant(Rational(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        Rational lead = den.lead();
        if (lead != 1) {
            Rational li = Rational(1) / lead;
            num = li * num;
            den = li * den;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num * b.num, a.den * b.den);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw error("RationalFunction: division by zero");
        return RationalFunction(a.num * b.den, a.den * b.num);
    }
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a) {
        return RationalFunction(s * a.num, a.den);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        return Rational(-1) * a;
    }
    /// Cross-multiplication equality.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
};

/// D_s = s d/ds via the quotient rule.
inline RationalFunction rf_Ds(const RationalFunction& f) {
    Poly s_poly = Poly::of_ints({0, 1});
    Poly n = s_poly * (poly_derivative(f.num) * f.den - f.num * poly_derivative(f.den));
    return RationalFunction(n, f.den * f.den);
}

/// True iff den divides divisor^k for some k <= kmax (used for pole-locus checks).
inline bool denominator_divides_power(const RationalFunction& f, const Poly& divisor, int kmax) {
    Poly acc = Poly::constant(Rational(1));
    for (int k = 0; k <= kmax; ++k) {
        if ((acc % f.den).is_zero()) return true;
        acc = acc * divisor;
    }
    return false;
}

} // namespace hgk3
