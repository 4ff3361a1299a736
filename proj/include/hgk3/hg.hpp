#pragma once
/// @file hg.hpp
/// @brief Hypergeometric series machinery: Pochhammer symbols, generalized
///        hypergeometric series, the algebraic substitution s(t), Dwork
///        primes, and truncation/reduction helpers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hgk3/errors.hpp"
#include "hgk3/modp.hpp"
#include "hgk3/rational.hpp"
#include "hgk3/series.hpp"

namespace hgk3 {

/// The parameter triple (a0, a1, a2) of a weight-2 hypergeometric family.
/// Only four triples are admissible; all have a0 + a1 = 1 and a2 = 1/2.
struct HGTriple {
    std::array<Rational, 3> alpha;

    static HGTriple half()    { return {{Rational(1, 2), Rational(1, 2), Rational(1, 2)}}; }
    static HGTriple third()   { return {{Rational(1, 3), Rational(2, 3), Rational(1, 2)}}; }
    static HGTriple quarter() { return {{Rational(1, 4), Rational(3, 4), Rational(1, 2)}}; }
    static HGTriple sixth()   { return {{Rational(1, 6), Rational(5, 6), Rational(1, 2)}}; }

    static const std::array<HGTriple, 4>& all() {
        static const std::array<HGTriple, 4> a = {half(), third(), quarter(), sixth()};
        return a;
    }

    /// Elementary symmetric functions of the entries.
    Rational sigma1() const { return alpha[0] + alpha[1] + alpha[2]; }
    Rational sigma2() const {
        return alpha[0] * alpha[1] + alpha[0] * alpha[2] + alpha[1] * alpha[2];
    }
    Rational sigma3() const { return alpha[0] * alpha[1] * alpha[2]; }

    /// The dual triple (1-a0, 1-a1, 1-a2); for the four admissible triples it
    /// is a permutation of the original, but we never rely on that.
    HGTriple dual() const {
        return {{Rational(1) - alpha[0], Rational(1) - alpha[1], Rational(1) - alpha[2]}};
    }

    /// True iff this triple equals one of the four admissible ones (order-sensitive).
    bool admissible() const {
        for (const HGTriple& t : all())
            if (t.alpha == alpha) return true;
        return false;
    }

    /// Multiset comparison, used by the Dwork-prime period computation.
    bool same_up_to_permutation(const HGTriple& o) const {
        std::array<Rational, 3> a = alpha, b = o.alpha;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    std::string name() const {
        if (alpha == half().alpha) return "half";
        if (alpha == third().alpha) return "third";
        if (alpha == quarter().alpha) return "quarter";
        if (alpha == sixth().alpha) return "sixth";
        return "custom";
    }

    friend bool operator==(const HGTriple& a, const HGTriple& b) { return a.alpha == b.alpha; }
};

/// Throws InadmissibleTriple unless the triple is one of the four built-ins.
inline void require_admissible(const HGTriple& t) {
    if (!t.admissible()) throw InadmissibleTriple();
}

inline HGTriple triple_by_name(const std::string& name) {
    if (name == "half") return HGTriple::half();
    if (name == "third") return HGTriple::third();
    if (name == "quarter") return HGTriple::quarter();
    if (name == "sixth") return HGTriple::sixth();
    throw InadmissibleTriple("unknown triple name: " + name);
}

/// Pochhammer (rising factorial) (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

/// Generalized hypergeometric series sum_i prod_j (num_j)_i / (prod_k (den_k)_i i!) t^i
/// to the given order.  Every denominator parameter must avoid the nonpositive
/// integers (PoleInDenominatorParameter otherwise).
inline QSeries hg_series(const std::vector<Rational>& nums,
                         const std::vector<Rational>& dens, int order) {
    if (order < 1) throw error("hg_series: order must be >= 1");
    for (const Rational& d : dens)
        if (is_nonpositive_integer(d)) throw PoleInDenominatorParameter();
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    Rational term(1);
    c[0] = term;
    for (int i = 0; i + 1 < order; ++i) {
        // c_{i+1}/c_i = prod(num+i) / (prod(den+i) * (i+1))
        Rational ratio(1);
        for (const Rational& a : nums) ratio *= a + i;
        for (const Rational& d : dens) ratio /= d + i;
        ratio /= Rational(i + 1);
        term *= ratio;
        c[static_cast<std::size_t>(i + 1)] = term;
    }
    return QSeries(std::move(c));
}

/// The full-weight series F(t) of a triple: 3F2(a0,a1,a2; 1,1; t).
inline QSeries f_series(const HGTriple& t, int order) {
    return hg_series({t.alpha[0], t.alpha[1], t.alpha[2]}, {Rational(1), Rational(1)}, order);
}

/// Generalized binomial coefficient binom(r, i) for rational r.
inline Rational binomial(const Rational& r, int i) {
    Rational b(1);
    for (int j = 0; j < i; ++j) b *= (r - j) / Rational(j + 1);
    return b;
}

/// (1-t)^r = sum_i binom(r,i) (-t)^i for a rational exponent r.
inline QSeries binomial_power(const Rational& r, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    Rational b(1);
    c[0] = b;
    for (int i = 1; i < order; ++i) {
        // binom(r,i)(-1)^i = binom(r,i-1)(-1)^{i-1} * -(r-i+1)/i
        b *= -(r - (i - 1)) / Rational(i);
        c[static_cast<std::size_t>(i)] = b;
    }
    return QSeries(std::move(c));
}

/// s(t) = (1 - sqrt(1-t))/2 = t/4 + t^2/16 + ...; the inverse of t = 4s(1-s)
/// on the branch with s(0) = 0.
inline QSeries s_of_t(int order) {
    QSeries root = binomial_power(Rational(1, 2), order);
    QSeries one = QSeries::constant(Rational(1), order);
    return Rational(1, 2) * (one - root);
}

/// Dwork prime: (a + l)/p for the unique lift l in {0..p-1} with a + l = 0 mod p.
/// Requires the denominator of a to be coprime to p (DenominatorDivisibleByP).
inline Rational dwork_prime(const Rational& a, std::int64_t p) {
    if (!is_p_integral(a, p)) throw DenominatorDivisibleByP();
    // a = u/v with p coprime to v: l = -u v^{-1} mod p.
    std::int64_t u = mod_nonneg(num(a), p);
    std::int64_t v = mod_nonneg(den(a), p);
    std::int64_t vi = inverse(ModPrimePower(v, p)).residue;
    std::int64_t l = (p - (u * vi) % p) % p; // p < 2^31 keeps u*vi in int64
    return (a + l) / Rational(p);
}

/// Apply the Dwork prime entrywise.
inline HGTriple dwork_prime_triple(const HGTriple& t, std::int64_t p) {
    return {{dwork_prime(t.alpha[0], p), dwork_prime(t.alpha[1], p),
             dwork_prime(t.alpha[2], p)}};
}

/// Least m >= 1 whose m-fold Dwork prime is a permutation of the original triple.
inline int dwork_period(const HGTriple& t, std::int64_t p) {
    HGTriple cur = t;
    for (int m = 1; m <= 64; ++m) {
        cur = dwork_prime_triple(cur, p);
        if (cur.same_up_to_permutation(t)) return m;
    }
    throw error("dwork_period: no period up to 64");
}

/// The truncated polynomial f_{<n}: coefficients c_0..c_{n-1} as an exact
/// polynomial (low-to-high).  TruncationBeyondOrder if n exceeds the order.
template <class S>
std::vector<S> truncate_below(const TruncatedSeries<S>& f, int n) {
    if (n < 0 || n > f.order()) throw TruncationBeyondOrder();
    return std::vector<S>(f.coeffs().begin(), f.coeffs().begin() + n);
}

/// Reduce a rational series into Z/p^k coefficientwise
/// (NonInvertibleModulus if any denominator is divisible by p).
inline PSeries truncate_mod(const QSeries& f, std::int64_t p, int k) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<ModPrimePower> c;
    c.reserve(static_cast<std::size_t>(f.order()));
    for (int i = 0; i < f.order(); ++i) c.push_back(reduce_rational(f[i], pk));
    return PSeries(std::move(c));
}

} // namespace hgk3
