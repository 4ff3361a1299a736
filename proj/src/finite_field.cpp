/// @file finite_field.cpp
/// @brief F_p / F_p2 kernels: modular arithmetic, Tonelli-Shanks, squarefree
///        decomposition and reduction of quadratic irrationalities.

#include "hgk3/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hgk3 {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw error("invmod: zero has no inverse");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw error("invmod: not invertible");
    return t < 0 ? t + p : t;
}

int legendre(std::int64_t n, std::int64_t p) {
    n %= p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    std::int64_t e = powmod(n, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int legendre(const BigInt& n, std::int64_t p) {
    return legendre(mod_nonneg(n, p), p);
}

std::int64_t sqrt_mod(std::int64_t n, std::int64_t p) {
    n %= p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    if (legendre(n, p) != 1) throw NonResidue("no square root of " + std::to_string(n) +
                                              " mod " + std::to_string(p));
    std::int64_t r;
    if (p % 4 == 3) {
        r = powmod(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
        std::int64_t q = p - 1, s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        std::int64_t z = smallest_nonresidue(p);
        std::int64_t m = s;
        std::int64_t c = powmod(z, q, p);
        std::int64_t t = powmod(n, q, p);
        r = powmod(n, (q + 1) / 2, p);
        while (t != 1) {
            std::int64_t i = 0, t2 = t;
            while (t2 != 1) { t2 = mulmod(t2, t2, p); ++i; }
            std::int64_t b = powmod(c, std::int64_t(1) << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

bool has_padic_sqrt(const Rational& u, std::int64_t p) {
    if (!is_p_unit(u, p)) throw NotAUnit();
    std::int64_t n = mulmod(mod_nonneg(num(u), p), invmod(mod_nonneg(den(u), p), p), p);
    return legendre(n, p) == 1;
}

std::int64_t smallest_nonresidue(std::int64_t p) {
    for (std::int64_t d = 2; d < p; ++d)
        if (legendre(d, p) == -1) return d;
    throw error("smallest_nonresidue: none found (p must be an odd prime > 2)");
}

void squarefree_decompose(const BigInt& n, BigInt& D, BigInt& m) {
    if (n == 0) throw BadParameter("squarefree_decompose: zero input");
    BigInt a = n < 0 ? BigInt(-n) : n;
    if (a >= (BigInt(1) << 63))
        throw BadParameter("squarefree_decompose: input exceeds 2^63");
    std::uint64_t v = static_cast<std::uint64_t>(a);
    std::uint64_t sf = 1, sq = 1;
    // Trial division to B = 2.1e6.  Any cofactor of a 63-bit input then has at
    // most two prime factors (B^3 > 2^63), so the perfect-square test below
    // settles squarefreeness exactly.
    const std::uint64_t B = 2'100'000;
    for (std::uint64_t q = 2; q <= B && q * q <= v; q += (q == 2 ? 1 : 2)) {
        if (v % q) continue;
        int e = 0;
        while (v % q == 0) { v /= q; ++e; }
        for (int i = 0; i < e / 2; ++i) sq *= q;
        if (e % 2) sf *= q;
    }
    if (v > 1) {
        std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        if (r * r == v) sq *= r; // cofactor is p^2
        else sf *= v;            // cofactor is p or pq, squarefree
    }
    D = BigInt(sf);
    m = BigInt(sq);
    if (n < 0) D = -D;
}

QuadFieldNumber half_one_minus_sqrt(const Rational& u) {
    if (u == 0) throw BadParameter("half_one_minus_sqrt: radicand is zero");
    // u = num/den reduced, so num and den are coprime and their squarefree
    // parts multiply:  sqrt(u) = (mn sqrt(Dn)) / (md sqrt(Dd))
    //                          = (mn / (md Dd)) sqrt(Dn Dd).
    BigInt Dn, mn, Dd, md;
    squarefree_decompose(num(u), Dn, mn);
    squarefree_decompose(den(u), Dd, md);
    const BigInt D = Dn * Dd;
    QuadFieldNumber b;
    if (D == 1) { // u is a perfect rational square: b is rational
        b.x = (Rational(1) - Rational(mn) / Rational(md)) / 2;
        b.y = 0;
        b.D = 1;
    } else {
        b.x = Rational(1, 2);
        b.y = -Rational(mn) / (Rational(2) * Rational(md) * Rational(Dd));
        b.D = D;
    }
    return b;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (comp[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Fp reduce_mod_p(const Rational& q, std::int64_t p) {
    if (!is_p_integral(q, p)) throw BadReduction("denominator divisible by p");
    std::int64_t n = mod_nonneg(num(q), p);
    std::int64_t d = mod_nonneg(den(q), p);
    return Fp(mulmod(n, invmod(d, p), p), p);
}

std::vector<signed char> legendre_table(std::int64_t p) {
    // chi(v) = +1 exactly for the (p-1)/2 nonzero squares; fill by squaring.
    std::vector<signed char> t(static_cast<std::size_t>(p), -1);
    t[0] = 0;
    for (std::int64_t v = 1; v <= (p - 1) / 2; ++v)
        t[static_cast<std::size_t>(mulmod(v, v, p))] = 1;
    return t;
}

ReducedQuad reduce_quad(const QuadFieldNumber& b, std::int64_t p, RootChoice root) {
    if (den(b.x) % p == 0 || den(b.y) % p == 0)
        throw BadReduction("p divides a coordinate denominator");
    ReducedQuad out;
    std::int64_t xr = mulmod(mod_nonneg(num(b.x), p), invmod(mod_nonneg(den(b.x), p), p), p);
    if (b.is_rational()) {
        out.in_fp = true;
        out.fp = Fp(xr, p);
        return out;
    }
    if (b.D % p == 0) throw BadReduction("p divides the field discriminant D");
    std::int64_t yr = mulmod(mod_nonneg(num(b.y), p), invmod(mod_nonneg(den(b.y), p), p), p);
    std::int64_t Dr = mod_nonneg(b.D, p);
    if (legendre(Dr, p) == 1) {
        std::int64_t r = sqrt_mod(Dr, p);
        if (root == RootChoice::Conjugate) r = p - r;
        out.in_fp = true;
        out.fp = Fp(xr + mulmod(yr, r, p), p);
    } else {
        // sqrt(D) = s * delta with s = sqrt(D/d), d the chosen non-residue.
        std::int64_t d = smallest_nonresidue(p);
        std::int64_t s = sqrt_mod(mulmod(Dr, invmod(d, p), p), p);
        out.in_fp = false;
        out.fp2 = Fp2(xr, mulmod(yr, s, p), p, d);
        if (root == RootChoice::Conjugate) out.fp2 = fp2_frobenius(out.fp2);
    }
    return out;
}

} // namespace hgk3
