#pragma once
/// @file finite_field.hpp
/// @brief Arithmetic in F_p and F_p2 = F_p(delta) with delta^2 a fixed
///        non-residue, quadratic characters, Tonelli-Shanks square roots, and
///        reduction of quadratic irrationalities x + y*sqrt(D) mod p.

#include <cstdint>
#include <string>
#include <vector>

#include "hgk3/errors.hpp"
#include "hgk3/rational.hpp"

namespace hgk3 {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t invmod(std::int64_t a, std::int64_t p);

/// Legendre symbol (n/p) in {-1, 0, +1} for an odd prime p.
int legendre(std::int64_t n, std::int64_t p);
int legendre(const BigInt& n, std::int64_t p);

/// Square root mod p via Tonelli-Shanks; returns the representative in
/// [0, p/2] for determinism.  Throws NonResidue when (n/p) = -1.
std::int64_t sqrt_mod(std::int64_t n, std::int64_t p);

/// True iff the p-adic unit u has a square root in Z_p, i.e. its mod-p
/// reduction is a nonzero square (Hensel).  Throws NotAUnit when ord_p(u) != 0.
bool has_padic_sqrt(const Rational& u, std::int64_t p);

/// Smallest positive quadratic non-residue mod p (deterministic choice of
/// delta^2 for F_p2).
std::int64_t smallest_nonresidue(std::int64_t p);

/// All primes <= n by sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Deterministic primality by trial division (intended for n within the
/// counting range of this library).
bool is_prime(std::int64_t n);

/// Table of Legendre symbols (v|p) for v = 0..p-1 (0 at v = 0), for counting
/// kernels that evaluate the quadratic character many times per prime.
std::vector<signed char> legendre_table(std::int64_t p);

/// An element of the prime field F_p.
struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 0;

    Fp() = default;
    Fp(std::int64_t value, std::int64_t prime) : v(value % prime), p(prime) {
        if (v < 0) v += p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return {a.v + b.v, a.p}; }
    friend Fp operator-(const Fp& a, const Fp& b) { return {a.v - b.v, a.p}; }
    friend Fp operator*(const Fp& a, const Fp& b) { return {mulmod(a.v, b.v, a.p), a.p}; }
    friend Fp operator-(const Fp& a) { return {-a.v, a.p}; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inv() const { return {invmod(v, p), p}; }
    bool is_zero() const { return v == 0; }
};

/// An element x + y*delta of F_p2 with delta^2 = d, d the chosen non-residue.
struct Fp2 {
    std::int64_t x = 0, y = 0;
    std::int64_t p = 0, d = 0;

    Fp2() = default;
    Fp2(std::int64_t xx, std::int64_t yy, std::int64_t prime, std::int64_t nonres)
        : x(xx % prime), y(yy % prime), p(prime), d(nonres) {
        if (x < 0) x += p;
        if (y < 0) y += p;
    }
    /// Embed an F_p element.
    static Fp2 from_fp(const Fp& a, std::int64_t d) { return {a.v, 0, a.p, d}; }

    friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.x + b.x, a.y + b.y, a.p, a.d}; }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.x - b.x, a.y - b.y, a.p, a.d}; }
    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        // (x1 + y1 d^(1/2))(x2 + y2 d^(1/2)) = (x1x2 + d y1y2) + (x1y2 + y1x2) d^(1/2)
        std::int64_t xx = (mulmod(a.x, b.x, a.p) + mulmod(a.d, mulmod(a.y, b.y, a.p), a.p)) % a.p;
        std::int64_t yy = (mulmod(a.x, b.y, a.p) + mulmod(a.y, b.x, a.p)) % a.p;
        return {xx, yy, a.p, a.d};
    }
    friend Fp2 operator-(const Fp2& a) { return {-a.x, -a.y, a.p, a.d}; }
    friend bool operator==(const Fp2& a, const Fp2& b) {
        return a.p == b.p && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

    bool is_zero() const { return x == 0 && y == 0; }
    bool in_prime_field() const { return y == 0; }

    /// Norm to F_p: N(x + y delta) = x^2 - d y^2.
    std::int64_t norm() const {
        std::int64_t n = (mulmod(x, x, p) - mulmod(d, mulmod(y, y, p), p)) % p;
        return n < 0 ? n + p : n;
    }

    Fp2 inv() const {
        // (x - y delta) / N
        std::int64_t n = norm();
        std::int64_t ni = invmod(n, p);
        return {mulmod(x, ni, p), mulmod((p - y) % p, ni, p), p, d};
    }
};

/// The p-power Frobenius on F_p2 is conjugation: x + y delta -> x - y delta
/// (delta^p = delta * d^((p-1)/2) = -delta).
inline Fp2 fp2_frobenius(const Fp2& e) { return {e.x, (e.p - e.y) % e.p, e.p, e.d}; }

/// Quadratic character of F_p2: chi(e) = legendre(N(e), p), since
/// e^((p^2-1)/2) = (e^(p+1))^((p-1)/2) and e^(p+1) is the norm.
inline int fp2_chi(const Fp2& e) { return legendre(e.norm(), e.p); }

/// x + y*sqrt(D) over Q with D a squarefree integer.  D = 1 is permitted only
/// in the degenerate rational case y = 0.
struct QuadFieldNumber {
    Rational x, y;
    BigInt D = 1;

    QuadFieldNumber conjugate() const { return {x, -y, D}; }
    Rational norm() const { return x * x - Rational(D) * y * y; }
    bool is_rational() const { return y == 0; }
};

/// Squarefree decomposition n = D * m^2 with D squarefree (sign carried by D).
/// Exact for |n| < 2^63; larger inputs are rejected (BadParameter).
void squarefree_decompose(const BigInt& n, BigInt& D, BigInt& m);

/// Reduce a rational with p-coprime denominator into F_p.
/// Throws BadReduction when p divides the denominator.
Fp reduce_mod_p(const Rational& q, std::int64_t p);

/// b = (1 - sqrt(u))/2 as an element of Q(sqrt(D)) where u = D*(m/den)^2.
QuadFieldNumber half_one_minus_sqrt(const Rational& u);

/// Which of the two conjugate embeddings reduce_quad uses.
enum class RootChoice { Canonical, Conjugate };

/// Image of a QuadFieldNumber in F_p (when D is a QR mod p) or F_p2 (when it
/// is not).  The two conjugate embeddings differ by fp2_frobenius / the other
/// mod-p root.  Throws BadReduction when p divides a denominator or D.
struct ReducedQuad {
    bool in_fp = true;
    Fp fp;
    Fp2 fp2;
};
ReducedQuad reduce_quad(const QuadFieldNumber& b, std::int64_t p,
                        RootChoice root = RootChoice::Canonical);

} // namespace hgk3
