#pragma once
/// @file modp.hpp
/// @brief Residue arithmetic mod p^k (p an odd prime), the reduction target
///        for congruence checks on truncated series.

#include <cstdint>
#include <numeric>
#include <string>

#include "hgk3/errors.hpp"
#include "hgk3/rational.hpp"

namespace hgk3 {

/// An element of Z/p^k with 0 <= residue < p^k.  The modulus travels with the
/// value; binary operations require equal moduli.
struct ModPrimePower {
    std::int64_t residue = 0;
    std::int64_t modulus = 0; // p^k

    ModPrimePower() = default;
    ModPrimePower(std::int64_t r, std::int64_t m) : residue(r), modulus(m) {
        normalize();
    }

    void normalize() {
        residue %= modulus;
        if (residue < 0) residue += modulus;
    }

    static void require_same(const ModPrimePower& a, const ModPrimePower& b) {
        if (a.modulus != b.modulus)
            throw error("ModPrimePower: mixed moduli " +
                        std::to_string(a.modulus) + " vs " + std::to_string(b.modulus));
    }

    friend ModPrimePower operator+(const ModPrimePower& a, const ModPrimePower& b) {
        require_same(a, b);
        return {a.residue + b.residue, a.modulus};
    }
    friend ModPrimePower operator-(const ModPrimePower& a, const ModPrimePower& b) {
        require_same(a, b);
        return {a.residue - b.residue, a.modulus};
    }
    friend ModPrimePower operator*(const ModPrimePower& a, const ModPrimePower& b) {
        require_same(a, b);
        __int128 prod = static_cast<__int128>(a.residue) * b.residue;
        return {static_cast<std::int64_t>(prod % a.modulus), a.modulus};
    }
    friend ModPrimePower operator-(const ModPrimePower& a) {
        return {-a.residue, a.modulus};
    }
    friend bool operator==(const ModPrimePower& a, const ModPrimePower& b) {
        return a.modulus == b.modulus && a.residue == b.residue;
    }
    friend bool operator!=(const ModPrimePower& a, const ModPrimePower& b) {
        return !(a == b);
    }

    bool is_zero() const { return residue == 0; }
};

/// Extended-gcd modular inverse; throws NonInvertibleModulus when
/// gcd(residue, modulus) != 1.
inline ModPrimePower inverse(const ModPrimePower& a) {
    std::int64_t t = 0, new_t = 1, r = a.modulus, new_r = a.residue;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1)
        throw NonInvertibleModulus("residue " + std::to_string(a.residue) +
                                   " not invertible mod " + std::to_string(a.modulus));
    return {t, a.modulus};
}

/// Reduce a rational with p-coprime denominator into Z/p^k.
inline ModPrimePower reduce_rational(const Rational& q, std::int64_t pk) {
    std::int64_t d = mod_nonneg(den(q), pk);
    ModPrimePower dm(d, pk);
    ModPrimePower nm(mod_nonneg(num(q), pk), pk);
    return nm * inverse(dm); // inverse() rejects p | denominator
}

// --- scalar customization points shared with TruncatedSeries ---

inline ModPrimePower zero_like(const ModPrimePower& s) { return {0, s.modulus}; }
inline ModPrimePower one_like(const ModPrimePower& s) { return {1, s.modulus}; }
inline ModPrimePower scalar_from_int(const ModPrimePower& like, std::int64_t v) {
    return {v % like.modulus, like.modulus};
}
inline bool is_unit_scalar(const ModPrimePower& s) {
    return std::gcd(s.residue, s.modulus) == 1;
}
inline ModPrimePower recip(const ModPrimePower& s) { return inverse(s); }
inline bool scalar_is_zero(const ModPrimePower& s) { return s.is_zero(); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scalar_from_int(const Rational&, std::int64_t v) { return Rational(v); }
inline bool is_unit_scalar(const Rational& q) { return q != 0; }
inline Rational recip(const Rational& q) { return Rational(1) / q; }
inline bool scalar_is_zero(const Rational& q) { return q == 0; }

} // namespace hgk3
