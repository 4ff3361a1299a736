#pragma once
/// @file rational.hpp
/// @brief Exact rational scalars and small helpers on top of
///        boost::multiprecision (arbitrary-precision, always reduced).

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgk3/errors.hpp"

namespace hgk3 {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// True iff q is a nonpositive integer (0, -1, -2, ...); these are the
/// forbidden lower parameters of a hypergeometric series.
inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && num(q) <= 0;
}

/// True iff p divides neither numerator nor denominator (q is a p-adic unit
/// times an integer power of 1 -- i.e. ord_p(q) == 0).
inline bool is_p_unit(const Rational& q, std::int64_t p) {
    return num(q) % p != 0 && den(q) % p != 0;
}

/// True iff the denominator is coprime to p (q lies in Z_(p)).
inline bool is_p_integral(const Rational& q, std::int64_t p) {
    return den(q) % p != 0;
}

/// Euclidean remainder of a big integer in [0, m).
inline std::int64_t mod_nonneg(const BigInt& n, std::int64_t m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return static_cast<std::int64_t>(r);
}

/// Parse "n" or "n/d" into a Rational.  Throws BadParameter on junk input.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw BadParameter("cannot parse rational: " + s);
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

} // namespace hgk3
