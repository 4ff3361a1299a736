#pragma once
/// @file frobenius_k3.hpp
/// @brief The zeta predictor: the degree-3 characteristic polynomial of
///        Frobenius on the rank-3 transcendental piece attached to a
///        hypergeometric triple, assembled from elliptic point counts, with
///        the Weil checks and the truncated-hypergeometric (Dwork-style)
///        unit-root congruences that certify it.

#include <cstdint>
#include <string>
#include <vector>

#include "hgk3/elliptic.hpp"
#include "hgk3/errors.hpp"
#include "hgk3/finite_field.hpp"
#include "hgk3/hg.hpp"
#include "hgk3/rational.hpp"

namespace hgk3 {

/// How the quadratic irrationality b = (1 - sqrt(1-a))/2 reduces at p.
enum class SplitCase {
    SplitField,        ///< sqrt(1-a) exists in Z_p: E_b lives over F_p
    InertOrdinary,     ///< b generates F_p2 and E_b is ordinary
    InertSupersingular ///< b generates F_p2 and E_b is supersingular
};
const char* split_case_name(SplitCase c);

/// Cubic 1 + c1 T + c2 T^2 + c3 T^3 stored together with its factorization
/// (1 - e1 p T)(1 - A T + p^2 T^2) over Z.
struct CharPoly3 {
    std::int64_t c1 = 0, c2 = 0, c3 = 0;
    int e1 = +1;        ///< sign of the linear root: factor (1 - e1 p T)
    std::int64_t A = 0; ///< trace of the quadratic factor (1 - A T + p^2 T^2)
    std::int64_t p = 0;

    friend bool operator==(const CharPoly3& x, const CharPoly3& y) {
        return x.c1 == y.c1 && x.c2 == y.c2 && x.c3 == y.c3 && x.p == y.p;
    }
    friend bool operator!=(const CharPoly3& x, const CharPoly3& y) { return !(x == y); }
};

/// Expand (1 - e1 p T)(1 - A T + p^2 T^2); e1 must be +-1.
CharPoly3 charpoly_from_factors(int e1, std::int64_t A, std::int64_t p);

/// "(1 - 7T)(1 - 2T + 49T^2)"-style rendering of the factored form.
std::string charpoly_factored_string(const CharPoly3& cp);
/// "1 - 9T + 63T^2 - 343T^3"-style rendering of the expanded form.
std::string charpoly_string(const CharPoly3& cp);

/// The primary family whose period pair matches the triple (up to
/// permutation).  Throws InadmissibleTriple otherwise.
CurveFamily family_of_triple(const HGTriple& triple);

/// Discriminant tag of the quadratic character entering the inert-ordinary
/// branch: -1 for the half and sixth triples, -2 for quarter, -3 for third.
int d_alpha(const HGTriple& triple);

/// Sign relating the trace of Frobenius of the family's model to the
/// truncated hypergeometric series in the split case: the x^(p-1)
/// coefficient of f(x)^((p-1)/2) equals this sign times F_{<p}(b), where the
/// sign comes from the leading/odd-coefficient structure of the model's
/// cubic (it is the Cartier action on the family's differential).
int cartier_twist_sign(const HGTriple& triple, std::int64_t p);

/// Coefficients of the truncated period series F_{<p} (the 2F1 of the
/// triple's parameter pair at lower parameter 1, truncated below p), reduced
/// mod p.  Needs p > 3 so the parameter denominators are units.
std::vector<std::int64_t> hasse_polynomial_mod_p(const HGTriple& triple, std::int64_t p);

/// Result of the branch computation for the quadratic trace A.
struct AResult {
    std::int64_t A = 0;               ///< the quadratic-factor trace before any chi twist
    SplitCase split_case = SplitCase::SplitField;
    std::int64_t trace = 0;           ///< a_p (split) or a_{p^2} (inert)
    std::vector<std::int64_t> counts; ///< exhaustive point counts consumed (provenance)
};

/// The branch formula at a rational parameter a (p-integral, with
/// a(1-a) != 0 mod p) and a prime p > 3:
///   split field       -> A = a_p(E_b)^2 - 2p
///   inert ordinary    -> A = legendre(d_alpha, p) * a_{p^2}(E_b)
///   inert supersingular -> A = 2p
/// where b = (1 - sqrt(1-a))/2 is reduced into F_p or F_p2.  The root choice
/// selects which of the two conjugate reductions is used (the result is
/// independent of it; exposed for exactly that property check).
AResult compute_A(const HGTriple& triple, const Rational& a, std::int64_t p,
                  RootChoice root = RootChoice::Canonical);

/// (1 - legendre(1-a,p) chi p T)(1 - chi A T + p^2 T^2) expanded.
CharPoly3 predict_charpoly(const HGTriple& triple, const Rational& a, std::int64_t p,
                           int chi = +1, RootChoice root = RootChoice::Canonical);

/// Same polynomial by the independent route through the auxiliary curve
/// defined over F_p (half and sixth triples only):
/// (1 - L chi p T)(1 - L chi a_{p^2}(C_a) T + p^2 T^2) with L = legendre(1-a,p)
/// and a_{p^2}(C_a) = a_p(C_a)^2 - 2p.
CharPoly3 predict_charpoly_C(const HGTriple& triple, const Rational& a, std::int64_t p,
                             int chi = +1);

/// Characteristic polynomial of Sym^2 of a rank-2 Weil piece with trace a_q
/// and determinant q: (1 - qT)(1 - (a_q^2 - 2q) T + q^2 T^2).
/// Throws HasseViolation when |a_q| > 2 sqrt(q).
CharPoly3 sym2_charpoly(std::int64_t a_q, std::int64_t q);

/// Outcome of the Weil-consistency audit of a CharPoly3 (never throws).
struct WeilCheck {
    bool ok = true;
    std::string reason; ///< first failed check, empty when ok
    explicit operator bool() const { return ok; }
};

/// Audit: c3 = +-p^3; the coefficients factor over Z as
/// (1 - e1 p T)(1 - A T + p^2 T^2) matching the stored factorization;
/// |A| <= 2p; and when |A| = 2p (the supersingular shape) the root multiset
/// is {p, p, -p} up to a global sign s with the trace congruent to s p
/// mod p^2.
WeilCheck verify_weil(const CharPoly3& cp, std::int64_t p);

/// Per-point report of the unit-root congruences at an ordinary fiber.
struct UnitRootReport {
    SplitCase split_case = SplitCase::SplitField;
    std::int64_t trace = 0;   ///< a_p (split) or a_{p^2} (inert)
    std::int64_t f_value = 0; ///< F_{<p}(b) in F_p, or the product F_{<p}(b) F_{<p}(1-b)
    int sigma = +1;           ///< Cartier twist sign used (split case; +1 inert)
    int ratio = 0;            ///< F_{<p}(b) / F_{<p}(1-b) as +-1 (inert case; 0 split)
    int d_symbol = 0;         ///< legendre(d_alpha, p)
    bool trace_congruence = false;
    bool ratio_congruence = false;
    bool ok = false;
};

/// Check the congruences that pin the unit root of the quadratic factor:
///   split field:    a_p(E_b)     = sigma * F_{<p}(b)            mod p
///   inert ordinary: a_{p^2}(E_b) = F_{<p}(b) * F_{<p}(1-b)      mod p
///                   F_{<p}(b) / F_{<p}(1-b) = legendre(d_alpha, p)
/// (the inert evaluations take place in F_p2, where 1-b is the conjugate of
/// b, so the product is a norm and lands in F_p).  Throws SupersingularInput
/// when the fiber is supersingular (F_{<p}(b) = 0 blocks the ratio).
UnitRootReport verify_unit_root_congruences(const HGTriple& triple, const Rational& a,
                                            std::int64_t p);

} // namespace hgk3
