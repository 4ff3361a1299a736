#pragma once
/// @file elliptic.hpp
/// @brief Elliptic fibers of the four hypergeometric families and their
///        auxiliary models: curves over F_p and F_{p^2} (allowing a scaled
///        lambda y^2 = f(x) form), exhaustive point counts, traces,
///        supersingularity, classical Weierstrass data, the parameter-flip
///        2-isogenies, and a point-count CM heuristic.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hgk3/errors.hpp"
#include "hgk3/finite_field.hpp"
#include "hgk3/hg.hpp"
#include "hgk3/polyq.hpp"
#include "hgk3/rational.hpp"

namespace hgk3 {

/// The four elliptic families (indexed by the fractional parameter pair of
/// their period series) plus the two auxiliary models defined directly in
/// terms of a = 4b(1-b).
enum class CurveFamily { half, third, quarter, sixth, c_half, c_sixth };

const char* family_name(CurveFamily fam);
CurveFamily family_by_name(const std::string& name);
/// The four primary families (excludes the auxiliary c_* models).
std::vector<CurveFamily> all_families();
bool is_e_family(CurveFamily fam);

/// The fractional pair (alpha0, alpha1) whose 2F1 at 1 is the period series
/// of a primary family.
std::pair<Rational, Rational> family_parameters(CurveFamily fam);

/// Constant in the same field as `like`.
Fp const_like(const Fp& like, std::int64_t v);
Fp2 const_like(const Fp2& like, std::int64_t v);

/// Cubic model lambda y^2 = x^3 + a2 x^2 + a4 x + a6 over K (K = Fp or Fp2);
/// lambda = 1 is the plain Weierstrass case.
template <class K>
struct Curve {
    K a2, a4, a6;
    K lambda;

    K rhs(const K& x) const { return ((x + a2) * x + a4) * x + a6; }

    /// Discriminant of the cubic (zero iff the fiber is singular).
    K cubic_disc() const {
        K b = a2, c = a4, d = a6;
        K t18 = const_like(b, 18), t4 = const_like(b, 4), t27 = const_like(b, 27);
        return t18 * b * c * d - t4 * b * b * b * d + b * b * c * c - t4 * c * c * c -
               t27 * d * d;
    }
    bool is_singular() const { return lambda.is_zero() || cubic_disc().is_zero(); }
};

template <class K>
Curve<K> make_curve(const K& a2, const K& a4, const K& a6) {
    return {a2, a4, a6, const_like(a2, 1)};
}

/// Fiber of the family at the given parameter (b for the primary families,
/// a for the auxiliary models):
///   half   : y^2 = x(x-1)(x-b)
///   third  : y^2 = x^3 + (3x + 4(1-b))^2
///   quarter: y^2 = x(x^2 - 2x + 1 - b)
///   sixth  : y^2 = 4x^3 - 3x + 1 - 2b, rescaled to the monic cubic
///            y^2 = x^3 - 12x + 16(1-2b) (point count preserved)
///   c_half : y^2 = x^3 - 2x^2 + (a/(a-1)) x
///   c_sixth: y^2 = x^3 - 12(1-a)x + 16(1-a)^2
/// Throws SingularFiber when the discriminant vanishes (for c_half also at
/// the pole a = 1).
template <class K>
Curve<K> curve_at(CurveFamily fam, const K& param);

/// #E(F_p) including the point at infinity; lambda-scaled models count
/// chi(lambda^-1 f(x)).
std::int64_t count_points(const Curve<Fp>& e);
/// #E(F_{p^2}) including the point at infinity.
std::int64_t count_points(const Curve<Fp2>& e);

/// q + 1 - n for a count n over F_q, checking the Hasse bound
/// (throws HasseViolation, which would indicate a counting bug).
std::int64_t trace_from_count(std::int64_t q, std::int64_t n);

/// Trace of Frobenius q + 1 - #E(F_q), Hasse-checked.
std::int64_t trace_of_frobenius(const Curve<Fp>& e);
std::int64_t trace_of_frobenius(const Curve<Fp2>& e);

/// a_{p^2}: for a curve over F_p via a_p^2 - 2p; for a curve over F_{p^2} by
/// direct count.
std::int64_t trace_ap2(const Curve<Fp>& e);
std::int64_t trace_ap2(const Curve<Fp2>& e);

/// a_{p^2} for a curve defined over F_p, via a_p^2 - 2p.
std::int64_t ap2_from_ap(std::int64_t ap, std::int64_t p);

/// Supersingular iff the trace vanishes mod p.
bool is_supersingular(const Curve<Fp>& e);
bool is_supersingular(const Curve<Fp2>& e);

/// j-invariant of a concrete smooth curve: j = 1728 g2^3 / (g2^3 - 27 g3^2)
/// after depressing the cubic (needs p > 3).
Fp j_invariant(const Curve<Fp>& e);
Fp2 j_invariant(const Curve<Fp2>& e);

/// Classical Weierstrass data of a primary family at parameter s:
/// y^2 = 4x^3 - g2(s) x - g3(s) with delta = g2^3 - 27 g3^2, normalized by a
/// constant rescaling (x, y) -> (u^2 x, u^3 y) so that delta(0) = 0 and
/// g2(0) g3(0) != 0.  The change of variables back to the defining model is
/// recorded: x_model = u^2 x_short + x_shift.
struct NormalForm {
    Poly g2, g3, delta;
    Rational u;   ///< rescaling constant
    Poly x_shift; ///< shift applied when depressing the cubic
};
NormalForm normal_form(CurveFamily fam);

/// j-invariant 1728 g2^3 / delta of a primary family as a rational function
/// of the parameter.
RationalFunction family_j_invariant(CurveFamily fam);

/// Verify the parameter-flip 2-isogeny E_b -> (lambda-scaled model at 1-b)
/// at a concrete fiber over F_{p^2}:
///  (a) pointwise, every source point with defined image lands on the target
///      equation lambda Y^2 = f_{1-b}(X) (checked as the square-compatibility
///      lambda f_b(x) rho(x)^2 = f_{1-b}(X(x)) away from the excluded x);
///  (b) #E_b(F_{p^2}) equals the target model's F_{p^2} count.
/// The scale lambda is -1, -3, -2, -1 for half, third, quarter, sixth.
/// Throws SingularFiber when either fiber is singular.
bool verify_isogeny(CurveFamily fam, const Fp2& b);
/// Convenience overload for a prime-field parameter (embedded into F_{p^2}).
bool verify_isogeny(CurveFamily fam, const Fp& b);

/// Outcome of the CM point-count heuristic for the fiber at a rational a.
struct CMDecision {
    bool is_cm = false;
    int supersingular = 0; ///< good primes with trace = 0 mod p
    int ordinary = 0;
    std::vector<std::int64_t> skipped;   ///< primes skipped (p <= 3, bad reduction, singular fiber)
    std::vector<std::int64_t> ss_primes; ///< the supersingular primes, for inspection
    double ss_fraction() const {
        int n = supersingular + ordinary;
        return n == 0 ? 0.0 : static_cast<double>(supersingular) / n;
    }
};

/// Decide CM for the fiber of `fam` at b = (1 - sqrt(1-a))/2 by sampling the
/// supersingular density over primes p <= bound (split primes reduce to F_p,
/// inert primes to F_{p^2}): a CM curve is supersingular at density 1/2, a
/// non-CM curve at density 0.  Threshold 0.30.  Requires a not in {0, 1} and
/// bound >= 200.
CMDecision is_cm_heuristic(CurveFamily fam, const Rational& a, std::int64_t bound);

/// The rational parameters a for which the fiber family degenerates to
/// Picard number 20, equivalently the fiber elliptic curve has complex
/// multiplication.  Known complete lists (7, 12, 14, 11 entries).
const std::vector<Rational>& cm_parameter_table(CurveFamily fam);

} // namespace hgk3
