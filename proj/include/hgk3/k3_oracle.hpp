#pragma once
/// @brief Independent point-count oracles for the rank-3 transcendental trace.
///
/// Three surface families give statistics that see the transcendental trace
///   tr = L * chi * p + chi * A,        L = legendre(1 - a, p),
/// through an affine/projective point count or a quadratic character sum:
///
///   * a quartic surface  a x0^4 + x1^4 + x2^4 + x3^4 - 4 x0 x1 x2 x3 = 0
///     in P^3(F_p), whose count satisfies  count = 1 + p^2 + n p + tr  with
///     n an integer bounded by the rank of the algebraic part,
///   * a double cover  z^2 = x y (1 + x)(1 + y)(x - a y)  whose affine count
///     is  p^2 + S(a)  for a double character sum S,
///   * the triple product  (1 - x^2)(1 - y^2)(1 - z^2) = a  whose affine
///     count is  (p-1)^2 - 3(p-1) + 3 + T3(a)  for a triple character sum T3.
///
/// Each character sum has a slow direct count (independent route) and a fast
/// O(p^2) evaluation; `calibrate` fits the affine map between the observed
/// statistic and the predicted trace on small training primes and `validate`
/// replays the fitted model on fresh primes.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hgk3/cache.hpp"
#include "hgk3/frobenius_k3.hpp"

namespace hgk3 {

enum class SurfaceFamily { DworkQuartic, AOPDoubleCover, TripleProduct };

/// "dwork", "aop", "triple" (the names used on the command line and in CSV).
const char* surface_family_name(SurfaceFamily family);
SurfaceFamily surface_family_by_name(const std::string& name);

// ---------------------------------------------------------------------------
// Dwork-pencil quartic.
// ---------------------------------------------------------------------------

/// Number of projective points of  a x0^4 + x1^4 + x2^4 + x3^4 = 4 x0 x1 x2 x3
/// in P^3(F_p), counted stratum by stratum (first nonzero coordinate = 1).
/// O(p^3).  Pre: p > 3 prime, a(1-a) != 0 mod p.
std::int64_t count_dwork_quartic(std::int64_t a, std::int64_t p, CountCache* cache = nullptr);

/// Number of affine points of the cone in F_p^4 (origin included), by direct
/// O(p^4) scan.  Cross-check: equals (p-1) * projective + 1.  Pre: p <= 31.
std::int64_t dwork_affine_cone_count(std::int64_t a, std::int64_t p);

struct DworkReport {
    std::int64_t count = 0;        ///< projective point count
    std::int64_t tr_pred = 0;      ///< predicted transcendental trace (quarter family)
    std::int64_t n = 0;            ///< (count - 1 - p^2 - tr_pred) / p when divisible
    bool divisible = false;        ///< p | (count - 1 - p^2 - tr_pred)
    bool mod_p_corollary = false;  ///< count == 1 + chi * A (mod p)
    bool quotient_bounded = false; ///< |n| <= 19 (algebraic part has rank 19)
    bool pass = false;
};

/// Divisibility test  count - 1 - p^2 - tr_pred == 0 (mod p)  with the trace
/// predicted from the quarter family at parameter a.
DworkReport dwork_divisibility_check(std::int64_t a, std::int64_t p, int chi = +1,
                                     CountCache* cache = nullptr);

// ---------------------------------------------------------------------------
// Character-sum families.
// ---------------------------------------------------------------------------

/// T3(a) = sum_{u v w = a, u,v,w != 0} chi(1-u) chi(1-v) chi(1-w), O(p^2).
std::int64_t triple_char_sum(std::int64_t a, std::int64_t p, CountCache* cache = nullptr);

/// Direct O(p^3) count of (x,y,z) in F_p^3 with (1-x^2)(1-y^2)(1-z^2) = a.
/// Identity:  count = (p-1)^2 - 3(p-1) + 3 + T3(a).  Pre: p <= 64.
std::int64_t triple_product_affine_count(std::int64_t a, std::int64_t p);

/// S(a) = sum_{x,y} chi(x y (1+x)(1+y)(x - a y))  with chi(0) = 0, O(p^2).
std::int64_t double_char_sum(std::int64_t a, std::int64_t p, CountCache* cache = nullptr);

/// Direct O(p^3) count of (x,y,z) with z^2 = x y (1+x)(1+y)(x - a y).
/// Identity:  count = p^2 + S(a).  Pre: p <= 64.
std::int64_t aop_affine_count(std::int64_t a, std::int64_t p);

// ---------------------------------------------------------------------------
// Predicted trace and calibration.
// ---------------------------------------------------------------------------

/// tr = legendre(1-a, p) * chi * p + chi * A  for the given parameter triple.
std::int64_t predicted_transcendental_trace(const HGTriple& triple, const Rational& a,
                                            std::int64_t p, int chi = +1);

/// Quadruple of Legendre symbols classifying the arithmetic of (a, p):
/// (legendre(1-a), legendre(a), legendre(-1), legendre(d_alpha)).
struct Signature {
    int l_one_minus_a = 0;
    int l_a = 0;
    int l_minus_one = 0;
    int l_d = 0;

    friend bool operator==(const Signature& x, const Signature& y) {
        return x.l_one_minus_a == y.l_one_minus_a && x.l_a == y.l_a &&
               x.l_minus_one == y.l_minus_one && x.l_d == y.l_d;
    }
    friend bool operator<(const Signature& x, const Signature& y) {
        if (x.l_one_minus_a != y.l_one_minus_a) return x.l_one_minus_a < y.l_one_minus_a;
        if (x.l_a != y.l_a) return x.l_a < y.l_a;
        if (x.l_minus_one != y.l_minus_one) return x.l_minus_one < y.l_minus_one;
        return x.l_d < y.l_d;
    }
};

Signature make_signature(const HGTriple& triple, std::int64_t a, std::int64_t p);

/// e.g. "(+,-,+,-)".
std::string signature_string(const Signature& sig);

/// Observed statistic the calibration fits:  T3(a) for the triple product,
/// S(a) for the double cover.  (The quartic is checked by divisibility.)
std::int64_t observed_statistic(SurfaceFamily family, std::int64_t a, std::int64_t p,
                                CountCache* cache = nullptr);

/// Per-signature affine model:  observed = s * tr + c1 * p + c0.
struct CalibrationModel {
    SurfaceFamily family = SurfaceFamily::TripleProduct;
    int s = +1;  ///< global sign, the same for every signature class
    std::map<Signature, std::pair<std::int64_t, std::int64_t>> corrections;  ///< (c1, c0)

    /// (0, 0) for a signature that never occurred in training.
    std::pair<std::int64_t, std::int64_t> correction_for(const Signature& sig) const;
};

/// Fit s and the per-signature (c1, c0) over all valid a at the training
/// primes.  Tries s = +1 first, then s = -1; each class must admit an exact
/// integer fit with |c1| <= 24 and |c0| <= 24, else CalibrationFailure
/// (whose message tabulates the residuals of the s = +1 attempt).
CalibrationModel calibrate(SurfaceFamily family, const HGTriple& triple,
                           const std::vector<std::int64_t>& training_primes,
                           CountCache* cache = nullptr);

/// observed -> trace under the fitted model: s * (observed - c1 * p - c0).
std::int64_t extracted_trace(const CalibrationModel& model, const Signature& sig,
                             std::int64_t observed, std::int64_t p);

struct ValidationReport {
    bool ok = true;
    std::int64_t instances = 0;      ///< (a, p) pairs checked
    std::int64_t first_bad_p = 0;    ///< first counterexample, if any
    std::int64_t first_bad_a = 0;
    std::int64_t first_residual = 0;
    std::string detail;              ///< human-readable summary of the failure
};

/// Replay the fitted model on every valid a at every prime in [pmin, pmax]:
/// the residual observed - s*tr - c1*p - c0 must vanish and the extracted
/// trace must obey |tr| <= 3p.  Signatures unseen in training use (0, 0).
ValidationReport validate(const CalibrationModel& model, const HGTriple& triple,
                          std::int64_t pmin = 17, std::int64_t pmax = 50,
                          CountCache* cache = nullptr);

}  // namespace hgk3
