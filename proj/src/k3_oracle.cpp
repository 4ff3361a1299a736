#include "hgk3/k3_oracle.hpp"

#include <algorithm>
#include <sstream>

#include "hgk3/errors.hpp"
#include "hgk3/finite_field.hpp"

namespace hgk3 {

namespace {

void check_oracle_prime(std::int64_t p) {
    if (p <= 3 || !is_prime(p)) throw BadParameter("oracle requires a prime p > 3");
}

void check_oracle_parameter(std::int64_t a, std::int64_t p) {
    check_oracle_prime(p);
    if (mod_nonneg(BigInt(a), p) == 0 || mod_nonneg(BigInt(1 - a), p) == 0)
        throw BadParameter("a(1-a) vanishes mod p");
}

std::string param_key(std::int64_t a) { return "a=" + std::to_string(a); }

/// chi table with chi[0] = 0.
std::vector<signed char> chi_table(std::int64_t p) { return legendre_table(p); }

std::vector<std::int64_t> inverse_table(std::int64_t p) {
    std::vector<std::int64_t> inv(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x) inv[static_cast<std::size_t>(x)] = invmod(x, p);
    return inv;
}

}  // namespace

const char* surface_family_name(SurfaceFamily family) {
    switch (family) {
        case SurfaceFamily::DworkQuartic: return "dwork";
        case SurfaceFamily::AOPDoubleCover: return "aop";
        case SurfaceFamily::TripleProduct: return "triple";
    }
    throw BadParameter("unknown surface family");
}

SurfaceFamily surface_family_by_name(const std::string& name) {
    if (name == "dwork") return SurfaceFamily::DworkQuartic;
    if (name == "aop") return SurfaceFamily::AOPDoubleCover;
    if (name == "triple") return SurfaceFamily::TripleProduct;
    throw BadParameter("unknown surface family: " + name);
}

// ---------------------------------------------------------------------------
// Dwork-pencil quartic.
// ---------------------------------------------------------------------------

std::int64_t count_dwork_quartic(std::int64_t a, std::int64_t p, CountCache* cache) {
    check_oracle_parameter(a, p);
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    CacheKey key{"dwork_quartic", p, param_key(a0)};
    auto compute = [&]() -> std::int64_t {
        // Fourth powers, reused in every stratum.
        std::vector<std::int64_t> pw4(static_cast<std::size_t>(p));
        for (std::int64_t x = 0; x < p; ++x)
            pw4[static_cast<std::size_t>(x)] = mulmod(mulmod(x, x, p), mulmod(x, x, p), p);

        std::int64_t total = 0;
        // Stratum x0 = 1:  a + x1^4 + x2^4 + x3^4 - 4 x1 x2 x3 = 0.
        for (std::int64_t x1 = 0; x1 < p; ++x1) {
            const std::int64_t s1 = (a0 + pw4[static_cast<std::size_t>(x1)]) % p;
            for (std::int64_t x2 = 0; x2 < p; ++x2) {
                const std::int64_t s2 = (s1 + pw4[static_cast<std::size_t>(x2)]) % p;
                const std::int64_t m = mulmod(4 * x1 % p, x2, p);
                for (std::int64_t x3 = 0; x3 < p; ++x3) {
                    const std::int64_t lhs =
                        (s2 + pw4[static_cast<std::size_t>(x3)] + (p - mulmod(m, x3, p))) % p;
                    if (lhs == 0) ++total;
                }
            }
        }
        // Stratum x0 = 0, x1 = 1:  1 + x2^4 + x3^4 = 0  (the product term dies).
        for (std::int64_t x2 = 0; x2 < p; ++x2) {
            const std::int64_t s2 = (1 + pw4[static_cast<std::size_t>(x2)]) % p;
            for (std::int64_t x3 = 0; x3 < p; ++x3)
                if ((s2 + pw4[static_cast<std::size_t>(x3)]) % p == 0) ++total;
        }
        // Stratum x0 = x1 = 0, x2 = 1:  1 + x3^4 = 0.
        for (std::int64_t x3 = 0; x3 < p; ++x3)
            if ((1 + pw4[static_cast<std::size_t>(x3)]) % p == 0) ++total;
        // Stratum x0 = x1 = x2 = 0, x3 = 1:  1 = 0, never.
        return total;
    };
    if (cache != nullptr) return cache->count_or_compute(key, compute);
    return compute();
}

std::int64_t dwork_affine_cone_count(std::int64_t a, std::int64_t p) {
    check_oracle_parameter(a, p);
    if (p > 31) throw BadParameter("direct O(p^4) cone scan is limited to p <= 31");
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    std::vector<std::int64_t> pw4(static_cast<std::size_t>(p));
    for (std::int64_t x = 0; x < p; ++x)
        pw4[static_cast<std::size_t>(x)] = mulmod(mulmod(x, x, p), mulmod(x, x, p), p);
    std::int64_t total = 0;
    for (std::int64_t x0 = 0; x0 < p; ++x0)
        for (std::int64_t x1 = 0; x1 < p; ++x1)
            for (std::int64_t x2 = 0; x2 < p; ++x2)
                for (std::int64_t x3 = 0; x3 < p; ++x3) {
                    std::int64_t f = mulmod(a0, pw4[static_cast<std::size_t>(x0)], p);
                    f = (f + pw4[static_cast<std::size_t>(x1)] + pw4[static_cast<std::size_t>(x2)] +
                         pw4[static_cast<std::size_t>(x3)]) %
                        p;
                    const std::int64_t m =
                        mulmod(mulmod(4 * x0 % p, x1, p), mulmod(x2, x3, p), p);
                    if ((f + p - m) % p == 0) ++total;
                }
    return total;
}

DworkReport dwork_divisibility_check(std::int64_t a, std::int64_t p, int chi, CountCache* cache) {
    if (chi != 1 && chi != -1) throw BadParameter("chi must be +1 or -1");
    DworkReport rep;
    rep.count = count_dwork_quartic(a, p, cache);
    const HGTriple quarter = HGTriple::quarter();
    rep.tr_pred = predicted_transcendental_trace(quarter, Rational(a), p, chi);
    const std::int64_t delta = rep.count - 1 - p * p - rep.tr_pred;
    rep.divisible = (delta % p == 0);
    if (rep.divisible) rep.n = delta / p;
    // count = 1 + p^2 + n p + tr  ==>  count == 1 + chi * A (mod p).
    const AResult ar = compute_A(quarter, Rational(a), p);
    rep.mod_p_corollary =
        mod_nonneg(BigInt(rep.count), p) == mod_nonneg(BigInt(1 + chi * ar.A), p);
    rep.quotient_bounded = rep.divisible && std::llabs(rep.n) <= 19;
    rep.pass = rep.divisible && rep.mod_p_corollary && rep.quotient_bounded;
    return rep;
}

// ---------------------------------------------------------------------------
// Character-sum families.
// ---------------------------------------------------------------------------

std::int64_t triple_char_sum(std::int64_t a, std::int64_t p, CountCache* cache) {
    check_oracle_parameter(a, p);
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    CacheKey key{"triple_product_sum", p, param_key(a0)};
    auto compute = [&]() -> std::int64_t {
        const std::vector<signed char> chi = chi_table(p);
        const std::vector<std::int64_t> inv = inverse_table(p);
        std::int64_t s = 0;
        for (std::int64_t u = 1; u < p; ++u) {
            const int cu = chi[static_cast<std::size_t>((1 - u + p) % p)];
            if (cu == 0) continue;
            const std::int64_t au = mulmod(a0, inv[static_cast<std::size_t>(u)], p);
            for (std::int64_t v = 1; v < p; ++v) {
                const int cv = chi[static_cast<std::size_t>((1 - v + p) % p)];
                if (cv == 0) continue;
                const std::int64_t w = mulmod(au, inv[static_cast<std::size_t>(v)], p);
                s += cu * cv * chi[static_cast<std::size_t>((1 - w + p) % p)];
            }
        }
        return s;
    };
    if (cache != nullptr) return cache->count_or_compute(key, compute);
    return compute();
}

std::int64_t triple_product_affine_count(std::int64_t a, std::int64_t p) {
    check_oracle_parameter(a, p);
    if (p > 64) throw BadParameter("direct O(p^3) scan is limited to p <= 64");
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    std::vector<std::int64_t> q(static_cast<std::size_t>(p));
    for (std::int64_t x = 0; x < p; ++x)
        q[static_cast<std::size_t>(x)] = (1 - mulmod(x, x, p) + p) % p;
    std::int64_t total = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t xy =
                mulmod(q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)], p);
            for (std::int64_t z = 0; z < p; ++z)
                if (mulmod(xy, q[static_cast<std::size_t>(z)], p) == a0) ++total;
        }
    return total;
}

std::int64_t double_char_sum(std::int64_t a, std::int64_t p, CountCache* cache) {
    check_oracle_parameter(a, p);
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    CacheKey key{"aop_double_sum", p, param_key(a0)};
    auto compute = [&]() -> std::int64_t {
        const std::vector<signed char> chi = chi_table(p);
        std::int64_t s = 0;
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y) {
                std::int64_t f = mulmod(x, y, p);
                f = mulmod(f, (1 + x) % p, p);
                f = mulmod(f, (1 + y) % p, p);
                f = mulmod(f, (x - mulmod(a0, y, p) + p) % p, p);
                s += chi[static_cast<std::size_t>(f)];
            }
        return s;
    };
    if (cache != nullptr) return cache->count_or_compute(key, compute);
    return compute();
}

std::int64_t aop_affine_count(std::int64_t a, std::int64_t p) {
    check_oracle_parameter(a, p);
    if (p > 64) throw BadParameter("direct O(p^3) scan is limited to p <= 64");
    const std::int64_t a0 = mod_nonneg(BigInt(a), p);
    std::int64_t total = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            std::int64_t f = mulmod(x, y, p);
            f = mulmod(f, (1 + x) % p, p);
            f = mulmod(f, (1 + y) % p, p);
            f = mulmod(f, (x - mulmod(a0, y, p) + p) % p, p);
            for (std::int64_t z = 0; z < p; ++z)
                if (mulmod(z, z, p) == f) ++total;
        }
    return total;
}

// ---------------------------------------------------------------------------
// Predicted trace and calibration.
// ---------------------------------------------------------------------------

std::int64_t predicted_transcendental_trace(const HGTriple& triple, const Rational& a,
                                            std::int64_t p, int chi) {
    if (chi != 1 && chi != -1) throw BadParameter("chi must be +1 or -1");
    const AResult r = compute_A(triple, a, p);  // validates the whole domain
    const Fp om = reduce_mod_p(Rational(1) - a, p);
    const int ell = static_cast<int>(legendre(om.v, p));
    return static_cast<std::int64_t>(ell * chi) * p + static_cast<std::int64_t>(chi) * r.A;
}

Signature make_signature(const HGTriple& triple, std::int64_t a, std::int64_t p) {
    check_oracle_parameter(a, p);
    Signature sig;
    sig.l_one_minus_a = static_cast<int>(legendre(mod_nonneg(BigInt(1 - a), p), p));
    sig.l_a = static_cast<int>(legendre(mod_nonneg(BigInt(a), p), p));
    sig.l_minus_one = static_cast<int>(legendre(p - 1, p));
    sig.l_d = static_cast<int>(legendre(mod_nonneg(BigInt(d_alpha(triple)), p), p));
    return sig;
}

std::string signature_string(const Signature& sig) {
    auto pm = [](int v) { return v >= 0 ? '+' : '-'; };
    std::string s = "(";
    s += pm(sig.l_one_minus_a);
    s += ',';
    s += pm(sig.l_a);
    s += ',';
    s += pm(sig.l_minus_one);
    s += ',';
    s += pm(sig.l_d);
    s += ')';
    return s;
}

std::int64_t observed_statistic(SurfaceFamily family, std::int64_t a, std::int64_t p,
                                CountCache* cache) {
    switch (family) {
        case SurfaceFamily::TripleProduct: return triple_char_sum(a, p, cache);
        case SurfaceFamily::AOPDoubleCover: return double_char_sum(a, p, cache);
        case SurfaceFamily::DworkQuartic:
            throw BadParameter("the quartic family is checked by divisibility, not calibration");
    }
    throw BadParameter("unknown surface family");
}

std::pair<std::int64_t, std::int64_t> CalibrationModel::correction_for(
    const Signature& sig) const {
    auto it = corrections.find(sig);
    if (it == corrections.end()) return {0, 0};
    return it->second;
}

namespace {

struct TrainingPoint {
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t observed = 0;
    std::int64_t trace = 0;
};

/// Exact integer fit of r = c1 * p + c0 over one signature class, or failure.
bool fit_class(const std::vector<std::pair<std::int64_t, std::int64_t>>& pr,
               std::pair<std::int64_t, std::int64_t>& out) {
    // Find two distinct primes, if any.
    std::int64_t p1 = pr.front().first, r1 = pr.front().second;
    std::int64_t c1 = 0, c0 = r1;
    for (const auto& [p2, r2] : pr) {
        if (p2 == p1) continue;
        if ((r1 - r2) % (p1 - p2) != 0) return false;
        c1 = (r1 - r2) / (p1 - p2);
        c0 = r1 - c1 * p1;
        break;
    }
    for (const auto& [p, r] : pr)
        if (r != c1 * p + c0) return false;
    if (std::llabs(c1) > 24 || std::llabs(c0) > 24) return false;
    out = {c1, c0};
    return true;
}

}  // namespace

CalibrationModel calibrate(SurfaceFamily family, const HGTriple& triple,
                           const std::vector<std::int64_t>& training_primes,
                           CountCache* cache) {
    if (training_primes.empty()) throw BadParameter("calibration needs at least one training prime");
    for (std::int64_t p : training_primes) check_oracle_prime(p);

    std::vector<TrainingPoint> points;
    for (std::int64_t p : training_primes)
        for (std::int64_t a = 2; a < p; ++a) {
            // a = 1 is excluded (1 - a vanishes); a = 0 never occurs.
            TrainingPoint pt;
            pt.p = p;
            pt.a = a;
            pt.observed = observed_statistic(family, a, p, cache);
            pt.trace = predicted_transcendental_trace(triple, Rational(a), p);
            points.push_back(pt);
        }
    if (points.empty()) throw BadParameter("no valid parameters at the training primes");

    std::string residual_table;  // from the s = +1 attempt, for the failure message
    for (int s : {+1, -1}) {
        std::map<Signature, std::vector<std::pair<std::int64_t, std::int64_t>>> classes;
        for (const TrainingPoint& pt : points)
            classes[make_signature(triple, pt.a, pt.p)].push_back(
                {pt.p, pt.observed - s * pt.trace});

        if (s == +1) {
            std::ostringstream os;
            for (const auto& [sig, pr] : classes) {
                os << "  " << signature_string(sig) << ":";
                for (const auto& [p, r] : pr) os << " (p=" << p << ", r=" << r << ")";
                os << "\n";
            }
            residual_table = os.str();
        }

        CalibrationModel model;
        model.family = family;
        model.s = s;
        bool ok = true;
        for (const auto& [sig, pr] : classes) {
            std::pair<std::int64_t, std::int64_t> c;
            if (!fit_class(pr, c)) {
                ok = false;
                break;
            }
            model.corrections[sig] = c;
        }
        if (ok) return model;
    }
    throw CalibrationFailure("no exact per-signature affine fit with |c1|,|c0| <= 24; residuals (s=+1):\n" +
                             residual_table);
}

std::int64_t extracted_trace(const CalibrationModel& model, const Signature& sig,
                             std::int64_t observed, std::int64_t p) {
    const auto [c1, c0] = model.correction_for(sig);
    return model.s * (observed - c1 * p - c0);
}

ValidationReport validate(const CalibrationModel& model, const HGTriple& triple,
                          std::int64_t pmin, std::int64_t pmax, CountCache* cache) {
    ValidationReport rep;
    for (std::int64_t p : primes_up_to(pmax)) {
        if (p < pmin || p <= 3) continue;
        for (std::int64_t a = 2; a < p; ++a) {
            const std::int64_t observed = observed_statistic(model.family, a, p, cache);
            const std::int64_t trace = predicted_transcendental_trace(triple, Rational(a), p);
            const Signature sig = make_signature(triple, a, p);
            const std::int64_t tr_ext = extracted_trace(model, sig, observed, p);
            const std::int64_t residual = tr_ext - trace;
            ++rep.instances;
            if (residual != 0 || std::llabs(tr_ext) > 3 * p) {
                rep.ok = false;
                rep.first_bad_p = p;
                rep.first_bad_a = a;
                rep.first_residual = residual;
                std::ostringstream os;
                os << "first counterexample at p=" << p << ", a=" << a << ", signature "
                   << signature_string(sig) << ": observed=" << observed
                   << ", extracted=" << tr_ext << ", predicted=" << trace
                   << ", residual=" << residual;
                rep.detail = os.str();
                return rep;
            }
        }
    }
    rep.detail = "all residuals vanish";
    return rep;
}

}  // namespace hgk3
