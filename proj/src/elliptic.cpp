#include "hgk3/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace hgk3 {

const char* family_name(CurveFamily fam) {
    switch (fam) {
        case CurveFamily::half: return "half";
        case CurveFamily::third: return "third";
        case CurveFamily::quarter: return "quarter";
        case CurveFamily::sixth: return "sixth";
        case CurveFamily::c_half: return "c_half";
        case CurveFamily::c_sixth: return "c_sixth";
    }
    throw BadParameter("unknown curve family");
}

CurveFamily family_by_name(const std::string& name) {
    for (CurveFamily fam :
         {CurveFamily::half, CurveFamily::third, CurveFamily::quarter, CurveFamily::sixth,
          CurveFamily::c_half, CurveFamily::c_sixth})
        if (name == family_name(fam)) return fam;
    throw BadParameter("unknown curve family: " + name);
}

std::vector<CurveFamily> all_families() {
    return {CurveFamily::half, CurveFamily::third, CurveFamily::quarter, CurveFamily::sixth};
}

bool is_e_family(CurveFamily fam) {
    return fam != CurveFamily::c_half && fam != CurveFamily::c_sixth;
}

std::pair<Rational, Rational> family_parameters(CurveFamily fam) {
    switch (fam) {
        case CurveFamily::half: return {Rational(1, 2), Rational(1, 2)};
        case CurveFamily::third: return {Rational(1, 3), Rational(2, 3)};
        case CurveFamily::quarter: return {Rational(1, 4), Rational(3, 4)};
        case CurveFamily::sixth: return {Rational(1, 6), Rational(5, 6)};
        default: break;
    }
    throw BadParameter("fractional parameters exist only for the primary families");
}

Fp const_like(const Fp& like, std::int64_t v) { return Fp(v, like.p); }
Fp2 const_like(const Fp2& like, std::int64_t v) { return Fp2(v, 0, like.p, like.d); }

template <class K>
Curve<K> curve_at(CurveFamily fam, const K& param) {
    K one = const_like(param, 1);
    Curve<K> e;
    e.lambda = one;
    const K& b = param;
    switch (fam) {
        case CurveFamily::half:
            // y^2 = x(x-1)(x-b)
            e.a2 = -(one + b);
            e.a4 = b;
            e.a6 = const_like(b, 0);
            break;
        case CurveFamily::third: {
            // y^2 = x^3 + (3x + 4(1-b))^2
            K c = one - b;
            e.a2 = const_like(b, 9);
            e.a4 = const_like(b, 24) * c;
            e.a6 = const_like(b, 16) * c * c;
            break;
        }
        case CurveFamily::quarter:
            // y^2 = x(x^2 - 2x + 1 - b)
            e.a2 = const_like(b, -2);
            e.a4 = one - b;
            e.a6 = const_like(b, 0);
            break;
        case CurveFamily::sixth:
            // monic rescale of y^2 = 4x^3 - 3x + 1 - 2b
            e.a2 = const_like(b, 0);
            e.a4 = const_like(b, -12);
            e.a6 = const_like(b, 16) * (one - const_like(b, 2) * b);
            break;
        case CurveFamily::c_half: {
            // y^2 = x^3 - 2x^2 + (a/(a-1)) x
            if ((param - one).is_zero())
                throw SingularFiber("auxiliary half model has a pole at a = 1");
            e.a2 = const_like(param, -2);
            e.a4 = param * (param - one).inv();
            e.a6 = const_like(param, 0);
            break;
        }
        case CurveFamily::c_sixth: {
            // y^2 = x^3 - 12(1-a)x + 16(1-a)^2
            K c = one - param;
            e.a2 = const_like(param, 0);
            e.a4 = const_like(param, -12) * c;
            e.a6 = const_like(param, 16) * c * c;
            break;
        }
    }
    if (e.is_singular()) throw SingularFiber("discriminant vanishes at this parameter");
    return e;
}
template Curve<Fp> curve_at<Fp>(CurveFamily, const Fp&);
template Curve<Fp2> curve_at<Fp2>(CurveFamily, const Fp2&);

std::int64_t count_points(const Curve<Fp>& e) {
    const std::int64_t p = e.a2.p;
    std::vector<signed char> chi = legendre_table(p);
    bool plain = e.lambda == Fp(1, p);
    Fp li = plain ? e.lambda : e.lambda.inv();
    std::int64_t n = p + 1; // affine x-lines contribute 1 + chi(lambda^-1 f(x)) each
    for (std::int64_t x = 0; x < p; ++x) {
        Fp fx = e.rhs(Fp(x, p));
        if (!plain) fx = li * fx;
        n += chi[static_cast<std::size_t>(fx.v)];
    }
    return n;
}

std::int64_t count_points(const Curve<Fp2>& e) {
    const std::int64_t p = e.a2.p;
    std::vector<signed char> chi = legendre_table(p);
    bool plain = e.lambda == Fp2(1, 0, p, e.a2.d);
    Fp2 li = plain ? e.lambda : e.lambda.inv();
    std::int64_t n = p * p + 1;
    for (std::int64_t u = 0; u < p; ++u) {
        for (std::int64_t v = 0; v < p; ++v) {
            Fp2 fx = e.rhs(Fp2(u, v, p, e.a2.d));
            if (!plain) fx = li * fx;
            // chi over F_p2 factors through the norm to F_p.
            n += chi[static_cast<std::size_t>(fx.norm())];
        }
    }
    return n;
}

std::int64_t trace_from_count(std::int64_t q, std::int64_t n) {
    std::int64_t t = q + 1 - n;
    if (static_cast<__int128>(t) * t > static_cast<__int128>(4) * q)
        throw HasseViolation("trace exceeds the Weil bound");
    return t;
}

std::int64_t trace_of_frobenius(const Curve<Fp>& e) {
    return trace_from_count(e.a2.p, count_points(e));
}

std::int64_t trace_of_frobenius(const Curve<Fp2>& e) {
    return trace_from_count(e.a2.p * e.a2.p, count_points(e));
}

std::int64_t trace_ap2(const Curve<Fp>& e) {
    return ap2_from_ap(trace_of_frobenius(e), e.a2.p);
}

std::int64_t trace_ap2(const Curve<Fp2>& e) { return trace_of_frobenius(e); }

std::int64_t ap2_from_ap(std::int64_t ap, std::int64_t p) { return ap * ap - 2 * p; }

bool is_supersingular(const Curve<Fp>& e) { return trace_of_frobenius(e) % e.a2.p == 0; }
bool is_supersingular(const Curve<Fp2>& e) { return trace_of_frobenius(e) % e.a2.p == 0; }

namespace {
template <class K>
K j_invariant_impl(const Curve<K>& e) {
    // Depress x -> x - a2/3, then g2 = -4p, g3 = -4q for x^3 + p x + q.
    K three = const_like(e.a2, 3);
    K third = three.inv();
    K ninth = third * third;
    K p = e.a4 - third * e.a2 * e.a2;
    K q = const_like(e.a2, 2) * ninth * third * e.a2 * e.a2 * e.a2 - third * e.a2 * e.a4 + e.a6;
    K g2 = const_like(e.a2, -4) * p;
    K g3 = const_like(e.a2, -4) * q;
    K g2c = g2 * g2 * g2;
    K delta = g2c - const_like(e.a2, 27) * g3 * g3;
    if (delta.is_zero()) throw SingularFiber("j-invariant of a singular cubic");
    return const_like(e.a2, 1728) * g2c * delta.inv();
}
} // namespace

Fp j_invariant(const Curve<Fp>& e) { return j_invariant_impl(e); }
Fp2 j_invariant(const Curve<Fp2>& e) { return j_invariant_impl(e); }

namespace {
/// Classical (g2, g3) of y^2 = cubic by depressing the cubic:
/// x -> x - B/3 turns x^3 + Bx^2 + Cx + D into x^3 + px + q, and
/// y^2 = x^3 + px + q is (2y)^2 = 4x^3 - (-4p)x - (-4q).
NormalForm classical_from_cubic(const Poly& B, const Poly& C, const Poly& D) {
    Rational third(1, 3);
    Poly p = C - third * (B * B);
    Poly q = Rational(2, 27) * (B * B * B) - third * (B * C) + D;
    NormalForm nf;
    nf.g2 = Rational(-4) * p;
    nf.g3 = Rational(-4) * q;
    nf.delta = nf.g2 * nf.g2 * nf.g2 - Rational(27) * (nf.g3 * nf.g3);
    nf.u = Rational(1);
    nf.x_shift = Rational(-1, 3) * B; // x_model = x_short - B/3
    return nf;
}
} // namespace

NormalForm normal_form(CurveFamily fam) {
    Poly s = Poly::of_ints({0, 1});
    Poly one = Poly::of_ints({1});
    switch (fam) {
        case CurveFamily::half:
            return classical_from_cubic(-(one + s), s, Poly());
        case CurveFamily::third: {
            Poly c = one - s;
            return classical_from_cubic(Poly::of_ints({9}), Rational(24) * c,
                                        Rational(16) * (c * c));
        }
        case CurveFamily::quarter:
            return classical_from_cubic(Poly::of_ints({-2}), one - s, Poly());
        case CurveFamily::sixth: {
            // native classical model y^2 = 4x^3 - 3x + (1 - 2s); the monic
            // defining model is reached by x_model = 4 x_short (u = 2).
            NormalForm nf;
            nf.g2 = Poly::of_ints({3});
            nf.g3 = Poly::of_ints({-1, 2});
            nf.delta = nf.g2 * nf.g2 * nf.g2 - Rational(27) * (nf.g3 * nf.g3);
            nf.u = Rational(2);
            nf.x_shift = Poly();
            return nf;
        }
        default: break;
    }
    throw BadParameter("normal form exists only for the primary families");
}

RationalFunction family_j_invariant(CurveFamily fam) {
    NormalForm nf = normal_form(fam);
    RationalFunction g2 = RationalFunction::from_poly(nf.g2);
    return Rational(1728) * (g2 * g2 * g2) / RationalFunction::from_poly(nf.delta);
}

bool verify_isogeny(CurveFamily fam, const Fp2& b) {
    if (!is_e_family(fam)) throw BadParameter("isogeny check applies to the primary families");
    const std::int64_t p = b.p, d = b.d;
    Fp2 one(1, 0, p, d);
    Curve<Fp2> src = curve_at(fam, b);       // throws SingularFiber if b(1-b) = 0
    Curve<Fp2> tgt = curve_at(fam, one - b); // same singular locus
    switch (fam) {
        case CurveFamily::half: tgt.lambda = Fp2(-1, 0, p, d); break;
        case CurveFamily::third: tgt.lambda = Fp2(-3, 0, p, d); break;
        case CurveFamily::quarter: tgt.lambda = Fp2(-2, 0, p, d); break;
        case CurveFamily::sixth: tgt.lambda = Fp2(-1, 0, p, d); break;
        default: break;
    }

    for (std::int64_t u = 0; u < p; ++u) {
        for (std::int64_t v = 0; v < p; ++v) {
            Fp2 x(u, v, p, d);
            Fp2 X(0, 0, p, d), rho = one;
            switch (fam) {
                case CurveFamily::half:
                    X = one - x;
                    break;
                case CurveFamily::sixth:
                    X = -x;
                    break;
                case CurveFamily::third: {
                    if (x.is_zero()) continue; // excluded: map denominators vanish
                    Fp2 c = one - b;
                    Fp2 x2 = x * x, x3 = x2 * x;
                    Fp2 cst12 = const_like(x, 12), cst48 = const_like(x, 48);
                    Fp2 cst64 = const_like(x, 64), cst128 = const_like(x, 128);
                    X = (x3 + cst12 * x2 + cst48 * c * x + cst64 * c * c) *
                        (const_like(x, -3) * x2).inv();
                    rho = (x3 - cst48 * c * x - cst128 * c * c) *
                          (const_like(x, 9) * x3).inv();
                    break;
                }
                case CurveFamily::quarter: {
                    if (x.is_zero()) continue;
                    Fp2 x2 = x * x;
                    X = (-x2 + const_like(x, 2) * x + (b - one)) *
                        (const_like(x, 2) * x).inv();
                    rho = (x2 + b - one) * (const_like(x, 4) * x2).inv();
                    break;
                }
                default: break;
            }
            // The isogeny sends (x, y) to (X, rho * y) into the lambda-scaled
            // target lambda Y^2 = f(X), so squares must match:
            if (tgt.lambda * src.rhs(x) * rho * rho != tgt.rhs(X)) return false;
        }
    }
    // Degree-2 isogeny + twist trivial over F_p2 forces equal point counts.
    return count_points(src) == count_points(tgt);
}

bool verify_isogeny(CurveFamily fam, const Fp& b) {
    std::int64_t d = smallest_nonresidue(b.p);
    return verify_isogeny(fam, Fp2::from_fp(b, d));
}

CMDecision is_cm_heuristic(CurveFamily fam, const Rational& a, std::int64_t bound) {
    if (!is_e_family(fam)) throw BadParameter("CM heuristic applies to the primary families");
    if (a == Rational(0) || a == Rational(1))
        throw BadParameter("CM heuristic needs a outside {0, 1}");
    if (bound < 200) throw BadParameter("CM heuristic needs a prime bound >= 200");
    CMDecision out;
    QuadFieldNumber b = half_one_minus_sqrt(Rational(1) - a);
    for (std::int64_t p : primes_up_to(bound)) {
        if (p <= 3) {
            out.skipped.push_back(p);
            continue;
        }
        std::int64_t trace = 0;
        try {
            ReducedQuad rq = reduce_quad(b, p);
            if (rq.in_fp) {
                trace = trace_of_frobenius(curve_at(fam, rq.fp));
            } else {
                trace = trace_of_frobenius(curve_at(fam, rq.fp2));
            }
        } catch (const BadReduction&) {
            out.skipped.push_back(p);
            continue;
        } catch (const SingularFiber&) {
            out.skipped.push_back(p);
            continue;
        }
        if (trace % p == 0) {
            ++out.supersingular;
            out.ss_primes.push_back(p);
        } else {
            ++out.ordinary;
        }
    }
    // CM fibers are supersingular at asymptotic density 1/2; otherwise the
    // supersingular primes have density zero.
    out.is_cm = out.ss_fraction() > 0.30;
    return out;
}

const std::vector<Rational>& cm_parameter_table(CurveFamily fam) {
    auto r = [](long long n, long long d) { return Rational(n, d); };
    static const std::vector<Rational> half_table = {
        r(-1, 1), r(4, 1), r(1, 4), r(-8, 1), r(-1, 8), r(64, 1), r(1, 64)};
    static const std::vector<Rational> third_table = {
        r(-4, 1),  r(1, 2),   r(-1, 16),     r(-1, 1024),
        r(-9, 16), r(27, 16), r(2, 27),      r(27, 2),
        r(-1, 80), r(4, 125), r(-1, 250000), r(-1, 3024)};
    static const std::vector<Rational> quarter_table = {
        r(-1, 4),     r(1, 9),    r(1, 81),      r(-1, 48),      r(-16, 9),
        r(-1, 324),   r(32, 81),  r(256, 81),    r(-1, 25920),   r(1, 2401),
        r(-1, 777924), r(-256, 3969), r(1, 9801), r(1, 96059601)};
    static const std::vector<Rational> sixth_table = {
        r(-1, 512),      r(-27, 512),    r(4, 125),  r(-64, 125),
        r(-1, 512000),   r(-9, 64000),   r(27, 125), r(8, 1331),
        r(-1, 85184000), r(64, 614125),  Rational(BigInt(-1), BigInt(151931373056000LL))};
    switch (fam) {
        case CurveFamily::half: return half_table;
        case CurveFamily::third: return third_table;
        case CurveFamily::quarter: return quarter_table;
        case CurveFamily::sixth: return sixth_table;
        default: break;
    }
    throw BadParameter("no parameter table for this family");
}

} // namespace hgk3
