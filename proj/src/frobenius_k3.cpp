#include "hgk3/frobenius_k3.hpp"

#include <cstdlib>

namespace hgk3 {

const char* split_case_name(SplitCase c) {
    switch (c) {
        case SplitCase::SplitField: return "split";
        case SplitCase::InertOrdinary: return "inert_ordinary";
        case SplitCase::InertSupersingular: return "inert_supersingular";
    }
    throw BadParameter("unknown split case");
}

CharPoly3 charpoly_from_factors(int e1, std::int64_t A, std::int64_t p) {
    if (e1 != 1 && e1 != -1) throw BadParameter("linear root sign must be +-1");
    CharPoly3 cp;
    cp.e1 = e1;
    cp.A = A;
    cp.p = p;
    // (1 - e1 p T)(1 - A T + p^2 T^2)
    cp.c1 = -(A + e1 * p);
    cp.c2 = p * p + e1 * p * A;
    cp.c3 = -e1 * p * p * p;
    return cp;
}

namespace {
std::string monomial(std::int64_t c, const char* t, bool lead) {
    std::string s;
    if (c >= 0)
        s += lead ? "" : " + ";
    else
        s += lead ? "-" : " - ";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || t[0] == '\0') s += std::to_string(a);
    s += t;
    return s;
}
} // namespace

std::string charpoly_factored_string(const CharPoly3& cp) {
    std::string s = "(1";
    s += monomial(-cp.e1 * cp.p, "T", false);
    s += ")(1";
    s += monomial(-cp.A, "T", false);
    s += monomial(cp.p * cp.p, "T^2", false);
    s += ")";
    return s;
}

std::string charpoly_string(const CharPoly3& cp) {
    std::string s = "1";
    s += monomial(cp.c1, "T", false);
    s += monomial(cp.c2, "T^2", false);
    s += monomial(cp.c3, "T^3", false);
    return s;
}

CurveFamily family_of_triple(const HGTriple& triple) {
    for (CurveFamily fam : all_families())
        if (triple.same_up_to_permutation(triple_by_name(family_name(fam))))
            return fam;
    throw InadmissibleTriple("triple does not match a primary family");
}

int d_alpha(const HGTriple& triple) {
    switch (family_of_triple(triple)) {
        case CurveFamily::half:
        case CurveFamily::sixth: return -1;
        case CurveFamily::quarter: return -2;
        case CurveFamily::third: return -3;
        default: break;
    }
    throw InadmissibleTriple();
}

int cartier_twist_sign(const HGTriple& triple, std::int64_t p) {
    switch (family_of_triple(triple)) {
        // x^(p-1)-coefficient of f(x)^((p-1)/2) vs. F_{<p}(b), per model:
        case CurveFamily::half: return legendre(-1, p);   // f = x(x-1)(x-b)
        case CurveFamily::third: return legendre(-3, p);  // f = x^3 + (3x+4(1-b))^2
        case CurveFamily::quarter: return 1;              // f = x(x^2-2x+1-b)
        case CurveFamily::sixth: return legendre(6, p);   // f = x^3 - 12x + 16(1-2b)
        default: break;
    }
    throw InadmissibleTriple();
}

std::vector<std::int64_t> hasse_polynomial_mod_p(const HGTriple& triple, std::int64_t p) {
    if (p <= 3) throw BadParameter("need p > 3 for unit parameter denominators");
    auto [a0, a1] = family_parameters(family_of_triple(triple));
    QSeries f = hg_series({a0, a1}, {Rational(1)}, static_cast<int>(p));
    std::vector<std::int64_t> out(static_cast<std::size_t>(p));
    for (int i = 0; i < f.order(); ++i)
        out[static_cast<std::size_t>(i)] = reduce_mod_p(f[i], p).v;
    return out;
}

namespace {

void check_predictor_domain(std::int64_t p, const Rational& a) {
    if (p <= 3 || !is_prime(p)) throw BadParameter("p must be a prime > 3");
    if (!is_p_integral(a, p)) throw BadParameter("a must be p-integral");
}

/// a and 1-a reduced mod p, rejecting a(1-a) = 0 mod p.
std::pair<Fp, Fp> reduced_parameter(const Rational& a, std::int64_t p) {
    Fp ar = reduce_mod_p(a, p);
    Fp um = Fp(1, p) - ar;
    if (ar.is_zero() || um.is_zero()) throw BadParameter("a(1-a) vanishes mod p");
    return {ar, um};
}

void check_chi(int chi) {
    if (chi != 1 && chi != -1) throw BadParameter("chi must be +-1");
}

template <class K>
K eval_poly(const std::vector<std::int64_t>& co, const K& x) {
    K r = const_like(x, 0);
    for (std::size_t i = co.size(); i-- > 0;) r = r * x + const_like(x, co[i]);
    return r;
}

} // namespace

AResult compute_A(const HGTriple& triple, const Rational& a, std::int64_t p, RootChoice root) {
    check_predictor_domain(p, a);
    CurveFamily fam = family_of_triple(triple);
    reduced_parameter(a, p);

    QuadFieldNumber b = half_one_minus_sqrt(Rational(1) - a);
    ReducedQuad rq = reduce_quad(b, p, root);

    AResult out;
    if (rq.in_fp) {
        Curve<Fp> e = curve_at(fam, rq.fp);
        std::int64_t n = count_points(e);
        std::int64_t ap = trace_from_count(p, n);
        out.split_case = SplitCase::SplitField;
        out.trace = ap;
        out.A = ap * ap - 2 * p;
        out.counts = {n};
    } else {
        Curve<Fp2> e = curve_at(fam, rq.fp2);
        std::int64_t n = count_points(e);
        std::int64_t t2 = trace_from_count(p * p, n);
        out.trace = t2;
        out.counts = {n};
        if (t2 % p == 0) {
            out.split_case = SplitCase::InertSupersingular;
            out.A = 2 * p;
        } else {
            out.split_case = SplitCase::InertOrdinary;
            out.A = legendre(d_alpha(triple), p) * t2;
        }
    }
    return out;
}

CharPoly3 predict_charpoly(const HGTriple& triple, const Rational& a, std::int64_t p, int chi,
                           RootChoice root) {
    check_chi(chi);
    AResult r = compute_A(triple, a, p, root); // validates the whole domain
    auto [ar, um] = reduced_parameter(a, p);
    (void)ar;
    int ell = legendre(um.v, p);
    return charpoly_from_factors(ell * chi, chi * r.A, p);
}

CharPoly3 predict_charpoly_C(const HGTriple& triple, const Rational& a, std::int64_t p,
                             int chi) {
    check_chi(chi);
    check_predictor_domain(p, a);
    CurveFamily fam = family_of_triple(triple);
    CurveFamily cfam;
    if (fam == CurveFamily::half)
        cfam = CurveFamily::c_half;
    else if (fam == CurveFamily::sixth)
        cfam = CurveFamily::c_sixth;
    else
        throw BadParameter("auxiliary model exists only for the half and sixth triples");

    Fp ar = reduce_mod_p(a, p);
    Curve<Fp> c = curve_at(cfam, ar); // SingularFiber at the bad parameters
    std::int64_t ap = trace_of_frobenius(c);
    std::int64_t ap2 = ap2_from_ap(ap, p);
    Fp um = Fp(1, p) - ar;
    int ell = legendre(um.v, p); // nonzero: a = 1 is already excluded as singular
    return charpoly_from_factors(ell * chi, ell * chi * ap2, p);
}

CharPoly3 sym2_charpoly(std::int64_t a_q, std::int64_t q) {
    if (q < 2) throw BadParameter("q must be a prime power >= 2");
    if (static_cast<__int128>(a_q) * a_q > static_cast<__int128>(4) * q)
        throw HasseViolation("|a_q| exceeds 2 sqrt(q)");
    return charpoly_from_factors(+1, a_q * a_q - 2 * q, q);
}

WeilCheck verify_weil(const CharPoly3& cp, std::int64_t p) {
    auto fail = [](const char* r) { return WeilCheck{false, r}; };
    if (cp.p != p) return fail("stored prime disagrees");
    std::int64_t p3 = p * p * p;
    if (cp.c3 != p3 && cp.c3 != -p3) return fail("constant coefficient is not +-p^3");
    int e1 = cp.c3 == -p3 ? +1 : -1; // c3 = -e1 p^3
    std::int64_t A = -cp.c1 - e1 * p;
    if (cp.e1 != e1 || cp.A != A)
        return fail("stored factorization disagrees with the coefficients");
    if (cp.c2 != p * p + e1 * p * A)
        return fail("coefficients do not factor as (1 - e1 p T)(1 - A T + p^2 T^2)");
    if (A > 2 * p || A < -2 * p) return fail("quadratic trace violates the Weil bound");
    if (A == 2 * p || A == -2 * p) {
        // Quadratic factor (1 - s p T)^2: root multiset must be {p, p, -p}
        // up to the global sign s, with trace = s p mod p^2.
        int s = A > 0 ? +1 : -1;
        if (e1 != -s) return fail("supersingular root multiset is not {p, p, -p} up to sign");
        if ((-cp.c1 - s * p) % (p * p) != 0)
            return fail("supersingular trace fails the mod p^2 congruence");
    }
    return {};
}

UnitRootReport verify_unit_root_congruences(const HGTriple& triple, const Rational& a,
                                            std::int64_t p) {
    AResult ar = compute_A(triple, a, p);
    if (ar.split_case == SplitCase::InertSupersingular)
        throw SupersingularInput("inert supersingular fiber");
    if (ar.split_case == SplitCase::SplitField && ar.trace % p == 0)
        throw SupersingularInput("split supersingular fiber");

    std::vector<std::int64_t> co = hasse_polynomial_mod_p(triple, p);
    QuadFieldNumber b = half_one_minus_sqrt(Rational(1) - a);
    ReducedQuad rq = reduce_quad(b, p);

    UnitRootReport rep;
    rep.split_case = ar.split_case;
    rep.trace = ar.trace;
    rep.d_symbol = legendre(d_alpha(triple), p);

    if (rq.in_fp) {
        Fp fb = eval_poly(co, rq.fp);
        if (fb.is_zero()) throw SupersingularInput("truncated period vanishes at b");
        rep.f_value = fb.v;
        rep.sigma = cartier_twist_sign(triple, p);
        std::int64_t want = mulmod((rep.sigma + p) % p, fb.v, p);
        rep.trace_congruence = mod_nonneg(BigInt(ar.trace), p) == want;
        rep.ratio = 0;
        rep.ratio_congruence = true; // no ratio statement in the split case
    } else {
        Fp2 fb = eval_poly(co, rq.fp2);
        Fp2 fc = eval_poly(co, Fp2(1, 0, p, rq.fp2.d) - rq.fp2); // F at 1-b = conj(b)
        if (fb.is_zero()) throw SupersingularInput("truncated period vanishes at b");
        Fp2 prod = fb * fc; // a norm, so it lies in F_p
        rep.f_value = prod.x;
        rep.sigma = +1;
        rep.trace_congruence = prod.y == 0 && mod_nonneg(BigInt(ar.trace), p) == prod.x;
        Fp2 ratio = fb * fc.inv();
        if (ratio == Fp2(1, 0, p, ratio.d))
            rep.ratio = +1;
        else if (ratio == Fp2(-1, 0, p, ratio.d))
            rep.ratio = -1;
        else
            rep.ratio = 0; // not a sign at all: congruence fails below
        rep.ratio_congruence = rep.ratio == rep.d_symbol;
    }
    rep.ok = rep.trace_congruence && rep.ratio_congruence;
    return rep;
}

} // namespace hgk3
