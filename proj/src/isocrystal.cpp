#include "hgk3/isocrystal.hpp"

namespace hgk3 {

namespace {

QSeries t_series(int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    if (order >= 2) c[1] = Rational(1);
    return QSeries(std::move(c));
}

QSeries one_series(int order) { return QSeries::constant(Rational(1), order); }

/// Extract the pair (a0, a1) of a triple containing 1/2 whose remaining two
/// entries sum to 1 (the shape underlying the period-square identities).
std::pair<Rational, Rational> square_pair(const HGTriple& triple) {
    const Rational half(1, 2);
    for (int i = 0; i < 3; ++i) {
        if (triple.alpha[static_cast<std::size_t>(i)] != half) continue;
        Rational a0 = triple.alpha[static_cast<std::size_t>((i + 1) % 3)];
        Rational a1 = triple.alpha[static_cast<std::size_t>((i + 2) % 3)];
        if (a0 + a1 == 1) return {a0, a1};
    }
    throw BadParameter("triple is not of the shape (a, 1-a, 1/2)");
}

/// Solve theta E = r with E(0) = e0; r must have zero constant term.
QSeries integrate_theta(const QSeries& r, const Rational& e0, const char* what) {
    if (r[0] != 0) throw IntegrabilityFailure(what);
    std::vector<Rational> e(static_cast<std::size_t>(r.order()));
    e[0] = e0;
    for (int i = 1; i < r.order(); ++i)
        e[static_cast<std::size_t>(i)] = r[i] / Rational(i);
    return QSeries(std::move(e));
}

} // namespace

QSeries geometric_t_series(int order) {
    return t_series(order) / (one_series(order) - t_series(order));
}

QSeries rf_to_series(const RationalFunction& f, int order) {
    return poly_to_series(f.num, order) / poly_to_series(f.den, order);
}

DModElement apply_D(const HGTriple& triple, const DModElement& e) {
    const int n = e.f[0].order();
    const QSeries m = geometric_t_series(n);
    DModElement r;
    r.f[0] = theta(e.f[0]) + e.f[2] * (triple.sigma3() * m);
    r.f[1] = e.f[0] + theta(e.f[1]) + e.f[2] * (triple.sigma2() * m);
    r.f[2] = e.f[1] + theta(e.f[2]) + e.f[2] * (triple.sigma1() * m);
    return r;
}

QSeries g_alpha_series(const HGTriple& triple, int order) {
    QSeries f = f_series(triple, order);
    QSeries fd = f_series(triple.dual(), order);
    return binomial_power(Rational(1) - triple.sigma1(), order) * fd / (f * f);
}

QSeries g_alpha_check_series(const HGTriple& triple, int order) {
    QSeries f = f_series(triple, order);
    QSeries fd = f_series(triple.dual(), order);
    return binomial_power(triple.sigma1() - Rational(2), order) * f / (fd * fd);
}

HattedBasis hatted_basis(const HGTriple& triple, int order) {
    const int n = order;
    QSeries f = f_series(triple, n);
    QSeries fd = f_series(triple.dual(), n);
    QSeries one = one_series(n);
    QSeries zero = QSeries::constant(Rational(0), n);
    QSeries m = geometric_t_series(n);
    const Rational s1 = triple.sigma1(), s2 = triple.sigma2();

    HattedBasis hb;
    hb.w_hat.f = {one / f, zero, zero};

    QSeries bp = binomial_power(s1 - Rational(1), n); // (1-t)^(sigma1 - 1)
    hb.xi_hat.f = {-(bp * theta(f) / fd), bp * f / fd, zero};

    QSeries y2 = (one - t_series(n)) * fd;
    QSeries y1 = -(s1 * (m * y2)) - theta(y2);
    QSeries y0 = -(s2 * (m * y2)) - theta(y1);
    hb.eta_hat.f = {y0, y1, y2};

    hb.g_alpha = g_alpha_series(triple, n);
    hb.g_alpha_check = g_alpha_check_series(triple, n);
    return hb;
}

bool connection_relations_hold(const HGTriple& triple, const HattedBasis& hb) {
    DModElement dw = apply_D(triple, hb.w_hat);
    DModElement dxi = apply_D(triple, hb.xi_hat);
    DModElement deta = apply_D(triple, hb.eta_hat);
    for (int i = 0; i < 3; ++i) {
        if (!(dw.f[static_cast<std::size_t>(i)] -
              hb.g_alpha * hb.xi_hat.f[static_cast<std::size_t>(i)])
                 .is_zero())
            return false;
        if (!(dxi.f[static_cast<std::size_t>(i)] -
              hb.g_alpha_check * hb.eta_hat.f[static_cast<std::size_t>(i)])
                 .is_zero())
            return false;
        if (!deta.f[static_cast<std::size_t>(i)].is_zero()) return false;
    }
    return true;
}

bool verify_connection(const HGTriple& triple, int order) {
    return connection_relations_hold(triple, hatted_basis(triple, order));
}

FrobeniusEntries frobenius_entry_odes(const HGTriple& triple, int order, const Rational& c,
                                      const Rational& e0, std::int64_t p) {
    return frobenius_entry_odes_split_constants(triple, order, c, e0, e0, p);
}

FrobeniusEntries frobenius_entry_odes_split_constants(const HGTriple& triple, int order,
                                                      const Rational& c, const Rational& e01,
                                                      const Rational& e03, std::int64_t p) {
    if (p < 2) throw BadParameter("p must be at least 2");
    if (order <= p) throw BadParameter("order must exceed p for sigma(t) = c t^p");
    HGTriple prime = dwork_prime_triple(triple, p);
    HGTriple dual_prime = dwork_prime_triple(triple.dual(), p);

    QSeries g_a = g_alpha_series(triple, order);
    QSeries g_d = g_alpha_check_series(triple, order);

    // sigma(t) = c t^p
    std::vector<Rational> sc(static_cast<std::size_t>(order), Rational(0));
    sc[static_cast<std::size_t>(p)] = c;
    QSeries sigma_t{std::move(sc)};

    QSeries g_a_prime = compose(g_alpha_series(prime, order), sigma_t);
    QSeries g_d_prime = compose(g_alpha_check_series(dual_prime, order), sigma_t);

    FrobeniusEntries out;
    out.e1 = integrate_theta(g_a - g_a_prime, e01,
                             "first transport equation has a nonzero constant term");
    out.e3 = integrate_theta(g_d - g_d_prime, e03,
                             "third transport equation has a nonzero constant term");
    out.e2 = integrate_theta(g_d * out.e1 - g_a_prime * out.e3, Rational(0),
                             "middle transport equation has a nonzero constant term");
    return out;
}

bool clausen_verify(const Rational& a, const Rational& b, int order) {
    const Rational half(1, 2);
    QSeries lhs = hg_series({2 * a, 2 * b, a + b}, {a + b + half, 2 * a + 2 * b}, order);
    QSeries f = hg_series({a, b}, {a + b + half}, order);
    return lhs == f * f;
}

bool clausen2_verify(const HGTriple& triple, int order) {
    auto [a0, a1] = square_pair(triple);
    QSeries f3 = f_series(triple, order);
    // route 1: the triple series pulled back along the degree-2 map
    // t = 4s(1-s) equals the square of the parameter-pair series.  (The map
    // has invertible linear term, so composing with it loses no information;
    // this is the same identity as evaluating the pair series at the inverse
    // branch s(t) = (1 - sqrt(1-t))/2, stated on the cheaper side.)
    QSeries f2 = hg_series({a0, a1}, {Rational(1)}, order);
    QSeries one = one_series(order), s = t_series(order);
    QSeries t_of_s = Rational(4) * (s * (one - s));
    if (compose(f3, t_of_s) != f2 * f2) return false;
    // route 2: quadratic transformation to half parameters at t itself
    QSeries fh = hg_series({a0 / 2, a1 / 2}, {Rational(1)}, order);
    return f3 == fh * fh;
}

bool pfaff_transform_verify(const HGTriple& triple, int order) {
    auto [a0, a1] = square_pair(triple);
    QSeries fh = hg_series({a0 / 2, a1 / 2}, {Rational(1)}, order);
    QSeries lhs = fh * fh;
    QSeries w = -geometric_t_series(order); // t/(t-1) = -t/(1-t)
    QSeries g = compose(hg_series({a0 / 2, Rational(1) - a1 / 2}, {Rational(1)}, order), w);
    QSeries rhs = binomial_power(-a0, order) * (g * g);
    return lhs == rhs;
}

bool chain_rule_verify(const QSeries& f) {
    const int order = f.order();
    QSeries one = one_series(order), s = t_series(order);
    QSeries u = (one - s) / (one - Rational(2) * s); // (1-s)/(1-2s)
    QSeries t_of_s = Rational(4) * (s * (one - s));  // t = 4s(1-s)
    QSeries lhs = compose(theta(f), t_of_s);
    QSeries rhs = u * theta(compose(f, t_of_s));
    return lhs == rhs;
}

RFMatrix2 gauss_manin(CurveFamily fam) {
    NormalForm nf = normal_form(fam);
    RationalFunction g2 = RationalFunction::from_poly(nf.g2);
    RationalFunction g3 = RationalFunction::from_poly(nf.g3);
    RationalFunction delta = RationalFunction::from_poly(nf.delta);
    RationalFunction e = Rational(2) * (g2 * rf_Ds(g3)) - Rational(3) * (rf_Ds(g2) * g3);
    RationalFunction a = -(rf_Ds(delta) / (Rational(12) * delta));
    RationalFunction b = Rational(3, 2) * (e / delta);
    RationalFunction c = -(Rational(1, 8) * ((g2 * e) / delta));
    return {{{a, c}, {b, -a}}};
}

bool gauss_manin_annihilates_period(CurveFamily fam, int order) {
    RFMatrix2 gm = gauss_manin(fam);
    const RationalFunction &a = gm[0][0], &b = gm[1][0], &c = gm[0][1];
    RationalFunction q = rf_Ds(b) / b;
    RationalFunction r = rf_Ds(a) + a * a + b * c - q * a;
    auto [a0, a1] = family_parameters(fam);
    QSeries p = hg_series({a0, a1}, {Rational(1)}, order);
    QSeries res = theta(theta(p)) - rf_to_series(q, order) * theta(p) - rf_to_series(r, order) * p;
    return res.is_zero();
}

RFMatrix3 basis_matrix_X(CurveFamily fam) {
    RFMatrix2 gm = gauss_manin(fam);
    const RationalFunction &a = gm[0][0], &b = gm[1][0], &c = gm[0][1];
    RationalFunction u(Poly::of_ints({1, -1}), Poly::of_ints({1, -2})); // (1-s)/(1-2s)
    RationalFunction du = rf_Ds(u);
    RationalFunction one = RationalFunction::constant(Rational(1));
    RationalFunction zero;

    RFMatrix3 x;
    x[0][0] = one;
    x[1][0] = zero;
    x[2][0] = zero;
    x[0][1] = Rational(2) * (u * a);
    x[1][1] = Rational(2) * (u * b);
    x[2][1] = zero;
    x[0][2] = u * (Rational(2) * (du * a) +
                   u * (Rational(2) * rf_Ds(a) + Rational(4) * (a * a) + Rational(2) * (b * c)));
    x[1][2] = u * (Rational(2) * (du * b) + u * (Rational(4) * (a * b) + Rational(2) * rf_Ds(b)));
    x[2][2] = Rational(2) * (u * u * b * b);
    return x;
}

} // namespace hgk3
