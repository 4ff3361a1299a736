#pragma once
/// @file isocrystal.hpp
/// @brief Symbolic verification layer: the rank-3 hypergeometric D-module and
///        its hatted basis, the Frobenius-entry transport ODEs, the Clausen /
///        quadratic-transformation identities behind the period square, and
///        the Gauss-Manin connection with its Picard-Fuchs and Sym^2 checks.

#include <array>
#include <cstdint>

#include "hgk3/elliptic.hpp"
#include "hgk3/hg.hpp"
#include "hgk3/polyq.hpp"
#include "hgk3/series.hpp"

namespace hgk3 {

/// t + t^2 + t^3 + ... = t/(1-t) to the given order.
QSeries geometric_t_series(int order);

/// Series expansion of a rational function regular at 0 (NonUnitDivisor when
/// the denominator vanishes at 0).
QSeries rf_to_series(const RationalFunction& f, int order);

/// Element of the hypergeometric D-module written in the cyclic basis
/// (omega, D omega, D^2 omega), where D = theta = t d/dt and omega satisfies
///   D^3 omega = (t/(1-t)) (sigma1 D^2 + sigma2 D + sigma3) omega.
struct DModElement {
    std::array<QSeries, 3> f;
};

/// Action of D on a D-module element, using the cyclic relation above.
DModElement apply_D(const HGTriple& triple, const DModElement& e);

/// G_alpha = (1-t)^(1-sigma1) F_alpha^(-2) F_dual (constant term 1).
QSeries g_alpha_series(const HGTriple& triple, int order);
/// G_dual = (1-t)^(sigma1-2) F_dual^(-2) F_alpha (constant term 1).
QSeries g_alpha_check_series(const HGTriple& triple, int order);

/// The hatted basis (w, xi, eta) of the D-module, built from the period
/// series F_alpha and its dual, in which the connection takes the form
///   D w = G_alpha xi,   D xi = G_dual eta,   D eta = 0.
struct HattedBasis {
    DModElement w_hat, xi_hat, eta_hat;
    QSeries g_alpha, g_alpha_check;
};
HattedBasis hatted_basis(const HGTriple& triple, int order);

/// The three connection relations, checked coefficientwise on a basis (use
/// with a perturbed basis as a negative control).
bool connection_relations_hold(const HGTriple& triple, const HattedBasis& basis);

/// Build the hatted basis at the given order and check the connection.
bool verify_connection(const HGTriple& triple, int order);

/// Solutions of the Frobenius-entry transport ODEs with sigma(t) = c t^p:
///   theta E1 = G_alpha(t)      - G_alpha'(sigma(t))
///   theta E3 = G_dual(t)       - G_dual'(sigma(t))
///   theta E2 = G_dual(t) E1(t) - G_alpha'(sigma(t)) E3(t)
/// where ' is the Dwork-prime triple.  Each right side must have vanishing
/// constant term (IntegrabilityFailure otherwise); the third equation's
/// constant term is E1(0) - E3(0), which ties the two integration constants
/// together.
struct FrobeniusEntries {
    QSeries e1, e2, e3;
};
FrobeniusEntries frobenius_entry_odes(const HGTriple& triple, int order,
                                      const Rational& c = Rational(1),
                                      const Rational& e0 = Rational(0), std::int64_t p = 5);
/// Variant with distinct integration constants E1(0) != E3(0) permitted;
/// distinct constants make the middle equation non-integrable (negative
/// control for the coupling).
FrobeniusEntries frobenius_entry_odes_split_constants(const HGTriple& triple, int order,
                                                      const Rational& c, const Rational& e01,
                                                      const Rational& e03, std::int64_t p = 5);

/// Clausen's identity 3F2(2a,2b,a+b; a+b+1/2, 2a+2b; t) = 2F1(a,b; a+b+1/2; t)^2.
bool clausen_verify(const Rational& a, const Rational& b, int order);

/// The period square: F_alpha(t) = [2F1(a0,a1;1) at s(t)]^2 with
/// s(t) = (1 - sqrt(1-t))/2, and equivalently = 2F1(a0/2,a1/2;1;t)^2 by the
/// quadratic transformation.  Requires a triple containing 1/2 whose other
/// two entries sum to 1.
bool clausen2_verify(const HGTriple& triple, int order);

/// Pfaff transformation of the half-parameter square:
/// 2F1(a0/2,a1/2;1;t)^2 = (1-t)^(-a0) [2F1(a0/2, 1-a1/2; 1; -t/(1-t))]^2.
bool pfaff_transform_verify(const HGTriple& triple, int order);

/// The substitution t = 4s(1-s) rescales the logarithmic derivations by
/// u(s) = (1-s)/(1-2s): for any series f(t), theta_t f composed with t(s)
/// equals u(s) * theta_s (f composed with t(s)).
bool chain_rule_verify(const QSeries& f);

/// 2x2 matrix of rational functions; column j holds the coordinates of the
/// derivative of the j-th basis vector.
using RFMatrix2 = std::array<std::array<RationalFunction, 2>, 2>;

/// Gauss-Manin connection of the family in the basis (omega, eta):
///   D_s omega = A omega + B eta,   D_s eta = C omega - A eta,
/// returned as the trace-zero matrix [[A, C], [B, -A]], computed from the
/// classical Weierstrass data.
RFMatrix2 gauss_manin(CurveFamily fam);

/// The second-order equation eliminated from the connection,
///   D^2 P - (DB/B) D P - (DA + A^2 + BC - (DB/B) A) P = 0,
/// must annihilate the period series 2F1(a0,a1;1;s).
bool gauss_manin_annihilates_period(CurveFamily fam, int order);

/// 3x3 matrix (rows x columns) expressing the pulled-back symmetric-square
/// frame (omega^2, D_t(omega^2), D_t^2(omega^2)) in terms of
/// (omega^2, omega eta, eta^2), with D_t = u(s) D_s.
using RFMatrix3 = std::array<std::array<RationalFunction, 3>, 3>;
RFMatrix3 basis_matrix_X(CurveFamily fam);

} // namespace hgk3
