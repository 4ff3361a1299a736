#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "hgk3/k3_oracle.hpp"

using namespace hgk3;

namespace {
Rational r(long long n, long long d = 1) { return Rational(n, d); }
}

TEST_CASE("quartic surface counts at p = 5") {
    // projective counts, frozen from an independent exhaustive evaluation
    CHECK(count_dwork_quartic(2, 5) == 0);
    CHECK(count_dwork_quartic(3, 5) == 64);
    CHECK(count_dwork_quartic(4, 5) == 28);

    // stratified count vs the affine cone: #cone = (p-1) #proj + 1
    for (std::int64_t p : {5, 7, 11, 13})
        for (std::int64_t a = 2; a < p; ++a)
            CHECK(dwork_affine_cone_count(a, p) == (p - 1) * count_dwork_quartic(a, p) + 1);

    CHECK_THROWS_AS(count_dwork_quartic(0, 5), BadParameter);
    CHECK_THROWS_AS(count_dwork_quartic(1, 5), BadParameter);
    CHECK_THROWS_AS(count_dwork_quartic(2, 9), BadParameter);
    CHECK_THROWS_AS(count_dwork_quartic(2, 3), BadParameter);
    CHECK_THROWS_AS(dwork_affine_cone_count(2, 37), BadParameter); // p^4 scan guard
}

TEST_CASE("quartic divisibility against the transcendental trace") {
    for (std::int64_t p : {5, 7, 11, 13})
        for (std::int64_t a = 2; a < p; ++a) {
            DworkReport rep = dwork_divisibility_check(a, p);
            CHECK(rep.pass);
            CHECK(rep.divisible);
            CHECK(rep.mod_p_corollary);
            CHECK(rep.quotient_bounded);
            CHECK(rep.n >= -19);
            CHECK(rep.n <= 19);
            // the defining relation: count - 1 - p^2 - tr_pred = n p
            CHECK(rep.count - 1 - p * p - rep.tr_pred == rep.n * p);
        }
}

TEST_CASE("character sums against direct surface scans") {
    // O(p^2) character sums reproduce the O(p^3)-style affine counts
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t a = 2; a < p; ++a) {
            std::int64_t t3 = triple_char_sum(a, p);
            CHECK(triple_product_affine_count(a, p) ==
                  (p - 1) * (p - 1) - 3 * (p - 1) + 3 + t3);
            CHECK(aop_affine_count(a, p) == p * p + double_char_sum(a, p));
        }

    // frozen sums
    CHECK(triple_char_sum(2, 7) == -9);
    CHECK(triple_char_sum(3, 7) == 3);
    CHECK(triple_char_sum(2, 5) == -1);
    CHECK(triple_char_sum(5, 11) == -5);
    CHECK(double_char_sum(2, 7) == -9);

    CHECK_THROWS_AS(triple_char_sum(0, 7), BadParameter);
    CHECK_THROWS_AS(double_char_sum(8, 7), BadParameter);
    CHECK_THROWS_AS(triple_product_affine_count(2, 67), BadParameter); // direct scan guard
    CHECK_THROWS_AS(aop_affine_count(2, 67), BadParameter);
}

TEST_CASE("predicted transcendental trace") {
    // trace = legendre(1-a,p) chi p + chi A; cross-checked against the cubic
    for (std::int64_t p : {5, 7, 11, 13})
        for (std::int64_t a = 2; a < p; ++a)
            for (int chi : {+1, -1}) {
                CharPoly3 cp = predict_charpoly(HGTriple::quarter(), r(a), p, chi);
                CHECK(predicted_transcendental_trace(HGTriple::quarter(), r(a), p, chi) ==
                      -cp.c1);
            }
}

TEST_CASE("signatures") {
    Signature s = make_signature(HGTriple::half(), 3, 7);
    CHECK(s.l_one_minus_a == legendre(1 - 3, 7));
    CHECK(s.l_a == legendre(3, 7));
    CHECK(s.l_minus_one == legendre(-1, 7));
    CHECK(s.l_d == legendre(-1, 7));
    CHECK(signature_string(s).size() == 9); // "(x,x,x,x)"
    CHECK(signature_string(s).front() == '(');

    Signature t = make_signature(HGTriple::third(), 3, 7);
    CHECK(t.l_d == legendre(-3, 7));
    CHECK_FALSE(s == t);
}

TEST_CASE("calibration and validation") {
    std::vector<std::int64_t> train = {5, 7, 11, 13};
    for (SurfaceFamily fam : {SurfaceFamily::TripleProduct, SurfaceFamily::AOPDoubleCover}) {
        CalibrationModel model = calibrate(fam, HGTriple::half(), train);
        CHECK(model.s == +1);
        // the observed statistic IS the predicted trace: all corrections vanish
        for (const auto& [sig, corr] : model.corrections) {
            CHECK(corr.first == 0);
            CHECK(corr.second == 0);
        }
        ValidationReport rep = validate(model, HGTriple::half(), 17, 50);
        CHECK(rep.ok);
        CHECK(rep.instances > 200);
    }

    // the two surface families extract the same trace at the same (a, p)
    CalibrationModel mt = calibrate(SurfaceFamily::TripleProduct, HGTriple::half(), train);
    CalibrationModel ma = calibrate(SurfaceFamily::AOPDoubleCover, HGTriple::half(), train);
    for (std::int64_t p : {17, 19, 23})
        for (std::int64_t a = 2; a < p; ++a) {
            Signature sig = make_signature(HGTriple::half(), a, p);
            std::int64_t ot = observed_statistic(SurfaceFamily::TripleProduct, a, p);
            std::int64_t oa = observed_statistic(SurfaceFamily::AOPDoubleCover, a, p);
            CHECK(extracted_trace(mt, sig, ot, p) == extracted_trace(ma, sig, oa, p));
        }

    // unseen signatures contribute no correction
    CalibrationModel fresh = calibrate(SurfaceFamily::TripleProduct, HGTriple::half(), train);
    Signature unseen{0, 0, 0, 0};
    CHECK(fresh.correction_for(unseen) == std::make_pair<std::int64_t, std::int64_t>(0, 0));
}

TEST_CASE("calibration failure modes") {
    std::vector<std::int64_t> train = {5, 7, 11, 13};

    // a flipped global sign no longer validates, with a recorded counterexample
    CalibrationModel model = calibrate(SurfaceFamily::TripleProduct, HGTriple::half(), train);
    model.s = -model.s;
    ValidationReport rep = validate(model, HGTriple::half(), 17, 23);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_bad_p >= 17);
    CHECK_FALSE(rep.detail.empty());

    // a tampered per-signature correction is caught the same way
    CalibrationModel tampered = calibrate(SurfaceFamily::TripleProduct, HGTriple::half(), train);
    REQUIRE_FALSE(tampered.corrections.empty());
    tampered.corrections.begin()->second = {0, 3};
    CHECK_FALSE(validate(tampered, HGTriple::half(), 17, 23).ok);

    // calibrating the quarter-family statistic against the wrong triple
    // cannot be explained by a signature-constant model
    CHECK_THROWS_AS(calibrate(SurfaceFamily::TripleProduct, HGTriple::third(), train),
                    CalibrationFailure);
    try {
        calibrate(SurfaceFamily::TripleProduct, HGTriple::third(), train);
    } catch (const CalibrationFailure& e) {
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }

    // surface oracles are for the char-sum families; the quartic needs no fit
    CHECK_THROWS_AS(calibrate(SurfaceFamily::DworkQuartic, HGTriple::quarter(), train),
                    BadParameter);
    CHECK_THROWS_AS(observed_statistic(SurfaceFamily::DworkQuartic, 2, 7), BadParameter);
    CHECK_THROWS_AS(calibrate(SurfaceFamily::TripleProduct, HGTriple::half(), {}),
                    BadParameter);
}

TEST_CASE("surface family names") {
    CHECK(surface_family_by_name("dwork") == SurfaceFamily::DworkQuartic);
    CHECK(surface_family_by_name("aop") == SurfaceFamily::AOPDoubleCover);
    CHECK(surface_family_by_name("triple") == SurfaceFamily::TripleProduct);
    CHECK(std::string(surface_family_name(SurfaceFamily::DworkQuartic)) == "dwork");
    CHECK_THROWS_AS(surface_family_by_name("quintic"), BadParameter);
}

TEST_CASE("counts flow through the cache") {
    CountCache cache;
    (void)count_dwork_quartic(3, 5, &cache);
    CHECK(cache.size() == 1);
    CHECK(cache.hits() == 0);
    CHECK(count_dwork_quartic(3, 5, &cache) == 64);
    CHECK(cache.hits() == 1);
    (void)triple_char_sum(2, 7, &cache);
    (void)double_char_sum(2, 7, &cache);
    CHECK(cache.size() == 3);
}
