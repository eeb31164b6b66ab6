#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/findiff.hpp"
#include "fdzeta/oracle.hpp"
#include "fdzeta/zetaser.hpp"
#include "test_util.hpp"

using namespace fdz;
using namespace fdz::zetaser;
using testutil::R;
using testutil::close;

namespace {

const char* kZeta2 = "1.644934066848226436472415166646025189218949901206798";
const char* kZeta3 = "1.20205690315959428539973816151144999076498629234049";
const char* kGamma = "0.577215664901532860606512090082402431042159335939924";

PrecisionPolicy pol30() { return PrecisionPolicy(30); }

Complex C2(const char* re, mpfr_prec_t p = 256) { return Complex(R(re, p), Real(0, p)); }

}  // namespace

TEST_CASE("hasse hurwitz examples") {
    PrecisionPolicy pol(34);
    mpfr_prec_t p = pol.working_bits(0);
    EvalResult r = hasse_hurwitz(C2("2"), Real(1, p), pol);
    CHECK(close(r.value, R(kZeta2, 320), "1e-30"));
    CHECK(r.converged);
    CHECK(close(hasse_hurwitz(C2("0"), Real(1, p), pol).value,
                R("-0.5"), "1e-30"));
    CHECK(close(hasse_hurwitz(C2("-1"), Real(1, p), pol).value,
                Real::from_rational(Rational(-1, 12), 256), "1e-30"));
    CHECK_THROWS_AS(hasse_hurwitz(C2("1"), Real(1, p), pol), PoleAtOne);
    CHECK_THROWS_AS(hasse_hurwitz(C2("2"), Real(0, p), pol), DomainError);
}

TEST_CASE("hasse zeta near the pole") {
    PrecisionPolicy pol(60);
    mpfr_prec_t p = pol.working_bits(0);
    CHECK(close(hasse_zeta(C2("3", p), pol).value, R(kZeta3, 320), "1e-20"));
    // s = 1 + 1e-30: the value minus the pole term is gamma + O(1e-30)
    Real eps = R("1e-30", p);
    Complex s(Real(1, p) + eps, Real(0, p));
    Complex val = hasse_zeta(s, pol).value;
    Complex pole(Real(1, p) / eps, Real(0, p));
    CHECK(close(val - pole, R(kGamma, 320), "1e-25"));
    // pole factorization: (s-1) zeta(s) -> 1 through s = 1
    for (int sgn : {-1, 1}) {
        Complex s1(Real(1, p) + R("1e-10", p) * sgn, Real(0, p));
        Complex prod = (s1 - Complex(1, p)) * hasse_zeta(s1, PrecisionPolicy(30)).value;
        CHECK(close(prod, Real(1, p), "1e-9"));
    }
}

TEST_CASE("ser zeta agrees with hasse and terminates exactly at negative integers") {
    PrecisionPolicy pol(34);
    mpfr_prec_t p = pol.working_bits(0);
    CHECK(close(ser_zeta(C2("2"), pol).value, R(kZeta2, 320), "1e-30"));
    CHECK(close(ser_zeta(C2("-1"), pol).value, Real::from_rational(Rational(-1, 12), 256), "1e-25"));
    Complex s35 = C2("3.5");
    Complex a = ser_zeta(s35, pol).value;
    Complex b = hasse_zeta(s35, pol).value;
    CHECK((a - b).abs() < R("1e-25"));
    // the unlifted pure Ser sum terminates for polynomial exponents
    PrecisionPolicy raw(20);
    raw.lift = 0;
    CHECK(close(ser_zeta(C2("-1"), raw).value, Real::from_rational(Rational(-1, 12), 256), "1e-18"));
    CHECK_THROWS_AS(ser_zeta(C2("1"), pol), PoleAtOne);
}

TEST_CASE("ser gregory zeta: value, Laurent limit and exact leading terms") {
    PrecisionPolicy pol(40);
    mpfr_prec_t p = pol.working_bits(0);
    CHECK(close(ser_gregory_zeta(C2("2", p), pol).value, R(kZeta2, 320), "1e-30"));
    // s -> 1 regular part tends to gamma
    Real eps = R("1e-20", p);
    Complex s(Real(1, p) + eps, Real(0, p));
    Complex val = ser_gregory_zeta(s, pol).value;
    Complex pole(Real(1, p) / eps, Real(0, p));
    CHECK(close(val - pole, R(kGamma, 320), "1e-15"));
    // first fixed terms at s = 2: 1/2, (1/12)(1 - 2^-s) = 1/16, ...
    auto term = [](long n) {
        Rational t = coeffs::gregory(n + 1).abs() *
                     findiff::binom_transform_exact(
                         [](long k) { return Rational(1, (k + 1) * (k + 1)); }, n);
        return t;
    };
    CHECK(term(0) == Rational(1, 2));
    CHECK(term(1) == Rational(1, 16));
    CHECK(term(2) == Rational(1, 24) * (Rational(1) - Rational(2, 4) + Rational(1, 9)));
}

TEST_CASE("euler eta zeta") {
    PrecisionPolicy pol(34);
    mpfr_prec_t p = pol.working_bits(0);
    CHECK(close(euler_eta_zeta(C2("2"), pol).value, R(kZeta2, 320), "1e-30"));
    CHECK(euler_eta_zeta(C2("-2"), pol).value.abs() < R("1e-20"));
    CHECK_THROWS_AS(euler_eta_zeta(C2("1"), pol), EtaZeroDivisor);
}

TEST_CASE("cauchy zeta: value and exact leading terms") {
    PrecisionPolicy pol(34);
    mpfr_prec_t p = pol.working_bits(0);
    CHECK(close(cauchy_zeta(C2("2"), pol).value, R(kZeta2, 320), "1e-30"));
    CHECK(close(cauchy_zeta(C2("-1"), pol).value, Real::from_rational(Rational(-1, 12), 256),
                "1e-28"));
    // display terms at s = 2: 2^{-s-1} = 1/8, (5/12)(2^-s - 3^-s), C_3 (1/4 - 2/9 + 1/16)
    auto term = [](long n) {
        return coeffs::cauchy2(n + 1) *
               findiff::binom_transform_exact(
                   [](long k) { return Rational(1, (k + 2) * (k + 2)); }, n);
    };
    CHECK(term(0) == Rational(1, 8));
    CHECK(term(1) == Rational(5, 12) * (Rational(1, 4) - Rational(1, 9)));
    CHECK(term(2) == Rational(3, 8) * (Rational(1, 4) - Rational(2, 9) + Rational(1, 16)));
}

TEST_CASE("hurwitz families against the oracle") {
    PrecisionPolicy pol(32);
    mpfr_prec_t p = pol.working_bits(0);
    oracle::OracleConfig cfg(40);
    // gregory_hurwitz(2, 1/2) = pi^2/2
    CHECK(close(gregory_hurwitz(C2("2"), R("0.5", p), pol).value,
                R("4.934802200544679309417245499938075567657", 320), "1e-25"));
    for (const char* sv : {"2.5", "-1.5", "0.25"}) {
        for (const char* vv : {"0.75", "1.5", "3"}) {
            Complex s = C2(sv, p);
            Real v = R(vv, p);
            Complex ref = oracle::hurwitz_ref(s, v, cfg);
            CHECK(close(gregory_hurwitz(s, v, pol).value, ref, "1e-26"));
            if (v > 1) CHECK(close(cauchy_hurwitz(s, v, pol).value, ref, "1e-26"));
            CHECK(close(norlund_hurwitz(s, v, 2, Rational(1), pol).value, ref, "1e-26"));
            CHECK(close(stirling_zeta(s, v, 2, pol).value, ref, "1e-26"));
        }
    }
    CHECK_THROWS_AS(cauchy_hurwitz(C2("2"), Real(1, p), pol), DomainError);
    CHECK_THROWS_AS(norlund_hurwitz(C2("2"), Real(1, p), 2, Rational(-3, 2), pol), DomainError);
}

TEST_CASE("norlund reductions and the real-a weight path") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    for (const char* sv : {"2.5", "0.5"}) {
        Complex s = C2(sv, p);
        Real v = R("1.25", p);
        CHECK((norlund_hurwitz(s, v, 1, Rational(0), pol).value -
               gregory_hurwitz(s, v, pol).value)
                  .abs() < R("1e-27"));
        Real v2 = R("2.25", p);
        CHECK((norlund_hurwitz(s, v2, 1, Rational(-1), pol).value -
               cauchy_hurwitz(s, v2, pol).value)
                  .abs() < R("1e-27"));
        // rational and real Horner weights agree
        CHECK((norlund_hurwitz(s, v, 3, Rational(1, 2), pol).value -
               norlund_hurwitz(s, v, 3, R("0.5", p), pol).value)
                  .abs() < R("1e-27"));
    }
}

TEST_CASE("norlund zeta shifts") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    oracle::OracleConfig cfg(40);
    Complex ref3 = oracle::hurwitz_ref(C2("3"), Real(1, p), cfg);
    // shift 0 reduces to Ser's Gregory form at m=1, a=0
    CHECK(close(norlund_zeta(C2("2"), 1, Rational(0), 0, pol).value, R(kZeta2, 320), "1e-26"));
    // shift 1 reduces to the Cauchy series at m=1, a=-1
    CHECK(close(norlund_zeta(C2("2"), 1, Rational(-1), 1, pol).value, R(kZeta2, 320), "1e-26"));
    CHECK(close(norlund_zeta(C2("3"), 3, Rational(2), 0, pol).value, ref3, "1e-25"));
    CHECK(close(norlund_zeta(C2("3"), 2, Rational(-3, 2), 1, pol).value, ref3, "1e-25"));
    CHECK_THROWS_AS(norlund_zeta(C2("3"), 1, Rational(-3, 2), 0, pol), DomainError);
}

TEST_CASE("higher gregory functional relation") {
    PrecisionPolicy pol(28);
    mpfr_prec_t p = pol.working_bits(0);
    // k = 1 reduces to the Gregory series for zeta(s)
    Complex s35 = C2("3.5", p);
    CHECK((higher_gregory_zeta(s35, 1, pol).value - ser_gregory_zeta(s35, pol).value).abs() <
          R("1e-24"));
    CHECK(close(higher_gregory_zeta(C2("3"), 2, pol).value, R(kZeta3, 320), "1e-20"));
    CHECK(close(higher_gregory_zeta(C2("5"), 3, pol).value,
                R("1.03692775514336992633136548645703416805708092", 320), "1e-18"));
    // exact termination at s = -2 validates the Pochhammer algebra
    for (long k = 2; k <= 4; ++k) {
        CHECK(higher_gregory_zeta(C2("-2"), k, pol).value.abs() < R("1e-24"));
    }
    CHECK_THROWS_AS(higher_gregory_zeta(C2("2"), 3, pol), PoleSet);
    CHECK_THROWS_AS(higher_gregory_zeta(C2("1"), 2, pol), PoleAtOne);
}

TEST_CASE("stirling zeta") {
    PrecisionPolicy pol(28);
    mpfr_prec_t p = pol.working_bits(0);
    oracle::OracleConfig cfg(36);
    // k = 1 coincides with hasse
    Complex s2 = C2("2", p);
    CHECK((stirling_zeta(s2, Real(1, p), 1, pol).value - hasse_hurwitz(s2, Real(1, p), pol).value)
              .abs() < R("1e-26"));
    CHECK(close(stirling_zeta(C2("3"), Real(1, p), 2, pol).value, R(kZeta3, 320), "1e-20"));
    // zeta(4, 2) = zeta(4) - 1
    CHECK(close(stirling_zeta(C2("4"), Real(2, p), 3, pol).value,
                R("0.0823232337111381915160036965411679027747", 320), "1e-18"));
    CHECK_THROWS_AS(stirling_zeta(C2("2"), Real(1, p), 2, pol), PoleSet);
}

TEST_CASE("ser hurwitz relation") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    // v = 1 dispatches to ser_zeta
    Complex s35 = C2("3.5", p);
    CHECK((ser_hurwitz_relation(s35, Real(1, p), pol).value - ser_zeta(s35, pol).value).abs() <
          R("1e-27"));
    // zeta(3,2) = zeta(3) - 1
    CHECK(close(ser_hurwitz_relation(C2("3"), Real(2, p), pol).value,
                R("0.202056903159594285399738161511449990765", 320), "1e-20"));
    // agreement with gregory at fractional arguments
    Complex sh = C2("0.5", p);
    CHECK((ser_hurwitz_relation(sh, R("1.5", p), pol).value -
           gregory_hurwitz(sh, R("1.5", p), pol).value)
              .abs() < R("1e-20"));
    CHECK_THROWS_AS(ser_hurwitz_relation(C2("2"), Real(2, p), pol), PoleSet);
}

TEST_CASE("harmonic weighted families") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    oracle::OracleConfig cfg(40);
    // H1 at v=2 gives zeta(s, 1)
    CHECK(close(harmonic_hurwitz(C2("2"), Real(2, p), HarmonicWeight::H1, pol).value,
                R(kZeta2, 320), "1e-25"));
    // H2 at v=2 gives zeta(s); includes the limit path at s = 2
    CHECK(close(harmonic_hurwitz(C2("3"), Real(2, p), HarmonicWeight::H2, pol).value,
                R(kZeta3, 320), "1e-20"));
    CHECK(close(harmonic_hurwitz(C2("2"), Real(2, p), HarmonicWeight::H2, pol).value,
                R(kZeta2, 320), "1e-20"));
    // H1 at v=3 gives zeta(s, 2)
    CHECK(close(harmonic_hurwitz(C2("4"), Real(3, p), HarmonicWeight::H1, pol).value,
                R("0.0823232337111381915160036965411679027747", 320), "1e-20"));
    Complex shalf = C2("-0.5", p);
    Real vv = R("2.25", p);
    CHECK(close(harmonic_hurwitz(shalf, vv, HarmonicWeight::H2, pol).value,
                oracle::hurwitz_ref(shalf, vv - 1, cfg), "1e-22"));
    CHECK(close(harmonic_zeta(C2("2"), pol).value, R(kZeta2, 320), "1e-25"));
    CHECK_THROWS_AS(harmonic_hurwitz(C2("2"), Real(1, p), HarmonicWeight::H1, pol), DomainError);
}

TEST_CASE("recurrence and cross-representation invariants") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    Complex s(R("2.5", p), R("0.5", p));
    Real v = R("1.25", p);
    auto rec = [&](auto&& fn) {
        Complex lhs = fn(v) - fn(v + 1);
        return (lhs - real_pow_complex(v, -s)).abs() < R("1e-25");
    };
    CHECK(rec([&](const Real& vv) { return hasse_hurwitz(s, vv, pol).value; }));
    CHECK(rec([&](const Real& vv) { return gregory_hurwitz(s, vv, pol).value; }));
    CHECK(rec([&](const Real& vv) { return norlund_hurwitz(s, vv, 2, Rational(3, 2), pol).value; }));
    CHECK(rec([&](const Real& vv) { return stirling_zeta(s, vv, 3, pol).value; }));
}

TEST_CASE("series spec validation and dispatcher") {
    PrecisionPolicy pol(25);
    mpfr_prec_t p = pol.working_bits(0);
    SeriesSpec spec(Family::GregoryHurwitz);
    spec.v = Real(-1, p);
    CHECK_THROWS_AS(spec.validate(), DomainError);
    SeriesSpec ok(Family::HasseZeta);
    EvalResult r = evaluate(ok, C2("2", p), pol);
    CHECK(close(r.value, R(kZeta2, 320), "1e-22"));
    std::string js = r.to_json(25);
    CHECK(js.find("\"value\":{\"re\":\"1.6449340668482264364724152\"") != std::string::npos);
    CHECK(js.find("\"converged\":true") != std::string::npos);
    CHECK(js.find("\"n_terms\":") != std::string::npos);
    CHECK(js.find("\"working_bits\":") != std::string::npos);
    CHECK(js.find("\"error_estimate\":\"") != std::string::npos);
}

TEST_CASE("evaluation is deterministic") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    Complex s(R("0.5", p), R("14.134725", p));
    std::string a = hasse_zeta(s, pol).to_json(30);
    std::string b = hasse_zeta(s, pol).to_json(30);
    CHECK(a == b);
}

TEST_CASE("dirichlet series: constant sequence collapses to norlund") {
    PrecisionPolicy pol(25);
    mpfr_prec_t p = pol.working_bits(0);
    BoundedSequence ones{[](long, mpfr_prec_t prec) { return Complex(Real(1, prec)); }, 0};
    for (const char* sv : {"2.5", "-0.5"}) {
        Complex s = C2(sv, p);
        Complex got = dirichlet_series_eval(s, R("1.5", p), ones, 2, Rational(1),
                                            DirichletForm::B, pol)
                          .value;
        Complex want = norlund_hurwitz(s, R("1.5", p), 2, Rational(1), pol).value;
        CHECK((got - want).abs() < R("1e-20"));
    }
}

TEST_CASE("dirichlet series: u_n = n+1 reproduces the Gregory functional relation") {
    PrecisionPolicy pol(22);
    mpfr_prec_t p = pol.working_bits(0);
    oracle::OracleConfig cfg(30);
    BoundedSequence ramp{[](long n, mpfr_prec_t prec) { return Complex(Real(n + 1, prec)); }, 1};
    Complex s = C2("3", p);
    Real v(2, p);
    Complex got = dirichlet_series_eval(s, v, ramp, 1, Rational(0), DirichletForm::B, pol).value;
    // zeta(s,v,u) = (1-v) zeta(s,v) + zeta(s-1,v)
    Complex want = oracle::hurwitz_ref(s, v, cfg) * Real(-1, p) +
                   oracle::hurwitz_ref(C2("2", p), v, cfg);
    CHECK((got - want).abs() < R("1e-18"));
    // form A at a large base where its direct sums converge
    Real v8(8, p);
    Complex gotA = dirichlet_series_eval(s, v8, ramp, 1, Rational(0), DirichletForm::A, pol).value;
    Complex wantA = oracle::hurwitz_ref(s, v8, cfg) * Real(-7, p) +
                    oracle::hurwitz_ref(C2("2", p), v8, cfg);
    CHECK((gotA - wantA).abs() < R("1e-14"));
}

TEST_CASE("dirichlet series: alternating signs give the eta function") {
    PrecisionPolicy pol(18);
    mpfr_prec_t p = pol.working_bits(0);
    BoundedSequence alt{[](long n, mpfr_prec_t prec) {
                            return Complex(Real(n % 2 == 0 ? 1 : -1, prec));
                        },
                        std::nullopt};
    Complex got = dirichlet_series_eval(C2("2", p), Real(1, p), alt, 1, Rational(0),
                                        DirichletForm::B, pol)
                      .value;
    CHECK(close(got, R("0.8224670334241132182362075833230125946095", 320), "1e-15"));
    // form A demands Re s > 2 for general bounded sequences
    CHECK_THROWS_AS(dirichlet_series_eval(C2("1.5", p), Real(1, p), alt, 1, Rational(0),
                                          DirichletForm::A, pol),
                    UnsupportedRegion);
}

TEST_CASE("functional relation residuals at the spec sample points") {
    PrecisionPolicy pol(30);
    mpfr_prec_t p = pol.working_bits(0);
    // (v - 1/2) Gregory relation at s=3, v=2
    CHECK(verify_relation(RelationId::GregoryVHalf, C2("3", p), Real(2, p), 1, Rational(0), pol) <
          R("1e-20"));
    // m=2 pole form at s=2.5, v=1.25, a=0.5
    CHECK(verify_relation(RelationId::M2Form, C2("2.5", p), R("1.25", p), 2, Rational(1, 2), pol) <
          R("1e-18"));
    // harmonic form at m=4, s=3
    CHECK(verify_relation(RelationId::HarmonicZetaForm, C2("3", p), Real(1, p), 4, Rational(0),
                          pol) < R("1e-18"));
    CHECK(verify_relation(RelationId::PoleM, C2("2.5", p), Real(3, p), 2, Rational(2), pol) <
          R("1e-20"));
    CHECK(verify_relation(RelationId::PsiForm, C2("3", p), Real(2, p), 1, Rational(5, 2), pol) <
          R("1e-20"));
    CHECK(verify_relation(RelationId::ZetaGregory2, C2("2.5", p), Real(1, p), 1, Rational(0), pol) <
          R("1e-20"));
    CHECK(verify_relation(RelationId::ZetaSm1A, C2("3", p), Real(1, p), 2, Rational(3), pol) <
          R("1e-20"));
    CHECK(verify_relation(RelationId::SerHurwitz, C2("3", p), Real(2, p), 1, Rational(0), pol) <
          R("1e-20"));
}
