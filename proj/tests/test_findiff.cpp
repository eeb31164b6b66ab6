#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/findiff.hpp"
#include "fdzeta/oracle.hpp"
#include "test_util.hpp"

using namespace fdz;
using namespace fdz::findiff;
using testutil::R;
using testutil::close;

namespace {

TermFunction pow_fn(long base_shift, const Complex& expo) {
    return [base_shift, expo](long k, mpfr_prec_t prec) {
        return real_pow_complex(Real(base_shift + k, prec), expo.at_prec(prec));
    };
}

}  // namespace

TEST_CASE("binom transform basics") {
    PrecisionPolicy pol(25);
    mpfr_prec_t pb = pol.working_bits(0);
    auto f = [](long k, mpfr_prec_t prec) { return Complex(Real(3 * k + 7, prec)); };
    // n = 0 keeps f(0)
    CHECK(binom_transform(f, 0, pol).re() == Real(7, pb));
    // differences kill constants
    auto c = [](long, mpfr_prec_t prec) { return Complex(Real(42, prec)); };
    CHECK(binom_transform(c, 1, pol).abs().is_zero());
    // v = 2, f = x^{-1}: T_5 = 1/42 exactly
    auto inv = [](long k, mpfr_prec_t prec) {
        return Complex(Real(1, prec) / Real(2 + k, prec));
    };
    CHECK(close(binom_transform(inv, 5, pol), Real::from_rational(Rational(1, 42), pb), "1e-28"));
    Rational exact = binom_transform_exact([](long k) { return Rational(1, 2 + k); }, 5);
    CHECK(exact == Rational(1, 42));
    for (long n = 1; n <= 40; ++n) {
        CHECK(binom_transform_exact([](long k) { return Rational(1, 2 + k); }, n) ==
              Rational(1, (n + 1) * (n + 2)));
    }
}

TEST_CASE("forward difference convention") {
    PrecisionPolicy pol(20);
    auto f = [](long k, mpfr_prec_t prec) { return Complex(Real(5 - 2 * k, prec)); };
    // Delta^0 f = f(v)
    CHECK(forward_difference(f, 0, pol).re() == Real(5, pol.working_bits(0)));
    // Delta^1 of k |-> k is 1
    auto idf = [](long k, mpfr_prec_t prec) { return Complex(Real(k, prec)); };
    CHECK(close(forward_difference(idf, 1, pol), Real(1, 128), "1e-18"));
    // Delta^{d+1} annihilates degree d: f(k) = (k+3)^2, n = 3
    auto sq = [](long k, mpfr_prec_t prec) { return Complex(Real((k + 3) * (k + 3), prec)); };
    CHECK(forward_difference(sq, 3, pol).abs() < R("1e-18"));
    // sign flip between the conventions
    auto lin = [](long k, mpfr_prec_t prec) { return Complex(Real(k, prec)); };
    CHECK(close(binom_transform(lin, 1, pol), Real(-1, 128), "1e-18"));
}

TEST_CASE("pascal consistency of the transform") {
    PrecisionPolicy pol(25);
    Complex expo(R("-1.5", 160), R("0.5", 160));
    for (long n : {3L, 9L, 17L}) {
        Complex lhs = binom_transform(pow_fn(1, expo), n + 1, pol);
        Complex rhs =
            binom_transform(pow_fn(1, expo), n, pol) - binom_transform(pow_fn(2, expo), n, pol);
        CHECK(close(lhs, rhs, "1e-20"));
    }
}

TEST_CASE("transform precision tracks a high-precision reference") {
    // same sum at triple working precision
    for (const char* sim : {"0", "14"}) {
        Complex expo(R(sim[0] == '0' ? "-2" : "-0.5", 512), R(sim, 512));
        expo = -expo;  // f = (k+1)^{-s}
        PrecisionPolicy pol(20);
        PrecisionPolicy hi(60);
        for (long n : {25L, 100L, 200L}) {
            Complex got = binom_transform(pow_fn(1, expo), n, pol);
            Complex ref = binom_transform(pow_fn(1, expo), n, hi);
            CHECK((got - ref).abs() < R("1e-20"));
        }
    }
}

TEST_CASE("derivative from differences") {
    PrecisionPolicy pol(20);
    // derivative of the identity is 1
    auto idf = [](long k, mpfr_prec_t prec) { return Complex(Real(4 + k, prec)); };
    CHECK(close(derivative_from_differences(idf, pol, 1000), Real(1, 128), "1e-18"));
    // derivative of x^2 at v: k-th derivative op with k=.. see below; here first
    // derivative of ln at a base where the series converges quickly
    oracle::OracleConfig cfg(30);
    auto lnf = [](long k, mpfr_prec_t prec) { return Complex(ln_real(Real(25 + k, prec))); };
    CHECK(close(derivative_from_differences(lnf, pol, 4000),
                Real(1, 192) / Real(25, 192), "1e-18"));
    // the paper's Hasse derivation: F = zeta(s, x), dF/dv = -s zeta(s+1, v)
    auto zf = [&cfg](long k, mpfr_prec_t prec) {
        return oracle::hurwitz_ref(Complex(3, prec), Real(25 + k, prec), cfg);
    };
    Complex want = oracle::hurwitz_ref(Complex(4, 192), Real(25, 192), cfg) * Real(-3, 192);
    CHECK(close(derivative_from_differences(zf, pol, 4000), want, "1e-15"));
}

TEST_CASE("derivative from differences at slow pinned bases reports non-convergence") {
    // ln at v = 3 decays like n^{-4}: the 20-digit stopping rule cannot be met
    // within a 300-term budget, which must surface as NotConverged
    PrecisionPolicy pol(20);
    auto lnf = [](long k, mpfr_prec_t prec) { return Complex(ln_real(Real(3 + k, prec))); };
    CHECK_THROWS_AS(derivative_from_differences(lnf, pol, 300), NotConverged);
}

TEST_CASE("k-th derivative from differences") {
    PrecisionPolicy pol(20);
    // second derivative of x^2 is 2
    auto sq = [](long k, mpfr_prec_t prec) {
        Real x(7 + k, prec);
        return Complex(x * x);
    };
    CHECK(close(kth_derivative_from_differences(sq, 2, pol, 1000), Real(2, 128), "1e-16"));
    // second derivative of ln x is -1/x^2, evaluated where the series converges
    auto lnf = [](long k, mpfr_prec_t prec) { return Complex(ln_real(Real(25 + k, prec))); };
    Real want = Real(-1, 256) / Real(625, 256);
    CHECK(close(kth_derivative_from_differences(lnf, 2, pol, 4000), want, "1e-15"));
    // k = 1 reduces to the plain derivative weights
    auto f = [](long k, mpfr_prec_t prec) {
        return Complex(Real(1, prec) / Real(9 + k, prec));
    };
    Complex a = derivative_from_differences(f, pol, 2000);
    Complex b = kth_derivative_from_differences(f, 1, pol, 2000);
    CHECK(close(a, b, "1e-22"));
}

TEST_CASE("exactness of the rational transform on coefficient identities") {
    // (1/n!) sum_l S1(n,l)/(l+1) recovered through the transform of 1/(k+1):
    // T_n(1/(k+1)) = 1/(n+1), the Hasse weight identity
    for (long n = 0; n <= 30; ++n) {
        CHECK(binom_transform_exact([](long k) { return Rational(1, k + 1); }, n) ==
              Rational(1, n + 1));
    }
}
