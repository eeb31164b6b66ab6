#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/polys.hpp"
#include "test_util.hpp"

using namespace fdz;
using namespace fdz::polys;
using testutil::R;
using testutil::close;

namespace {
RationalPoly P(std::vector<Rational> c) { return RationalPoly(std::move(c)); }
}  // namespace

TEST_CASE("fontana-bessel polynomials match the footnote list") {
    CHECK(fontana_bessel(0) == P({Rational(1)}));
    CHECK(fontana_bessel(1) == P({Rational(1, 2), Rational(1)}));
    CHECK(fontana_bessel(2) == P({Rational(-1, 12), Rational(0), Rational(1, 2)}));
    CHECK(fontana_bessel(3) == P({Rational(1, 24), Rational(0), Rational(-1, 4), Rational(1, 6)}));
    CHECK(fontana_bessel(4) ==
          P({Rational(-19, 720), Rational(0), Rational(1, 6), Rational(-1, 6), Rational(1, 24)}));
    for (long n = 1; n <= 30; ++n) {
        CHECK(fontana_bessel(n).eval(Rational(0)) == coeffs::gregory(n));
    }
}

TEST_CASE("norlund polynomials match the Remark-1 table") {
    for (long m = 1; m <= 5; ++m) {
        Rational M(m);
        CHECK(norlund_poly(0, m) == P({M}));
        CHECK(norlund_poly(1, m) == P({M * M / Rational(2), M}));
        CHECK(norlund_poly(2, m) == P({M * M * M / Rational(6) - M * M / Rational(4),
                                       M * M / Rational(2) - M / Rational(2), M / Rational(2)}));
        CHECK(norlund_poly(3, m) ==
              P({M * M / Rational(6) - M * M * M / Rational(6) + Rational::pow(M, 4) / Rational(24),
                 M / Rational(3) - M * M / Rational(2) + M * M * M / Rational(6),
                 M * M / Rational(4) - M / Rational(2), M / Rational(6)}));
    }
}

TEST_CASE("central difference coefficients M_2n = N_{2n,1}(n-1)") {
    CHECK(norlund_poly(2, 1).eval(Rational(0)) == Rational(-1, 12));
    CHECK(norlund_poly(4, 1).eval(Rational(1)) == Rational(11, 720));
    CHECK(norlund_poly(6, 1).eval(Rational(2)) == Rational(-191, 60480));
    CHECK(norlund_poly(8, 1).eval(Rational(3)) == Rational(2497, 3628800));
}

TEST_CASE("evaluation specializations") {
    CHECK(poly_eval(fontana_bessel(3), Rational(0)) == Rational(1, 24));
    CHECK(poly_eval(norlund_poly(3, 1), Rational(-1)) == -Rational(3, 8));
    CHECK(poly_eval(norlund_poly(5, 1), Rational(0)) == Rational(3, 160));
    for (long n = 1; n <= 25; ++n) {
        CHECK(poly_eval(norlund_poly(n, 1), Rational(-1)) ==
              ((n % 2 == 0) ? coeffs::cauchy2(n) : -coeffs::cauchy2(n)));
    }
    // real Horner agrees with exact evaluation
    Real got = poly_eval_real(fontana_bessel(6), R("0.3125", 192), 192);
    Real want = Real::from_rational(fontana_bessel(6).eval(Rational(5, 16)), 192);
    CHECK(close(got, want, "1e-50"));
}

TEST_CASE("difference and telescoping identities") {
    for (long n = 0; n <= 20; ++n) {
        for (long m = 1; m <= 5; ++m) {
            RationalPoly psi_next = fontana_bessel(n + 1);
            CHECK(norlund_poly(n, m) == psi_next.shifted(Rational(m)) - psi_next);
            RationalPoly acc;
            for (long k = 0; k < m; ++k) {
                acc = acc + fontana_bessel(n).shifted(Rational(k));
            }
            CHECK(norlund_poly(n, m) == acc);
        }
        CHECK(norlund_poly(n, 1) == fontana_bessel(n));
    }
}

TEST_CASE("norlund derivative equals the binomial difference") {
    CHECK(norlund_derivative(0, 3) == RationalPoly());
    CHECK(norlund_derivative(1, 1) == P({Rational(1)}));
    for (long n = 0; n <= 15; ++n) {
        for (long m = 1; m <= 4; ++m) {
            CHECK_NOTHROW(norlund_derivative(n, m));  // equality asserted inside
        }
    }
}

TEST_CASE("psi integral representation on the sample points") {
    PrecisionPolicy pol(16);
    // psi_1(0) = G_1 = 1/2
    CHECK(close(psi_integral(1, Rational(0), pol), R("0.5"), "1e-10"));
    // psi_3(1) = 1/6 - 1/4 + 1/24 = -1/24
    Real want3 = Real::from_rational(Rational(-1, 24), 256);
    CHECK(close(psi_integral(3, Rational(1), pol), want3, "1e-10"));
    // psi_4(-1) = (+1)^4 C_4 = 251/720
    Real want4 = Real::from_rational(Rational(251, 720), 256);
    CHECK(close(psi_integral(4, Rational(-1), pol), want4, "1e-10"));
    CHECK_THROWS_AS(psi_integral(2, Rational(-3, 2), pol), DomainError);
    CHECK_THROWS_AS(psi_integral(2, Rational(3, 2), pol), DomainError);
}

TEST_CASE("psi integral quadrature over a half-integer grid") {
    PrecisionPolicy pol(16);
    for (long n = 1; n <= 5; ++n) {
        for (long num = -2; num <= 2 * (n - 1); ++num) {
            Rational x(num, 2);
            Real got = psi_integral(n, x, pol);
            Real want = Real::from_rational(fontana_bessel(n).eval(x), 256);
            CHECK(abs(got - want) < R("1e-10"));
        }
    }
}

TEST_CASE("norlund asymptotics") {
    PrecisionPolicy pol(20);
    CHECK_THROWS_AS(norlund_asymptotic(100, 1, Real(0, 128), 1, pol), DegenerateLeading);
    CHECK_THROWS_AS(norlund_asymptotic(100, 1, Real(-1, 128), 2, pol), DomainError);
    CHECK_THROWS_AS(norlund_asymptotic(5, 1, R("0.5"), 1, pol), DomainError);
    // a = -1/2, m = 1: the 1-term truncation is within a factor two of the
    // exact polynomial values and the 2-term form is closer
    Rational half(-1, 2);
    for (long n : {100L, 200L}) {
        Real exact = Real::from_rational(norlund_poly(n, 1).eval(half), 640);
        Real one_term = norlund_asymptotic(n, 1, R("-0.5"), 1, pol);
        Real two_term = norlund_asymptotic(n, 1, R("-0.5"), 2, pol);
        Real ratio1 = exact / one_term.at_prec(640);
        CHECK(ratio1 > R("0.5"));
        CHECK(ratio1 < R("2"));
        CHECK(abs(exact / two_term.at_prec(640) - Real(1, 640)) <
              abs(ratio1 - Real(1, 640)));
    }
}

TEST_CASE("polynomial json serialization") {
    CHECK(fontana_bessel(2).to_json("x") == "{\"var\":\"x\",\"coeffs\":[\"-1/12\",\"0\",\"1/2\"]}");
    CHECK(norlund_poly(0, 3).to_json("a") == "{\"var\":\"a\",\"coeffs\":[\"3\"]}");
}
