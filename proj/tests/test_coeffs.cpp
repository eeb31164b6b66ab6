#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "test_util.hpp"

using namespace fdz;
using namespace fdz::coeffs;

TEST_CASE("stirling numbers of the first kind") {
    for (long n = 0; n <= 50; ++n) CHECK(stirling1(n, n) == Integer(1));
    CHECK(stirling1(3, 2) == Integer(-3));
    CHECK(stirling1(4, 1) == Integer(-6));
    CHECK(stirling1(4, 2) == Integer(11));
    CHECK(stirling1(2, 5) == Integer(0));
    CHECK(stirling1(5, 0) == Integer(0));
}

TEST_CASE("gregory coefficients: recurrence agrees with Stirling sum") {
    // paper's opening list
    CHECK(gregory(1) == Rational(1, 2));
    CHECK(gregory(2) == Rational(-1, 12));
    CHECK(gregory(3) == Rational(1, 24));
    CHECK(gregory(4) == Rational(-19, 720));
    CHECK(gregory(5) == Rational(3, 160));
    CHECK(gregory(6) == Rational(-863, 60480));
    // the dual-path equality is asserted inside the generator; force n <= 60
    CHECK_NOTHROW(gregory(60));
    for (long n = 1; n <= 60; ++n) {
        CHECK(gregory(n).sign() == ((n % 2 == 1) ? 1 : -1));
    }
    CHECK_THROWS_AS(gregory(0), DomainError);
}

TEST_CASE("cauchy numbers of the second kind") {
    CHECK(cauchy2(0) == Rational(1));
    CHECK(cauchy2(1) == Rational(1, 2));
    CHECK(cauchy2(2) == Rational(5, 12));
    CHECK(cauchy2(3) == Rational(3, 8));
    CHECK(cauchy2(4) == Rational(251, 720));
    CHECK(cauchy2(5) == Rational(95, 288));
    CHECK(cauchy2(6) == Rational(19087, 60480));
    Rational abs_sum(0);
    for (long n = 1; n <= 60; ++n) {
        CHECK(cauchy2(n - 1) - cauchy2(n) == gregory(n).abs());
        abs_sum += gregory(n).abs();
        CHECK(cauchy2(n) == Rational(1) - abs_sum);
        CHECK(cauchy2(n).sign() > 0);
        CHECK(cauchy2(n) < cauchy2(n - 1));
    }
}

TEST_CASE("fontana partial sums stay below one") {
    Rational partial(0);
    for (long n = 1; n <= 300; ++n) {
        Rational next = partial + gregory(n).abs();
        CHECK(next > partial);
        CHECK(next < Rational(1));
        partial = next;
    }
}

TEST_CASE("higher-order gregory coefficients") {
    for (long n = 1; n <= 20; ++n) CHECK(gregory_higher(n, 1) == gregory(n));
    CHECK(gregory_higher(1, 2) == Rational(1, 3));
    CHECK(gregory_higher(2, 2) == Rational(-1, 24));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == Rational(0));
    CHECK(harmonic(1) == Rational(1));
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic_gen(2, 2) == Rational(5, 4));
    CHECK(harmonic_gen(3, 1) == harmonic(3));
}

TEST_CASE("stirling ratio closed forms") {
    for (long n = 0; n <= 50; ++n) {
        CHECK(stirling_ratio(n, 1) == Rational(1, n + 1));  // closed forms asserted inside
        CHECK_NOTHROW(stirling_ratio(n, 2));
        CHECK_NOTHROW(stirling_ratio(n, 3));
    }
    CHECK(stirling_ratio(0, 2) == Rational(1, 2));
    CHECK(stirling_ratio(1, 3) == Rational(1, 4));
}

TEST_CASE("modified Bell polynomials") {
    CHECK(bell_modified(0, {}) == Rational(1));
    std::vector<Rational> x1 = {Rational(7)};
    CHECK(bell_modified(1, x1) == Rational(7));
    std::vector<Rational> x2 = {Rational(2), Rational(3)};
    CHECK(bell_modified(2, x2) == Rational(2) * Rational(2) / Rational(2) + Rational(3, 2));
    // P_{k-1}(H^{(1)}, -H^{(2)}, ...)/(n+k) reproduces the Stirling ratio
    for (long n = 0; n <= 10; ++n) {
        for (long k = 1; k <= 5; ++k) {
            std::vector<Rational> xs;
            for (long j = 1; j < k; ++j) {
                Rational h = harmonic_gen(n + k - 1, j);
                xs.push_back((j % 2 == 1) ? h : -h);
            }
            CHECK(bell_modified(k - 1, xs) / Rational(n + k) == stirling_ratio(n, k));
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("floating gregory table tracks the exact values") {
    auto table = gregory_abs_table(80, 320);
    for (long n = 1; n <= 80; ++n) {
        Real exact = Real::from_rational(gregory(n).abs(), 320);
        CHECK(testutil::close(table[static_cast<size_t>(n)], exact, "1e-80"));
    }
}
