#include "fdzeta/oracle.hpp"

#include <algorithm>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"

namespace fdz::oracle {

namespace {

mpfr_prec_t bits_for(long digits) {
    return static_cast<mpfr_prec_t>(std::max<long>(static_cast<long>(digits * 3.33) + 64, kMinPrec));
}

Real pow10_neg(long e, mpfr_prec_t prec) {
    Real t(0, prec);
    mpfr_ui_pow_ui(t.raw(), 10, static_cast<unsigned long>(e), MPFR_RNDN);
    return Real(1, prec) / t;
}

Complex pochhammer(const Complex& s, long m, mpfr_prec_t prec) {
    Complex r(1, prec);
    for (long j = 0; j < m; ++j) {
        r = r * (s + Complex(j, prec));
    }
    return r;
}

}  // namespace

Complex hurwitz_ref(const Complex& s, const Real& v, const OracleConfig& cfg) {
    if (s.im().is_zero() && s.re() == 1) throw PoleAtOne();
    if (v.sign() <= 0) throw DomainError("hurwitz_ref needs v > 0");
    long digits = cfg.target_digits;
    mpfr_prec_t prec = bits_for(digits + 10);
    mpfr_prec_t lowp = 128;
    Real tol = pow10_neg(digits + 5, lowp);

    Complex sl = s.at_prec(lowp);
    Real vl = v.at_prec(lowp);
    long M = std::max<long>(cfg.em_shift, 8);
    long J = std::max<long>(cfg.bernoulli_terms, 4);
    while (true) {
        double sigma = s.re().to_double();
        if (sigma + 2 * static_cast<double>(J) - 1 > 1) {
            Real b = abs(Real::from_rational(coeffs::bernoulli(2 * J), lowp));
            Real p = pochhammer(sl, 2 * J, lowp).abs();
            Real base = vl + M;
            Real decay = pow(base, Real::from_double(-(sigma + 2.0 * J - 1.0), lowp));
            Real fact = Real::from_integer(Integer::factorial(static_cast<unsigned long>(2 * J)), lowp);
            Real bound = b * p * decay / fact;
            if (bound < tol) break;
        }
        if (J < 64) {
            J += 4;
        } else {
            M *= 2;
            J = std::max<long>(cfg.bernoulli_terms, 4);
            if (M > (1L << 24)) throw Error("hurwitz_ref: remainder bound did not close");
        }
    }

    Complex sp = s.at_prec(prec);
    Real vp = v.at_prec(prec);
    Complex acc(0, prec);
    for (long n = 0; n < M; ++n) {
        acc += real_pow_complex(vp + n, -sp);
    }
    Real base = vp + M;
    Complex one(1, prec);
    acc += real_pow_complex(base, one - sp) / (sp - one);
    acc += real_pow_complex(base, -sp) / 2;
    for (long j = 1; j < J; ++j) {
        Complex c = Complex(Real::from_rational(coeffs::bernoulli(2 * j), prec)) *
                    pochhammer(sp, 2 * j - 1, prec);
        Real fact = Real::from_integer(Integer::factorial(static_cast<unsigned long>(2 * j)), prec);
        acc += c * real_pow_complex(base, -sp - Complex(2 * j - 1, prec)) / Complex(fact);
    }
    return acc;
}

namespace {

Real machin_pi(long digits) {
    mpfr_prec_t prec = bits_for(digits + 8);
    // pi = 16 atan(1/5) - 4 atan(1/239); atan(1/x) tail < 1/((2J+1) x^{2J+1})
    auto atan_inv = [prec](long x) {
        Real term = Real(1, prec) / x;
        Real inv2 = Real(1, prec) / (static_cast<long>(x) * x);
        Real acc(0, prec);
        long j = 0;
        while (!abs_below_2exp(term, -(prec - 2))) {
            Real piece = term / (2 * j + 1);
            if (j % 2 == 0) {
                acc += piece;
            } else {
                acc -= piece;
            }
            term *= inv2;
            ++j;
        }
        return acc;
    };
    return atan_inv(5) * 16 - atan_inv(239) * 4;
}

Real atanh_ln2(long digits) {
    mpfr_prec_t prec = bits_for(digits + 8);
    // ln 2 = 2 atanh(1/3); geometric tail ratio 1/9
    Real term = Real(1, prec) / 3;
    Real inv9 = Real(1, prec) / 9;
    Real acc(0, prec);
    long j = 0;
    while (!abs_below_2exp(term, -(prec - 2))) {
        acc += term / (2 * j + 1);
        term *= inv9;
        ++j;
    }
    return acc * 2;
}

Real euler_maclaurin_gamma(long digits) {
    mpfr_prec_t prec = bits_for(digits + 10);
    mpfr_prec_t lowp = 128;
    Real tol = pow10_neg(digits + 6, lowp);
    long N = 256, J = 0;
    while (J == 0) {
        for (long j = 6; j <= 60; j += 2) {
            Real b = abs(Real::from_rational(coeffs::bernoulli(2 * j), lowp));
            Real bound = b / (pow_si(Real(N, lowp), 2 * j) * (2 * j));
            if (bound < tol) {
                J = j;
                break;
            }
        }
        if (J == 0) N *= 2;
        if (N > (1L << 20)) throw Error("euler_maclaurin_gamma: bound did not close");
    }
    Real h(0, prec);
    for (long j = 1; j <= N; ++j) h += Real(1, prec) / j;
    Real g = h - ln_real(Real(N, prec)) - Real(1, prec) / (2 * N);
    for (long j = 1; j < J; ++j) {
        g += Real::from_rational(coeffs::bernoulli(2 * j), prec) /
             (pow_si(Real(N, prec), 2 * j) * (2 * j));
    }
    return g;
}

// The series scheme carries a digits-based truncation bound; require the MPFR
// scheme to agree at the requested digits plus a safety margin.
void cross_assert(const Real& a, const Real& b, long digits, const char* what) {
    Real diff = abs(a - b).at_prec(128);
    Real scale = abs(a).at_prec(128) + Real(1, 128);
    Real lim = scale * pow10_neg(digits + 2, 128);
    if (!(diff <= lim)) throw Error(std::string("const_ref cross-check failed: ") + what);
}

}  // namespace

Real const_ref(ConstName name, long digits) {
    if (digits < 1 || digits > 200) throw DomainError("const_ref supports 1..200 digits");
    mpfr_prec_t prec = bits_for(digits + 8);
    switch (name) {
        case ConstName::Pi: {
            Real v = machin_pi(digits);
            Real check(0, prec);
            mpfr_const_pi(check.raw(), MPFR_RNDN);
            cross_assert(v, check, digits, "pi");
            return v;
        }
        case ConstName::Ln2: {
            Real v = atanh_ln2(digits);
            Real check(0, prec);
            mpfr_const_log2(check.raw(), MPFR_RNDN);
            cross_assert(v, check, digits, "ln2");
            return v;
        }
        case ConstName::Gamma: {
            Real v = euler_maclaurin_gamma(digits);
            Real check(0, prec);
            mpfr_const_euler(check.raw(), MPFR_RNDN);
            cross_assert(v, check, digits, "gamma");
            return v;
        }
        case ConstName::Ln2Pi: {
            Real v = atanh_ln2(digits) + ln_real(machin_pi(digits));
            Real two_pi(0, prec);
            mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
            Real check = ln_real(two_pi * 2);
            cross_assert(v, check, digits, "ln2pi");
            return v;
        }
    }
    throw DomainError("unknown constant");
}

namespace {

struct StirlingPlan {
    long lift = 0;
    long terms = 0;  // J
};

StirlingPlan stirling_plan(const Real& v, long digits, bool for_digamma) {
    StirlingPlan plan;
    mpfr_prec_t lowp = 128;
    Real tol = pow10_neg(digits + 6, lowp);
    long floor_v = v.floor_long();
    long want = static_cast<long>(0.45 * static_cast<double>(digits)) + 8;
    plan.lift = std::max<long>(0, want - floor_v);
    while (true) {
        Real z = v.at_prec(lowp) + plan.lift;
        for (long j = 4; j <= 100; j += 2) {
            Real b = abs(Real::from_rational(coeffs::bernoulli(2 * j), lowp));
            Real denom = for_digamma ? pow_si(z, 2 * j) * (2 * j)
                                     : pow_si(z, 2 * j - 1) * (2 * j) * (2 * j - 1);
            if (b / denom < tol) {
                plan.terms = j;
                return plan;
            }
        }
        plan.lift += 16;
    }
}

}  // namespace

Real lngamma_ref(const Real& v, const OracleConfig& cfg) {
    if (v.sign() <= 0) throw DomainError("lngamma_ref needs v > 0");
    long digits = cfg.target_digits;
    mpfr_prec_t prec = bits_for(digits + 10);
    StirlingPlan plan = stirling_plan(v, digits, false);
    Real z = v.at_prec(prec) + plan.lift;
    Real half(1, prec);
    half = half / 2;
    Real acc = (z - half) * ln_real(z) - z +
               const_ref(ConstName::Ln2Pi, std::min<long>(digits + 8, 200)).at_prec(prec) / 2;
    for (long j = 1; j < plan.terms; ++j) {
        acc += Real::from_rational(coeffs::bernoulli(2 * j), prec) /
               (pow_si(z, 2 * j - 1) * (2 * j) * (2 * j - 1));
    }
    for (long i = 0; i < plan.lift; ++i) {
        acc -= ln_real(v.at_prec(prec) + i);
    }
    return acc;
}

Real digamma_ref(const Real& v, const OracleConfig& cfg) {
    if (v.sign() <= 0) throw DomainError("digamma_ref needs v > 0");
    long digits = cfg.target_digits;
    mpfr_prec_t prec = bits_for(digits + 10);
    StirlingPlan plan = stirling_plan(v, digits, true);
    Real z = v.at_prec(prec) + plan.lift;
    Real acc = ln_real(z) - Real(1, prec) / (z * 2);
    for (long j = 1; j < plan.terms; ++j) {
        acc -= Real::from_rational(coeffs::bernoulli(2 * j), prec) / (pow_si(z, 2 * j) * (2 * j));
    }
    for (long i = 0; i < plan.lift; ++i) {
        acc -= Real(1, prec) / (v.at_prec(prec) + i);
    }
    return acc;
}

Real trigamma_ref(const Real& v, const OracleConfig& cfg) {
    return hurwitz_ref(Complex(2, bits_for(cfg.target_digits)), v, cfg).re();
}

Real laurent_coeff_ref(long m, const OracleConfig& cfg) {
    if (m < 0 || m > 8) throw DomainError("laurent_coeff_ref supports m <= 8");
    long digits = cfg.target_digits;
    mpfr_prec_t prec = bits_for(digits + 12);
    OracleConfig inner(digits + 10);
    Real tol = pow10_neg(digits, 128);
    Real prev(0, prec);
    bool have_prev = false;
    Real half(1, prec);
    half = half / 2;
    for (long q_count = 64; q_count <= 4096; q_count *= 2) {
        Real two_pi = const_pi(prec) * 2;
        Complex acc(0, prec);
        for (long q = 0; q < q_count; ++q) {
            Real theta = two_pi * q / q_count;
            Real c(0, prec), sn(0, prec);
            mpfr_sin_cos(sn.raw(), c.raw(), theta.raw(), MPFR_RNDN);
            Complex node(c * half, sn * half);        // r e^{i theta}
            Complex sq = node + Complex(1, prec);     // s on the circle
            Complex g = node * hurwitz_ref(sq, Real(1, prec), inner);  // (s-1) zeta(s)
            // g * e^{-i (m+1) theta}
            Real cm(0, prec), sm(0, prec);
            Real phi = theta * (m + 1);
            mpfr_sin_cos(sm.raw(), cm.raw(), phi.raw(), MPFR_RNDN);
            acc += g * Complex(cm, -sm);
        }
        Complex c_coeff = acc / q_count;
        Real rpow = pow_si(half, m + 1);
        Real val = c_coeff.re() / rpow;
        Real fact = Real::from_integer(Integer::factorial(static_cast<unsigned long>(m)), prec);
        val = val * fact;
        if (m % 2 != 0) val = -val;
        if (have_prev && abs(val - prev).at_prec(128) < tol) return val;
        prev = val;
        have_prev = true;
    }
    return prev;
}

}  // namespace fdz::oracle
