#include "fdzeta/gammafns.hpp"

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/findiff.hpp"
#include "fdzeta/oracle.hpp"
#include "fdzeta/polys.hpp"

namespace fdz::gammafns {

namespace {

using findiff::SeriesSum;
using findiff::sum_weighted_transform;

Real ln2pi(mpfr_prec_t prec) { return ln_real(const_pi(prec) * 2); }

long lift_of(const PrecisionPolicy& policy, const Real& v) {
    // series in 1/(v)_n and log transforms converge like n^{-v}; the recurrence
    // lifts below-target arguments. A floor of 2 applies even with lift off.
    long want = (policy.lift == 0) ? 2 : policy.lift_target();
    return std::max<long>(0, want - v.floor_long());
}

findiff::WeightFunction rw(std::function<Rational(long)> wfn) {
    return [wfn = std::move(wfn)](long n, mpfr_prec_t prec) {
        return Real::from_rational(wfn(n), prec);
    };
}

findiff::TermFunction log_term(const Real& w) {
    return [w](long k, mpfr_prec_t prec) { return Complex(ln_real(w.at_prec(prec) + k)); };
}

findiff::TermFunction xlogx_term(const Real& w) {
    return [w](long k, mpfr_prec_t prec) {
        Real b = w.at_prec(prec) + k;
        return Complex(b * ln_real(b));
    };
}

// sum_{n>=1} weight(n) (n-1)!/(w)_n with the stopping rule.
Real pochhammer_series(const Real& w, const std::function<Real(long, mpfr_prec_t)>& weight,
                       const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Real acc(0, pb);
    Real cur = Real(1, pb) / w;  // (n-1)!/(w)_n at n = 1
    Real thresh(0, kMinPrec);
    mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits), MPFR_RNDN);
    thresh = Real(1, kMinPrec) / thresh;
    long small = 0;
    for (long n = 1; n <= policy.max_terms; ++n) {
        Real t = weight(n, pb) * cur;
        acc += t;
        Real mag = abs(t).at_prec(kMinPrec);
        Real scale = abs(acc).at_prec(kMinPrec);
        if (scale < 1) scale = Real(1, kMinPrec);
        if (mag < thresh * scale) {
            if (++small >= policy.stop_window && n >= policy.min_terms) return acc;
        } else {
            small = 0;
        }
        cur = cur * n / (w + n);
    }
    throw NotConverged("pochhammer series: stopping rule unmet by max_terms");
}

Real descend_digamma(const Real& psi_w, const Real& v, long L, mpfr_prec_t pb) {
    Real acc = psi_w;
    for (long j = 0; j < L; ++j) acc -= Real(1, pb) / (v.at_prec(pb) + j);
    return acc;
}

Real digamma_series_at(const Real& w, DigammaMethod method, const FnParams& params,
                       const PrecisionPolicy& policy, long fixed_terms);

}  // namespace

Real pochhammer_real(const Real& v, long n) {
    if (n < 0) throw DomainError("pochhammer needs n >= 0");
    Real p(1, v.prec());
    for (long j = 0; j < n; ++j) p *= (v + j);
    return p;
}

namespace {

Real digamma_series_at(const Real& w, DigammaMethod method, const FnParams& params,
                       const PrecisionPolicy& policy, long fixed_terms) {
    mpfr_prec_t pb = policy.working_bits(0);
    PrecisionPolicy pol = policy;
    if (fixed_terms > 0) {
        pol.max_terms = fixed_terms;
        pol.min_terms = fixed_terms + 1;  // disable early stop
    }
    auto poch = [&](const std::function<Real(long, mpfr_prec_t)>& weight) {
        if (fixed_terms > 0) {
            Real acc(0, pb);
            Real cur = Real(1, pb) / w;
            for (long n = 1; n <= fixed_terms; ++n) {
                acc += weight(n, pb) * cur;
                cur = cur * n / (w + n);
            }
            return acc;
        }
        return pochhammer_series(w, weight, pol);
    };
    Rational a = params.a;
    long r = params.r;
    switch (method) {
        case DigammaMethod::Gregory:
            return ln_real(w) - poch([](long n, mpfr_prec_t prec) {
                       return Real::from_rational(coeffs::gregory(n).abs(), prec);
                   });
        case DigammaMethod::Cauchy:
            return ln_real(w - 1) + poch([](long n, mpfr_prec_t prec) {
                       return Real::from_rational(coeffs::cauchy2(n), prec);
                   });
        case DigammaMethod::PsiA: {
            Real ar = Real::from_rational(a, pb);
            return ln_real(w + ar) + poch([a](long n, mpfr_prec_t prec) {
                       Rational t = polys::fontana_bessel(n).eval(a);
                       if (n % 2 != 0) t = -t;
                       return Real::from_rational(t, prec);
                   });
        }
        case DigammaMethod::NorlundAvg: {
            Real ar = Real::from_rational(a, pb);
            Real acc(0, pb);
            for (long l = 0; l < r; ++l) acc += ln_real(w + ar + l) / r;
            return acc + poch([a, r](long n, mpfr_prec_t prec) {
                       Rational t = polys::norlund_poly(n, r).eval(a) / Rational(r);
                       if (n % 2 != 0) t = -t;
                       return Real::from_rational(t, prec);
                   });
        }
        case DigammaMethod::LnGammaCoupled: {
            Real ar = Real::from_rational(a, pb);
            Real half(1, pb);
            half = half / 2;
            Real inner = lngamma(w + ar, LnGammaMethod::Gregory, {}, policy) + w -
                         ln2pi(pb) * half - half;
            for (long n = 0; n <= r - 2; ++n) {
                inner += ln_real(w + ar + n) * (r - n - 1) / r;
            }
            inner += poch([a, r](long n, mpfr_prec_t prec) {
                Rational t = polys::norlund_poly(n + 1, r).eval(a) / Rational(r);
                if (n % 2 != 0) t = -t;
                return Real::from_rational(t, prec);
            });
            Real denom = Real::from_rational(Rational(r, 2), pb) + w + ar - 1;
            return inner / denom;
        }
        case DigammaMethod::G2Relation: {
            Real lg = lngamma(w, LnGammaMethod::Gregory, {}, policy);
            Real ser = poch([](long n, mpfr_prec_t prec) {
                Rational t = coeffs::gregory_higher(n, 2) * Rational(2);
                if (n % 2 != 0) t = -t;
                return Real::from_rational(t, prec);
            });
            return lg * 2 - w * ln_real(w) * 2 + w * 2 + ln_real(w) * 2 - ln2pi(pb) + ser;
        }
        case DigammaMethod::HasseLog: {
            SeriesSum run = sum_weighted_transform(
                rw([](long n) { return Rational(1, n + 1); }), log_term(w), pol);
            if (!run.converged && fixed_terms <= 0) {
                throw NotConverged("digamma HasseLog: stopping rule unmet");
            }
            return run.value.re();
        }
        case DigammaMethod::HarmonicLog: {
            SeriesSum run = sum_weighted_transform(
                rw([](long n) { return coeffs::harmonic(n + 1); }), log_term(w + 1), pol);
            if (!run.converged && fixed_terms <= 0) {
                throw NotConverged("digamma HarmonicLog: stopping rule unmet");
            }
            return run.value.re();
        }
        case DigammaMethod::Theorem6K2: {
            auto weight = rw([](long j) {
                if (j < 1) return Rational(0);
                return -coeffs::harmonic(j) * Rational(2, j + 1);
            });
            SeriesSum run = sum_weighted_transform(weight, xlogx_term(w), pol);
            if (!run.converged && fixed_terms <= 0) {
                throw NotConverged("digamma Theorem6K2: stopping rule unmet");
            }
            return run.value.re() - 1;
        }
        default:
            throw DomainError("method handled elsewhere");
    }
}

}  // namespace

Real digamma(const Real& v, DigammaMethod method, const FnParams& params,
             const PrecisionPolicy& policy) {
    return digamma_fixed_terms(v, method, params, 0, policy);
}

Real digamma_fixed_terms(const Real& v, DigammaMethod method, const FnParams& params,
                         long terms, const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    Real ar = Real::from_rational(params.a, pb);
    switch (method) {
        case DigammaMethod::Gregory:
        case DigammaMethod::HasseLog:
        case DigammaMethod::G2Relation:
        case DigammaMethod::Theorem6K2:
            if (vp.sign() <= 0) throw DomainError("digamma method needs v > 0");
            break;
        case DigammaMethod::Cauchy:
        case DigammaMethod::HarmonicLog:
            if (!(vp > 1)) throw DomainError("digamma method needs v > 1");
            break;
        case DigammaMethod::PsiA:
        case DigammaMethod::NorlundAvg:
        case DigammaMethod::LnGammaCoupled:
            if (!(params.a > Rational(-1))) throw DomainError("digamma method needs a > -1");
            if (params.r < 1) throw DomainError("digamma method needs r >= 1");
            if (!(vp > -ar)) throw DomainError("digamma method needs v > -a");
            break;
        case DigammaMethod::Stern:
            if (vp.sign() <= 0) throw DomainError("Stern series needs a = v-1 > -1");
            break;
    }
    if (method == DigammaMethod::Stern) {
        // Psi(a+1) = -gamma - sum_{n>=1} (-1)^n binom(a,n)/n at a = v - 1 (no lift)
        Real gamma = oracle::const_ref(oracle::ConstName::Gamma,
                                       std::min<long>(policy.target_digits + 5, 200));
        Real acc = -gamma.at_prec(pb);
        Real av = vp - 1;
        Real b = av;  // binom(a, 1)
        long cap = terms > 0 ? terms : policy.max_terms;
        Real thresh(0, kMinPrec);
        mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits),
                       MPFR_RNDN);
        thresh = Real(1, kMinPrec) / thresh;
        long small = 0;
        for (long n = 1; n <= cap; ++n) {
            Real t = b / n;
            if (n % 2 != 0) {
                acc += t;
            } else {
                acc -= t;
            }
            b = b * (av - n) / (n + 1);
            if (terms <= 0) {
                if (abs(t).at_prec(kMinPrec) < thresh) {
                    if (++small >= policy.stop_window && n >= policy.min_terms) return acc;
                } else {
                    small = 0;
                }
                if (b.is_zero()) return acc;  // integer a: series terminates
            }
        }
        if (terms > 0) return acc;
        throw NotConverged("Stern series: stopping rule unmet by max_terms");
    }
    long L = (terms > 0) ? std::max<long>(0, 2 - vp.floor_long()) : lift_of(policy, vp);
    Real w = vp + L;
    Real psi_w = digamma_series_at(w, method, params, policy, terms);
    return descend_digamma(psi_w, vp, L, pb);
}

BoundsTriple digamma_bounds_check(const Real& v, const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    if (!(vp > 1)) throw DomainError("digamma bounds need v > 1");
    BoundsTriple t;
    t.lower = ln_real(vp - 1);
    t.upper = ln_real(vp);
    t.value = digamma(vp, DigammaMethod::Gregory, {}, policy);
    if (!(t.lower < t.value && t.value < t.upper)) {
        throw Error("digamma bounds ln(v-1) < Psi(v) < ln v violated");
    }
    return t;
}

Real lngamma(const Real& v, LnGammaMethod method, const FnParams& params,
             const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    Real ar = Real::from_rational(params.a, pb);
    switch (method) {
        case LnGammaMethod::Gregory:
        case LnGammaMethod::GregoryNewton:
        case LnGammaMethod::HasseVLogV:
            if (vp.sign() <= 0) throw DomainError("lngamma method needs v > 0");
            break;
        case LnGammaMethod::Cauchy:
        case LnGammaMethod::HarmonicVLogV:
            if (!(vp > 1)) throw DomainError("lngamma method needs v > 1");
            break;
        case LnGammaMethod::Norlund:
            if (!(params.a > Rational(-1)) || params.r < 1 || !(vp > -ar)) {
                throw DomainError("lngamma Norlund needs r >= 1, a > -1, v > -a");
            }
            break;
    }
    long L = lift_of(policy, vp);
    Real w = vp + L;
    Real half(1, pb);
    half = half / 2;
    Real val(0, pb);
    switch (method) {
        case LnGammaMethod::Gregory: {
            SeriesSum run = sum_weighted_transform(
                rw([](long n) { return coeffs::gregory(n + 1).abs(); }), log_term(w), policy);
            if (!run.converged) throw NotConverged("lngamma Gregory: stopping rule unmet");
            val = w * ln_real(w) - w + ln2pi(pb) * half - run.value.re();
            break;
        }
        case LnGammaMethod::Cauchy: {
            SeriesSum run = sum_weighted_transform(
                rw([](long n) { return coeffs::cauchy2(n + 1); }), log_term(w), policy);
            if (!run.converged) throw NotConverged("lngamma Cauchy: stopping rule unmet");
            val = (w - 1) * ln_real(w - 1) - w + 1 + ln2pi(pb) * half + run.value.re();
            break;
        }
        case LnGammaMethod::Norlund: {
            long r = params.r;
            auto weight = rw([r, a = params.a](long n) {
                Rational t = polys::norlund_poly(n + 1, r).eval(a);
                return (n % 2 == 0) ? t : -t;
            });
            SeriesSum run = sum_weighted_transform(weight, log_term(w), policy);
            if (!run.converged) throw NotConverged("lngamma Norlund: stopping rule unmet");
            Real acc(0, pb);
            for (long l = 0; l < r; ++l) {
                Real b = w + ar + l;
                acc += b * ln_real(b) / r;
            }
            val = acc - w - ar - Real::from_rational(Rational(params.r, 2), pb) + ln2pi(pb) * half +
                  half - run.value.re() / r;
            break;
        }
        case LnGammaMethod::GregoryNewton: {
            // ln Gamma(W + x) = ln (W-1)! + sum_n (-1)^n binom(x, n+1) T_n(ln(k+W))
            long W = w.floor_long();
            Real x = w - W;
            Real lgW(0, pb);
            {
                Integer f = Integer::factorial(static_cast<unsigned long>(W - 1));
                lgW = ln_real(Real::from_integer(f, pb));
            }
            auto weight = [x](long n, mpfr_prec_t prec) {
                Real b = x.at_prec(prec);  // binom(x,1)
                for (long j = 1; j <= n; ++j) b = b * (x.at_prec(prec) - j) / (j + 1);
                return (n % 2 == 0) ? b : -b;
            };
            SeriesSum run = sum_weighted_transform(weight, log_term(Real(W, pb)), policy);
            if (!run.converged) throw NotConverged("lngamma GregoryNewton: stopping rule unmet");
            val = lgW + run.value.re();
            break;
        }
        case LnGammaMethod::HasseVLogV: {
            SeriesSum run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 1); }),
                                                   xlogx_term(w), policy);
            if (!run.converged) throw NotConverged("lngamma HasseVLogV: stopping rule unmet");
            val = -w + half + ln2pi(pb) * half + run.value.re();
            break;
        }
        case LnGammaMethod::HarmonicVLogV: {
            SeriesSum run = sum_weighted_transform(
                rw([](long n) { return coeffs::harmonic(n + 1); }), xlogx_term(w + 1), policy);
            if (!run.converged) throw NotConverged("lngamma HarmonicVLogV: stopping rule unmet");
            val = -(w + 1) + half * 3 + ln2pi(pb) * half + run.value.re();
            break;
        }
    }
    for (long j = 0; j < L; ++j) val -= ln_real(vp + j);
    return val;
}

Real trigamma(const Real& v, TrigammaMethod method, const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    if (vp.sign() <= 0) throw DomainError("trigamma needs v > 0");
    if (method == TrigammaMethod::SerFraction && vp == 1) {
        // the (v-1) denominator degenerates; dispatch to another representation
        method = TrigammaMethod::HassePochhammer;
    }
    long L = lift_of(policy, vp);
    Real w = vp + L;
    Real thresh(0, kMinPrec);
    mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits), MPFR_RNDN);
    thresh = Real(1, kMinPrec) / thresh;
    auto run_loop = [&](const std::function<Real(long)>& wfn, Real cur,
                        const std::function<Real(long)>& ratio_den) {
        Real acc(0, pb);
        long small = 0;
        for (long n = 0; n <= policy.max_terms; ++n) {
            Real t = wfn(n) * cur;
            acc += t;
            if (abs(t).at_prec(kMinPrec) < thresh * Real(1, kMinPrec)) {
                if (++small >= policy.stop_window && n >= policy.min_terms) return acc;
            } else {
                small = 0;
            }
            cur = cur * (n + 1) / ratio_den(n);
        }
        throw NotConverged("trigamma series: stopping rule unmet by max_terms");
    };
    Real val(0, pb);
    switch (method) {
        case TrigammaMethod::SerFraction: {
            // sum n!/((n+2)(w)_{n+1}); cur = n!/(w)_{n+1}
            Real s = run_loop([pb](long n) { return Real(1, pb) / (n + 2); }, Real(1, pb) / w,
                              [&w](long n) { return w + n + 1; });
            val = (Real(1, pb) - s) / (w - 1);
            break;
        }
        case TrigammaMethod::HarmonicPochhammer: {
            Real s = run_loop(
                [pb](long n) { return Real::from_rational(coeffs::harmonic(n + 1), pb); },
                Real(1, pb) / (w * (w + 1)), [&w](long n) { return w + n + 2; });
            val = w * s;
            break;
        }
        case TrigammaMethod::HassePochhammer: {
            Real s = run_loop([pb](long n) { return Real(1, pb) / (n + 1); }, Real(1, pb) / w,
                              [&w](long n) { return w + n + 1; });
            val = s;
            break;
        }
        case TrigammaMethod::Theorem6: {
            auto weight = rw([](long j) {
                if (j < 1) return Rational(0);
                return -coeffs::harmonic(j) * Rational(2, j + 1);
            });
            SeriesSum run = sum_weighted_transform(weight, log_term(w), policy);
            if (!run.converged) throw NotConverged("trigamma Theorem6: stopping rule unmet");
            val = run.value.re();
            break;
        }
    }
    for (long j = 0; j < L; ++j) {
        Real b = vp + j;
        val += Real(1, pb) / (b * b);
    }
    return val;
}

}  // namespace fdz::gammafns
