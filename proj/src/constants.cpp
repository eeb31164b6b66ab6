#include "fdzeta/constants.hpp"

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/findiff.hpp"
#include "fdzeta/gammafns.hpp"
#include "fdzeta/polys.hpp"

namespace fdz::constants {

namespace {

using findiff::SeriesSum;
using findiff::sum_weighted_transform;

findiff::WeightFunction rw(std::function<Rational(long)> wfn) {
    return [wfn = std::move(wfn)](long n, mpfr_prec_t prec) {
        return Real::from_rational(wfn(n), prec);
    };
}

// k |-> ln^m(k+w) / (k+w)^pow  (pow in {0,1})
findiff::TermFunction log_term(const Real& w, long m, int pow) {
    return [w, m, pow](long k, mpfr_prec_t prec) {
        Real base = w.at_prec(prec) + k;
        Real val = ln_pow(base, m);
        if (pow) val = val / base;
        return Complex(val);
    };
}

ConstResult from_run(const Real& head, const SeriesSum& run, const Real& scale) {
    ConstResult r;
    r.value = head + run.value.re() * scale;
    r.n_terms = run.n_terms;
    r.converged = run.converged;
    r.error_estimate = run.last_term * abs(scale).at_prec(kMinPrec);
    return r;
}

// Direct single-sum series with the module stopping rule; terms at base precision.
ConstResult direct_series(const std::function<Real(long, mpfr_prec_t)>& term,
                          const PrecisionPolicy& policy, long first_n = 1) {
    mpfr_prec_t pb = policy.working_bits(0);
    ConstResult out;
    out.value = Real(0, pb);
    Real thresh(0, kMinPrec);
    mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits), MPFR_RNDN);
    thresh = Real(1, kMinPrec) / thresh;
    long small = 0;
    for (long n = first_n; n < first_n + policy.max_terms; ++n) {
        Real t = term(n, pb);
        out.value += t;
        out.n_terms = n - first_n + 1;
        Real mag = abs(t).at_prec(kMinPrec);
        out.error_estimate = mag;
        Real scale = abs(out.value).at_prec(kMinPrec);
        if (scale < 1) scale = Real(1, kMinPrec);
        if (mag < thresh * scale) {
            if (++small >= policy.stop_window && out.n_terms >= policy.min_terms) {
                out.converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

Real ln2pi(mpfr_prec_t prec) { return ln_real(const_pi(prec) * 2); }

// Norlund weights (-1)^n N_{n+off,r}(a)
std::function<Rational(long)> nw(long r, Rational a, long off) {
    return [r, a = std::move(a), off](long n) {
        Rational w = polys::norlund_poly(n + off, r).eval(a);
        return (n % 2 == 0) ? w : -w;
    };
}

}  // namespace

Real f_m(long m, const Real& v, mpfr_prec_t prec) {
    Real vp = v.at_prec(prec);
    Real lnv = ln_real(vp);
    Real inner(1, prec);
    inner -= vp;
    Real lp(1, prec);
    Rational fact(1);
    for (long k = 1; k <= m; ++k) {
        lp *= lnv;
        fact *= Rational(k);
        Real t = vp * lp / Real::from_rational(fact, prec);
        if (k % 2 != 0) {
            inner += t;  // -v * (-1)^k ln^k v / k!
        } else {
            inner -= t;
        }
    }
    Real out = inner * Real::from_integer(Integer::factorial(static_cast<unsigned long>(m)), prec);
    if (m % 2 != 0) out = -out;
    return out;
}

ConstResult stieltjes(long m, StieltjesWeight weight, const PrecisionPolicy& policy) {
    if (m < 0) throw DomainError("stieltjes needs m >= 0");
    if (weight == StieltjesWeight::Gregory && m < 1) {
        throw DomainError("the Gregory-weight gamma_m series is stated for m >= 1");
    }
    mpfr_prec_t pb = policy.working_bits(0);
    bool pinned = policy.lift == 0 || weight == StieltjesWeight::Ser ||
                  (weight == StieltjesWeight::H2 && m >= 1);
    if (!pinned) {
        long W = policy.lift_target();
        Real w(W, pb);
        // descent gamma_m(v) = gamma_m(v+1) + ln^m(v)/v from v = 1
        Real corr(0, pb);
        for (long j = 1; j < W; ++j) corr += ln_pow(Real(j, pb), m) / j;
        switch (weight) {
            case StieltjesWeight::Gregory: {
                auto run = sum_weighted_transform(
                    rw([](long n) { return coeffs::gregory(n + 1).abs(); }), log_term(w, m, 1),
                    policy);
                Real head = corr - ln_pow(w, m + 1) / (m + 1);
                return from_run(head, run, Real(1, pb));
            }
            case StieltjesWeight::Hasse: {
                auto run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 1); }),
                                                  log_term(w, m + 1, 0), policy);
                return from_run(corr, run, Real(-1, pb) / (m + 1));
            }
            case StieltjesWeight::Cauchy: {
                auto run = sum_weighted_transform(rw([](long n) { return coeffs::cauchy2(n + 1); }),
                                                  log_term(w, m, 1), policy);
                Real head = corr - ln_pow(w - 1, m + 1) / (m + 1);
                return from_run(head, run, Real(-1, pb));
            }
            case StieltjesWeight::H1: {
                auto run = sum_weighted_transform(rw([](long n) { return coeffs::harmonic(n + 1); }),
                                                  log_term(w + 1, m + 1, 0), policy);
                return from_run(corr, run, Real(-1, pb) / (m + 1));
            }
            case StieltjesWeight::H2: {
                // m = 0 only here: gamma = -Psi(1) via the H_{n+2} digamma form
                Real psi1 = gammafns::digamma(Real(1, pb), gammafns::DigammaMethod::HarmonicLog,
                                              {}, policy);
                ConstResult r;
                r.value = -psi1;
                r.converged = true;
                r.n_terms = 0;
                return r;
            }
            default:
                break;
        }
    }
    // pinned displays
    switch (weight) {
        case StieltjesWeight::Ser: {
            auto run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 2); }),
                                              log_term(Real(1, pb), m + 1, 1), policy);
            return from_run(Real(0, pb), run, Real(-1, pb) / (m + 1));
        }
        case StieltjesWeight::Hasse: {
            auto run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 1); }),
                                              log_term(Real(1, pb), m + 1, 0), policy);
            return from_run(Real(0, pb), run, Real(-1, pb) / (m + 1));
        }
        case StieltjesWeight::Gregory: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::gregory(n + 1).abs(); }),
                                              log_term(Real(1, pb), m, 1), policy);
            return from_run(Real(0, pb), run, Real(1, pb));
        }
        case StieltjesWeight::Cauchy: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::cauchy2(n + 1); }),
                                              log_term(Real(2, pb), m, 1), policy);
            return from_run(Real(m == 0 ? 1 : 0, pb), run, Real(-1, pb));
        }
        case StieltjesWeight::H1: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::harmonic(n + 1); }),
                                              log_term(Real(2, pb), m + 1, 0), policy);
            return from_run(Real(0, pb), run, Real(-1, pb) / (m + 1));
        }
        case StieltjesWeight::H2: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::harmonic(n + 2); }),
                                              log_term(Real(2, pb), m + 1, 1), policy);
            return from_run(Real(0, pb), run, Real(-1, pb) / (m + 1));
        }
    }
    throw DomainError("unknown stieltjes weight");
}

ConstResult delta(long m, DeltaWeight weight, const PrecisionPolicy& policy) {
    if (m < 1) throw DomainError("delta needs m >= 1");
    mpfr_prec_t pb = policy.working_bits(0);
    // descent delta_m(v) = delta_m(v+1) + ln^m v from v = 1; the pinned Cauchy
    // display is the W = 2 case (delta_m(2) = delta_m since ln 1 = 0)
    long W = (policy.lift == 0) ? (weight == DeltaWeight::Gregory ? 1 : 2) : policy.lift_target();
    Real w(W, pb);
    Real corr(0, pb);
    for (long j = 1; j < W; ++j) corr += ln_pow(Real(j, pb), m);
    if (weight == DeltaWeight::Gregory) {
        auto run = sum_weighted_transform(rw([](long n) { return coeffs::gregory(n + 1).abs(); }),
                                          log_term(w, m, 0), policy);
        return from_run(corr + f_m(m, w, pb), run, Real(1, pb));
    }
    auto run = sum_weighted_transform(rw([](long n) { return coeffs::cauchy2(n + 1); }),
                                      log_term(w, m, 0), policy);
    return from_run(corr + f_m(m, w - 1, pb), run, Real(-1, pb));
}

ConstResult gen_stieltjes(long m, const Real& v, GenMethod method, long r, const Rational& a,
                          const PrecisionPolicy& policy) {
    if (m < 0) throw DomainError("gen_stieltjes needs m >= 0");
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    Real ar = Real::from_rational(a, pb);
    switch (method) {
        case GenMethod::Gregory:
        case GenMethod::HasseWeight:
            if (vp.sign() <= 0) throw DomainError("gen_stieltjes needs v > 0");
            break;
        case GenMethod::Cauchy:
            if (!(vp > 1)) throw DomainError("gen_stieltjes Cauchy needs v > 1");
            break;
        case GenMethod::Norlund:
            if (r < 1 || !(a > Rational(-1)) || !(vp > -ar)) {
                throw DomainError("gen_stieltjes Norlund needs r >= 1, a > -1, v > -a");
            }
            break;
        case GenMethod::SerWeight2:
            if (m != 0) {
                throw DomainError(
                    "the 1/(n+2) gamma_m(v) form needs zeta''(0,v) for m >= 1 and is excluded");
            }
            if (vp.sign() <= 0 || vp == 1) throw DomainError("gen_stieltjes SerWeight2 needs v > 0, v != 1");
            break;
    }
    long L = (policy.lift == 0) ? 0 : std::max<long>(0, policy.lift_target() - vp.floor_long());
    Real w = vp + L;
    Real corr(0, pb);
    for (long j = 0; j < L; ++j) {
        Real b = vp + j;
        corr += ln_pow(b, m) / b;
    }
    switch (method) {
        case GenMethod::Gregory: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::gregory(n + 1).abs(); }),
                                              log_term(w, m, 1), policy);
            return from_run(corr - ln_pow(w, m + 1) / (m + 1), run, Real(1, pb));
        }
        case GenMethod::Cauchy: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::cauchy2(n + 1); }),
                                              log_term(w, m, 1), policy);
            return from_run(corr - ln_pow(w - 1, m + 1) / (m + 1), run, Real(-1, pb));
        }
        case GenMethod::Norlund: {
            auto run = sum_weighted_transform(rw(nw(r, a, 1)), log_term(w, m, 1), policy);
            Real head = corr;
            for (long l = 0; l < r; ++l) head -= ln_pow(w + ar + l, m + 1) / (r * (m + 1));
            return from_run(head, run, Real(1, pb) / r);
        }
        case GenMethod::HasseWeight: {
            auto run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 1); }),
                                              log_term(w, m + 1, 0), policy);
            return from_run(corr, run, Real(-1, pb) / (m + 1));
        }
        case GenMethod::SerWeight2: {
            // gamma_0(w) = -Psi(w), Psi from the 1/(n+2) relation with ln Gamma input
            auto run = sum_weighted_transform(rw([](long n) { return Rational(1, n + 2); }),
                                              log_term(w, 1, 0), policy);
            Real lg = gammafns::lngamma(w, gammafns::LnGammaMethod::Gregory, {}, policy);
            Real half(1, pb);
            half = half / 2;
            Real psi = (lg + w - ln2pi(pb) * half - half - run.value.re()) / (w - 1);
            ConstResult out;
            out.value = corr - psi;
            out.n_terms = run.n_terms;
            out.converged = run.converged;
            out.error_estimate = run.last_term;
            return out;
        }
    }
    throw DomainError("unknown gen_stieltjes method");
}

ConstResult gen_delta(long m, const Real& v, GenMethod method, long r, const Rational& a,
                      const PrecisionPolicy& policy) {
    if (m < 1) throw DomainError("gen_delta needs m >= 1");
    mpfr_prec_t pb = policy.working_bits(0);
    Real vp = v.at_prec(pb);
    Real ar = Real::from_rational(a, pb);
    if (method == GenMethod::Gregory && vp.sign() <= 0) throw DomainError("gen_delta needs v > 0");
    if (method == GenMethod::Cauchy && !(vp > 1)) throw DomainError("gen_delta Cauchy needs v > 1");
    if (method == GenMethod::Norlund && (r < 1 || !(a > Rational(-1)) || !(vp > -ar))) {
        throw DomainError("gen_delta Norlund needs r >= 1, a > -1, v > -a");
    }
    long L = (policy.lift == 0) ? 0 : std::max<long>(0, policy.lift_target() - vp.floor_long());
    Real w = vp + L;
    Real corr(0, pb);
    for (long j = 0; j < L; ++j) corr += ln_pow(vp + j, m);
    switch (method) {
        case GenMethod::Gregory: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::gregory(n + 1).abs(); }),
                                              log_term(w, m, 0), policy);
            return from_run(corr + f_m(m, w, pb), run, Real(1, pb));
        }
        case GenMethod::Cauchy: {
            auto run = sum_weighted_transform(rw([](long n) { return coeffs::cauchy2(n + 1); }),
                                              log_term(w, m, 0), policy);
            return from_run(corr + f_m(m, w - 1, pb), run, Real(-1, pb));
        }
        case GenMethod::Norlund: {
            auto run = sum_weighted_transform(rw(nw(r, a, 1)), log_term(w, m, 0), policy);
            Real head = corr;
            for (long l = 0; l < r; ++l) head += f_m(m, w + ar + l, pb) / r;
            return from_run(head, run, Real(1, pb) / r);
        }
        default:
            throw DomainError("gen_delta supports Gregory, Cauchy and Norlund forms");
    }
}

namespace {

Rational pochhammer_rational(const Rational& x, long n) {
    Rational p(1);
    for (long j = 0; j < n; ++j) p *= x + Rational(j);
    return p;
}

}  // namespace

ConstResult euler_gamma(GammaMethod method, const GammaParams& params,
                        const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    switch (method) {
        case GammaMethod::FontanaMascheroni: {
            return direct_series(
                [](long n, mpfr_prec_t prec) {
                    return Real::from_rational(coeffs::gregory(n).abs() / Rational(n), prec);
                },
                policy);
        }
        case GammaMethod::NorlundLog: {
            if (!(params.a > Rational(-1))) throw DomainError("NorlundLog needs a > -1");
            if (params.m < 1) throw DomainError("NorlundLog needs m >= 1");
            long m = params.m;
            Rational a = params.a;
            ConstResult r = direct_series(
                [m, a](long n, mpfr_prec_t prec) {
                    Rational t = polys::norlund_poly(n, m).eval(a) / Rational(n * m);
                    if (n % 2 != 0) t = -t;
                    return Real::from_rational(-t, prec);
                },
                policy);
            Real ar = Real::from_rational(a, pb);
            for (long l = 1; l <= m; ++l) r.value -= ln_real(ar + l) / m;
            return r;
        }
        case GammaMethod::PairedRational: {
            if (!(params.a > Rational(-1))) throw DomainError("PairedRational needs a > -1");
            Rational a = params.a;
            Rational mirror = -a / (Rational(1) + a);
            return direct_series(
                [a, mirror](long n, mpfr_prec_t prec) {
                    Rational t = polys::fontana_bessel(n).eval(a) + polys::fontana_bessel(n).eval(mirror);
                    t /= Rational(2 * n);
                    if (n % 2 == 0) t = -t;
                    return Real::from_rational(t, prec);
                },
                policy);
        }
        case GammaMethod::ProductConstraint: {
            if (params.as.empty()) throw DomainError("ProductConstraint needs nodes");
            if (params.m < 1) throw DomainError("ProductConstraint needs m >= 1");
            Rational prod(1);
            for (const auto& ai : params.as) {
                if (!(ai > Rational(-1))) throw DomainError("nodes must exceed -1");
                prod *= pochhammer_rational(Rational(1) + ai, params.m);
            }
            if (prod != Rational(1)) {
                throw ConstraintViolated("prod (1+a_i)_m must equal 1");
            }
            long m = params.m;
            auto as = params.as;
            long k = static_cast<long>(as.size());
            return direct_series(
                [m, as, k](long n, mpfr_prec_t prec) {
                    Rational acc(0);
                    for (const auto& ai : as) acc += polys::norlund_poly(n, m).eval(ai);
                    acc /= Rational(n * m * k);
                    if (n % 2 == 0) acc = -acc;
                    return Real::from_rational(acc, prec);
                },
                policy);
        }
        case GammaMethod::QWeighted: {
            if (params.as.empty() || params.as.size() != params.qs.size()) {
                throw DomainError("QWeighted needs matching nodes and exponents");
            }
            if (params.m < 1) throw DomainError("QWeighted needs m >= 1");
            Rational prod(1);
            long qsum = 0;
            for (size_t i = 0; i < params.as.size(); ++i) {
                if (!(params.as[i] > Rational(-1))) throw DomainError("nodes must exceed -1");
                prod *= Rational::pow(pochhammer_rational(Rational(1) + params.as[i], params.m),
                                      params.qs[i]);
                qsum += params.qs[i];
            }
            if (prod != Rational(1)) {
                throw ConstraintViolated("prod (1+a_i)_m^{q_i} must equal 1");
            }
            if (qsum == 0) throw DomainError("QWeighted needs a nonzero exponent sum");
            long m = params.m;
            auto as = params.as;
            auto qs = params.qs;
            return direct_series(
                [m, as, qs, qsum](long n, mpfr_prec_t prec) {
                    Rational acc(0);
                    for (size_t i = 0; i < as.size(); ++i) {
                        acc += Rational(qs[i]) * polys::norlund_poly(n, m).eval(as[i]);
                    }
                    acc /= Rational(n * m * qsum);
                    if (n % 2 == 0) acc = -acc;
                    return Real::from_rational(acc, prec);
                },
                policy);
        }
        case GammaMethod::G2Series: {
            ConstResult r = direct_series(
                [](long n, mpfr_prec_t prec) {
                    Rational t = coeffs::gregory_higher(n, 2) * Rational(2, n);
                    if (n % 2 == 0) t = -t;
                    return Real::from_rational(t, prec);
                },
                policy);
            r.value += ln2pi(pb) - 2;
            return r;
        }
        case GammaMethod::LnGammaForm: {
            if (!(params.a > Rational(-1))) throw DomainError("LnGammaForm needs a > -1");
            if (params.m < 1) throw DomainError("LnGammaForm needs m >= 1");
            Rational denom = Rational(params.m) + Rational(2) * params.a;
            if (denom.is_zero()) throw DomainError("LnGammaForm degenerate at m + 2a = 0");
            long m = params.m;
            Rational a = params.a;
            ConstResult r = direct_series(
                [m, a](long n, mpfr_prec_t prec) {
                    Rational t = polys::norlund_poly(n + 1, m).eval(a) / Rational(n * m);
                    if (n % 2 != 0) t = -t;
                    return Real::from_rational(t, prec);
                },
                policy);
            Real ar = Real::from_rational(a, pb);
            Real half(1, pb);
            half = half / 2;
            Real inner = gammafns::lngamma(ar + 1, gammafns::LnGammaMethod::Gregory, {}, policy) -
                         ln2pi(pb) * half + half + r.value;
            for (long n = 1; n <= m - 1; ++n) {
                inner += ln_real(ar + n) * (m - n) / m;
            }
            r.value = -inner * 2 / Real::from_rational(denom, pb);
            return r;
        }
    }
    throw DomainError("unknown euler gamma method");
}

std::vector<Rational> gamma_exact_terms(GammaMethod method, const GammaParams& params, long count) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    for (long n = 1; n <= count; ++n) {
        switch (method) {
            case GammaMethod::FontanaMascheroni:
                out.push_back(coeffs::gregory(n).abs() / Rational(n));
                break;
            case GammaMethod::NorlundLog: {
                Rational t = polys::norlund_poly(n, params.m).eval(params.a) /
                             Rational(n * params.m);
                out.push_back((n % 2 != 0) ? t : -t);
                break;
            }
            case GammaMethod::PairedRational: {
                Rational mirror = -params.a / (Rational(1) + params.a);
                Rational t = polys::fontana_bessel(n).eval(params.a) +
                             polys::fontana_bessel(n).eval(mirror);
                t /= Rational(2 * n);
                out.push_back((n % 2 != 0) ? t : -t);
                break;
            }
            case GammaMethod::G2Series: {
                Rational t = coeffs::gregory_higher(n, 2) * Rational(2, n);
                out.push_back((n % 2 != 0) ? t : -t);
                break;
            }
            case GammaMethod::ProductConstraint: {
                Rational acc(0);
                for (const auto& ai : params.as) acc += polys::norlund_poly(n, params.m).eval(ai);
                acc /= Rational(n * params.m * static_cast<long>(params.as.size()));
                out.push_back((n % 2 != 0) ? acc : -acc);
                break;
            }
            case GammaMethod::QWeighted: {
                long qsum = 0;
                Rational acc(0);
                for (size_t i = 0; i < params.as.size(); ++i) {
                    acc += Rational(params.qs[i]) * polys::norlund_poly(n, params.m).eval(params.as[i]);
                    qsum += params.qs[i];
                }
                acc /= Rational(n * params.m * qsum);
                out.push_back((n % 2 != 0) ? acc : -acc);
                break;
            }
            case GammaMethod::LnGammaForm: {
                Rational t = polys::norlund_poly(n + 1, params.m).eval(params.a) /
                             Rational(n * params.m);
                out.push_back((n % 2 == 0) ? t : -t);
                break;
            }
        }
    }
    return out;
}

std::vector<Rational> stieltjes_cauchy_gamma_terms(long count) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    for (long n = 0; n < count; ++n) {
        out.push_back(coeffs::cauchy2(n + 1) / Rational((n + 1) * (n + 2)));
    }
    return out;
}

}  // namespace fdz::constants
