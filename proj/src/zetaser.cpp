#include "fdzeta/zetaser.hpp"

#include <map>
#include <memory>
#include <vector>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/findiff.hpp"
#include "fdzeta/polys.hpp"

namespace fdz::zetaser {

namespace {

using findiff::SeriesSum;
using findiff::sum_weighted_transform;

bool is_real_integer(const Complex& s, long lo, long hi) {
    if (!s.im().is_zero()) return false;
    if (mpfr_integer_p(s.re().raw()) == 0) return false;
    long val = s.re().to_long();
    return val >= lo && val <= hi;
}

void require_not_one(const Complex& s) {
    if (is_real_integer(s, 1, 1)) throw PoleAtOne();
}

void require_outside_pole_set(const Complex& s, long k) {
    if (is_real_integer(s, 1, 1)) throw PoleAtOne();
    if (is_real_integer(s, 1, k)) {
        throw PoleSet("s in {1,..," + std::to_string(k) + "} excluded for this representation");
    }
}

long lift_amount(const PrecisionPolicy& policy, const Real& v) {
    if (policy.lift == 0) return 0;
    return std::max<long>(0, policy.lift_target() - v.floor_long());
}

// sum_{j=0}^{L-1} (v+j)^{-s}
Complex prefix_pow_sum(const Complex& s, const Real& v, long L, mpfr_prec_t prec) {
    Complex acc(0, prec);
    Complex ms = -s.at_prec(prec);
    Real vp = v.at_prec(prec);
    for (long j = 0; j < L; ++j) {
        acc += real_pow_complex(vp + j, ms);
    }
    return acc;
}

// k |-> (w+k)^{expo}
findiff::TermFunction pow_term(const Real& w, const Complex& expo) {
    return [w, expo](long k, mpfr_prec_t prec) {
        return real_pow_complex(w.at_prec(prec) + k, expo.at_prec(prec));
    };
}

findiff::WeightFunction rational_weight(std::function<Rational(long)> wfn) {
    return [wfn = std::move(wfn)](long n, mpfr_prec_t prec) {
        return Real::from_rational(wfn(n), prec);
    };
}

EvalResult assemble(const Complex& head, const SeriesSum& run, const Complex& scale_num,
                    long scale_den = 1) {
    EvalResult r;
    r.value = head + scale_num * run.value / scale_den;
    r.n_terms = run.n_terms;
    r.working_bits = static_cast<long>(run.max_prec);
    r.error_estimate = run.last_term;
    r.converged = run.converged;
    return r;
}

Complex one_at(mpfr_prec_t prec) { return Complex(1, prec); }

// Norlund weights N_{n+offset,m}(a), exact at rational a, memoized per call.
std::function<Rational(long)> norlund_weight(long m, Rational a, long offset) {
    auto cache = std::make_shared<std::vector<Rational>>();
    return [m, a = std::move(a), offset, cache](long n) {
        while (static_cast<long>(cache->size()) <= n) {
            long idx = static_cast<long>(cache->size());
            cache->push_back(polys::norlund_poly(idx + offset, m).eval(a));
        }
        Rational w = (*cache)[static_cast<size_t>(n)];
        return (n % 2 == 0) ? w : -w;
    };
}

}  // namespace

std::string EvalResult::to_json(long digits) const {
    std::string s = "{\"value\":{\"re\":\"" + value.re().to_decimal(digits) + "\",\"im\":\"" +
                    value.im().to_decimal(digits) + "\"},\"n_terms\":" + std::to_string(n_terms) +
                    ",\"working_bits\":" + std::to_string(working_bits) + ",\"error_estimate\":\"" +
                    error_estimate.to_decimal(2) + "\",\"converged\":" +
                    (converged ? "true" : "false") + "}";
    return s;
}

EvalResult hasse_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    require_not_one(s);
    if (v.sign() <= 0) throw DomainError("hasse_hurwitz needs v > 0");
    mpfr_prec_t pb = policy.working_bits(0);
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    auto weight = rational_weight([](long n) { return Rational(1, n + 1); });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, one_at(pb) - s), policy);
    Complex head = prefix_pow_sum(s, v, L, pb);
    return assemble(head, run, one_at(pb) / (s.at_prec(pb) - one_at(pb)));
}

EvalResult hasse_zeta(const Complex& s, const PrecisionPolicy& policy) {
    return hasse_hurwitz(s, Real(1, policy.working_bits(0)), policy);
}

EvalResult ser_zeta(const Complex& s, const PrecisionPolicy& policy) {
    require_not_one(s);
    mpfr_prec_t pb = policy.working_bits(0);
    auto weight = rational_weight([](long n) { return Rational(1, n + 2); });
    if (policy.lift == 0) {
        SeriesSum run = sum_weighted_transform(weight, pow_term(Real(1, pb), -s), policy);
        return assemble(Complex(0, pb), run, one_at(pb) / (s.at_prec(pb) - one_at(pb)));
    }
    // Lifted evaluation routes through the 1/(n+2)-weight generalization at the
    // shifted base, with zeta(s-1, w) supplied by the Hasse series.
    long L = policy.lift_target();
    Real w(1 + L, pb);
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, one_at(pb) - s), policy);
    Complex sp = s.at_prec(pb);
    Complex bracket_pole =
        is_real_integer(s, 2, 2)
            ? one_at(pb)
            : (sp - Complex(2, pb)) * hasse_hurwitz(s - one_at(pb), w, policy.with_lift(0)).value;
    Complex zw = (bracket_pole - run.value) / (Complex(w) - one_at(pb)) / (sp - one_at(pb));
    Complex head = prefix_pow_sum(s, Real(1, pb), L, pb);
    EvalResult r = assemble(head, run, Complex(0, pb));
    r.value = head + zw;
    return r;
}

EvalResult ser_gregory_zeta(const Complex& s, const PrecisionPolicy& policy) {
    return gregory_hurwitz(s, Real(1, policy.working_bits(0)), policy);
}

EvalResult euler_eta_zeta(const Complex& s, const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Complex q = one_at(pb) - real_pow_complex(Real(2, pb), one_at(pb) - s.at_prec(pb));
    Real qmag = q.abs();
    if (qmag.is_zero() || abs_below_2exp(qmag, -(pb - 8))) throw EtaZeroDivisor();
    auto weight = [](long n, mpfr_prec_t prec) {
        Real w(1, prec);
        mpfr_mul_2si(w.raw(), w.raw(), -(n + 1), MPFR_RNDN);
        return w;
    };
    SeriesSum run = sum_weighted_transform(weight, pow_term(Real(1, pb), -s), policy);
    return assemble(Complex(0, pb), run, one_at(pb) / q);
}

EvalResult gregory_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    require_not_one(s);
    if (v.sign() <= 0) throw DomainError("gregory_hurwitz needs v > 0");
    mpfr_prec_t pb = policy.working_bits(0);
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    auto weight = rational_weight([](long n) { return coeffs::gregory(n + 1).abs(); });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, -s), policy);
    Complex head = prefix_pow_sum(s, v, L, pb) +
                   real_pow_complex(w, one_at(pb) - s.at_prec(pb)) / (s.at_prec(pb) - one_at(pb));
    return assemble(head, run, one_at(pb));
}

EvalResult cauchy_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    require_not_one(s);
    if (!(v > 1)) throw DomainError("cauchy_hurwitz needs v > 1");
    mpfr_prec_t pb = policy.working_bits(0);
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    auto weight = rational_weight([](long n) { return coeffs::cauchy2(n + 1); });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, -s), policy);
    Complex head = prefix_pow_sum(s, v, L, pb) +
                   real_pow_complex(w - 1, one_at(pb) - s.at_prec(pb)) / (s.at_prec(pb) - one_at(pb));
    return assemble(head, run, -one_at(pb));
}

namespace {

EvalResult norlund_hurwitz_impl(const Complex& s, const Real& v, long m,
                                const findiff::WeightFunction& weight, const Real& a_real,
                                const PrecisionPolicy& policy) {
    require_not_one(s);
    if (m < 1) throw DomainError("norlund_hurwitz needs m >= 1");
    mpfr_prec_t pb = policy.working_bits(0);
    if (a_real < Real(-1, pb)) throw DomainError("norlund_hurwitz needs a >= -1");
    if (!(v > -a_real)) throw DomainError("norlund_hurwitz needs v > -a");
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, -s), policy);
    Complex pole(0, pb);
    Complex expo = one_at(pb) - s.at_prec(pb);
    for (long j = 0; j < m; ++j) {
        pole += real_pow_complex(w + a_real.at_prec(pb) + j, expo);
    }
    Complex head =
        prefix_pow_sum(s, v, L, pb) + pole / (s.at_prec(pb) - one_at(pb)) / m;
    return assemble(head, run, one_at(pb), m);
}

}  // namespace

EvalResult norlund_hurwitz(const Complex& s, const Real& v, long m, const Rational& a,
                           const PrecisionPolicy& policy) {
    return norlund_hurwitz_impl(s, v, m, rational_weight(norlund_weight(m, a, 1)),
                                Real::from_rational(a, policy.working_bits(0)), policy);
}

EvalResult norlund_hurwitz(const Complex& s, const Real& v, long m, const Real& a,
                           const PrecisionPolicy& policy) {
    auto weight = [m, a](long n, mpfr_prec_t prec) {
        Real w = polys::norlund_poly(n + 1, m).eval_real(a, prec);
        return (n % 2 == 0) ? w : -w;
    };
    return norlund_hurwitz_impl(s, v, m, weight, a, policy);
}

EvalResult norlund_zeta(const Complex& s, long m, const Rational& a, int shift,
                        const PrecisionPolicy& policy) {
    require_not_one(s);
    if (m < 1) throw DomainError("norlund_zeta needs m >= 1");
    if (shift != 0 && shift != 1) throw DomainError("shift must be 0 or 1");
    mpfr_prec_t pb = policy.working_bits(0);
    if (shift == 0) {
        if (!(a > Rational(-1))) throw DomainError("norlund_zeta shift 0 needs a > -1");
        return norlund_hurwitz(s, Real(1, pb), m, a, policy);
    }
    if (!(a > Rational(-2))) throw DomainError("norlund_zeta shift 1 needs a > -2");
    // zeta(s) = w^{-s} + (1/(m(s-1))) sum_{n=1}^m (w+a+n)^{1-s}
    //           + (1/m) sum (-1)^n N_{n+1,m}(a) Delta-transform base w+1, lifted from w = 1
    long L = (policy.lift == 0) ? 0 : policy.lift_target() - 1;
    Real w(1 + L, pb);
    SeriesSum run = sum_weighted_transform(rational_weight(norlund_weight(m, a, 1)),
                                           pow_term(w + 1, -s), policy);
    Real ar = Real::from_rational(a, pb);
    Complex expo = one_at(pb) - s.at_prec(pb);
    Complex pole(0, pb);
    for (long j = 1; j <= m; ++j) {
        pole += real_pow_complex(w + ar + j, expo);
    }
    Complex head = prefix_pow_sum(s, Real(1, pb), L, pb) + real_pow_complex(w, -s.at_prec(pb)) +
                   pole / (s.at_prec(pb) - one_at(pb)) / m;
    return assemble(head, run, one_at(pb), m);
}

EvalResult higher_gregory_zeta(const Complex& s, long k, const PrecisionPolicy& policy) {
    if (k < 1) throw DomainError("higher_gregory_zeta needs k >= 1");
    require_outside_pole_set(s, k);
    mpfr_prec_t pb = policy.working_bits(0);
    long L = (policy.lift == 0) ? 0 : policy.lift_target() - 1;
    Real w(1 + L, pb);
    auto weight = rational_weight([k](long n) {
        Rational g = coeffs::gregory_higher(n + 1, k);
        return (n % 2 == 0) ? g : -g;
    });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, -s), policy);
    Complex sp = s.at_prec(pb);
    Complex acc(0, pb);
    for (long l = 1; l <= k; ++l) {
        // (k-l+1)_l / (s-l)_l, rising factorials
        Rational num(Integer::factorial(static_cast<unsigned long>(k)),
                     Integer::factorial(static_cast<unsigned long>(k - l)));
        Complex den(1, pb);
        for (long j = 0; j < l; ++j) den = den * (sp - Complex(l - j, pb));
        Complex coef = Complex(Real::from_rational(num, pb)) / den;
        if (l <= k - 1) {
            acc -= coef * hasse_hurwitz(s - Complex(l, pb), w, policy.with_lift(0)).value;
        }
        acc += coef * real_pow_complex(w, Complex(l, pb) - sp);
    }
    Complex head = prefix_pow_sum(s, Real(1, pb), L, pb) + acc;
    return assemble(head, run, Complex(k, pb));
}

EvalResult stirling_zeta(const Complex& s, const Real& v, long k, const PrecisionPolicy& policy) {
    if (k < 1) throw DomainError("stirling_zeta needs k >= 1");
    require_outside_pole_set(s, k);
    if (v.sign() <= 0) throw DomainError("stirling_zeta needs v > 0");
    mpfr_prec_t pb = policy.working_bits(0);
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    auto weight = rational_weight([k](long j) {
        if (j < k - 1) return Rational(0);
        return coeffs::stirling_ratio(j - (k - 1), k);
    });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, Complex(k, pb) - s), policy);
    Complex sp = s.at_prec(pb);
    Complex poch(1, pb);
    for (long j = 0; j < k; ++j) poch = poch * (sp - Complex(k - j, pb));
    Complex coef = Complex(Real::from_integer(Integer::factorial(static_cast<unsigned long>(k)), pb)) / poch;
    Complex head = prefix_pow_sum(s, v, L, pb);
    return assemble(head, run, coef);
}

EvalResult ser_hurwitz_relation(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    require_outside_pole_set(s, 2);
    if (v.sign() <= 0) throw DomainError("ser_hurwitz_relation needs v > 0");
    if (v == 1) return ser_zeta(s, policy);
    mpfr_prec_t pb = policy.working_bits(0);
    long L = lift_amount(policy, v);
    Real w = v.at_prec(pb) + L;
    auto weight = rational_weight([](long n) { return Rational(1, n + 2); });
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, one_at(pb) - s), policy);
    Complex sp = s.at_prec(pb);
    Complex inner = hasse_hurwitz(s - one_at(pb), w, policy.with_lift(0)).value;
    Complex zw = ((sp - Complex(2, pb)) * inner - run.value) / (Complex(w) - one_at(pb)) /
                 (sp - one_at(pb));
    EvalResult r = assemble(prefix_pow_sum(s, v, L, pb), run, Complex(0, pb));
    r.value = r.value + zw;
    return r;
}

EvalResult harmonic_hurwitz(const Complex& s, const Real& v, HarmonicWeight weight_kind,
                            const PrecisionPolicy& policy) {
    require_not_one(s);
    if (!(v > 1)) throw DomainError("harmonic_hurwitz needs v > 1");
    mpfr_prec_t pb = policy.working_bits(0);
    Real target = v.at_prec(pb) - 1;  // the series returns zeta(s, v-1)
    long L = lift_amount(policy, target);
    Real w = v.at_prec(pb) + L;
    Complex head = prefix_pow_sum(s, target, L, pb);
    if (weight_kind == HarmonicWeight::H1) {
        auto weight = rational_weight([](long n) { return coeffs::harmonic(n + 1); });
        SeriesSum run = sum_weighted_transform(weight, pow_term(w, one_at(pb) - s), policy);
        return assemble(head, run, one_at(pb) / (s.at_prec(pb) - one_at(pb)));
    }
    Complex sp = s.at_prec(pb);
    auto weight = rational_weight([](long n) { return coeffs::harmonic(n + 2); });
    if (policy.lift == 0 && w == 2) {
        // pinned v = 2 specialization: zeta(s) = (1/(s-1)) { -1 + sum H_{n+2} T_n((k+2)^{-s}) }
        SeriesSum run = sum_weighted_transform(weight, pow_term(w, -s), policy);
        return assemble(-one_at(pb) / (sp - one_at(pb)), run, one_at(pb) / (sp - one_at(pb)));
    }
    SeriesSum run = sum_weighted_transform(weight, pow_term(w, one_at(pb) - s), policy);
    Complex bracket = real_pow_complex(w - 1, one_at(pb) - sp);
    bracket += is_real_integer(s, 2, 2)
                   ? one_at(pb)
                   : (sp - Complex(2, pb)) *
                         hasse_hurwitz(s - one_at(pb), w - 1, policy.with_lift(0)).value;
    bracket -= run.value;
    EvalResult r = assemble(head, run, Complex(0, pb));
    r.value = head + bracket / (Complex(w) - Complex(2, pb)) / (sp - one_at(pb));
    return r;
}

EvalResult harmonic_zeta(const Complex& s, const PrecisionPolicy& policy) {
    return harmonic_hurwitz(s, Real(2, policy.working_bits(0)), HarmonicWeight::H1, policy);
}

// ---------------- Dirichlet series (Theorem-5 forms) ----------------

namespace {

struct SeqView {
    std::function<Complex(long, mpfr_prec_t)> u;
    // degree >= 0: polynomial of that degree; -1: identically zero; nullopt: general bounded
    std::optional<long> degree;

    bool is_zero() const { return degree && *degree < 0; }
    bool is_poly() const { return degree.has_value() && *degree >= 0; }
};

SeqView seq_of(const BoundedSequence& b) { return SeqView{b.u, b.degree}; }

SeqView seq_shift(const SeqView& q, long L) {
    if (L == 0) return q;
    return SeqView{[u = q.u, L](long n, mpfr_prec_t prec) { return u(n + L, prec); }, q.degree};
}

SeqView seq_delta(const SeqView& q) {
    std::optional<long> d;
    if (q.degree) d = *q.degree - 1;
    if (d && *d < 0) {
        return SeqView{[](long, mpfr_prec_t prec) { return Complex(0, prec); }, -1};
    }
    return SeqView{[u = q.u](long n, mpfr_prec_t prec) { return u(n + 1, prec) - u(n, prec); }, d};
}

// l-th forward difference of u at 0, computed exactly from samples.
Complex seq_delta0(const SeqView& q, long l, mpfr_prec_t prec) {
    Complex acc(0, prec);
    Integer b(1);
    for (long i = 0; i <= l; ++i) {
        Complex term = q.u(i, prec);
        Real bre = Real::from_integer(b, prec);
        term = term * bre;
        if ((l - i) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        if (i < l) {
            b.mul_si(l - i);
            b.divexact_ui(static_cast<unsigned long>(i + 1));
        }
    }
    return acc;
}

// Euler-transform-accelerated sum of sum_n q(n) (w+n)^{-s} to absolute accuracy
// 2^{-(bits+8)}. Geometric for alternating-smooth sequences; reports failure
// otherwise.
Complex euler_accel_dirichlet(const Complex& s, const Real& w, const SeqView& q, mpfr_prec_t bits) {
    PrecisionPolicy pol(std::max<long>(8, static_cast<long>(static_cast<double>(bits) / 3.32)));
    pol.guard_bits = 48;
    auto f = [&](long i, mpfr_prec_t prec) {
        Complex b = q.u(i, prec) * real_pow_complex(w.at_prec(prec) + i, -s.at_prec(prec));
        return (i % 2 == 0) ? b : -b;
    };
    Complex total(0, pol.working_bits(0));
    long small = 0;
    long cap = 6 * static_cast<long>(bits) + 256;
    findiff::TransformStream st(f, pol);
    for (long j = 0; j < cap; ++j) {
        Complex tj = st.next();
        Real half(1, st.current_prec());
        mpfr_mul_2si(half.raw(), half.raw(), -(j + 1), MPFR_RNDN);
        Complex term = tj * half;
        total += term;
        if (abs_below_2exp(term.abs(), -(static_cast<long>(bits) + 8))) {
            if (++small >= 4 && j >= 8) return total;
        } else {
            small = 0;
        }
    }
    throw NotConverged("inner Dirichlet sum did not converge (general bounded sequence)");
}

// zeta(s, w, q) for the inner evaluations of Theorem-5 forms.
Complex zeta_seq(const Complex& s, const Real& w, const SeqView& q, mpfr_prec_t bits,
                 const PrecisionPolicy& policy, bool direct_only) {
    if (q.is_zero()) return Complex(0, bits);
    if (q.is_poly() && *q.degree == 0) {
        Complex c = q.u(0, bits);
        if (c.abs().is_zero()) return Complex(0, bits);
        long digits = static_cast<long>(static_cast<double>(bits) / 3.32) + 4;
        return c * hasse_hurwitz(s, w, policy.with_digits(digits)).value;
    }
    if (q.is_poly() && !direct_only) {
        long d = *q.degree;
        long digits = static_cast<long>(static_cast<double>(bits) / 3.32) + 4;
        // Newton-to-monomial: u_n = sum_j c_j n^j with
        // c_j = sum_{l>=j} Delta^l u_0 S1(l,j)/l!
        std::vector<Complex> dl;
        for (long l = 0; l <= d; ++l) dl.push_back(seq_delta0(q, l, bits));
        Complex acc(0, bits);
        Real wp = w.at_prec(bits);
        for (long j = 0; j <= d; ++j) {
            Complex cj(0, bits);
            for (long l = j; l <= d; ++l) {
                Rational r(coeffs::stirling1(l, j),
                           Integer::factorial(static_cast<unsigned long>(l)));
                cj += dl[static_cast<size_t>(l)] * Real::from_rational(r, bits);
            }
            // sum_n n^j (n+w)^{-s} = sum_i C(j,i) (-w)^{j-i} zeta(s-i, w)
            for (long i = 0; i <= j; ++i) {
                Real binom = Real::from_integer(
                    Integer::binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)),
                    bits);
                Real wpow = pow_si(-wp, j - i);
                Complex z = hasse_hurwitz(s - Complex(i, bits), w, policy.with_digits(digits)).value;
                acc += cj * Complex(binom * wpow) * z;
            }
        }
        return acc;
    }
    return euler_accel_dirichlet(s, w, q, bits);
}

}  // namespace

EvalResult dirichlet_series_eval(const Complex& s, const Real& v, const BoundedSequence& u,
                                 long m, const Rational& a, DirichletForm form,
                                 const PrecisionPolicy& policy) {
    require_not_one(s);
    if (m < 1) throw DomainError("dirichlet_series_eval needs m >= 1");
    if (a < Rational(-1)) throw DomainError("dirichlet_series_eval needs a >= -1");
    mpfr_prec_t pb = policy.working_bits(0);
    Real ar = Real::from_rational(a, pb);
    if (!(v > -ar)) throw DomainError("dirichlet_series_eval needs v > -a");
    Complex sp = s.at_prec(pb);
    SeqView base = seq_of(u);

    if (form == DirichletForm::B) {
        long L = lift_amount(policy, v);
        Real w = v.at_prec(pb) + L;
        SeqView us = seq_shift(base, L);
        SeqView du = seq_delta(us);
        Complex u0 = us.u(0, pb);
        // prefix sum_{j<L} u_j (v+j)^{-s}
        Complex head(0, pb);
        for (long j = 0; j < L; ++j) {
            head += base.u(j, pb) * real_pow_complex(v.at_prec(pb) + j, -sp);
        }
        // line 1
        Complex l1(0, pb);
        for (long n = 0; n < m; ++n) {
            Real base_n = w + ar.at_prec(pb) + n;
            l1 += zeta_seq(s - one_at(pb), base_n + 1, du, pb + 32, policy, false);
            l1 += u0 * real_pow_complex(base_n, one_at(pb) - sp);
        }
        l1 = l1 / (sp - one_at(pb)) / m;
        // line 2: sum_{j>=0} (-1)^j N_{j+1,m}(a) T_j(g), g(j) = zeta(s, w+1+j, du)
        SeriesSum run2;
        if (du.is_zero()) {
            run2.value = Complex(0, pb);
            run2.converged = true;
            run2.last_term = Real(0, kMinPrec);
        } else {
            auto g = [&](long j, mpfr_prec_t prec) {
                return zeta_seq(s, w + 1 + j, du, prec + 16, policy, false);
            };
            run2 = sum_weighted_transform(rational_weight(norlund_weight(m, a, 1)), g, policy);
        }
        // line 3
        SeriesSum run3 = sum_weighted_transform(rational_weight(norlund_weight(m, a, 1)),
                                                pow_term(w, -s), policy);
        EvalResult r;
        r.value = head + l1 + run2.value / m + u0 * run3.value / m;
        r.n_terms = std::max(run2.n_terms, run3.n_terms);
        r.working_bits = static_cast<long>(std::max(run2.max_prec, run3.max_prec));
        r.error_estimate = run3.last_term;
        r.converged = run2.converged && run3.converged;
        return r;
    }

    // Form A, evaluated at the given v (no lift).
    SeqView du = seq_delta(base);
    bool general = !base.is_poly();
    if (general && !(s.re() > Real(2, pb))) {
        throw UnsupportedRegion("form A inner direct sums need Re s > 2 for general sequences");
    }
    Complex u0 = base.u(0, pb);
    Complex l1(0, pb);
    for (long n = 0; n < m; ++n) {
        Real base_n = v.at_prec(pb) + ar.at_prec(pb) + n;
        l1 += zeta_seq(s - one_at(pb), base_n + 1, du, pb + 32, policy, general);
        l1 += u0 * real_pow_complex(base_n, one_at(pb) - sp);
    }
    l1 = l1 / (sp - one_at(pb)) / m;
    // middle: -(1/m) sum_{n>=1} (-1)^n N_{n,m}(a) zeta(s, v+n, Delta^n u)
    Complex mid(0, pb);
    {
        SeqView dn = du;
        long nmax = base.is_poly() ? *base.degree : policy.max_terms;
        Real thresh(0, kMinPrec);
        mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits),
                       MPFR_RNDN);
        thresh = Real(1, kMinPrec) / thresh;
        long small = 0;
        for (long n = 1; n <= nmax; ++n) {
            if (dn.is_zero()) break;
            Complex z = zeta_seq(s, v.at_prec(pb) + n, dn, pb + 32, policy, general);
            Rational nw = polys::norlund_poly(n, m).eval(a);
            Complex term = z * Real::from_rational(nw, pb);
            if (n % 2 != 0) term = -term;
            mid -= term / m;
            if (!base.is_poly()) {
                if (abs_below_2exp(term.abs(), -(policy.base_bits() - 8))) {
                    if (++small >= policy.stop_window) break;
                } else {
                    small = 0;
                }
            }
            dn = seq_delta(dn);
        }
    }
    // last: (1/m) sum_n (-1)^n N_{n+1,m}(a) sum_{l<=n} Delta^l u_0 T^{(n-l)}(v+l)
    std::vector<std::unique_ptr<findiff::TransformStream>> streams;
    std::vector<std::vector<Complex>> tvals;
    std::vector<Complex> deltas;
    auto ensure_stream = [&](long l) {
        while (static_cast<long>(streams.size()) <= l) {
            long ls = static_cast<long>(streams.size());
            PrecisionPolicy pl = policy;
            pl.guard_bits += ls;  // Delta^l u_0 may grow like 2^l for general u
            streams.push_back(std::make_unique<findiff::TransformStream>(
                pow_term(v.at_prec(pb) + ls, -s), pl));
            tvals.emplace_back();
            deltas.push_back(seq_delta0(base, ls, policy.working_bits(ls) + 64));
        }
    };
    Complex last(0, pb);
    {
        Real thresh(0, kMinPrec);
        mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits),
                       MPFR_RNDN);
        thresh = Real(1, kMinPrec) / thresh;
        long small = 0;
        long lmax_poly = base.is_poly() ? *base.degree : policy.max_terms;
        for (long n = 0; n < policy.max_terms; ++n) {
            Complex term(0, pb);
            for (long l = 0; l <= std::min(n, lmax_poly); ++l) {
                ensure_stream(l);
                while (static_cast<long>(tvals[static_cast<size_t>(l)].size()) <= n - l) {
                    tvals[static_cast<size_t>(l)].push_back(streams[static_cast<size_t>(l)]->next());
                }
                term += deltas[static_cast<size_t>(l)] *
                        tvals[static_cast<size_t>(l)][static_cast<size_t>(n - l)];
            }
            Rational nw = polys::norlund_poly(n + 1, m).eval(a);
            term = term * Real::from_rational(nw, pb);
            if (n % 2 != 0) term = -term;
            last += term;
            Real scale = last.abs().at_prec(kMinPrec);
            if (scale < 1) scale = Real(1, kMinPrec);
            if (term.abs().at_prec(kMinPrec) < thresh * scale) {
                if (++small >= policy.stop_window && n >= policy.min_terms) break;
            } else {
                small = 0;
            }
        }
    }
    EvalResult r;
    r.value = l1 + mid + last / m;
    r.converged = true;
    r.working_bits = policy.base_bits();
    r.error_estimate = Real(0, kMinPrec);
    return r;
}

// ---------------- functional relations ----------------

namespace {

Complex hasse_value(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    return hasse_hurwitz(s, v, policy).value;
}

// pole_m(v) = (1/(m(s-1))) sum_{j<m} (v+a+j)^{1-s}
Complex norlund_pole(const Complex& s, const Real& v, long m, const Real& a, mpfr_prec_t pb) {
    Complex acc(0, pb);
    Complex expo = one_at(pb) - s.at_prec(pb);
    for (long j = 0; j < m; ++j) acc += real_pow_complex(v + a + j, expo);
    return acc / (s.at_prec(pb) - one_at(pb)) / m;
}

// S2(v) = sum_n (-1)^n N_{n+2,m}(a) T_n((k+v)^{-s}) evaluated directly.
Complex s2_direct(const Complex& s, const Real& v, long m, const Rational& a,
                  const PrecisionPolicy& policy) {
    SeriesSum run = sum_weighted_transform(rational_weight(norlund_weight(m, a, 2)),
                                           pow_term(v, -s), policy);
    return run.value;
}

// S2 at the requested base through the descent
//   S2(v) = S2(v+1) - S1(v) + N_{1,m}(a) v^{-s},
// with S1(v) = m (zeta(s,v) - pole_m(v)) supplied by the Hasse series.
Complex s2_at(const Complex& s, const Real& v, long m, const Rational& a,
              const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    long L = (policy.lift == 0) ? 0
                                : std::max<long>(0, policy.lift_target() - v.floor_long());
    Complex s2 = s2_direct(s, v.at_prec(pb) + L, m, a, policy);
    Real ar = Real::from_rational(a, pb);
    Real n1 = Real::from_rational(polys::norlund_poly(1, m).eval(a), pb);
    for (long j = L - 1; j >= 0; --j) {
        Real vr = v.at_prec(pb) + j;
        Complex s1 = (hasse_value(s, vr, policy) - norlund_pole(s, vr, m, ar, pb)) * Real(m, pb);
        s2 = s2 - s1 + Complex(n1) * real_pow_complex(vr, -s.at_prec(pb));
    }
    return s2;
}

// Q(v) = sum_n T_n((k+v)^{1-s})/(n+2) via Q(v) = Q(v+1) + (s-1) zeta(s,v) - v^{1-s}.
Complex ser_weight_sum_at(const Complex& s, const Real& v, const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    long L = (policy.lift == 0) ? 0
                                : std::max<long>(0, policy.lift_target() - v.floor_long());
    auto weight = rational_weight([](long n) { return Rational(1, n + 2); });
    Complex one = one_at(pb);
    SeriesSum run =
        sum_weighted_transform(weight, pow_term(v.at_prec(pb) + L, one - s), policy);
    Complex q = run.value;
    for (long j = L - 1; j >= 0; --j) {
        Real vr = v.at_prec(pb) + j;
        q = q + (s.at_prec(pb) - one) * hasse_value(s, vr, policy) -
            real_pow_complex(vr, one - s.at_prec(pb));
    }
    return q;
}

Complex harmonic_gen_complex(long m, const Complex& z, mpfr_prec_t pb) {
    Complex acc(0, pb);
    for (long j = 1; j <= m; ++j) acc += real_pow_complex(Real(j, pb), -z.at_prec(pb));
    return acc;
}

}  // namespace

Real verify_relation(RelationId id, const Complex& s, const Real& v, long m, const Rational& a,
                     const PrecisionPolicy& policy) {
    mpfr_prec_t pb = policy.working_bits(0);
    Complex sp = s.at_prec(pb);
    Complex one = one_at(pb);
    Real ar = Real::from_rational(a, pb);
    switch (id) {
        case RelationId::PoleM:
        case RelationId::PsiForm:
        case RelationId::M2Form: {
            long mm = (id == RelationId::PsiForm) ? 1 : (id == RelationId::M2Form ? 2 : m);
            require_not_one(s);
            if (!(v > -ar)) throw DomainError("relation needs v > -a");
            Real vp = v.at_prec(pb);
            Complex lhs = Complex(vp + ar + Real::from_rational(Rational(mm, 2) - 1, pb)) *
                          hasse_value(s, vp, policy);
            Complex rhs = -hasse_value(s - one, vp + ar, policy) / (sp - one) +
                          hasse_value(s - one, vp, policy);
            for (long j = 0; j < mm; ++j) {
                rhs += Complex(Real(mm - j - 1, pb)) *
                       real_pow_complex(vp + ar + j, one - sp) / (sp - one) / mm;
            }
            rhs += s2_at(s, vp, mm, a, policy) / mm;
            return (lhs - rhs).abs();
        }
        case RelationId::GregoryVHalf: {
            require_outside_pole_set(s, 2);
            Real vp = v.at_prec(pb);
            Complex lhs = Complex(vp - Real::from_rational(Rational(1, 2), pb)) *
                          hasse_value(s, vp, policy);
            Complex rhs = (sp - Complex(2, pb)) / (sp - one) * hasse_value(s - one, vp, policy) +
                          s2_at(s, vp, 1, Rational(0), policy);
            return (lhs - rhs).abs();
        }
        case RelationId::HarmonicZetaForm: {
            require_outside_pole_set(s, 2);
            Real onep(1, pb);
            Complex lhs = Complex(Real::from_rational(Rational(m, 2), pb)) *
                          hasse_value(s, onep, policy);
            Complex rhs = (sp - Complex(2, pb)) / (sp - one) * hasse_value(s - one, onep, policy);
            Complex h1 = harmonic_gen_complex(m, sp - one, pb);
            Complex h2 = harmonic_gen_complex(m, sp - Complex(2, pb), pb);
            rhs += (h1 * Real(m, pb) - h2) / (sp - one) / m;
            rhs += s2_at(s, Real(1, pb), m, Rational(0), policy) / m;
            return (lhs - rhs).abs();
        }
        case RelationId::ZetaGregory2: {
            require_outside_pole_set(s, 2);
            Real onep(1, pb);
            Complex lhs = hasse_value(s, onep, policy);
            Complex rhs = (sp - Complex(2, pb)) * Real(2, pb) / (sp - one) *
                              hasse_value(s - one, onep, policy) +
                          s2_at(s, Real(1, pb), 1, Rational(0), policy) * Real(2, pb);
            return (lhs - rhs).abs();
        }
        case RelationId::ZetaSm1A: {
            require_outside_pole_set(s, 2);
            if (!(a > Rational(0))) throw DomainError("relation needs a > 0");
            Real onep(1, pb);
            Complex lhs = hasse_value(s - one, ar, policy) / (sp - one);
            Complex rhs = real_pow_complex(ar, one - sp) / (sp - one) -
                          Complex(ar + Real::from_rational(Rational(m, 2), pb)) *
                              hasse_value(s, onep, policy) +
                          hasse_value(s - one, onep, policy);
            for (long j = 1; j <= m; ++j) {
                rhs += Complex(Real(m - j, pb)) * real_pow_complex(ar + j, one - sp) /
                       (sp - one) / m;
            }
            rhs += s2_at(s, Real(1, pb), m, a, policy) / m;
            return (lhs - rhs).abs();
        }
        case RelationId::SerHurwitz: {
            require_outside_pole_set(s, 2);
            if (v.sign() <= 0) throw DomainError("relation needs v > 0");
            Real vp = v.at_prec(pb);
            Complex lhs = Complex(vp - 1) * hasse_value(s, vp, policy);
            Complex rhs = (sp - Complex(2, pb)) / (sp - one) * hasse_value(s - one, vp, policy) -
                          ser_weight_sum_at(s, vp, policy) / (sp - one);
            return (lhs - rhs).abs();
        }
    }
    throw DomainError("unknown relation");
}

void SeriesSpec::validate() const {
    switch (family) {
        case Family::GregoryHurwitz:
            if (v.sign() <= 0) throw DomainError("GregoryHurwitz requires v > 0");
            break;
        case Family::CauchyHurwitz:
        case Family::HarmonicHurwitz:
            if (!(v > 1)) throw DomainError("this family requires v > 1");
            break;
        case Family::NorlundHurwitz: {
            if (a < Rational(-1)) throw DomainError("NorlundHurwitz requires a >= -1");
            Real ar = Real::from_rational(a, v.prec());
            if (!(v > -ar)) throw DomainError("NorlundHurwitz requires v > -a");
            break;
        }
        case Family::HigherGregoryRelation:
        case Family::StirlingZeta:
            if (k < 1) throw DomainError("this family requires k >= 1");
            break;
        default:
            break;
    }
}

EvalResult evaluate(const SeriesSpec& spec, const Complex& s, const PrecisionPolicy& policy) {
    spec.validate();
    switch (spec.family) {
        case Family::HasseZeta:
            return hasse_zeta(s, policy);
        case Family::HasseHurwitz:
            return hasse_hurwitz(s, spec.v, policy);
        case Family::SerZeta:
            return ser_zeta(s, policy);
        case Family::SerGregoryZeta:
            return ser_gregory_zeta(s, policy);
        case Family::EulerEtaZeta:
            return euler_eta_zeta(s, policy);
        case Family::CauchyZeta:
            return cauchy_zeta(s, policy);
        case Family::GregoryHurwitz:
            return gregory_hurwitz(s, spec.v, policy);
        case Family::CauchyHurwitz:
            return cauchy_hurwitz(s, spec.v, policy);
        case Family::NorlundHurwitz:
            return norlund_hurwitz(s, spec.v, spec.m, spec.a, policy);
        case Family::NorlundZetaShift0:
            return norlund_zeta(s, spec.m, spec.a, 0, policy);
        case Family::NorlundZetaShift1:
            return norlund_zeta(s, spec.m, spec.a, 1, policy);
        case Family::HigherGregoryRelation:
            return higher_gregory_zeta(s, spec.k, policy);
        case Family::StirlingZeta:
            return stirling_zeta(s, spec.v, spec.k, policy);
        case Family::SerHurwitzRelation:
            return ser_hurwitz_relation(s, spec.v, policy);
        case Family::HarmonicHurwitz:
            return harmonic_hurwitz(s, spec.v, spec.weight, policy);
        case Family::HarmonicZeta:
            return harmonic_zeta(s, policy);
    }
    throw DomainError("unknown family");
}

EvalResult cauchy_zeta(const Complex& s, const PrecisionPolicy& policy) {
    EvalResult r = cauchy_hurwitz(s, Real(2, policy.working_bits(0)), policy);
    r.value += Complex(1, policy.working_bits(0));
    return r;
}

}  // namespace fdz::zetaser
