#include "fdzeta/findiff.hpp"

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"

namespace fdz::findiff {

namespace {

mpfr_prec_t round_up_epoch(mpfr_prec_t p) {
    return static_cast<mpfr_prec_t>(((p + 63) / 64) * 64);
}

}  // namespace

void TransformStream::ensure_prec(long n) {
    mpfr_prec_t want = round_up_epoch(policy_.working_bits(n));
    if (want > prec_) {
        prec_ = want;
        if (prec_ > max_prec_) max_prec_ = prec_;
        for (size_t k = 0; k < cache_.size(); ++k) {
            cache_[k] = f_(static_cast<long>(k), prec_);
            if (!cache_[k].im().is_zero()) all_real_ = false;
        }
    }
}

Complex TransformStream::next() {
    ++n_;
    ensure_prec(n_);
    cache_.push_back(f_(n_, prec_));
    if (!cache_.back().im().is_zero()) all_real_ = false;
    Real acc_re(0, prec_), acc_im(0, prec_);
    Integer b(1);
    Real tmp(0, prec_);
    for (long k = 0; k <= n_; ++k) {
        const Complex& fk = cache_[static_cast<size_t>(k)];
        mpfr_mul_z(tmp.raw(), fk.re().raw(), b.raw(), MPFR_RNDN);
        if (k % 2 == 0) {
            mpfr_add(acc_re.raw(), acc_re.raw(), tmp.raw(), MPFR_RNDN);
        } else {
            mpfr_sub(acc_re.raw(), acc_re.raw(), tmp.raw(), MPFR_RNDN);
        }
        if (!all_real_) {
            mpfr_mul_z(tmp.raw(), fk.im().raw(), b.raw(), MPFR_RNDN);
            if (k % 2 == 0) {
                mpfr_add(acc_im.raw(), acc_im.raw(), tmp.raw(), MPFR_RNDN);
            } else {
                mpfr_sub(acc_im.raw(), acc_im.raw(), tmp.raw(), MPFR_RNDN);
            }
        }
        if (k < n_) {
            b.mul_si(n_ - k);
            b.divexact_ui(static_cast<unsigned long>(k + 1));
        }
    }
    return Complex(acc_re, acc_im);
}

Complex binom_transform(const TermFunction& f, long n, const PrecisionPolicy& policy) {
    if (n < 0) throw DomainError("binom_transform needs n >= 0");
    TransformStream stream(f, policy);
    Complex t(0, policy.working_bits(n));
    for (long j = 0; j <= n; ++j) t = stream.next();
    return t;
}

Complex forward_difference(const TermFunction& f, long n, const PrecisionPolicy& policy) {
    Complex t = binom_transform(f, n, policy);
    return (n % 2 == 0) ? t : -t;
}

Rational binom_transform_exact(const std::function<Rational(long)>& f, long n) {
    if (n < 0) throw DomainError("binom_transform_exact needs n >= 0");
    Rational acc = 0;
    Integer b(1);
    for (long k = 0; k <= n; ++k) {
        Rational term = Rational(b) * f(k);
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        if (k < n) {
            b.mul_si(n - k);
            b.divexact_ui(static_cast<unsigned long>(k + 1));
        }
    }
    return acc;
}

SeriesSum sum_weighted_transform(const WeightFunction& weight, const TermFunction& f,
                                 const PrecisionPolicy& policy) {
    TransformStream stream(f, policy);
    SeriesSum out;
    out.value = Complex(0, policy.working_bits(0));
    out.last_term = Real(0, kMinPrec);
    Real thresh(0, kMinPrec);
    mpfr_ui_pow_ui(thresh.raw(), 10, static_cast<unsigned long>(policy.target_digits), MPFR_RNDN);
    thresh = Real(1, kMinPrec) / thresh;
    long small = 0;
    for (long n = 0; n < policy.max_terms; ++n) {
        Complex t = stream.next();
        Real w = weight(n, stream.current_prec());
        Complex term(t.re() * w, t.im() * w);
        out.value += term;
        out.n_terms = n + 1;
        out.max_prec = stream.max_prec();
        Real mag = term.abs().at_prec(kMinPrec);
        out.last_term = mag;
        Real scale = out.value.abs().at_prec(kMinPrec);
        if (scale < 1) scale = Real(1, kMinPrec);
        if (mag < thresh * scale) {
            if (++small >= policy.stop_window && n + 1 >= policy.min_terms) {
                out.converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    return out;
}

Complex derivative_from_differences(const TermFunction& f, const PrecisionPolicy& policy,
                                    long max_n) {
    PrecisionPolicy p = policy;
    if (max_n > 0) p.max_terms = max_n;
    auto weight = [](long n, mpfr_prec_t prec) {
        if (n == 0) return Real(0, prec);
        return Real(-1, prec) / n;
    };
    SeriesSum s = sum_weighted_transform(weight, f, p);
    if (!s.converged) {
        throw NotConverged("derivative_from_differences: stopping rule unmet by max_n");
    }
    return s.value;
}

Complex kth_derivative_from_differences(const TermFunction& f, long k,
                                        const PrecisionPolicy& policy, long max_n) {
    if (k < 1) throw DomainError("kth_derivative_from_differences needs k >= 1");
    PrecisionPolicy p = policy;
    if (max_n > 0) p.max_terms = max_n;
    Rational kfact(Integer::factorial(static_cast<unsigned long>(k)));
    // d^k F = k! sum_{n>=0} (-1)^n |S1(n+k,k)|/(n+k)! Delta^{n+k} F
    //       = k! (-1)^k sum_{j>=k} stirling_ratio(j-k, k) T_j
    auto weight = [k, kfact](long j, mpfr_prec_t prec) {
        if (j < k) return Real(0, prec);
        Rational w = kfact * coeffs::stirling_ratio(j - k, k);
        if (k % 2 != 0) w = -w;
        return Real::from_rational(w, prec);
    };
    SeriesSum s = sum_weighted_transform(weight, f, p);
    if (!s.converged) {
        throw NotConverged("kth_derivative_from_differences: stopping rule unmet by max_n");
    }
    return s.value;
}

}  // namespace fdz::findiff
