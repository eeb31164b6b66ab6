#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "fdzeta/errors.hpp"
#include "fdzeta/rational.hpp"

namespace fdz {

inline constexpr mpfr_prec_t kMinPrec = 64;

// Precision-tagged multiprecision real. All arithmetic rounds to nearest-even
// at the larger of the two operand precisions.
class Real {
  public:
    Real() : Real(0L, kMinPrec) {}
    Real(long v, mpfr_prec_t prec) {
        mpfr_init2(x_, clamp(prec));
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    static Real from_rational(const Rational& q, mpfr_prec_t prec) {
        Real r(0, prec);
        mpfr_set_q(r.x_, q.raw(), MPFR_RNDN);
        return r;
    }
    static Real from_integer(const Integer& z, mpfr_prec_t prec) {
        Real r(0, prec);
        mpfr_set_z(r.x_, z.raw(), MPFR_RNDN);
        return r;
    }
    static Real from_string(const std::string& s, mpfr_prec_t prec) {
        Real r(0, prec);
        if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0) {
            throw DomainError("bad real literal: " + s);
        }
        return r;
    }
    static Real from_double(double d, mpfr_prec_t prec) {
        Real r(0, prec);
        mpfr_set_d(r.x_, d, MPFR_RNDN);
        return r;
    }

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    Real at_prec(mpfr_prec_t prec) const {
        Real r(0, prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
    Real& operator+=(const Real& o) { return inplace(mpfr_add, o); }
    Real& operator-=(const Real& o) { return inplace(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return inplace(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return inplace(mpfr_div, o); }

    Real operator-() const {
        Real r(0, prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long b) {
        Real r(0, a.prec());
        mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(0, a.prec());
        mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(0, a.prec());
        mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r(0, a.prec());
        mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
    long floor_long() const { return mpfr_get_si(x_, MPFR_RNDD); }

    // Decimal output: sign, integer part, '.', exactly `digits` significant
    // digits, 'e'±exp outside the positional range. Zero prints as "0".
    std::string to_decimal(long digits) const;

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, kMinPrec); }
    using MpfrBin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(MpfrBin f, const Real& a, const Real& b) {
        Real r(0, std::max(a.prec(), b.prec()));
        f(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    Real& inplace(MpfrBin f, const Real& o) {
        if (o.prec() > prec()) {
            Real tmp = at_prec(o.prec());
            mpfr_swap(x_, tmp.x_);
        }
        f(x_, x_, o.x_, MPFR_RNDN);
        return *this;
    }
    mpfr_t x_;
};

// ---- elementary functions (result at the operand's precision) ----

inline Real abs(const Real& a) {
    Real r(0, a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sqrt(const Real& a) {
    Real r(0, a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& a) {
    Real r(0, a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sin(const Real& a) {
    Real r(0, a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cos(const Real& a) {
    Real r(0, a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real atan(const Real& a) {
    Real r(0, a.prec());
    mpfr_atan(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(0, a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(0, std::max(a.prec(), b.prec()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real const_pi(mpfr_prec_t prec) {
    Real r(0, prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
// |a| < 2^e
inline bool abs_below_2exp(const Real& a, long e) {
    if (a.is_zero()) return true;
    return mpfr_get_exp(a.raw()) <= e;
}

// ---- spec operations ----

// q correctly rounded to p bits.
inline Real rational_to_real(const Rational& q, mpfr_prec_t p) {
    if (p < kMinPrec) throw DomainError("precision below 64 bits");
    return Real::from_rational(q, p);
}

// Natural log; errors on x <= 0.
inline Real ln_real(const Real& x) {
    if (x.sign() <= 0) throw NonPositiveBase();
    Real r(0, x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// ln^m(x); m = 0 gives 1.
inline Real ln_pow(const Real& x, long m) {
    if (m == 0) return Real(1, x.prec());
    return pow_si(ln_real(x), m);
}

// Complex scalar as a pair of equally-precise reals.
class Complex {
  public:
    Complex() = default;
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) { harmonize(); }
    explicit Complex(Real re) : re_(std::move(re)), im_(Real(0, re_.prec())) {}
    Complex(long v, mpfr_prec_t prec) : re_(v, prec), im_(0, prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    bool is_real() const { return im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Complex operator*(const Complex& a, const Real& b) {
        return Complex(a.re_ * b, a.im_ * b);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re_ * b.re_ + b.im_ * b.im_;
        if (d.is_zero()) throw DomainError("complex division by zero");
        return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    friend Complex operator/(const Complex& a, const Real& b) {
        return Complex(a.re_ / b, a.im_ / b);
    }
    friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }
    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        harmonize();
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        harmonize();
        return *this;
    }
    Complex operator-() const { return Complex(-re_, -im_); }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    Real abs() const {
        Real r(0, prec());
        mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
        return r;
    }
    Complex at_prec(mpfr_prec_t p) const { return Complex(re_.at_prec(p), im_.at_prec(p)); }

  private:
    void harmonize() {
        mpfr_prec_t p = std::max(re_.prec(), im_.prec());
        if (re_.prec() != p) re_ = re_.at_prec(p);
        if (im_.prec() != p) im_ = im_.at_prec(p);
    }
    Real re_{0, kMinPrec};
    Real im_{0, kMinPrec};
};

// base^s = exp(s ln base) for real base > 0; branch-free by construction.
inline Complex real_pow_complex(const Real& base, const Complex& s) {
    if (base.sign() <= 0) throw NonPositiveBase();
    mpfr_prec_t p = std::max(base.prec(), s.prec());
    if (s.im().is_zero()) {
        if (s.re().is_zero()) return Complex(1, p);
        Real r(0, p);
        mpfr_pow(r.raw(), base.at_prec(p).raw(), s.re().raw(), MPFR_RNDN);
        return Complex(r);
    }
    Real lb = ln_real(base.at_prec(p));
    Real a = s.re() * lb, b = s.im() * lb;
    Real mag = exp(a);
    Real c(0, p), sn(0, p);
    mpfr_sin_cos(sn.raw(), c.raw(), b.raw(), MPFR_RNDN);
    return Complex(mag * c, mag * sn);
}

// Working-precision schedule shared by every series evaluator.
//
// working_bits(n) = ceil(target_digits*log2(10)) + guard_bits + cancellation(n);
// the default cancellation model charges n bits for the length-(n+1)
// alternating binomial sum (binomials sum to 2^n).
struct PrecisionPolicy {
    long target_digits = 34;
    long guard_bits = 32;
    std::function<long(long)> cancellation_model;  // default: n
    long max_terms = 10000;
    long min_terms = 8;
    long stop_window = 4;
    // Series argument lift: -1 = auto (target_digits + 10), 0 = off, >0 explicit base.
    long lift = -1;

    explicit PrecisionPolicy(long digits = 34) : target_digits(digits) {
        if (digits < 1) throw DomainError("target_digits must be positive");
    }

    long base_bits() const {
        return static_cast<long>(std::ceil(static_cast<double>(target_digits) * 3.3219280948873623)) +
               guard_bits;
    }
    mpfr_prec_t working_bits(long n) const {
        long extra = cancellation_model ? cancellation_model(n) : n;
        return static_cast<mpfr_prec_t>(std::max<long>(base_bits() + extra, kMinPrec));
    }
    long lift_target() const { return lift == -1 ? target_digits + 10 : lift; }
    PrecisionPolicy with_lift(long l) const {
        PrecisionPolicy p = *this;
        p.lift = l;
        return p;
    }
    PrecisionPolicy with_digits(long d) const {
        PrecisionPolicy p = *this;
        p.target_digits = d;
        return p;
    }
};

}  // namespace fdz
