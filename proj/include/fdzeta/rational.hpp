#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "fdzeta/errors.hpp"

namespace fdz {

// Arbitrary-precision signed integer (thin RAII wrapper over mpz_t).
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    explicit Integer(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw DomainError("bad integer literal: " + s);
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    Integer& mul_si(long v) {
        mpz_mul_si(z_, z_, v);
        return *this;
    }
    // Exact division; caller guarantees divisibility (binomial recurrences).
    Integer& divexact_ui(unsigned long v) {
        mpz_divexact_ui(z_, z_, v);
        return *this;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }
    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }
    long to_long() const { return mpz_get_si(z_); }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }

    std::string str() const {
        char* p = mpz_get_str(nullptr, 10, z_);
        std::string s(p);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(p, s.size() + 1);
        return s;
    }

    static Integer factorial(unsigned long n) {
        Integer r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static Integer binomial(unsigned long n, unsigned long k) {
        Integer r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }
    static Integer pow(const Integer& b, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.z_, b.raw(), e);
        return r;
    }

  private:
    mpz_t z_;
};

// Exact signed rational in canonical form: denominator > 0, gcd(|num|, den) = 1.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {  // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw DomainError("zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw DomainError("zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const Integer& num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }
    // Accepts "p/q", "p", "-p/q".
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw DomainError("bad rational literal: " + s);
        }
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Integer numerator() const {
        Integer r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Integer denominator() const {
        Integer r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }

    static Rational pow(const Rational& b, long e) {
        Rational r = 1;
        Rational base = e >= 0 ? b : Rational(1) / b;
        unsigned long k = static_cast<unsigned long>(e >= 0 ? e : -e);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    // "p/q" in canonical form; integers print without the "/1".
    std::string str() const {
        char* p = mpq_get_str(nullptr, 10, q_);
        std::string s(p);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(p, s.size() + 1);
        return s;
    }

  private:
    mpq_t q_;
};

}  // namespace fdz
