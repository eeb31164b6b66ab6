#pragma once

#include <string>
#include <vector>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz {

// Dense rational-coefficient polynomial, constant term first.
class RationalPoly {
  public:
    RationalPoly() : c_{Rational(0)} {}
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    long degree() const { return is_zero() ? 0 : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

    Rational eval(const Rational& x) const;
    Real eval_real(const Real& x, mpfr_prec_t prec) const;

    RationalPoly derivative() const;
    RationalPoly shifted(const Rational& d) const;  // p(x + d)

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    // {"var":"a","coeffs":["c0","c1",...]}
    std::string to_json(const std::string& var) const;

  private:
    void normalize() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) c_.push_back(Rational(0));
    }
    std::vector<Rational> c_;
};

namespace polys {

// Bernoulli polynomials of the second kind psi_n(x); psi_0 = 1, psi_n(0) = G_n.
RationalPoly fontana_bessel(long n);

// N_{n,m}(a) as a degree-n polynomial in a; N_{0,m} = m.
RationalPoly norlund_poly(long n, long m);

// binom(x + shift, n) expanded as a polynomial in x.
RationalPoly binomial_poly(long n, const Rational& shift);

// Formal derivative of N_{n,m}; asserted equal to binom(a+m,n) - binom(a,n).
RationalPoly norlund_derivative(long n, long m);

Rational poly_eval(const RationalPoly& p, const Rational& a);
Real poly_eval_real(const RationalPoly& p, const Real& a, mpfr_prec_t prec);

// psi_n(x) by quadrature of the real-line exponential form of the contour
// integral; -1 <= x <= n-1. Exponential decay rate min(x+1, n-1-x); at the
// exact endpoints the 1/(v^2+pi^2) tail is integrated in closed form.
Real psi_integral(long n, const Rational& x, const PrecisionPolicy& policy);

// Leading 1- or 2-term truncation of the large-n asymptotics of N_{n,m}(a).
Real norlund_asymptotic(long n, long m, const Real& a, int terms, const PrecisionPolicy& policy);

}  // namespace polys
}  // namespace fdz
