#pragma once

#include <functional>
#include <vector>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz::findiff {

// Evaluation contract for k |-> f(v+k) at a requested precision. Must be pure:
// identical (k, prec) always produce identical values.
using TermFunction = std::function<Complex(long k, mpfr_prec_t prec)>;

// Incremental alternating binomial transform:
//   T_n = sum_{k=0}^n (-1)^k C(n,k) f(k),
// with f cached per 64-bit precision epoch of policy.working_bits(n) and exact
// integer binomials updated along each row. Summation order is ascending k.
class TransformStream {
  public:
    TransformStream(TermFunction f, const PrecisionPolicy& policy)
        : f_(std::move(f)), policy_(policy) {}

    // T_n for n = 0, 1, 2, ... on successive calls.
    Complex next();
    long index() const { return n_; }
    mpfr_prec_t current_prec() const { return prec_; }
    mpfr_prec_t max_prec() const { return max_prec_; }

  private:
    void ensure_prec(long n);
    TermFunction f_;
    PrecisionPolicy policy_;
    std::vector<Complex> cache_;
    mpfr_prec_t prec_ = 0;
    mpfr_prec_t max_prec_ = 0;
    long n_ = -1;
    bool all_real_ = true;
};

// Single-shot operations.
Complex binom_transform(const TermFunction& f, long n, const PrecisionPolicy& policy);
Complex forward_difference(const TermFunction& f, long n, const PrecisionPolicy& policy);

// Exact-rational transform for coefficient identities.
Rational binom_transform_exact(const std::function<Rational(long)>& f, long n);

// Outcome of a stopping-rule-controlled series summation.
struct SeriesSum {
    Complex value;
    long n_terms = 0;
    bool converged = false;
    Real last_term;          // magnitude of last included term
    mpfr_prec_t max_prec = 0;
};

// sum_n weight(n) T_n with the module stopping rule: stop at the first
// n >= min_terms whose trailing `stop_window` terms all fall below
// 10^{-target_digits} max(1, |partial|); give up at max_terms.
using WeightFunction = std::function<Real(long n, mpfr_prec_t prec)>;
SeriesSum sum_weighted_transform(const WeightFunction& weight, const TermFunction& f,
                                 const PrecisionPolicy& policy);

// d/dv F = sum_n (-1)^n/(n+1) Delta^{n+1} F(v)  (equivalently -sum_{j>=1} T_j / j).
Complex derivative_from_differences(const TermFunction& f, const PrecisionPolicy& policy,
                                    long max_n);

// d^k/dv^k F = k! sum_n S1(n+k,k)/(n+k)! Delta^{n+k} F(v).
Complex kth_derivative_from_differences(const TermFunction& f, long k,
                                        const PrecisionPolicy& policy, long max_n);

}  // namespace fdz::findiff
