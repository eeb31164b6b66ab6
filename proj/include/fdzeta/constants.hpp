#pragma once

#include <vector>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz::constants {

struct ConstResult {
    Real value{0, kMinPrec};
    long n_terms = 0;
    bool converged = false;
    Real error_estimate{0, kMinPrec};
};

enum class StieltjesWeight { Ser, Hasse, Gregory, Cauchy, H1, H2 };
enum class DeltaWeight { Gregory, Cauchy };

// gamma_m. The Ser weight (and H2 for m >= 1) have no argument-shifted
// sibling free of zeta derivatives, so they always run at the pinned base and
// converge slowly; the other weights descend from a lifted argument.
ConstResult stieltjes(long m, StieltjesWeight weight, const PrecisionPolicy& policy);

// delta_m = (-1)^m m! normalized Maclaurin coefficients, m >= 1.
ConstResult delta(long m, DeltaWeight weight, const PrecisionPolicy& policy);

enum class GenMethod { Gregory, Cauchy, Norlund, HasseWeight, SerWeight2 };

// gamma_m(v); gamma_0(v) = -digamma(v). SerWeight2 is the ln-Gamma-based
// 1/(n+2) form and supports m = 0 only (higher m needs zeta''(0,v)).
ConstResult gen_stieltjes(long m, const Real& v, GenMethod method, long r, const Rational& a,
                          const PrecisionPolicy& policy);

// delta_m(v) = (-1)^m { zeta^{(m)}(0,v) + m! }; Gregory/Cauchy/Norlund forms.
ConstResult gen_delta(long m, const Real& v, GenMethod method, long r, const Rational& a,
                      const PrecisionPolicy& policy);

// f_m(v) = (-1)^m m! { 1 - v - v sum_{k=1}^m (-1)^k ln^k v / k! }
Real f_m(long m, const Real& v, mpfr_prec_t prec);

enum class GammaMethod {
    FontanaMascheroni,
    NorlundLog,
    PairedRational,
    ProductConstraint,
    QWeighted,
    G2Series,
    LnGammaForm,
};

struct GammaParams {
    long m = 1;
    Rational a = Rational(0);
    std::vector<Rational> as;  // ProductConstraint / QWeighted nodes
    std::vector<long> qs;      // QWeighted exponents
};

ConstResult euler_gamma(GammaMethod method, const GammaParams& params,
                        const PrecisionPolicy& policy);

// Exact rational series terms (index starting at n = 1) for the families whose
// terms are rational at rational parameters.
std::vector<Rational> gamma_exact_terms(GammaMethod method, const GammaParams& params, long count);

// C_{n+1}/((n+1)(n+2)) for n = 0..count-1: the Cauchy-weight gamma partials.
std::vector<Rational> stieltjes_cauchy_gamma_terms(long count);

}  // namespace fdz::constants
