#pragma once

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz::gammafns {

// Rising factorial (v)_n = v(v+1)...(v+n-1).
Real pochhammer_real(const Real& v, long n);

enum class DigammaMethod {
    Gregory,         // ln v - sum |G_n| (n-1)!/(v)_n,            v > 0
    Cauchy,          // ln(v-1) + sum C_n (n-1)!/(v)_n,           v > 1
    PsiA,            // ln(v+a) + sum (-1)^n psi_n(a)(n-1)!/(v)_n
    NorlundAvg,      // averaged-log N_{n,r}(a) form
    LnGammaCoupled,  // ln-Gamma-coupled N_{n+1,r}(a) form
    G2Relation,      // k=2 functional relation with G_n^{(2)}
    HasseLog,        // sum 1/(n+1) transform of ln(k+v)
    Stern,           // Psi(a+1) = -gamma - sum (-1)^n binom(a,n)/n at a = v-1
    HarmonicLog,     // H_{n+1}-weighted transform of ln(k+v+1)
    Theorem6K2,      // -1 - 2 sum H_{n+1}/(n+2) transforms of (l+v) ln(l+v)
};

enum class LnGammaMethod {
    Gregory,
    Cauchy,
    Norlund,
    GregoryNewton,  // integer base + binom(x, n+1)-weighted transform
    HasseVLogV,
    HarmonicVLogV,
};

enum class TrigammaMethod {
    SerFraction,         // (1/(v-1)) { 1 - sum n!/((n+2)(v)_{n+1}) }; v=1 dispatches
    HarmonicPochhammer,  // v sum H_{n+1} n!/(v)_{n+2}
    HassePochhammer,     // sum n!/((n+1)(v)_{n+1})
    Theorem6,            // -2 sum H_{n+1}/(n+2) transforms of ln(l+v)
};

struct FnParams {
    long r = 1;
    Rational a = Rational(0);
};

Real digamma(const Real& v, DigammaMethod method, const FnParams& params,
             const PrecisionPolicy& policy);

// Same series truncated at exactly `terms` terms, no argument lift.
Real digamma_fixed_terms(const Real& v, DigammaMethod method, const FnParams& params, long terms,
                         const PrecisionPolicy& policy);

struct BoundsTriple {
    Real lower{0, kMinPrec};
    Real value{0, kMinPrec};
    Real upper{0, kMinPrec};
};
// ln(v-1) < Psi(v) < ln v for v > 1; the strict ordering is asserted.
BoundsTriple digamma_bounds_check(const Real& v, const PrecisionPolicy& policy);

Real lngamma(const Real& v, LnGammaMethod method, const FnParams& params,
             const PrecisionPolicy& policy);

Real trigamma(const Real& v, TrigammaMethod method, const PrecisionPolicy& policy);

}  // namespace fdz::gammafns
