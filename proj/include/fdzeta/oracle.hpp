#pragma once

#include <string>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

// Reference implementations used to validate the series modules. Everything
// here is classical (Euler-Maclaurin, Machin/atanh series, Stirling series,
// Cauchy-circle differentiation) and independent of zetaser/constants/gammafns.
namespace fdz::oracle {

struct OracleConfig {
    long target_digits = 40;
    long em_shift = 16;        // initial M
    long bernoulli_terms = 8;  // initial J
    explicit OracleConfig(long digits = 40) : target_digits(digits) {}
};

// Hurwitz zeta by Euler-Maclaurin with the remainder bound
// |B_{2J}| |(s)_{2J}| (M+v)^{-Re s - 2J + 1} / (2J)!  required < 10^{-digits-5};
// M and J are raised until the bound passes.
Complex hurwitz_ref(const Complex& s, const Real& v, const OracleConfig& cfg);

enum class ConstName { Pi, Ln2, Gamma, Ln2Pi };

// Each constant is computed by a series scheme with an explicit tail bound and
// cross-asserted against an MPFR constant computed by a structurally different
// algorithm. digits <= 200.
Real const_ref(ConstName name, long digits);

// Stirling series with argument lift; remainder bounded by the first omitted term.
Real lngamma_ref(const Real& v, const OracleConfig& cfg);
Real digamma_ref(const Real& v, const OracleConfig& cfg);
Real trigamma_ref(const Real& v, const OracleConfig& cfg);

// gamma_m by trapezoidal Cauchy-circle differentiation of (s-1) zeta(s) around
// s = 1 at radius 1/2, doubling the node count until stable. m <= 8.
Real laurent_coeff_ref(long m, const OracleConfig& cfg);

}  // namespace fdz::oracle
