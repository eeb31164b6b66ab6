#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz::zetaser {

enum class Family {
    HasseZeta,
    HasseHurwitz,
    SerZeta,
    SerGregoryZeta,
    EulerEtaZeta,
    CauchyZeta,
    GregoryHurwitz,
    CauchyHurwitz,
    NorlundHurwitz,
    NorlundZetaShift0,
    NorlundZetaShift1,
    HigherGregoryRelation,
    StirlingZeta,
    SerHurwitzRelation,
    HarmonicHurwitz,
    HarmonicZeta,
};

enum class HarmonicWeight { H1, H2 };

// Representation selector + parameters; family-specific constraints are
// checked on construction.
struct SeriesSpec {
    Family family;
    long m = 1;
    Rational a = Rational(0);
    long k = 1;
    Real v = Real(1, kMinPrec);
    HarmonicWeight weight = HarmonicWeight::H1;

    explicit SeriesSpec(Family f) : family(f) {}
    void validate() const;
};

struct EvalResult {
    Complex value;
    long n_terms = 0;
    long working_bits = 0;
    Real error_estimate{0, kMinPrec};
    bool converged = false;

    std::string to_json(long digits) const;
};

// --- zeta(s) and zeta(s,v) series families ---

EvalResult hasse_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy);
EvalResult hasse_zeta(const Complex& s, const PrecisionPolicy& policy);
EvalResult ser_zeta(const Complex& s, const PrecisionPolicy& policy);
EvalResult ser_gregory_zeta(const Complex& s, const PrecisionPolicy& policy);
EvalResult euler_eta_zeta(const Complex& s, const PrecisionPolicy& policy);
EvalResult cauchy_zeta(const Complex& s, const PrecisionPolicy& policy);
EvalResult gregory_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy);
EvalResult cauchy_hurwitz(const Complex& s, const Real& v, const PrecisionPolicy& policy);
EvalResult norlund_hurwitz(const Complex& s, const Real& v, long m, const Rational& a,
                           const PrecisionPolicy& policy);
// Non-rational a: Norlund weights by real Horner evaluation.
EvalResult norlund_hurwitz(const Complex& s, const Real& v, long m, const Real& a,
                           const PrecisionPolicy& policy);
EvalResult norlund_zeta(const Complex& s, long m, const Rational& a, int shift,
                        const PrecisionPolicy& policy);
EvalResult higher_gregory_zeta(const Complex& s, long k, const PrecisionPolicy& policy);
EvalResult stirling_zeta(const Complex& s, const Real& v, long k, const PrecisionPolicy& policy);
EvalResult ser_hurwitz_relation(const Complex& s, const Real& v, const PrecisionPolicy& policy);
// Returns zeta(s, v-1); v > 1.
EvalResult harmonic_hurwitz(const Complex& s, const Real& v, HarmonicWeight weight,
                            const PrecisionPolicy& policy);
EvalResult harmonic_zeta(const Complex& s, const PrecisionPolicy& policy);

// --- Dirichlet series zeta(s, v, u) ---

struct BoundedSequence {
    std::function<Complex(long n, mpfr_prec_t prec)> u;
    std::optional<long> degree;  // declared polynomial degree: differences beyond it vanish
};

enum class DirichletForm { A, B };

EvalResult dirichlet_series_eval(const Complex& s, const Real& v, const BoundedSequence& u,
                                 long m, const Rational& a, DirichletForm form,
                                 const PrecisionPolicy& policy);

// --- functional-relation residuals ---

enum class RelationId {
    PoleM,            // (v+a+m/2-1) zeta(s,v) relation
    PsiForm,          // psi_{n+2}(a) form (m = 1)
    M2Form,           // m = 2 pole form
    GregoryVHalf,     // (v-1/2) Gregory form
    HarmonicZetaForm, // m H_m^{(s-1)} - H_m^{(s-2)} form for zeta(s)
    ZetaGregory2,     // zeta(s) = 2(s-2)/(s-1) zeta(s-1) + 2 sum (-1)^n G_{n+2} ...
    ZetaSm1A,         // zeta(s-1,a)/(s-1) relation
    SerHurwitz,       // 1/(n+2)-weight generalization
};

// |LHS - RHS| with every zeta value on either side supplied by hasse_hurwitz.
// The v-pinned relations (HarmonicZetaForm, ZetaGregory2, ZetaSm1A) evaluate
// their base-1 series through the exact descent
//   S2(v) = S2(v+1) - S1(v) + N_{1,m}(a) v^{-s},
// where S1 comes from the Norlund-Hurwitz identity.
Real verify_relation(RelationId id, const Complex& s, const Real& v, long m, const Rational& a,
                     const PrecisionPolicy& policy);

EvalResult evaluate(const SeriesSpec& spec, const Complex& s, const PrecisionPolicy& policy);

}  // namespace fdz::zetaser
