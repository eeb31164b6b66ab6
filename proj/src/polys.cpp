#include "fdzeta/polys.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "fdzeta/coeffs.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/oracle.hpp"

namespace fdz {

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real RationalPoly::eval_real(const Real& x, mpfr_prec_t prec) const {
    Real acc(0, prec);
    Real xx = x.at_prec(prec);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * xx + Real::from_rational(*it, prec);
    }
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() == 1) return RationalPoly();
    std::vector<Rational> d;
    d.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shifted(const Rational& d) const {
    std::vector<Rational> out(c_.size(), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        // c_k (x + d)^k
        Rational dp = 1;
        for (size_t j = 0; j <= k; ++j) {
            size_t i = k - j;  // power of x
            Rational binom(Integer::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)));
            out[i] += c_[k] * binom * dp;
            dp *= d;
        }
    }
    return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return RationalPoly(std::move(out));
}

std::string RationalPoly::to_json(const std::string& var) const {
    std::string s = "{\"var\":\"" + var + "\",\"coeffs\":[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += "\"" + c_[i].str() + "\"";
    }
    s += "]}";
    return s;
}

namespace polys {

namespace {

struct PolyCache {
    std::mutex mu;
    std::vector<RationalPoly> psi;
    std::map<std::pair<long, long>, RationalPoly> norlund;
};

PolyCache& pcache() {
    static PolyCache c;
    return c;
}

}  // namespace

RationalPoly fontana_bessel(long n) {
    if (n < 0) throw DomainError("fontana_bessel needs n >= 0");
    PolyCache& c = pcache();
    std::scoped_lock lock(c.mu);
    if (c.psi.empty()) c.psi.push_back(RationalPoly({Rational(1)}));
    while (static_cast<long>(c.psi.size()) <= n) {
        long m = static_cast<long>(c.psi.size());
        // psi_m(x) = (1/(m-1)!) sum_{l=0}^{m-1} S1(m-1,l)/(l+1) x^{l+1} + G_m
        std::vector<Rational> cs(static_cast<size_t>(m) + 1, Rational(0));
        cs[0] = coeffs::gregory(m);
        Rational fact(Integer::factorial(static_cast<unsigned long>(m - 1)));
        for (long l = 0; l <= m - 1; ++l) {
            cs[static_cast<size_t>(l + 1)] =
                Rational(coeffs::stirling1(m - 1, l), Integer(l + 1)) / fact;
        }
        c.psi.push_back(RationalPoly(std::move(cs)));
    }
    return c.psi[static_cast<size_t>(n)];
}

RationalPoly norlund_poly(long n, long m) {
    if (n < 0 || m < 1) throw DomainError("norlund_poly needs n >= 0, m >= 1");
    PolyCache& c = pcache();
    std::scoped_lock lock(c.mu);
    auto it = c.norlund.find({n, m});
    if (it != c.norlund.end()) return it->second;
    RationalPoly poly;
    if (n == 0) {
        poly = RationalPoly({Rational(m)});
    } else {
        // (1/n!) sum_l S1(n,l)/(l+1) [(a+m)^{l+1} - a^{l+1}]
        std::vector<Rational> cs(static_cast<size_t>(n) + 1, Rational(0));
        Rational fact(Integer::factorial(static_cast<unsigned long>(n)));
        for (long l = 1; l <= n; ++l) {
            Rational w = Rational(coeffs::stirling1(n, l), Integer(l + 1)) / fact;
            // (a+m)^{l+1} - a^{l+1} = sum_{k=0}^{l} C(l+1,k) m^{l+1-k} a^k
            for (long k = 0; k <= l; ++k) {
                Rational binom(Integer::binomial(static_cast<unsigned long>(l + 1),
                                                 static_cast<unsigned long>(k)));
                cs[static_cast<size_t>(k)] +=
                    w * binom * Rational::pow(Rational(m), l + 1 - k);
            }
        }
        poly = RationalPoly(std::move(cs));
    }
    c.norlund.emplace(std::make_pair(n, m), poly);
    return poly;
}

RationalPoly binomial_poly(long n, const Rational& shift) {
    if (n < 0) throw DomainError("binomial_poly needs n >= 0");
    // prod_{j=0}^{n-1} (x + shift - j) / n!
    std::vector<Rational> cs{Rational(1)};
    for (long j = 0; j < n; ++j) {
        std::vector<Rational> next(cs.size() + 1, Rational(0));
        Rational off = shift - Rational(j);
        for (size_t k = 0; k < cs.size(); ++k) {
            next[k + 1] += cs[k];
            next[k] += cs[k] * off;
        }
        cs = std::move(next);
    }
    Rational fact(Integer::factorial(static_cast<unsigned long>(n)));
    for (auto& x : cs) x /= fact;
    return RationalPoly(std::move(cs));
}

RationalPoly norlund_derivative(long n, long m) {
    RationalPoly d = norlund_poly(n, m).derivative();
    RationalPoly expect = binomial_poly(n, Rational(m)) - binomial_poly(n, Rational(0));
    if (!(d == expect)) {
        throw Error("norlund derivative identity failed at n=" + std::to_string(n) +
                    " m=" + std::to_string(m));
    }
    return d;
}

Rational poly_eval(const RationalPoly& p, const Rational& a) { return p.eval(a); }

Real poly_eval_real(const RationalPoly& p, const Real& a, mpfr_prec_t prec) {
    return p.eval_real(a, prec);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
struct GaussRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};

const GaussRule& gauss_rule(long order, mpfr_prec_t prec) {
    static std::mutex mu;
    static std::map<std::pair<long, mpfr_prec_t>, GaussRule> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find({order, prec});
    if (it != cache.end()) return it->second;
    GaussRule rule;
    Real pi = const_pi(prec);
    for (long i = 0; i < order; ++i) {
        // Chebyshev initial guess, then Newton on P_order
        Real x = cos(pi * Real::from_rational(Rational(4 * i + 3, 4 * order + 2), prec));
        for (int iter = 0; iter < 200; ++iter) {
            // evaluate P_order and P'_order by recurrence
            Real p0(1, prec), p1 = x;
            for (long k = 2; k <= order; ++k) {
                Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
                p0 = p1;
                p1 = p2;
            }
            Real one(1, prec);
            Real dp = (x * p1 - p0) * order / (x * x - one);
            Real step = p1 / dp;
            x -= step;
            if (abs_below_2exp(step, -(prec - 8))) break;
        }
        Real p0(1, prec), p1 = x;
        for (long k = 2; k <= order; ++k) {
            Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
            p0 = p1;
            p1 = p2;
        }
        Real one(1, prec);
        Real dp = (x * p1 - p0) * order / (x * x - one);
        Real wgt = Real(2, prec) / ((one - x * x) * dp * dp);
        rule.nodes.push_back(x);
        rule.weights.push_back(wgt);
    }
    return cache.emplace(std::make_pair(order, prec), std::move(rule)).first->second;
}

}  // namespace

Real psi_integral(long n, const Rational& x, const PrecisionPolicy& policy) {
    if (n < 1) throw DomainError("psi_integral needs n >= 1");
    if (x < Rational(-1) || x > Rational(n - 1)) {
        throw DomainError("psi_integral needs -1 <= x <= n-1");
    }
    long digits = std::max<long>(policy.target_digits, 16);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        std::max<long>(static_cast<long>(digits * 3.33) + 48, kMinPrec));
    Real pi = const_pi(prec);
    Real xr = Real::from_rational(x, prec);
    bool left_endpoint = (x == Rational(-1));
    bool right_endpoint = (x == Rational(n - 1));
    Real cpx(0, prec), spx(0, prec);
    if (left_endpoint || right_endpoint) {
        // cos(pi x) = +-1, sin(pi x) = 0 exactly at integer x
        long xi = left_endpoint ? -1 : (n - 1);
        cpx = Real((xi % 2 == 0) ? 1 : -1, prec);
    } else {
        mpfr_sin_cos(spx.raw(), cpx.raw(), (pi * xr).raw(), MPFR_RNDN);
    }

    // integrand(t) = (pi cos(pi x) - t sin(pi x)) e^{t(x+1)} / ((1+e^t)^n (t^2+pi^2));
    // for t > 0 use the equivalent e^{t(x+1-n)} / (1+e^{-t})^n form.
    auto integrand = [&](const Real& t) {
        Real num = pi * cpx - t * spx;
        Real expo, base;
        if (t.sign() <= 0) {
            expo = exp(t * (xr + 1));
            base = Real(1, prec) + exp(t);
        } else {
            expo = exp(t * (xr + 1 - n));
            base = Real(1, prec) + exp(-t);
        }
        return num * expo / (pow_si(base, n) * (t * t + pi * pi));
    };

    double ln10 = 2.302585092994046;
    double need = static_cast<double>(digits + 8) * ln10;
    double vm, vp;
    if (left_endpoint) {
        vm = need + 10.0;  // analytic tail beyond
    } else {
        double rate = Rational(x + Rational(1)).numerator().to_long() /
                      static_cast<double>(Rational(x + Rational(1)).denominator().to_long());
        vm = need / rate + 10.0;
    }
    if (right_endpoint) {
        vp = need + 10.0;
    } else {
        Rational d = Rational(n - 1) - x;
        double rate = d.numerator().to_long() / static_cast<double>(d.denominator().to_long());
        vp = need / rate + 10.0;
    }

    const long order = 48;
    const GaussRule& rule = gauss_rule(order, prec);
    Real total(0, prec);
    double panel = 2.0;
    double a = -vm;
    long panels = static_cast<long>((vm + vp) / panel) + 1;
    for (long p = 0; p < panels; ++p) {
        double lo = a + panel * static_cast<double>(p);
        double hi = std::min(lo + panel, vp);
        if (lo >= vp) break;
        Real mid = Real::from_double((lo + hi) / 2, prec);
        Real half = Real::from_double((hi - lo) / 2, prec);
        Real acc(0, prec);
        for (long i = 0; i < order; ++i) {
            acc += rule.weights[static_cast<size_t>(i)] *
                   integrand(mid + half * rule.nodes[static_cast<size_t>(i)]);
        }
        total += acc * half;
    }

    // closed-form 1/(t^2+pi^2) tails where the exponential decay vanishes
    if (left_endpoint) {
        Real V = Real::from_double(vm, prec);
        total += cpx * pi * (pi / 2 - atan(V / pi)) / pi;
        // |(1+e^t)^{-n} - 1| <= n e^t keeps the neglected part below e^{-vm}
    }
    if (right_endpoint) {
        Real V = Real::from_double(vp, prec);
        total += cpx * (pi / 2 - atan(V / pi));
    }
    Real result = total / pi;
    if (n % 2 == 0) result = -result;
    return result;
}

Real norlund_asymptotic(long n, long m, const Real& a, int terms,
                        const PrecisionPolicy& policy) {
    if (n < 10) throw DomainError("norlund_asymptotic needs n >= 10");
    if (m < 1) throw DomainError("norlund_asymptotic needs m >= 1");
    if (a < Real(-1, a.prec())) throw DomainError("norlund_asymptotic needs a >= -1");
    if (terms != 1 && terms != 2) throw DomainError("terms must be 1 or 2");
    bool integer_a = mpfr_integer_p(a.raw()) != 0;
    if (integer_a && terms == 1) throw DegenerateLeading();
    if (a == Real(-1, a.prec()) && terms == 2) {
        throw DomainError("two-term asymptotic undefined at a = -1");
    }
    mpfr_prec_t prec = policy.working_bits(0);
    oracle::OracleConfig cfg(policy.target_digits + 5);
    Real av = a.at_prec(prec);
    Real pi = const_pi(prec);
    Real sa = sin(pi * av);
    if (integer_a) sa = Real(0, prec);
    Real ga = exp(oracle::lngamma_ref(av + 1, cfg)).at_prec(prec);
    Real lnn = ln_real(Real(n, prec));
    Real bracket = sa * ga;
    if (terms == 2) {
        Real da = pi * cos(pi * av) * ga + sa * ga * oracle::digamma_ref(av + 1, cfg).at_prec(prec);
        bracket += da / lnn;
    }
    Real npow = pow(Real(n, prec), av + 1);
    Real val = bracket / (pi * npow * lnn);
    if (n % 2 == 0) val = -val;
    return val;
}

}  // namespace polys
}  // namespace fdz
