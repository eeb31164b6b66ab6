#pragma once

#include <span>
#include <vector>

#include "fdzeta/rational.hpp"
#include "fdzeta/real.hpp"

namespace fdz::coeffs {

// Signed Stirling numbers of the first kind in the falling-factorial
// convention: x(x-1)...(x-n+1) = sum_l S1(n,l) x^l. Zero for l > n.
Integer stirling1(long n, long l);

// Gregory coefficients G_n, n >= 1. Generated by the recurrence and
// cross-checked entry by entry against the Stirling sum (1/n!) sum S1(n,l)/(l+1).
Rational gregory(long n);

// Normalized Cauchy numbers of the second kind, C_n = (1/n!) sum |S1(n,l)|/(l+1),
// with C_0 = 1 so that C_{n-1} - C_n = |G_n| holds from n = 1.
Rational cauchy2(long n);

// Higher-order Gregory coefficients G_n^{(k)} = (1/n!) sum_l S1(n,l)/(l+k).
Rational gregory_higher(long n, long k);

// Harmonic numbers H_n and generalized H_n^{(s)}; H_0 = 0.
Rational harmonic(long n);
Rational harmonic_gen(long n, long s);

// |S1(n+k,k)| / (n+k)!.  For k <= 3 the closed forms 1/(n+1), H_{n+1}/(n+2),
// (H^2_{n+2} - H^{(2)}_{n+2})/(2(n+3)) are evaluated and asserted equal.
Rational stirling_ratio(long n, long k);

// Modified Bell polynomials P_m from exp(sum x_n z^n / n) = sum P_m z^m,
// via P_0 = 1, P_m = (1/m) sum_{j=1}^m x_j P_{m-j}.
Rational bell_modified(long m, std::span<const Rational> xs);

// Classical Bernoulli numbers, B_1 = -1/2 convention.
Rational bernoulli(long n);

// |G_n| for n = 1..N evaluated in floating point at `prec` bits via the
// recurrence. Exact generation is impractical at N ~ 10^4 (entry sizes grow
// like n log n bits); the recurrence loses only O(log log n) bits per step.
std::vector<Real> gregory_abs_table(long N, mpfr_prec_t prec);

}  // namespace fdz::coeffs
