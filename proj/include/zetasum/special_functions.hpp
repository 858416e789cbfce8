#ifndef ZETASUM_SPECIAL_FUNCTIONS_HPP
#define ZETASUM_SPECIAL_FUNCTIONS_HPP

#include "zetasum/approximation.hpp"

namespace zetasum {

// Scalar special functions: trigonometric integrals, gamma-family functions,
// Hurwitz zeta with s-derivatives, Stieltjes constants, Bernoulli
// polynomials.  All functions are pure and safe for concurrent use; internal
// coefficient tables are immutable after first initialization.

// Si(x) = integral of sin t / t from 0 to x.  Requires x >= 0.
// Absolute error stays below ~1e-13 for x <= 1e6; beyond that it grows in
// proportion to the rounding of the trigonometric argument reduction,
// roughly |x| * 1e-16 in the oscillatory part.
Approximation sine_integral_Si(double x);

// si(x) = Si(x) - pi/2 = -integral of sin t / t from x to infinity.
// Requires x > 0.
Approximation sine_integral_si(double x);

// Ci(x) = gamma + log x + integral of (cos t - 1)/t from 0 to x.
// Requires x > 0.
Approximation cosine_integral_Ci(double x);

// psi(x), the logarithmic derivative of Gamma.  Requires x > 0.
Approximation digamma(double x);

// psi(x) - log(x), evaluated without cancellation for large x.  This is the
// natural building block for the slowly convergent psi-series, whose terms
// are all of the form psi(...) - log(...) + rational corrections.
Approximation digamma_minus_log(double x);

// p-th derivative of psi for p in {1,2,3,4}.  Requires x > 0.
// Satisfies psi^(p)(x) = (-1)^(p+1) p! zeta(p+1, x).
Approximation polygamma(int p, double x);

// log Gamma(x) for x > 0.
Approximation log_gamma(double x);

// log G(1+x) for the Barnes double-gamma function G, argument 1+x > 0.
Approximation log_barnes_g(double one_plus_x);

// m-th partial derivative with respect to s of the Hurwitz zeta function
// zeta(s, a) = sum_{n>=0} (n+a)^(-s), analytically continued in s.
// m in {0,1,2}, s != 1, a > 0.
Approximation hurwitz_zeta_deriv(int m, double s, double a);

// Alternating Hurwitz zeta zeta_a(s, a) = sum_{n>=0} (-1)^n (n+a)^(-s),
// entire in s. Computed as 2^(-s) [zeta(s, a/2) - zeta(s, (a+1)/2)] with the
// two pole terms paired so that s = 1 is regular.
Approximation alternating_hurwitz(double s, double a);

// Generalized Stieltjes constant gamma_p(a): coefficient of the Laurent
// expansion of zeta(s, a) about s = 1.  p in {0..4}, a > 0.
Approximation stieltjes_gamma(int p, double a);

// Bernoulli polynomial B_n(x) with exact rational coefficients, 0 <= n <= 12.
double bernoulli_poly(int n, double x);

// Bernoulli number B_n as a double, 0 <= n <= 12 (odd ones vanish, B_1=-1/2).
double bernoulli_number(int n);

// Catalan's constant, obtained from psi'(1/4) = pi^2 + 8G rather than a
// hard-coded literal.
double catalan_constant();

}  // namespace zetasum

#endif  // ZETASUM_SPECIAL_FUNCTIONS_HPP
