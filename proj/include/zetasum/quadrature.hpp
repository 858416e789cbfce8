#ifndef ZETASUM_QUADRATURE_HPP
#define ZETASUM_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "zetasum/approximation.hpp"

namespace zetasum {

// Result of a quadrature: value, absolute-error estimate, integrand
// evaluations, and (for oscillatory integrals) the number of half-period
// panels consumed.
struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  long evals = 0;
  long segments = 0;
};

enum class KernelKind { cosine, sine };

// cos(omega*x) or sin(omega*x) with omega > 0.
struct OscillatoryKernel {
  KernelKind kind = KernelKind::cosine;
  double omega = 1.0;
};

struct EndpointFlags {
  bool left_singular = false;
  bool right_singular = false;
};

using RealFn = std::function<double(double)>;

// Default evaluation budget per integral; override via the budget arguments
// or process-wide with set_default_quad_budget (intended to be called once at
// startup, before any evaluation).
inline constexpr long kDefaultQuadBudget = 200000;
void set_default_quad_budget(long budget);   // clamped to >= 1000
long default_quad_budget();
void set_default_max_terms(long max_terms);  // clamped to >= 16
long default_max_terms();

// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
// Flagged endpoints are approached by geometric subdivision with ratio 1/4,
// which handles integrable singularities of type x^alpha log^m x, alpha > -1.
// Throws BudgetExceeded (carrying the best estimate) on non-convergence.
QuadResult integrate_finite(const RealFn& f, double a, double b, double tol,
                            EndpointFlags flags = {},
                            long budget = 0);

// Integral of an eventually exponentially decaying f over [a, infinity).
// The truncation point is chosen from a decay-rate probe on doubling panels;
// throws DivergenceError when the tail panels fail to shrink.
QuadResult integrate_semiinf_decay(const RealFn& f, double a, double tol,
                                   long budget = 0);

// Integral over [a, infinity) of f with algebraic decay ~ x^(-p), p > 1.
// Integrates to a finite cutoff and models the tail by a three-term inverse
// power fit sampled at geometrically spaced points.
QuadResult integrate_semiinf_algebraic(const RealFn& f, double a, double tol,
                                       long budget = 0);

// Oscillatory integral of f(x)*kernel(x) over [a, infinity): partitions at
// consecutive kernel zeros, integrates each half-period panel with a fixed
// 15-point Gauss rule, and accelerates the alternating panel series
// (iterated Aitken, Euler-transform fallback).  Conditionally convergent
// integrals (e.g. x^(p-1) cos bx with 0 < p < 1) are summed in this
// acceleration sense.  The leading panel, which may contain an integrable
// endpoint singularity of f, is integrated adaptively instead.
QuadResult integrate_oscillatory_semiinf(const RealFn& f,
                                         OscillatoryKernel kernel, double a,
                                         double tol,
                                         long budget = 0);

enum class AccelMode { automatic, euler, aitken, richardson };

// Estimated limit of sum_{n>=1} term(n).  Mode `automatic` classifies the
// tail (geometric / same-sign algebraic / alternating / oscillatory) and
// dispatches to direct summation, a Richardson ladder on partial sums, or
// iterated Aitken.  Throws BudgetExceeded when no convergence signature
// emerges within max_terms.
Approximation accelerate_series(const std::function<double(long)>& term,
                                AccelMode mode, double tol,
                                long max_terms = 0);

namespace detail {

// Iterated Aitken delta-squared on a sequence of partial sums; returns the
// deepest stable extrapolant and an error estimate.  Works for complex
// sequences, which is the natural home for trigonometric series
// sum e^(i n theta) a_n: the single geometric signature e^(i theta) is
// removed by the first couple of levels.
struct AitkenResult {
  std::complex<double> value;
  double abs_err = 0.0;
};
AitkenResult iterated_aitken(const std::vector<std::complex<double>>& sums,
                             int max_depth = 10);

// Euler transform of the alternating series sum_{k>=0} (-1)^k b_k, b_k >= 0
// not required but the sign pattern must be strictly alternating.
Approximation euler_transform(const std::function<double(long)>& b,
                              double tol, long max_terms);

// Richardson extrapolation of partial sums S(N_j) at N_j = base*2^j towards
// j -> infinity assuming an error expansion in powers of 1/N.
Approximation richardson_series(const std::function<double(long)>& term,
                                double tol, long base_n, int depth);

}  // namespace detail

}  // namespace zetasum

#endif  // ZETASUM_QUADRATURE_HPP
