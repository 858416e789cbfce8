#ifndef ZETASUM_ENGINES_HPP
#define ZETASUM_ENGINES_HPP

#include <complex>
#include <functional>

#include "zetasum/approximation.hpp"
#include "zetasum/quadrature.hpp"

namespace zetasum {

// Executable forms of the classical summation formulas.  Each engine
// evaluates both sides independently and reports the residual, turning the
// formula into a testable numerical contract.

struct EngineReport {
  Approximation lhs;
  Approximation rhs;
  double residual = 0.0;  // |lhs.value - rhs.value| exactly as computed
  long n_modes = 0;       // outer Fourier modes evaluated explicitly
  bool converged = false;
};

// A function analytic in the closed right half-plane, supplied as a complex
// evaluator together with its real restriction.  Contract: evaluate(x + 0i)
// equals real_restriction(x) within 1e-14 for x >= 0, and the principal
// branch is used throughout for powers and logarithms (no branch crossing in
// the right half-plane).
struct ComplexCapableFn {
  std::function<std::complex<double>(std::complex<double>)> evaluate;
  std::function<double(double)> real_restriction;
};

// Half-line Poisson summation:
//   f(0)/2 + sum_{n>=1} f(n)
//     = int_0^inf f + 2 sum_{n>=1} int_0^inf f(x) cos(2 pi n x) dx.
// `modes` bounds the explicitly computed Fourier modes; the mode tail is
// extrapolated from the decay of the partial mode sums.
EngineReport poisson_semiinf(const RealFn& f, long modes, double tol);

// Finite-interval Poisson summation with half-weighted integer endpoints:
//   sum#_{a<=n<=b} f(n) = int_a^b f + 2 sum_{n>=1} int_a^b f cos(2 pi n x) dx.
EngineReport poisson_finite(const RealFn& f, double a, double b, long modes,
                            double tol);

// Alternating half-line Poisson summation:
//   f(0)/2 + sum_{n>=1} (-1)^n f(n)
//     = 2 sum_{n>=0} int_0^inf f(x) cos((2n+1) pi x) dx.
EngineReport poisson_alternating(const RealFn& f, long modes, double tol);

// Abel-Plana summation:
//   f(0)/2 + sum f(n) = int_0^inf f
//     + int_0^inf i[f(ix) - f(-ix)] / (e^{2 pi x} - 1) dx,
// the second integrand real by conjugate symmetry (checked; violation
// throws SymmetryViolation).
EngineReport abel_plana(const ComplexCapableFn& f, double tol);

// Alternating form: f(0)/2 + sum (-1)^n f(n)
//   = int_0^inf i[f(ix) - f(-ix)] / (2 sinh pi x) dx.
EngineReport abel_plana_alternating(const ComplexCapableFn& f, double tol);

// Half-integer form: sum_{n>=0} f(n + 1/2)
//   = int_0^inf f - int_0^inf i[f(ix) - f(-ix)] / (e^{2 pi x} + 1) dx.
EngineReport abel_plana_halfinteger(const ComplexCapableFn& f, double tol);

enum class LadderModel { poly, poly_log };

// Configuration of the Richardson ladder used by regularized_limit.
struct LimitLadder {
  long base_n = 64;
  int ratio = 2;  // only 2 is supported
  int depth = 4;  // 1..5
  LadderModel model = LadderModel::poly;
};

// Extrapolated limit of partial(N) - growth(N) as N -> infinity, assuming an
// asymptotic error expansion in powers of 1/N (poly) or log-weighted powers
// with log degree <= 1 per power (poly_log: each power of 1/N is eliminated
// twice).  Evaluates at N, 2N, ..., base*2^depth and applies the ladder.
// Throws ExtrapolationFailure when successive extrapolants grow.
Approximation regularized_limit(const std::function<double(long)>& partial,
                                const std::function<double(long)>& growth,
                                const LimitLadder& ladder);

}  // namespace zetasum

#endif  // ZETASUM_ENGINES_HPP
