#ifndef ZETASUM_APPROXIMATION_HPP
#define ZETASUM_APPROXIMATION_HPP

#include <stdexcept>
#include <string>

namespace zetasum {

// A computed real value bundled with an absolute-error estimate and a work
// counter (function evaluations or series terms consumed).
struct Approximation {
  double value = 0.0;
  double abs_err = 0.0;
  long work = 1;
};

// Fundamental constants used across the library.
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLogTwoPi = 1.83787706640934548356065947281123527;  // log(2*pi)

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole of the function (e.g. zeta(s, a) at s = 1).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation budget exhausted before reaching the requested tolerance.
// Carries the best estimate obtained so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Approximation best_so_far)
      : std::runtime_error(what), best(best_so_far) {}
  Approximation best;
};

// A sum or integral that was detected to diverge.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series acceleration could not lock onto a convergence signature.
class AccelerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Richardson ladder produced growing extrapolants.
class ExtrapolationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// i*[f(ix) - f(-ix)] failed to be real; usually a branch-cut mistake in the
// supplied complex evaluator.
class SymmetryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetasum

#endif  // ZETASUM_APPROXIMATION_HPP
