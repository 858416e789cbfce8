#include "zetasum/engines.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetasum {

namespace {

// Mode-sum driver shared by the Poisson engines.  Computes the Fourier-mode
// integrals I_n through `modes`, accumulating partial sums at geometric
// checkpoints, and extrapolates the mode tail: a Richardson ladder for
// smooth same-sign mode decay (the generic O(1/n^2) integration-by-parts
// regime) and iterated Aitken when the modes oscillate in sign.
struct ModeSum {
  double value = 0.0;
  double abs_err = 0.0;
  long modes_used = 0;
  long work = 0;
};

ModeSum sum_modes(const std::function<QuadResult(long)>& mode_integral,
                  long modes, double tol) {
  ModeSum out;
  modes = std::max<long>(modes, 16);
  std::vector<double> partial;
  partial.reserve(modes);
  double s = 0.0;
  double quad_err = 0.0;
  long n = 1;
  int tiny_run = 0;
  for (; n <= modes; ++n) {
    QuadResult in = mode_integral(n);
    out.work += in.evals;
    s += in.value;
    quad_err += in.abs_err;
    partial.push_back(s);
    if (std::abs(in.value) < tol * 1e-3) {
      if (++tiny_run >= 2) {
        ++n;
        break;
      }
    } else {
      tiny_run = 0;
    }
  }
  out.modes_used = static_cast<long>(partial.size());
  if (tiny_run >= 2 || out.modes_used < 8) {
    // Superexponentially decaying modes (or a handful): the last mode
    // magnitude bounds the tail.
    out.value = s;
    double last = out.modes_used ? std::abs(partial.back() -
                                            (out.modes_used > 1
                                                 ? partial[out.modes_used - 2]
                                                 : 0.0))
                                 : 0.0;
    out.abs_err = quad_err + last;
    return out;
  }
  // Sign pattern over the nonzero modes (kernels aligned with lattice
  // structure produce exactly-zero modes that would mask alternation).
  long m = out.modes_used;
  std::vector<double> nz_modes;
  std::vector<double> nz_partial;
  double scale = 0.0;
  for (long i = 0; i < m; ++i) {
    double v = partial[i] - (i ? partial[i - 1] : 0.0);
    scale = std::max(scale, std::abs(v));
  }
  for (long i = 0; i < m; ++i) {
    double v = partial[i] - (i ? partial[i - 1] : 0.0);
    if (std::abs(v) > 1e-14 * scale) {
      nz_modes.push_back(v);
      nz_partial.push_back(partial[i]);
    }
  }
  int sign_changes = 0;
  for (size_t i = nz_modes.size() / 2; i + 1 < nz_modes.size(); ++i) {
    if (nz_modes[i] * nz_modes[i + 1] < 0.0) ++sign_changes;
  }
  long mn = static_cast<long>(nz_modes.size());
  if (mn >= 8 && 2 * sign_changes > mn / 2) {
    std::vector<std::complex<double>> sums(nz_partial.begin(),
                                           nz_partial.end());
    auto acc = detail::iterated_aitken(sums);
    out.value = acc.value.real();
    out.abs_err = quad_err + acc.abs_err;
    return out;
  }
  // Same-sign smooth decay: Richardson ladder on geometric checkpoints.
  int depth = 1;
  while (depth < 5 && (6L << (depth + 1)) <= m) ++depth;
  long base = m >> depth;
  std::vector<double> r(depth + 1);
  for (int j = 0; j <= depth; ++j) r[j] = partial[(base << j) - 1];
  for (int k = 1; k <= depth; ++k) {
    double mult = std::pow(2.0, k);
    for (int j = depth; j >= k; --j) {
      r[j] = (mult * r[j] - r[j - 1]) / (mult - 1.0);
    }
  }
  out.value = r[depth];
  out.abs_err = quad_err + 4.0 * std::abs(r[depth] - r[depth - 1]) +
                1e-15 * std::abs(r[depth]);
  return out;
}

// i [f(ix) - f(-ix)] with the conjugate-symmetry check; the result must be
// real for functions real on the positive axis.
double imaginary_axis_difference(const ComplexCapableFn& f, double x) {
  std::complex<double> up = f.evaluate({0.0, x});
  std::complex<double> down = f.evaluate({0.0, -x});
  std::complex<double> g = std::complex<double>(0.0, 1.0) * (up - down);
  double scale = std::abs(up) + std::abs(down);
  if (std::abs(g.imag()) > 1e-10 * (std::abs(g.real()) + 1e-14 * scale)) {
    throw SymmetryViolation(
        "abel_plana: i[f(ix) - f(-ix)] is not real; check the complex "
        "evaluator's branch choices");
  }
  return g.real();
}

void check_real_restriction(const ComplexCapableFn& f) {
  for (double x : {0.0, 0.37, 1.0, 2.5}) {
    double re = f.real_restriction(x);
    std::complex<double> c = f.evaluate({x, 0.0});
    if (std::abs(c - std::complex<double>(re, 0.0)) >
        1e-14 * (1.0 + std::abs(re))) {
      throw DomainError(
          "ComplexCapableFn: evaluate(x+0i) disagrees with real_restriction");
    }
  }
}

Approximation lattice_sum(const RealFn& f, double tol) {
  auto term = [&f](long n) { return f(static_cast<double>(n)); };
  return accelerate_series(term, AccelMode::automatic, tol);
}

bool engine_converged(const Approximation& lhs, const Approximation& rhs,
                      double residual, double tol) {
  return residual <= lhs.abs_err + rhs.abs_err + tol;
}

}  // namespace

EngineReport poisson_semiinf(const RealFn& f, long modes, double tol) {
  EngineReport rep;
  Approximation series = lattice_sum(f, tol * 0.25);
  rep.lhs = {0.5 * f(0.0) + series.value, series.abs_err, series.work + 1};

  QuadResult base = integrate_semiinf_algebraic(f, 0.0, tol * 0.25);
  ModeSum ms = sum_modes(
      [&](long n) {
        return integrate_oscillatory_semiinf(
            f, {KernelKind::cosine, kTwoPi * n}, 0.0, tol * 0.02);
      },
      modes, tol);
  rep.rhs = {base.value + 2.0 * ms.value, base.abs_err + 2.0 * ms.abs_err,
             base.evals + ms.work};
  rep.n_modes = ms.modes_used;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

EngineReport poisson_finite(const RealFn& f, double a, double b, long modes,
                            double tol) {
  if (!(a < b)) throw DomainError("poisson_finite: requires a < b");
  EngineReport rep;
  // Half-weight lattice sum over integers of [a, b]; integer endpoints are
  // detected with tolerance 1e-12.
  const double kSnap = 1e-12;
  double sum = 0.0;
  long count = 0;
  long n0 = static_cast<long>(std::ceil(a - kSnap));
  long n1 = static_cast<long>(std::floor(b + kSnap));
  for (long n = n0; n <= n1; ++n) {
    double w = 1.0;
    if (std::abs(a - n) <= kSnap || std::abs(b - n) <= kSnap) w = 0.5;
    sum += w * f(static_cast<double>(n));
    ++count;
  }
  rep.lhs = {sum, 1e-15 * (std::abs(sum) + 1.0), std::max<long>(count, 1)};

  QuadResult base = integrate_finite(f, a, b, tol * 0.1);
  ModeSum ms = sum_modes(
      [&](long n) {
        auto g = [&f, n](double x) { return f(x) * std::cos(kTwoPi * n * x); };
        return integrate_finite(g, a, b, tol * 0.02);
      },
      modes, tol);
  rep.rhs = {base.value + 2.0 * ms.value, base.abs_err + 2.0 * ms.abs_err,
             base.evals + ms.work};
  rep.n_modes = ms.modes_used;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

EngineReport poisson_alternating(const RealFn& f, long modes, double tol) {
  EngineReport rep;
  auto term = [&f](long n) {
    double v = f(static_cast<double>(n));
    return (n % 2 == 0) ? v : -v;
  };
  Approximation series = accelerate_series(term, AccelMode::automatic, tol * 0.25);
  rep.lhs = {0.5 * f(0.0) + series.value, series.abs_err, series.work + 1};

  // RHS = 2 sum_{n>=0} int_0^inf f(x) cos((2n+1) pi x) dx; the mode driver
  // runs over n >= 1, so the q = 1 (n = 0) mode is added explicitly.
  QuadResult first = integrate_oscillatory_semiinf(
      f, {KernelKind::cosine, kPi}, 0.0, tol * 0.02);
  ModeSum ms = sum_modes(
      [&](long n) {
        double omega = (2.0 * n + 1.0) * kPi;
        return integrate_oscillatory_semiinf(f, {KernelKind::cosine, omega},
                                             0.0, tol * 0.02);
      },
      modes, tol);
  rep.rhs = {2.0 * (first.value + ms.value),
             2.0 * (first.abs_err + ms.abs_err), first.evals + ms.work};
  rep.n_modes = ms.modes_used + 1;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

EngineReport abel_plana(const ComplexCapableFn& f, double tol) {
  check_real_restriction(f);
  EngineReport rep;
  Approximation series = lattice_sum(f.real_restriction, tol * 0.25);
  rep.lhs = {0.5 * f.real_restriction(0.0) + series.value, series.abs_err,
             series.work + 1};

  QuadResult base =
      integrate_semiinf_algebraic(f.real_restriction, 0.0, tol * 0.25);
  auto discrepancy = [&f](double x) {
    return imaginary_axis_difference(f, x) / std::expm1(kTwoPi * x);
  };
  QuadResult disc = integrate_semiinf_decay(discrepancy, 0.0, tol * 0.25);
  rep.rhs = {base.value + disc.value, base.abs_err + disc.abs_err,
             base.evals + disc.evals};
  rep.n_modes = 0;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

EngineReport abel_plana_alternating(const ComplexCapableFn& f, double tol) {
  check_real_restriction(f);
  EngineReport rep;
  auto term = [&f](long n) {
    double v = f.real_restriction(static_cast<double>(n));
    return (n % 2 == 0) ? v : -v;
  };
  Approximation series = accelerate_series(term, AccelMode::automatic, tol * 0.25);
  rep.lhs = {0.5 * f.real_restriction(0.0) + series.value, series.abs_err,
             series.work + 1};

  auto discrepancy = [&f](double x) {
    return imaginary_axis_difference(f, x) / (2.0 * std::sinh(kPi * x));
  };
  QuadResult disc = integrate_semiinf_decay(discrepancy, 0.0, tol * 0.25);
  rep.rhs = {disc.value, disc.abs_err, disc.evals};
  rep.n_modes = 0;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

EngineReport abel_plana_halfinteger(const ComplexCapableFn& f, double tol) {
  check_real_restriction(f);
  EngineReport rep;
  auto term = [&f](long n) {
    return f.real_restriction(static_cast<double>(n) - 0.5);
  };
  Approximation series = accelerate_series(term, AccelMode::automatic, tol * 0.25);
  rep.lhs = {series.value, series.abs_err, series.work};

  QuadResult base =
      integrate_semiinf_algebraic(f.real_restriction, 0.0, tol * 0.25);
  auto discrepancy = [&f](double x) {
    return imaginary_axis_difference(f, x) / (std::exp(kTwoPi * x) + 1.0);
  };
  QuadResult disc = integrate_semiinf_decay(discrepancy, 0.0, tol * 0.25);
  rep.rhs = {base.value - disc.value, base.abs_err + disc.abs_err,
             base.evals + disc.evals};
  rep.n_modes = 0;
  rep.residual = std::abs(rep.lhs.value - rep.rhs.value);
  rep.converged = engine_converged(rep.lhs, rep.rhs, rep.residual, tol);
  return rep;
}

Approximation regularized_limit(const std::function<double(long)>& partial,
                                const std::function<double(long)>& growth,
                                const LimitLadder& ladder) {
  if (ladder.ratio != 2) throw DomainError("regularized_limit: ratio must be 2");
  int depth = std::clamp(ladder.depth, 1, 5);
  long base = std::max<long>(ladder.base_n, 8);

  std::vector<double> d(depth + 1);
  for (int j = 0; j <= depth; ++j) {
    long n = base << j;
    d[j] = partial(n) - growth(n);
  }
  double scale = std::abs(d[0]) + std::abs(d[depth]) + 1.0;
  // Monotonically growing successive differences mean the sequence has no
  // limit; shrinking or noise-level differences pass through to the ladder.
  if (depth >= 2) {
    bool growing = true;
    for (int j = 2; j <= depth; ++j) {
      double prev = std::abs(d[j - 1] - d[j - 2]);
      double cur = std::abs(d[j] - d[j - 1]);
      if (!(cur >= 1.5 * prev) || cur <= 1e-12 * scale) growing = false;
    }
    if (growing) {
      throw ExtrapolationFailure(
          "regularized_limit: partial(N) - growth(N) is diverging");
    }
  }

  // Multiplier schedule: poly eliminates 1/N, 1/N^2, ...; poly_log repeats
  // each power so that (c1 + c2 log N)/N^k families are removed too.
  std::vector<double> mult;
  if (ladder.model == LadderModel::poly) {
    for (int k = 1; k <= depth; ++k) mult.push_back(std::pow(2.0, k));
  } else {
    for (int k = 1; mult.size() < static_cast<size_t>(depth); ++k) {
      mult.push_back(std::pow(2.0, k));
      if (mult.size() < static_cast<size_t>(depth)) mult.push_back(std::pow(2.0, k));
    }
  }
  std::vector<double> r = d;
  for (int k = 1; k <= depth; ++k) {
    double m = mult[k - 1];
    for (int j = depth; j >= k; --j) {
      r[j] = (m * r[j] - r[j - 1]) / (m - 1.0);
    }
    if (!std::isfinite(r[depth]) || std::abs(r[depth]) > 100.0 * scale) {
      throw ExtrapolationFailure(
          "regularized_limit: ladder extrapolants are growing");
    }
  }
  double err = 4.0 * std::abs(r[depth] - r[depth - 1]) +
               1e-14 * std::abs(r[depth]) + 1e-16 * scale;
  return {r[depth], err, (base << depth) * 2};
}

}  // namespace zetasum
