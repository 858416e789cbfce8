#ifndef ZETASUM_TESTS_ORACLES_HPP
#define ZETASUM_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's evaluation
// paths: plain adaptive Simpson, brute-force partial sums, and a pair
// averaging transform for alternating series.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Brute-force partial sum with compensated accumulation.
inline double kahan_sum(const std::function<double(long)>& term, long n_max) {
  double s = 0.0, c = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    double y = term(n) - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// Alternating series sum_{k>=0} (-1)^k b_k by repeated pairwise averaging of
// partial sums (a simple Euler-type transform).
inline double alternating_sum(const std::function<double(long)>& b,
                              int levels = 24, long n0 = 48) {
  std::vector<double> s(n0);
  double acc = 0.0, sign = 1.0;
  for (long k = 0; k < n0; ++k) {
    acc += sign * b(k);
    s[k] = acc;
    sign = -sign;
  }
  for (int l = 0; l < levels && s.size() > 1; ++l) {
    for (size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  return s.front();
}

// Richardson ladder on partial(N) - growth(N) at N, 2N, ..., poly model.
inline double limit_ladder(const std::function<double(long)>& partial,
                           const std::function<double(long)>& growth,
                           long base, int depth) {
  std::vector<double> r(depth + 1);
  for (int j = 0; j <= depth; ++j) {
    long n = base << j;
    r[j] = partial(n) - growth(n);
  }
  for (int k = 1; k <= depth; ++k) {
    double mult = std::pow(2.0, k);
    for (int j = depth; j >= k; --j) r[j] = (mult * r[j] - r[j - 1]) / (mult - 1.0);
  }
  return r[depth];
}

}  // namespace oracle

#endif  // ZETASUM_TESTS_ORACLES_HPP
