#include "zetasum/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "zetasum/engines.hpp"

namespace zetasum {

namespace {

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials, exact rational recurrence up to n = 12.
// ---------------------------------------------------------------------------

struct Rational {
  long long num = 0;
  long long den = 1;

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rational operator+(const Rational& o) const {
    Rational r{num * o.den + o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Rational operator*(const Rational& o) const {
    Rational r{num * o.num, den * o.den};
    r.normalize();
    return r;
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

constexpr int kMaxBernoulliIndex = 12;

long long binomial_ll(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// B_0..B_12 from sum_{k=0}^{m} C(m+1,k) B_k = 0.
const std::array<Rational, kMaxBernoulliIndex + 1>& bernoulli_table() {
  static const auto table = [] {
    std::array<Rational, kMaxBernoulliIndex + 1> b{};
    b[0] = {1, 1};
    for (int m = 1; m <= kMaxBernoulliIndex; ++m) {
      Rational acc{0, 1};
      for (int k = 0; k < m; ++k) {
        acc = acc + Rational{binomial_ll(m + 1, k), 1} * b[k];
      }
      b[m] = acc * Rational{-1, m + 1};
      b[m].normalize();
    }
    // B12 = -691/2730 pins the whole recurrence.
    if (b[12].num != -691 || b[12].den != 2730) {
      throw std::logic_error("Bernoulli recurrence failed self-check");
    }
    return b;
  }();
  return table;
}

// B_n(x) coefficient table: coeff[n][k] multiplies x^k.
const std::vector<std::vector<double>>& bernoulli_poly_coeffs() {
  static const auto coeffs = [] {
    const auto& b = bernoulli_table();
    std::vector<std::vector<double>> c(kMaxBernoulliIndex + 1);
    for (int n = 0; n <= kMaxBernoulliIndex; ++n) {
      c[n].resize(n + 1);
      for (int k = 0; k <= n; ++k) {
        // B_n(x) = sum_k C(n,k) B_{n-k} x^k
        c[n][k] = static_cast<double>(binomial_ll(n, k)) * b[n - k].to_double();
      }
    }
    return c;
  }();
  return coeffs;
}

// ---------------------------------------------------------------------------
// Sine and cosine integrals.
//
// Power series below the switch point; above it Ci and si come jointly from
// the exponential integral on the imaginary axis,
//     E1(-ix) = -Ci(x) - i si(x),   x > 0,
// evaluated by the modified-Lentz continued fraction.  The continued
// fraction plays the role of the auxiliary functions f, g and converges to
// machine precision for |z| >= 4, where the power series still carries
// only a ~3 ulp cancellation penalty.
// ---------------------------------------------------------------------------

constexpr double kSiCiSwitch = 4.0;

struct SiCiPair {
  double si_shifted;  // si(x) = Si(x) - pi/2
  double ci;
  double err;
  long work;
};

SiCiPair sici_series(double x) {
  // Si: sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), Ci: gamma + log x + sum ...
  double x2 = x * x;
  double p = x;  // (-1)^k x^(2k+1)/(2k+1)!
  double si_sum = x;
  double q = 1.0;  // (-1)^k x^(2k)/(2k)!
  double ci_sum = 0.0;
  long k = 1;
  for (; k <= 60; ++k) {
    q *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    ci_sum += q / (2.0 * k);
    p *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    si_sum += p / (2.0 * k + 1.0);
    if (std::abs(p) < 1e-18 * std::abs(si_sum) + 1e-300 &&
        std::abs(q) < 1e-18) {
      break;
    }
  }
  double ci = (x > 0.0) ? kEulerGamma + std::log(x) + ci_sum
                        : -std::numeric_limits<double>::infinity();
  return {si_sum - kPi / 2.0, ci, 4e-16 * (1.0 + std::abs(ci)), 2 * k};
}

SiCiPair sici_continued_fraction(double x) {
  // Modified Lentz for E1(z), z = -i x.
  using C = std::complex<double>;
  const C z(0.0, -x);
  const double tiny = 1e-290;
  C b = z + 1.0;
  C c = 1.0 / tiny;
  C d = 1.0 / b;
  C h = d;
  long i = 1;
  for (; i <= 400; ++i) {
    double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    C del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  // E1(z) = e^{-z} h; e^{-z} = e^{ix} = cos x + i sin x.
  C e1 = C(std::cos(x), std::sin(x)) * h;
  return {-e1.imag(), -e1.real(), 4e-16 * std::abs(h) + 1e-18, 8 * i};
}

SiCiPair sici(double x) {
  return (x <= kSiCiSwitch) ? sici_series(x) : sici_continued_fraction(x);
}

// ---------------------------------------------------------------------------
// Digamma and polygamma: upward recurrence to a large argument plus the
// asymptotic series through the B12 term.
// ---------------------------------------------------------------------------

constexpr double kPsiAsymptoticCut = 10.0;

// B_{2k}/(2k) for k = 1..6.
constexpr std::array<double, 6> kPsiAsym = {
    1.0 / 12.0,  -1.0 / 120.0,     1.0 / 252.0,
    -1.0 / 240.0, 1.0 / 132.0,     -691.0 / 32760.0};

// B_{2k}/(2k (2k-1)) for k = 1..6 (Stirling series for log Gamma).
constexpr std::array<double, 6> kLogGammaAsym = {
    1.0 / 12.0,   -1.0 / 360.0,    1.0 / 1260.0,
    -1.0 / 1680.0, 1.0 / 1188.0,   -691.0 / 360360.0};

// psi(x) - log(x) for x >= kPsiAsymptoticCut, no cancellation.
double psi_minus_log_asym(double x) {
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double sum = -0.5 * inv;
  double power = inv2;
  for (double c : kPsiAsym) {
    sum -= c * power;
    power *= inv2;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Order-2 truncated Taylor arithmetic in the variable s, used to carry
// d/ds and d^2/ds^2 through the Euler-Maclaurin evaluation of zeta(s, a).
// ---------------------------------------------------------------------------

struct Jet2 {
  double f = 0.0, d1 = 0.0, d2 = 0.0;

  Jet2 operator+(const Jet2& o) const { return {f + o.f, d1 + o.d1, d2 + o.d2}; }
  Jet2 operator-(const Jet2& o) const { return {f - o.f, d1 - o.d1, d2 - o.d2}; }
  Jet2 operator*(const Jet2& o) const {
    return {f * o.f, d1 * o.f + f * o.d1, d2 * o.f + 2.0 * d1 * o.d1 + f * o.d2};
  }
  Jet2 operator*(double c) const { return {f * c, d1 * c, d2 * c}; }
};

Jet2 jet_const(double c) { return {c, 0.0, 0.0}; }
Jet2 jet_var(double s0) { return {s0, 1.0, 0.0}; }  // the variable s itself

Jet2 jet_inv(const Jet2& g) {
  double v = 1.0 / g.f;
  double d1 = -g.d1 * v * v;
  double d2 = (2.0 * g.d1 * g.d1 / g.f - g.d2) * v * v;
  return {v, d1, d2};
}

// c^e for constant base c > 0 and jet exponent e.
Jet2 jet_pow(double c, const Jet2& e) {
  double lc = std::log(c);
  double v = std::exp(e.f * lc);
  double g1 = e.d1 * lc;
  double g2 = e.d2 * lc;
  return {v, g1 * v, (g2 + g1 * g1) * v};
}

// B_{2k}/(2k)! for k = 1..7 (k = 7 only bounds the truncation error).
constexpr std::array<double, 7> kEmBernoulli = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0};  // B14/14!

constexpr int kEmBernTerms = 6;

// Euler-Maclaurin jet evaluation of zeta(s, a) and its first two
// s-derivatives: direct terms + pole term + half term + Bernoulli
// corrections, each differentiated in s by the jet arithmetic.
struct ZetaJetResult {
  Jet2 z;
  Jet2 trunc;    // first omitted correction, per derivative order
  Jet2 mag;      // per-component magnitude sums, for the rounding bound
  long work;
};

// First omitted Euler-Maclaurin correction B14/14! (s)_13 w^{-s-13} as a
// jet: its components bound the truncation error of the value and of each
// s-derivative (the value component vanishes at the non-positive integers
// where the series terminates, but the derivative components do not).
Jet2 omitted_correction(double s, double w) {
  Jet2 poch = jet_const(1.0);
  for (int i = 0; i < 2 * (kEmBernTerms + 1) - 1; ++i) {
    poch = poch * Jet2{s + i, 1.0, 0.0};
  }
  Jet2 expo{-s - (2.0 * kEmBernTerms + 1.0), -1.0, 0.0};
  return poch * jet_pow(w, expo) * kEmBernoulli[kEmBernTerms];
}

double jet_mag(const Jet2& t) {
  return std::abs(t.f) + std::abs(t.d1) + std::abs(t.d2);
}

// Direct-sum cutoff.  For s >= 1/2 the usual max(10, ceil(s) + 10); for
// negative s the pole term grows like w^{1+|s|} and its rounding competes
// with the Euler-Maclaurin truncation, so the cutoff is chosen to balance
// the two for the derivative order actually requested (at the negative
// integers the value truncation vanishes identically, so far smaller
// cutoffs are optimal for m = 0 than for the s-derivatives).
long choose_zeta_cutoff(double s, double a, int deriv_order) {
  if (s >= 0.5) {
    return std::max<long>(10, static_cast<long>(std::ceil(s)) + 10);
  }
  long best = 10;
  double best_err = std::numeric_limits<double>::infinity();
  for (long m = 3; m <= 16; ++m) {
    double w = m + a;
    double lw1 = 1.0 + std::log(w);
    double round_est =
        3e-16 * std::pow(w, 1.0 - s) / std::max(std::abs(s - 1.0), 0.5) *
        std::pow(lw1, deriv_order);
    Jet2 om = omitted_correction(s, w);
    double trunc_est = (deriv_order == 0)   ? std::abs(om.f)
                       : (deriv_order == 1) ? std::abs(om.f) + std::abs(om.d1)
                                            : jet_mag(om);
    double tot = round_est + trunc_est;
    if (tot < best_err) {
      best_err = tot;
      best = m;
    }
  }
  return best;
}

ZetaJetResult hurwitz_zeta_jets(double s, double a, int deriv_order) {
  const long m_cut = choose_zeta_cutoff(s, a, deriv_order);
  Jet2 s_jet = jet_var(s);
  Jet2 minus_s = s_jet * -1.0;

  Jet2 mag = jet_const(0.0);  // contribution scale per component
  auto count = [&mag](const Jet2& t) {
    mag.f += std::abs(t.f);
    mag.d1 += std::abs(t.d1);
    mag.d2 += std::abs(t.d2);
  };
  Jet2 direct = jet_const(0.0);
  for (long n = 0; n < m_cut; ++n) {
    Jet2 t = jet_pow(static_cast<double>(n) + a, minus_s);
    direct = direct + t;
    count(t);
  }

  const double w = static_cast<double>(m_cut) + a;
  // w^{1-s}/(s-1)
  Jet2 one_minus_s{1.0 - s, -1.0, 0.0};
  Jet2 pole = jet_pow(w, one_minus_s) * jet_inv(Jet2{s - 1.0, 1.0, 0.0});
  Jet2 half = jet_pow(w, minus_s) * 0.5;
  count(pole);
  count(half);

  Jet2 bern = jet_const(0.0);
  Jet2 poch = jet_const(1.0);  // (s)_{2k-1}
  int j = 0;                   // next factor (s + j)
  for (int k = 1; k <= kEmBernTerms; ++k) {
    for (; j < 2 * k - 1; ++j) poch = poch * Jet2{s + j, 1.0, 0.0};
    Jet2 expo{-s - (2.0 * k - 1.0), -1.0, 0.0};
    Jet2 t = poch * jet_pow(w, expo) * kEmBernoulli[k - 1];
    bern = bern + t;
    count(t);
  }

  return {direct + pole + half + bern, omitted_correction(s, w), mag,
          m_cut + kEmBernTerms};
}

double stieltjes_positive_order(int p, double a);

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw DomainError("bernoulli_number: index out of range 0..12");
  }
  return bernoulli_table()[n].to_double();
}

double bernoulli_poly(int n, double x) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw DomainError("bernoulli_poly: order out of range 0..12");
  }
  const auto& c = bernoulli_poly_coeffs()[n];
  double r = 0.0;
  for (int k = n; k >= 0; --k) r = r * x + c[k];
  return r;
}

Approximation sine_integral_Si(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("sine_integral_Si: requires finite x >= 0");
  }
  if (x == 0.0) return {0.0, 0.0, 1};
  SiCiPair r = sici(x);
  return {r.si_shifted + kPi / 2.0, r.err, r.work};
}

Approximation sine_integral_si(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("sine_integral_si: requires finite x > 0");
  }
  SiCiPair r = sici(x);
  return {r.si_shifted, r.err, r.work};
}

Approximation cosine_integral_Ci(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("cosine_integral_Ci: requires finite x > 0 "
                      "(logarithmic singularity at 0)");
  }
  SiCiPair r = sici(x);
  return {r.ci, r.err, r.work};
}

Approximation digamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("digamma: requires x > 0");
  }
  double shift = 0.0;
  long work = 1;
  while (x < kPsiAsymptoticCut) {
    shift -= 1.0 / x;
    x += 1.0;
    ++work;
  }
  double value = shift + std::log(x) + psi_minus_log_asym(x);
  return {value, 1e-15 * (std::abs(value) + 1.0), work + 7};
}

Approximation digamma_minus_log(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("digamma_minus_log: requires x > 0");
  }
  if (x >= kPsiAsymptoticCut) {
    double v = psi_minus_log_asym(x);
    return {v, 1e-16 * std::abs(v) + 1e-18, 8};
  }
  Approximation psi = digamma(x);
  double v = psi.value - std::log(x);
  return {v, 2e-16 * (std::abs(v) + std::abs(std::log(x)) + 1.0), psi.work + 1};
}

Approximation polygamma(int p, double x) {
  if (p < 1 || p > 4) throw DomainError("polygamma: order must be in 1..4");
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("polygamma: requires x > 0");

  double fact_p = 1.0;
  for (int i = 2; i <= p; ++i) fact_p *= i;
  const double sign = (p % 2 == 1) ? 1.0 : -1.0;  // (-1)^{p+1}

  // psi^{(p)}(x) = psi^{(p)}(x+1) - (-1)^p p! x^{-(p+1)}
  double shift = 0.0;
  long work = 1;
  while (x < 12.0) {
    shift += sign * fact_p * std::pow(x, -(p + 1.0));
    x += 1.0;
    ++work;
  }
  // Asymptotic series: psi^{(p)}(x) = (-1)^{p-1} [ (p-1)!/x^p + p!/(2x^{p+1})
  //   + sum_k B_{2k} (2k+p-1)! / ((2k)! x^{2k+p}) ].
  double fact_pm1 = fact_p / p;
  double sum = fact_pm1 * std::pow(x, -static_cast<double>(p)) +
               fact_p * 0.5 * std::pow(x, -(p + 1.0));
  for (int k = 1; k <= 6; ++k) {
    double b2k = bernoulli_number(2 * k);
    double fact_ratio = 1.0;  // (2k+p-1)!/(2k)!
    for (int i = 2 * k + 1; i <= 2 * k + p - 1; ++i) fact_ratio *= i;
    sum += b2k * fact_ratio * std::pow(x, -(2.0 * k + p));
  }
  double value = sign * sum + shift;
  return {value, 1e-14 * (std::abs(value) + 1.0), work + 8};
}

Approximation log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma: requires x > 0");
  }
  double shift = 0.0;
  long work = 1;
  while (x < kPsiAsymptoticCut) {
    shift -= std::log(x);
    x += 1.0;
    ++work;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kLogGammaAsym) {
    series += c * power;
    power *= inv2;
  }
  double value = shift + (x - 0.5) * std::log(x) - x + 0.5 * kLogTwoPi + series;
  return {value, 1e-15 * (std::abs(value) + std::abs(shift) + 1.0), work + 7};
}

Approximation log_barnes_g(double one_plus_x) {
  if (!std::isfinite(one_plus_x) || one_plus_x <= 0.0) {
    throw DomainError("log_barnes_g: argument must be positive");
  }
  const double x = one_plus_x - 1.0;
  if (x == 0.0 || x == 1.0) return {0.0, 0.0, 1};  // G(1) = G(2) = 1

  // log G(1+x) = x/2 log(2 pi) - x(1+x)/2 - gamma x^2/2
  //              + sum_{n>=1} [x^2/(2n) - x + n log(1 + x/n)].
  // Terms with n > 2|x| are evaluated by the series
  //   n sum_{j>=3} (-1)^{j+1} (x/n)^j / j = x^3/(3n^2) - x^4/(4n^3) + ...
  // to avoid the catastrophic cancellation of the direct form, and the tail
  // beyond N is summed exactly in terms of zeta(j+1, N+1).
  const long n_direct = std::max<long>(4, static_cast<long>(std::ceil(3.0 * std::abs(x))));
  const long n_cut = 2000;
  double sum = 0.0;
  long n = 1;
  for (; n <= n_direct; ++n) {
    sum += x * x / (2.0 * n) - x + n * std::log1p(x / n);
  }
  for (; n <= n_cut; ++n) {
    double u = x / n;
    double term = 0.0;
    double upow = u * u * u;  // u^j, starting j = 3
    for (int j = 3; j <= 40; ++j) {
      double add = ((j % 2) ? upow : -upow) / j;
      term += add;
      if (std::abs(add) < 1e-18 * (std::abs(term) + 1e-30)) break;
      upow *= u;
    }
    sum += n * term;
  }
  // Tail: sum_{n>N} n sum_j (-1)^{j+1} u^j / j
  //     = sum_j (-1)^{j+1} x^j / j * zeta(j-1, N+1)  (j >= 3).
  double tail = 0.0;
  double xj = x * x * x;
  for (int j = 3; j <= 14; ++j) {
    Approximation z = hurwitz_zeta_deriv(0, static_cast<double>(j - 1),
                                         static_cast<double>(n_cut + 1));
    double add = ((j % 2) ? xj : -xj) / j * z.value;
    tail += add;
    xj *= x;
    if (std::abs(add) < 1e-17) break;
  }
  double value = 0.5 * x * kLogTwoPi - 0.5 * x * (1.0 + x) -
                 0.5 * kEulerGamma * x * x + sum + tail;
  return {value, 1e-12 * (std::abs(value) + 1.0) + 5e-13, n_cut + 14};
}

Approximation hurwitz_zeta_deriv(int m, double s, double a) {
  if (m < 0 || m > 2) throw DomainError("hurwitz_zeta_deriv: m must be 0, 1 or 2");
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("hurwitz_zeta_deriv: requires a > 0");
  if (s == 1.0) throw PoleError("hurwitz_zeta_deriv: zeta(s, a) has a pole at s = 1");
  ZetaJetResult r = hurwitz_zeta_jets(s, a, m);
  double value = (m == 0) ? r.z.f : (m == 1) ? r.z.d1 : r.z.d2;
  double trunc = (m == 0) ? r.trunc.f : (m == 1) ? r.trunc.d1 : r.trunc.d2;
  // Rounding in the d1/d2 components couples down from the lower-order
  // component products; the value path only sees f-component arithmetic.
  double round_mag = r.mag.f;
  if (m >= 1) round_mag += r.mag.d1;
  if (m >= 2) round_mag += r.mag.d2;
  double err = 2.0 * std::abs(trunc) + 5e-16 * round_mag +
               2e-16 * std::abs(value);
  return {value, err, r.work};
}

Approximation alternating_hurwitz(double s, double a) {
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("alternating_hurwitz: requires a > 0");
  // zeta_a(s,a) = 2^{-s} [zeta(s, a/2) - zeta(s, (a+1)/2)]; the two pole
  // terms are paired into (A^u - B^u)/(-u), u = 1-s, which is regular at
  // s = 1, so the function is entire in s.
  const double a0 = 0.5 * a;
  const double b0 = 0.5 * (a + 1.0);
  const long m_cut = std::max<long>(10, static_cast<long>(std::ceil(std::abs(s))) + 10);

  double direct = 0.0;
  for (long n = 0; n < m_cut; ++n) {
    direct += std::pow(n + a0, -s) - std::pow(n + b0, -s);
  }
  const double A = m_cut + a0;
  const double B = m_cut + b0;
  const double u = 1.0 - s;
  const double L = std::log(B / A);
  // (A^{1-s} - B^{1-s})/(s-1) = A^u expm1(u L)/u, with the u -> 0 limit L.
  double pole = (u == 0.0) ? L : std::pow(A, u) * std::expm1(u * L) / u;
  double half = 0.5 * (std::pow(A, -s) - std::pow(B, -s));

  double bern = 0.0;
  double poch = 1.0;
  int j = 0;
  for (int k = 1; k <= kEmBernTerms; ++k) {
    for (; j < 2 * k - 1; ++j) poch *= (s + j);
    double e = -s - (2.0 * k - 1.0);
    bern += kEmBernoulli[k - 1] * poch * (std::pow(A, e) - std::pow(B, e));
  }
  double value = std::pow(2.0, -s) * (direct + pole + half + bern);
  double trunc = std::abs(kEmBernoulli[kEmBernTerms]) *
                 std::pow(A, -s - (2.0 * kEmBernTerms + 1)) * 2.0;
  for (int i = 0; i < 2 * (kEmBernTerms + 1) - 1; ++i) trunc *= std::abs(s + i) + 1.0;
  return {value, trunc + 1e-15 * (std::abs(value) + 1.0) * m_cut, m_cut + 6};
}

namespace {

// Derivatives of f(t) = log^p(a+t)/(a+t), represented as
// u^{-q} sum_m c_m log^m u with u = a+t.  Differentiation maps
// (q, c) -> (q+1, c') with c'_m = (m+1) c_{m+1} - q c_m.
struct LogPowerDeriv {
  int q;
  std::vector<double> c;

  static LogPowerDeriv base(int p) {
    LogPowerDeriv d{1, std::vector<double>(p + 1, 0.0)};
    d.c[p] = 1.0;
    return d;
  }
  LogPowerDeriv derivative() const {
    LogPowerDeriv d{q + 1, std::vector<double>(c.size(), 0.0)};
    for (size_t m = 0; m < c.size(); ++m) {
      double v = -static_cast<double>(q) * c[m];
      if (m + 1 < c.size()) v += (m + 1.0) * c[m + 1];
      d.c[m] = v;
    }
    return d;
  }
  double eval(double u) const {
    double lu = std::log(u);
    double poly = 0.0;
    for (size_t m = c.size(); m-- > 0;) poly = poly * lu + c[m];
    return poly * std::pow(u, -q);
  }
};

double stieltjes_positive_order(int p, double a) {
  // gamma_p(a) = lim_N [ sum_{n=0}^N log^p(a+n)/(a+n)
  //                      - log^{p+1}(a+N)/(p+1) ],
  // with the Euler-Maclaurin endpoint corrections at N folded into the
  // growth term so the Richardson ladder sees an already tiny residual.
  LogPowerDeriv f0 = LogPowerDeriv::base(p);
  std::vector<LogPowerDeriv> derivs;  // f', f'', ..., f^{(5)}
  {
    LogPowerDeriv d = f0;
    for (int j = 1; j <= 5; ++j) {
      d = d.derivative();
      derivs.push_back(d);
    }
  }
  auto partial = [a, &f0](long n_max) {
    double s = 0.0, c = 0.0;
    for (long n = 0; n <= n_max; ++n) {
      double y = f0.eval(a + n) - c;
      double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  };
  auto growth = [p, a, &f0, &derivs](long n_max) {
    double u = a + n_max;
    double g = std::pow(std::log(u), p + 1) / (p + 1.0) + 0.5 * f0.eval(u);
    // + B2/2! f'(N) + B4/4! f'''(N) + B6/6! f^{(5)}(N)
    g += kEmBernoulli[0] * derivs[0].eval(u);
    g += kEmBernoulli[1] * derivs[2].eval(u);
    g += kEmBernoulli[2] * derivs[4].eval(u);
    return g;
  };
  LimitLadder ladder;
  ladder.base_n = 256;
  ladder.depth = 3;
  ladder.model = LadderModel::poly;
  Approximation lim = regularized_limit(partial, growth, ladder);
  return lim.value;
}

}  // namespace

Approximation stieltjes_gamma(int p, double a) {
  if (p < 0 || p > 4) throw DomainError("stieltjes_gamma: order must be in 0..4");
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("stieltjes_gamma: requires a > 0");
  if (p == 0) {
    Approximation psi = digamma(a);
    return {-psi.value, psi.abs_err, psi.work};
  }
  double v = stieltjes_positive_order(p, a);
  return {v, 1e-10 * (std::abs(v) + 1.0), 256 * 8};
}

double catalan_constant() {
  static const double g = (polygamma(1, 0.25).value - kPi * kPi) / 8.0;
  return g;
}

}  // namespace zetasum
