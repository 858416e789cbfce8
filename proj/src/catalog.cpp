#include "zetasum/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <future>
#include <sstream>

#include "zetasum/engines.hpp"
#include "zetasum/quadrature.hpp"
#include "zetasum/special_functions.hpp"

namespace zetasum {

namespace {

using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;
using Fn = std::function<Approximation()>;

Approximation exact(double v) { return {v, 5e-16 * (std::abs(v) + 1.0), 1}; }

double dml(double x) { return digamma_minus_log(x).value; }

// Richardson ladder over series terms, up to 256 * 2^5 = 8192 terms.
Approximation ladder(const std::function<double(long)>& term) {
  return detail::richardson_series(term, 0.0, 256, 5);
}

// Richardson ladder over Fourier-mode integrals.
Approximation mode_ladder(const std::function<double(long)>& mode, long base,
                          int depth) {
  return detail::richardson_series(mode, 0.0, base, depth);
}

// n log(1+1/n) - 1 without cancellation.
double n_log1p_minus_one(long n) {
  if (n < 4) return n * std::log1p(1.0 / n) - 1.0;
  double u = 1.0 / n;
  double sum = 0.0, upow = u, sign = -1.0;
  for (int j = 2; j < 40; ++j) {
    double add = sign * upow / j;
    sum += add;
    if (std::abs(add) < 1e-18) break;
    upow *= u;
    sign = -sign;
  }
  return sum;
}

// sum_{n>=1} e^{i n theta} n^{-p}, iterated-Aitken accelerated.
detail::AitkenResult exp_series(double theta, double p, long terms) {
  std::vector<std::complex<double>> sums;
  sums.reserve(terms);
  std::complex<double> s = 0.0;
  for (long n = 1; n <= terms; ++n) {
    s += std::polar(pow(static_cast<double>(n), -p), theta * n);
    sums.push_back(s);
  }
  return detail::iterated_aitken(sums);
}

// sum_{n>=0} e^{i (2n+1) theta} (2n+1)^{-p}.
detail::AitkenResult exp_series_odd(double theta, double p, long terms) {
  std::vector<std::complex<double>> sums;
  sums.reserve(terms);
  std::complex<double> s = 0.0;
  for (long k = 0; k < terms; ++k) {
    double q = 2.0 * k + 1.0;
    s += std::polar(pow(q, -p), theta * q);
    sums.push_back(s);
  }
  return detail::iterated_aitken(sums);
}

double zeta_s(double s) { return hurwitz_zeta_deriv(0, s, 1.0).value; }
double gamma_fn(double x) { return exp(log_gamma(x).value); }

IdentityCheck point(std::string label, Fn lhs, Fn rhs) {
  return {std::move(label), std::move(lhs), std::move(rhs)};
}

// --- recipe bodies shared by several checks -------------------------------

// RHS of the digamma cosine-integral series:
// log a - 1/(2a) + 2 sum [cos(2n pi a) Ci(2n pi a) + sin(2n pi a) si(2n pi a)]
Approximation digamma_ci_series(double a) {
  auto term = [a](long n) {
    double th = kTwoPi * n * a;
    return cos(th) * cosine_integral_Ci(th).value +
           sin(th) * sine_integral_si(th).value;
  };
  Approximation s = ladder(term);
  return {log(a) - 0.5 / a + 2.0 * s.value, 2.0 * s.abs_err + 1e-10, s.work};
}

// RHS of the Kummer-type log-gamma series.
Approximation log_gamma_series(double a) {
  auto term = [a](long n) {
    double th = kTwoPi * n * a;
    return (sin(th) * cosine_integral_Ci(th).value -
            cos(th) * sine_integral_si(th).value) / n;
  };
  Approximation s = ladder(term);
  double v = 0.5 * kLogTwoPi + (a - 0.5) * log(a) - a + s.value / kPi;
  return {v, s.abs_err + 1e-10, s.work};
}

// Integrand psi(1+u) - log u, written without cancellation.
double psi_minus_log_u(double u) { return dml(1.0 + u) + std::log1p(1.0 / u); }

// int_0^inf [psi(1+u) - log u] cos(2 pi t u) du  (oscillatory quadrature).
Approximation ramanujan_integral(double t) {
  QuadResult q = integrate_oscillatory_semiinf(
      psi_minus_log_u, {KernelKind::cosine, kTwoPi * t}, 0.0, 1e-9);
  return {q.value, q.abs_err, q.evals};
}

// Hurwitz-formula right-hand side
// 2 Gamma(1-s) (2pi)^{s-1} [sin(pi s/2) Re T + cos(pi s/2) Im T],
// T = sum e^{2 pi i n a} n^{s-1}.
Approximation hurwitz_formula_rhs(double s, double a) {
  auto t = exp_series(kTwoPi * a, 1.0 - s, 420);
  double pref = 2.0 * gamma_fn(1.0 - s) * pow(kTwoPi, s - 1.0);
  double v = pref * (sin(kPi * s / 2.0) * t.value.real() +
                     cos(kPi * s / 2.0) * t.value.imag());
  return {v, std::abs(pref) * t.abs_err + 1e-12, 420};
}

Approximation boudjelkha_rhs(double s, double a) {
  auto t = exp_series_odd(kPi * a, 1.0 - s, 420);
  double pref = 2.0 * gamma_fn(1.0 - s) * pow(kPi, s - 1.0);
  double v = pref * (sin(kPi * s / 2.0) * t.value.real() +
                     cos(kPi * s / 2.0) * t.value.imag());
  return {v, std::abs(pref) * t.abs_err + 1e-12, 420};
}

// gamma_1(a) from its cosine-integral representation:
// log a/(2a) - log^2 a/2 + 2 sum_n int_0^inf log(a+x)/(a+x) cos(2pi n x) dx.
Approximation stieltjes1_integral_formula(double a) {
  auto mode = [a](long n) {
    auto f = [a](double x) { return log(a + x) / (a + x); };
    return integrate_oscillatory_semiinf(f, {KernelKind::cosine, kTwoPi * n},
                                         0.0, 1e-10)
        .value;
  };
  Approximation m = mode_ladder(mode, 16, 5);
  double la = log(a);
  return {0.5 * la / a - 0.5 * la * la + 2.0 * m.value,
          2.0 * m.abs_err + 1e-9, m.work};
}

// Cosine-series representation of zeta(s,a):
// a^{-s}/2 + a^{1-s}/(s-1) + 2 sum_n int_0^inf cos(2pi n x) (a+x)^{-s} dx.
Approximation zeta_cosine_representation(double s, double a) {
  auto mode = [s, a](long n) {
    auto f = [s, a](double x) { return pow(a + x, -s); };
    return integrate_oscillatory_semiinf(f, {KernelKind::cosine, kTwoPi * n},
                                         0.0, 1e-10)
        .value;
  };
  Approximation m = mode_ladder(mode, 16, 5);
  double v = 0.5 * pow(a, -s) + pow(a, 1.0 - s) / (s - 1.0) + 2.0 * m.value;
  return {v, 2.0 * m.abs_err + 1e-9, m.work};
}

// Compensated sum of (k-1) log k for k <= n.
double sum_k_minus1_log_k(long n) {
  double s = 0.0, c = 0.0;
  for (long k = 2; k <= n; ++k) {
    double term = (k - 1.0) * log(static_cast<double>(k));
    double y = term - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// --- registry --------------------------------------------------------------

void add(std::vector<IdentityRecord>& reg, IdentityRecord rec) {
  reg.push_back(std::move(rec));
}

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> reg;

  {
    IdentityRecord r;
    r.id = "I-3.1.7";
    r.description =
        "psi(a) = log a - 1/(2a) + 2 sum_n [cos(2n pi a) Ci(2n pi a) + "
        "sin(2n pi a) si(2n pi a)]";
    r.tol = 1e-7;
    r.citation = "Noerlund, Vorlesungen ueber Differenzenrechnung, p.108";
    for (double a : {0.25, 1.0 / 3.0, 1.0, 2.0}) {
      r.checks.push_back(point(
          "a=" + fmt(a), [a] { return digamma(a); },
          [a] { return digamma_ci_series(a); }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.1.8";
    r.description = "sum_n Ci(2 n pi) = (1/2 - gamma)/2";
    r.tol = 1e-8;
    r.citation = "corrects Nielsen, Die Gammafunktion, p.80";
    r.checks.push_back(point(
        "sum",
        [] { return ladder([](long n) { return cosine_integral_Ci(kTwoPi * n).value; }); },
        [] { return exact(0.5 * (0.5 - kEulerGamma)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.2.2";
    r.description =
        "log Gamma(a) = log(2pi)/2 + (a-1/2) log a - a + (1/pi) sum_n "
        "[sin(2n pi a) Ci(2n pi a) - cos(2n pi a) si(2n pi a)]/n";
    r.tol = 1e-7;
    r.citation = "Kummer-type Fourier series for log Gamma";
    for (double a : {0.25, 0.75, 1.5}) {
      r.checks.push_back(point(
          "a=" + fmt(a), [a] { return log_gamma(a); },
          [a] { return log_gamma_series(a); }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.2.3";
    r.description = "sum_n si(2 n pi)/(n pi) = log(2pi)/2 - 1";
    r.tol = 1e-8;
    r.citation = "Nielsen, Die Gammafunktion, p.79";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long n) {
            return sine_integral_si(kTwoPi * n).value / (n * kPi);
          });
        },
        [] { return exact(0.5 * kLogTwoPi - 1.0); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.2.4";
    // Sign fixed against the brute-force oracle: every term of the series is
    // negative (si(n pi) = -f(n pi) cos(n pi)), and the a = 1/2 case of the
    // log-gamma series gives (log 2 - 1)/2.
    r.description = "sum_n (-1)^n si(n pi)/(n pi) = (log 2 - 1)/2";
    r.tol = 1e-8;
    r.citation = "half-argument case of the log-gamma series";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long n) {
            double v = sine_integral_si(n * kPi).value / (n * kPi);
            return (n % 2 == 0) ? v : -v;
          });
        },
        [] { return exact(0.5 * (std::log(2.0) - 1.0)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.3.1";
    r.description =
        "sum_n Ci(2 n pi)/n^2 = zeta(2)(gamma + log 2pi) - zeta'(2) - pi^2/2";
    r.tol = 1e-7;
    r.citation = "Fourier coefficients of x log x";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long n) {
            return cosine_integral_Ci(kTwoPi * n).value / (static_cast<double>(n) * n);
          });
        },
        [] {
          double z2 = kPi * kPi / 6.0;
          double zp2 = hurwitz_zeta_deriv(1, 2.0, 1.0).value;
          return exact(z2 * (kEulerGamma + kLogTwoPi) - zp2 - 0.5 * kPi * kPi);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.2";
    r.description =
        "int_0^inf [psi(1+u) - log u] cos(2 pi t u) du = [psi(1+t) - log t]/2";
    r.tol = 1e-7;
    r.citation = "Ramanujan; Guinand (1947); Gradshteyn-Ryzhik 6.471.3";
    for (double t : {1.0, 2.0, 0.6}) {
      r.checks.push_back(point(
          "t=" + fmt(t), [t] { return ramanujan_integral(t); },
          [t] {
            return exact(0.5 * (digamma(1.0 + t).value - log(t)));
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.3";
    r.description =
        "int_0^inf [psi(1+u) - log(1+u) + 1/(2(1+u))] du = log(2pi)/2 - 1";
    r.tol = 1e-8;
    r.citation = "integrated Binet formula";
    r.checks.push_back(point(
        "int",
        [] {
          auto f = [](double u) { return dml(1.0 + u) + 0.5 / (1.0 + u); };
          QuadResult q = integrate_semiinf_algebraic(f, 0.0, 1e-10);
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] { return exact(0.5 * kLogTwoPi - 1.0); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.7";
    r.description =
        "int_0^inf [psi(t+u) - log(t+u) + 1/(2(t+u))] du = (t-1/2) log t - t "
        "+ log(2pi)/2 - log Gamma(t)";
    r.tol = 1e-8;
    r.citation = "integrated Binet formula, general argument";
    for (double t : {0.5, 2.0}) {
      r.checks.push_back(point(
          "t=" + fmt(t),
          [t] {
            auto f = [t](double u) { return dml(t + u) + 0.5 / (t + u); };
            QuadResult q = integrate_semiinf_algebraic(f, 0.0, 1e-10);
            return Approximation{q.value, q.abs_err, q.evals};
          },
          [t] {
            return exact((t - 0.5) * log(t) - t + 0.5 * kLogTwoPi -
                         log_gamma(t).value);
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.9";
    r.description =
        "int_0^inf [psi(1+u) - log u - 1/(2(1+u))] du = log(2pi)/2";
    r.tol = 1e-8;
    r.citation = "Berndt & Dixit, Ramanujan's Lost Notebook transformation";
    r.checks.push_back(point(
        "int",
        [] {
          auto f = [](double u) {
            return psi_minus_log_u(u) - 0.5 / (1.0 + u);
          };
          QuadResult head =
              integrate_finite(f, 0.0, 1.0, 1e-11, {.left_singular = true});
          QuadResult tail = integrate_semiinf_algebraic(f, 1.0, 1e-10);
          return Approximation{head.value + tail.value,
                               head.abs_err + tail.abs_err,
                               head.evals + tail.evals};
        },
        [] { return exact(0.5 * kLogTwoPi); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.15";
    r.description =
        "sum_n [psi(n) - log n + 1/(2n)] = (1 + gamma - log 2pi)/2";
    r.tol = 1e-8;
    r.citation = "Merkle & Merkle double-gamma series";
    r.checks.push_back(point(
        "sum",
        [] { return ladder([](long n) { return dml(n) + 0.5 / n; }); },
        [] { return exact(0.5 * (1.0 + kEulerGamma - kLogTwoPi)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.16";
    r.description =
        "sum_{n>=0} [psi(1+n) + log 2 - log(2n+1)] = (1 - log 2)/2";
    r.tol = 1e-8;
    r.citation = "half-argument case of the Merkle series";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long k) {
            return dml(static_cast<double>(k)) + std::log1p(0.5 / (k - 0.5));
          });
        },
        [] { return exact(0.5 * (1.0 - std::log(2.0))); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.23";
    r.description = "sum_n [psi'(n) - 1/n] = 1";
    r.tol = 1e-9;
    r.citation = "Merkle & Merkle; cf. Barnes (1899)";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long n) { return polygamma(1, n).value - 1.0 / n; });
        },
        [] { return exact(1.0); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.24";
    r.description =
        "sum_n [psi(n) - log n + psi'(n)/2] = 1 + gamma/2 - log(2pi)/2";
    r.tol = 1e-8;
    r.citation = "Srivastava & Choi, p.29";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder(
              [](long n) { return dml(n) + 0.5 * polygamma(1, n).value; });
        },
        [] {
          return exact(1.0 + 0.5 * kEulerGamma - 0.5 * kLogTwoPi);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.25";
    r.description = "sum_n psi''(x+n) = -x psi''(x) - 2 psi'(x)";
    r.tol = 1e-8;
    r.citation = "Merkle & Merkle";
    for (double x : {0.5, 1.0, 2.0}) {
      r.checks.push_back(point(
          "x=" + fmt(x),
          [x] {
            return ladder([x](long n) { return polygamma(2, x + n).value; });
          },
          [x] {
            return exact(-x * polygamma(2, x).value -
                         2.0 * polygamma(1, x).value);
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.31";
    r.description = "sum_n [log n + n log(1+1/n) - psi(n) - 1] = 1/2";
    r.tol = 1e-8;
    r.citation = "Barnes-G product expansion at x = 1";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder(
              [](long n) { return n_log1p_minus_one(n) - dml(n); });
        },
        [] { return exact(0.5); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.32";
    r.description =
        "sum_n [log(1+1/n)^n + 1/(2n) - 1] = 1 + gamma/2 - log(2pi)/2";
    r.tol = 1e-8;
    r.citation = "combination of the Barnes-G and Merkle series";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder(
              [](long n) { return n_log1p_minus_one(n) + 0.5 / n; });
        },
        [] {
          return exact(1.0 + 0.5 * kEulerGamma - 0.5 * kLogTwoPi);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.33";
    r.description =
        "sum_n [psi(n+1/2) - log n] = gamma/2 + log(2/pi)/2";
    r.tol = 1e-8;
    r.citation = "digamma at half-integers";
    r.checks.push_back(point(
        "sum",
        [] {
          return ladder([](long n) {
            return dml(n + 0.5) + std::log1p(0.5 / n);
          });
        },
        [] {
          return exact(0.5 * kEulerGamma + 0.5 * std::log(2.0 / kPi));
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.35";
    r.description =
        "Guinand transform, z = 2: sum_n [psi(1+2n) - log 2n - 1/(4n)] + "
        "(gamma - log 4pi)/4 = sum_n [psi(1+n/2) - log(n/2) - 1/n]/2 + "
        "(gamma - log pi)/2";
    r.tol = 1e-6;
    r.citation = "Guinand, Proc. Edinburgh Math. Soc. 12 (1960)";
    r.checks.push_back(point(
        "z=2",
        [] {
          Approximation s =
              ladder([](long n) { return dml(2.0 * n) + 0.25 / n; });
          double v = s.value + 0.25 * (kEulerGamma - std::log(4.0 * kPi));
          return Approximation{v, s.abs_err, s.work};
        },
        [] {
          Approximation s =
              ladder([](long n) { return dml(0.5 * n) + 1.0 / n; });
          double v = 0.5 * s.value + 0.5 * (kEulerGamma - std::log(kPi));
          return Approximation{v, s.abs_err, s.work};
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.4.36";
    r.description =
        "log G(1+x) = x log(2pi)/2 - x(1+x)/2 + x log Gamma(1+x) - "
        "int_0^x log Gamma(1+t) dt";
    r.tol = 1e-9;
    r.citation = "Alexeiewsky's theorem; Srivastava & Choi, p.32";
    for (double x : {0.5, 1.5}) {
      r.checks.push_back(point(
          "x=" + fmt(x), [x] { return log_barnes_g(1.0 + x); },
          [x] {
            QuadResult q = integrate_finite(
                [](double t) { return log_gamma(1.0 + t).value; }, 0.0, x,
                1e-12);
            double v = 0.5 * x * kLogTwoPi - 0.5 * x * (1.0 + x) +
                       x * log_gamma(1.0 + x).value - q.value;
            return Approximation{v, q.abs_err + 1e-13, q.evals};
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.6.9";
    r.description =
        "2 sum_n a/(a^2 + 4 pi^2 n^2) = 1/(e^a - 1) - 1/a + 1/2";
    r.tol = 1e-10;
    r.citation = "partial fractions for coth; Bromwich, p.296";
    for (double a : {0.5, 1.0, 3.0}) {
      r.checks.push_back(point(
          "a=" + fmt(a),
          [a] {
            const long n_cut = 10000;
            double s = 0.0;
            for (long n = n_cut; n >= 1; --n) {
              double w = kTwoPi * n;
              s += a / (a * a + w * w);
            }
            // analytic tail: (a / 4 pi^2) sum_{n>N} n^-2 up to O(N^-3)
            double tail =
                a / (4.0 * kPi * kPi) * polygamma(1, n_cut + 1.0).value;
            return Approximation{2.0 * (s + tail), 1e-12, n_cut};
          },
          [a] {
            return exact(1.0 / std::expm1(a) - 1.0 / a + 0.5);
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.6.10";
    r.description =
        "2 int_0^inf sin(ax)/(e^{2 pi x} - 1) dx = coth(a/2)/2 - 1/a";
    r.tol = 1e-10;
    r.citation = "Legendre's relation for the Binet integrand";
    for (double a : {0.5, 1.0, 4.0}) {
      r.checks.push_back(point(
          "a=" + fmt(a),
          [a] {
            auto f = [a](double x) {
              return std::sin(a * x) / std::expm1(kTwoPi * x);
            };
            QuadResult q = integrate_semiinf_decay(f, 0.0, 1e-12);
            return Approximation{2.0 * q.value, 2.0 * q.abs_err, q.evals};
          },
          [a] {
            return exact(0.5 / std::tanh(0.5 * a) - 1.0 / a);
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.6.15";
    r.description =
        "int_0^inf x log(1+x^2)/(e^{2 pi x} - 1) dx = zeta'(-1) - 3/4 + "
        "log(2pi)/2";
    r.tol = 1e-7;
    r.citation = "Adamchik, Comput. Phys. Comm. 157 (2004)";
    r.checks.push_back(point(
        "int",
        [] {
          auto f = [](double x) {
            return x * std::log1p(x * x) / std::expm1(kTwoPi * x);
          };
          QuadResult q = integrate_semiinf_decay(f, 0.0, 1e-11);
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          return exact(hurwitz_zeta_deriv(1, -1.0, 1.0).value - 0.75 +
                       0.5 * kLogTwoPi);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.1";
    r.description =
        "zeta(s,a) = a^{-s}/2 + a^{1-s}/(s-1) + 2 sum_n int_0^inf "
        "cos(2 pi n x)(a+x)^{-s} dx";
    r.tol = 1e-7;
    r.citation = "Mordell (1928), corrected cosine representation";
    {
      const std::pair<double, double> pts[] = {{2.0, 0.7}, {3.0, 1.3}, {-0.5, 1.0}};
      for (auto [s, a] : pts) {
        r.checks.push_back(point(
            "s=" + fmt(s) + ",a=" + fmt(a),
            [s, a] { return hurwitz_zeta_deriv(0, s, a); },
            [s, a] { return zeta_cosine_representation(s, a); }));
      }
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.8";
    r.description =
        "Hurwitz's formula: zeta(s,a) = 2 Gamma(1-s) (2pi)^{s-1} "
        "[sin(pi s/2) sum cos(2 pi n a) n^{s-1} + cos(pi s/2) sum "
        "sin(2 pi n a) n^{s-1}]";
    r.tol = 1e-8;
    r.citation = "Hurwitz; Boudjelkha extension to Re s < 1";
    {
      const std::pair<double, double> pts[] = {
          {-0.5, 1.0 / 3.0}, {-1.5, 0.25}, {0.5, 0.7}};
      for (auto [s, a] : pts) {
        r.checks.push_back(point(
            "s=" + fmt(s) + ",a=" + fmt(a),
            [s, a] { return hurwitz_zeta_deriv(0, s, a); },
            [s, a] { return hurwitz_formula_rhs(s, a); }));
      }
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.9";
    r.description =
        "functional equation: zeta(1-s) = 2 (2pi)^{-s} Gamma(s) "
        "cos(pi s/2) zeta(s)";
    r.tol = 1e-10;
    r.citation = "Riemann functional equation";
    for (double s : {2.0, 3.0, 0.5}) {
      r.checks.push_back(point(
          "s=" + fmt(s),
          [s] { return hurwitz_zeta_deriv(0, 1.0 - s, 1.0); },
          [s] {
            double v = 2.0 * pow(kTwoPi, -s) * gamma_fn(s) *
                       cos(kPi * s / 2.0) * zeta_s(s);
            return exact(v);
          }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.10";
    r.description =
        "Boudjelkha's formula for the alternating Hurwitz zeta at "
        "(s,a) = (-1/2, 1/3)";
    r.tol = 1e-7;
    r.citation = "Boudjelkha, Appl. Math. Lett. 14 (2001)";
    r.checks.push_back(point(
        "s=-0.5,a=1/3",
        [] { return alternating_hurwitz(-0.5, 1.0 / 3.0); },
        [] { return boudjelkha_rhs(-0.5, 1.0 / 3.0); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.14";
    r.description =
        "sum_n [Mellin cosine value of int_0^inf cos(2 pi n x) x^{-s} dx] "
        "= zeta(s)/2; inner integral spot-checked by oscillatory quadrature";
    r.tol = 1e-8;
    r.citation = "Titchmarsh, The Theory of Functions, ch. II";
    for (double s : {-0.5, -0.25}) {
      r.checks.push_back(point(
          "s=" + fmt(s),
          [s] {
            double c = gamma_fn(1.0 - s) * cos(kPi * (1.0 - s) / 2.0) *
                       pow(kTwoPi, s - 1.0);
            return exact(c * zeta_s(1.0 - s));
          },
          [s] { return exact(0.5 * zeta_s(s)); }));
    }
    r.checks.push_back(point(
        "s=-0.5,n=1 integral",
        [] {
          auto f = [](double x) { return std::sqrt(x); };
          QuadResult q = integrate_oscillatory_semiinf(
              f, {KernelKind::cosine, kTwoPi}, 0.0, 1e-9);
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          double c = gamma_fn(1.5) * cos(kPi * 0.75) / pow(kTwoPi, 1.5);
          return exact(c);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.7.17";
    r.description =
        "gamma_1(a) = log a/(2a) - log^2 a/2 + 2 sum_n int_0^inf "
        "log(a+x)/(a+x) cos(2 pi n x) dx";
    r.tol = 1e-6;
    r.citation = "Zhang & Williams (1994), Eq. (6.1)";
    for (double a : {1.0, 0.5}) {
      r.checks.push_back(point(
          "a=" + fmt(a),
          [a] { return stieltjes1_integral_formula(a); },
          [a] { return stieltjes_gamma(1, a); }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4.10-n1";
    r.description =
        "int_0^1 B_3(x) cot(pi x) dx = 2*3! zeta(3)/(2 pi)^3";
    r.tol = 1e-8;
    r.citation = "Abramowitz & Stegun, p.807";
    r.checks.push_back(point(
        "n=1",
        [] {
          auto f = [](double x) {
            return bernoulli_poly(3, x) / std::tan(kPi * x);
          };
          QuadResult q = integrate_finite(
              f, 0.0, 1.0, 1e-11,
              {.left_singular = true, .right_singular = true});
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] { return exact(12.0 * zeta_s(3.0) / pow(kTwoPi, 3.0)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4.10-n2";
    r.description =
        "int_0^1 B_5(x) cot(pi x) dx = -2*5! zeta(5)/(2 pi)^5";
    r.tol = 1e-8;
    r.citation = "Abramowitz & Stegun, p.807";
    r.checks.push_back(point(
        "n=2",
        [] {
          auto f = [](double x) {
            return bernoulli_poly(5, x) / std::tan(kPi * x);
          };
          QuadResult q = integrate_finite(
              f, 0.0, 1.0, 1e-11,
              {.left_singular = true, .right_singular = true});
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] { return exact(-240.0 * zeta_s(5.0) / pow(kTwoPi, 5.0)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4.12-n1";
    // Power corrected against the quadrature oracle and the cot-integral
    // chain: the value is zeta(3)/(4 pi^2).
    r.description = "int_0^1 B_2(x) log Gamma(x) dx = zeta(3)/(4 pi^2)";
    r.tol = 1e-8;
    r.citation = "Espinosa & Moll, Ramanujan J. 6 (2002)";
    r.checks.push_back(point(
        "n=1",
        [] {
          auto f = [](double x) {
            return bernoulli_poly(2, x) * log_gamma(x).value;
          };
          QuadResult q = integrate_finite(f, 0.0, 1.0, 1e-11,
                                          {.left_singular = true});
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          return exact(2.0 * zeta_s(3.0) / (2.0 * pow(kTwoPi, 2.0)));
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4-cot-pi6";
    r.description =
        "int_0^{pi/6} x^2 cot x dx = -zeta(3)/3 + (pi^2/36) log(2 sin(pi/6)) "
        "+ (sqrt3 pi/6)[-(4/9) zeta(2) + (zeta(2,1/6) + zeta(2,1/3))/36]";
    r.tol = 1e-8;
    r.citation = "closed form via Hurwitz zeta at rational arguments";
    r.checks.push_back(point(
        "pi/6",
        [] {
          auto f = [](double x) { return x * x / std::tan(x); };
          QuadResult q = integrate_finite(f, 0.0, kPi / 6.0, 1e-12);
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          double z2 = kPi * kPi / 6.0;
          double v = -zeta_s(3.0) / 3.0 +
                     z2 / 6.0 * log(2.0 * sin(kPi / 6.0)) +
                     sqrt(3.0) * kPi / 6.0 *
                         (-(4.0 / 9.0) * z2 +
                          (hurwitz_zeta_deriv(0, 2.0, 1.0 / 6.0).value +
                           hurwitz_zeta_deriv(0, 2.0, 1.0 / 3.0).value) /
                              36.0);
          return exact(v);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4-cot-pi8";
    // The Catalan coefficient is (1 - 2 sqrt 2)/8, re-derived from the
    // Fourier expansion of cot and pinned by the quadrature oracle.
    r.description =
        "int_0^{pi/8} x cot x dx = (pi/16) log(2 - sqrt2) + (1 - 2 sqrt2) G/8 "
        "+ [sqrt2 zeta(2,1/8) - 2(sqrt2+1) pi^2]/64";
    r.tol = 1e-8;
    r.citation = "closed form via Hurwitz zeta and Catalan's constant";
    r.checks.push_back(point(
        "pi/8",
        [] {
          auto f = [](double x) { return x / std::tan(x); };
          QuadResult q = integrate_finite(f, 0.0, kPi / 8.0, 1e-12);
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          double g = catalan_constant();
          double v = kPi / 16.0 * log(2.0 - sqrt(2.0)) +
                     (1.0 - 2.0 * sqrt(2.0)) * g / 8.0 +
                     (sqrt(2.0) * hurwitz_zeta_deriv(0, 2.0, 0.125).value -
                      2.0 * (sqrt(2.0) + 1.0) * kPi * kPi) /
                         64.0;
          return exact(v);
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-4-loggamma-cot";
    r.description =
        "int_0^1 log Gamma(1+x) cot(pi x) dx = (1/pi) sum_n Ci(2 n pi)/n";
    r.tol = 1e-7;
    r.citation = "cot-weighted moment of log Gamma";
    r.checks.push_back(point(
        "int",
        [] {
          auto f = [](double x) {
            return log_gamma(1.0 + x).value / std::tan(kPi * x);
          };
          QuadResult q = integrate_finite(
              f, 0.0, 1.0, 1e-10,
              {.left_singular = true, .right_singular = true});
          return Approximation{q.value, q.abs_err, q.evals};
        },
        [] {
          Approximation s = ladder([](long n) {
            return cosine_integral_Ci(kTwoPi * n).value / n;
          });
          return Approximation{s.value / kPi, s.abs_err, s.work};
        }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-fourier-sin";
    r.description = "sum_n sin(n a)/n = (pi - a)/2";
    r.tol = 1e-8;
    r.citation = "sawtooth Fourier series";
    for (double a : {1.0, 2.0}) {
      r.checks.push_back(point(
          "a=" + fmt(a),
          [a] {
            auto t = exp_series(a, 1.0, 96);
            return Approximation{t.value.imag(), t.abs_err, 96};
          },
          [a] { return exact(0.5 * (kPi - a)); }));
    }
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-sine-product";
    r.description =
        "log sin(pi a) = log(pi a) + sum_n log((n^2 - a^2)/n^2)";
    r.tol = 1e-9;
    r.citation = "Euler product for the sine";
    {
      const double a = 0.3;
      r.checks.push_back(point(
          "a=0.3",
          [a] { return exact(log(sin(kPi * a))); },
          [a] {
            Approximation s = ladder([a](long n) {
              return std::log1p(-a * a / (static_cast<double>(n) * n));
            });
            return Approximation{log(kPi * a) + s.value, s.abs_err, s.work};
          }));
    }
    add(reg, std::move(r));
  }

  // --- disputed entries -----------------------------------------------------
  {
    IdentityRecord r;
    r.id = "I-3.7.15";
    r.description =
        "claim: 2 sum_n int_0^1 cos(2 pi n x) x^{-s} dx = 1/2 + 1/(s-1) + "
        "zeta(s) at s = 1/2 (disputed; partial sums of the left side diverge "
        "like sqrt(N) and are summed here in the regularized sense)";
    r.tol = 1e-6;
    r.status = IdentityStatus::disputed;
    r.citation = "inconsistent with Berndt, Ramanujan's Notebooks II, 8.16";
    r.checks.push_back(point(
        "s=1/2",
        [] {
          // Regularized value: assign sum_n int_0^inf x^{-s} cos(2 pi n x) dx
          // its acceleration value zeta(s)/2, and subtract the convergent
          // sum of the [1, inf) pieces computed by oscillatory quadrature.
          const double s = 0.5;
          auto mode = [s](long n) {
            auto f = [s](double x) { return pow(x, -s); };
            return integrate_oscillatory_semiinf(
                       f, {KernelKind::cosine, kTwoPi * n}, 1.0, 1e-10)
                .value;
          };
          Approximation j = mode_ladder(mode, 8, 5);
          double v = zeta_s(s) - 2.0 * j.value;
          return Approximation{v, 2.0 * j.abs_err + 1e-9, j.work};
        },
        [] { return exact(0.5 + 1.0 / (0.5 - 1.0) + zeta_s(0.5)); }));
    add(reg, std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "I-3.6.13v14";
    r.description =
        "three-way comparison of the Glaisher-Kinkelin-type limit "
        "expressions and the integral int_0^inf x log(1+x^2)/(e^{2 pi x}-1) "
        "dx (disputed; the expressions disagree)";
    r.tol = 1e-6;
    r.status = IdentityStatus::disputed;
    r.citation = "limit forms vs Adamchik's integral";
    r.checks.push_back(point(
        "limits",
        [] {
          // Convergent limit expression:
          // lim [ -sum (k-1) log k + (N^2/2 - N/2 - 5/12) log N + N - N^2/4
          //       + 2/3 ].
          auto partial = [](long n) { return -sum_k_minus1_log_k(n); };
          auto growth = [](long n) {
            double nd = static_cast<double>(n);
            return -((0.5 * nd * nd - 0.5 * nd - 5.0 / 12.0) * log(nd) + nd -
                     0.25 * nd * nd + 2.0 / 3.0);
          };
          LimitLadder cfg;
          cfg.base_n = 2048;
          cfg.depth = 4;
          cfg.model = LadderModel::poly_log;
          return regularized_limit(partial, growth, cfg);
        },
        [] {
          auto f = [](double x) {
            return x * std::log1p(x * x) / std::expm1(kTwoPi * x);
          };
          QuadResult q = integrate_semiinf_decay(f, 0.0, 1e-11);
          return Approximation{q.value, q.abs_err, q.evals};
        }));
    // The companion expression with coefficients (N^2 - N - 3/4)/2 and -5/8
    // does not converge: it drifts by log(2)/24 per doubling of N.  Both
    // fixed-N evaluations are recorded.
    auto d13 = [](long n) {
      double nd = static_cast<double>(n);
      return -sum_k_minus1_log_k(n) +
             0.5 * (nd * nd - nd - 0.75) * log(nd) + nd - 0.25 * nd * nd -
             0.625;
    };
    r.checks.push_back(point(
        "divergent-expr N=32768 vs N=65536",
        [d13] { return Approximation{d13(32768), 1e-6, 32768}; },
        [d13] { return Approximation{d13(65536), 1e-6, 65536}; }));
    add(reg, std::move(r));
  }

  std::sort(reg.begin(), reg.end(),
            [](const IdentityRecord& a, const IdentityRecord& b) {
              return a.id < b.id;
            });
  for (size_t i = 1; i < reg.size(); ++i) {
    if (reg[i - 1].id == reg[i].id) {
      throw std::logic_error("duplicate identity id: " + reg[i].id);
    }
  }
  return reg;
}

}  // namespace

const std::vector<IdentityRecord>& list_identities() {
  static const std::vector<IdentityRecord> reg = build_registry();
  return reg;
}

const IdentityRecord& find_identity(const std::string& id) {
  for (const auto& r : list_identities()) {
    if (r.id == id) return r;
  }
  throw DomainError("unknown identity id: " + id);
}

VerificationResult verify_record(const IdentityRecord& record,
                                 std::optional<double> tol_override) {
  VerificationResult out;
  out.id = record.id;
  out.status = record.status;
  out.tol = tol_override.value_or(record.tol);
  auto start = std::chrono::steady_clock::now();

  std::ostringstream notes;
  bool evaluator_failed = false;
  bool first = true;
  std::string worst_label;
  for (const auto& chk : record.checks) {
    try {
      Approximation l = chk.lhs();
      Approximation r = chk.rhs();
      double d = std::abs(l.value - r.value);
      if (record.status == IdentityStatus::disputed) {
        if (!first) notes << "; ";
        char buf[176];
        std::snprintf(buf, sizeof buf, "%s: lhs=%.10g rhs=%.10g diff=%.4g",
                      chk.label.c_str(), l.value, r.value, d);
        notes << buf;
      }
      if (first || d > out.abs_diff) {
        out.abs_diff = d;
        out.lhs_value = l.value;
        out.rhs_value = r.value;
        worst_label = chk.label;
      }
      first = false;
    } catch (const std::exception& e) {
      evaluator_failed = true;
      notes.str("");
      notes << "evaluator failure at " << chk.label << ": " << e.what();
      break;
    }
  }
  double denom = std::max({std::abs(out.lhs_value), std::abs(out.rhs_value),
                           1e-300});
  out.rel_diff = out.abs_diff / denom;
  if (record.status == IdentityStatus::claimed) {
    out.passed = !evaluator_failed && out.abs_diff <= out.tol;
    if (!evaluator_failed && record.checks.size() > 1) {
      notes << "worst at " << worst_label << " of " << record.checks.size()
            << " points";
    }
  } else if (!evaluator_failed) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "; disputed, measured discrepancy %.6g",
                  out.abs_diff);
    notes << buf;
  }
  out.notes = notes.str();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

VerificationResult verify_identity(const std::string& id,
                                   std::optional<double> tol_override) {
  return verify_record(find_identity(id), tol_override);
}

std::vector<VerificationResult> verify_all(const std::string& filter,
                                           bool parallel,
                                           std::optional<double> tol_override) {
  std::vector<const IdentityRecord*> selected;
  for (const auto& r : list_identities()) {
    if (filter.empty() || r.id.rfind(filter, 0) == 0) selected.push_back(&r);
  }
  std::vector<VerificationResult> out(selected.size());
  if (parallel) {
    std::vector<std::future<VerificationResult>> futs;
    futs.reserve(selected.size());
    for (const auto* rec : selected) {
      futs.push_back(std::async(std::launch::async, [rec, tol_override] {
        return verify_record(*rec, tol_override);
      }));
    }
    for (size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < selected.size(); ++i) {
      out[i] = verify_record(*selected[i], tol_override);
    }
  }
  return out;
}

VerificationSummary summarize(const std::vector<VerificationResult>& results) {
  VerificationSummary s;
  for (const auto& r : results) {
    if (r.status == IdentityStatus::disputed) {
      ++s.disputed;
    } else if (r.passed.value_or(false)) {
      ++s.passed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

std::string registry_manifest() {
  std::ostringstream os;
  for (const auto& r : list_identities()) {
    os << r.id << "  ["
       << (r.status == IdentityStatus::disputed ? "disputed" : "claimed")
       << "]  tol=" << r.tol << "  points=" << r.checks.size() << "\n  "
       << r.description << "\n  -- " << r.citation << "\n";
  }
  return os.str();
}

}  // namespace zetasum
