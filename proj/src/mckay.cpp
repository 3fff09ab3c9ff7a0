#include "matchkit/mckay.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace matchkit::mckay {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

void check_degree(int d) {
  if (d < 2) throw std::invalid_argument("Kesten-McKay formulas need d >= 2");
}

void check_branch(int d, Complex gamma) {
  check_degree(d);
  const double omega = 2.0 * std::sqrt(static_cast<double>(d - 1));
  if (gamma.imag() == 0.0 && std::abs(gamma.real()) >= 1.0 / omega) {
    throw std::invalid_argument("gamma lies on the excluded real half-lines");
  }
}

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kWeights[15] = {
    0.03075324199611727, 0.07036604748810812, 0.10715922046717194, 0.13957067792615432,
    0.16626920581699392, 0.18616100001556221, 0.19843148532711158, 0.20257824192556127,
    0.19843148532711158, 0.18616100001556221, 0.16626920581699392, 0.13957067792615432,
    0.10715922046717194, 0.07036604748810812, 0.03075324199611727};

Complex gauss15(const std::function<Complex(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex acc(0.0, 0.0);
  for (int i = 0; i < 15; ++i) acc += kWeights[i] * f(mid + half * kNodes[i]);
  return half * acc;
}

Complex adaptive(const std::function<Complex(double)>& f, double a, double b, double tol,
                 int depth) {
  const Complex whole = gauss15(f, a, b);
  const double mid = 0.5 * (a + b);
  const Complex split = gauss15(f, a, mid) + gauss15(f, mid, b);
  if (depth <= 0 || std::abs(whole - split) <= tol) return split;
  return adaptive(f, a, mid, 0.5 * tol, depth - 1) + adaptive(f, mid, b, 0.5 * tol, depth - 1);
}

// x = omega sin(theta) absorbs the sqrt endpoint factor; `core` is the
// remaining smooth weight f_d(x) dx / dtheta.
Complex integrate_against_density(int d, const std::function<Complex(double)>& kernel,
                                  double tol) {
  const double omega = 2.0 * std::sqrt(static_cast<double>(d - 1));
  auto integrand = [=](double theta) -> Complex {
    const double s = std::sin(theta);
    const double x = omega * s;
    const double cos_theta = std::cos(theta);
    const double weight = d * omega * omega * cos_theta * cos_theta /
                          (2.0 * kPi * (static_cast<double>(d) * d - x * x));
    return weight * kernel(x);
  };
  return adaptive(integrand, -kPi / 2, kPi / 2, tol, 28);
}

// Same weight, but with geometric refinement toward theta = 0 for kernels
// with an integrable log singularity at x = 0.
Complex integrate_against_density_log_origin(int d, const std::function<Complex(double)>& kernel,
                                             double tol) {
  const double omega = 2.0 * std::sqrt(static_cast<double>(d - 1));
  auto integrand = [=](double theta) -> Complex {
    const double s = std::sin(theta);
    const double x = omega * s;
    const double cos_theta = std::cos(theta);
    const double weight = d * omega * omega * cos_theta * cos_theta /
                          (2.0 * kPi * (static_cast<double>(d) * d - x * x));
    return weight * kernel(x);
  };
  Complex acc(0.0, 0.0);
  double hi = kPi / 2;
  for (int level = 0; level < 60; ++level) {
    const double lo = hi / 2;
    acc += adaptive(integrand, lo, hi, tol / 60, 12);
    acc += adaptive(integrand, -hi, -lo, tol / 60, 12);
    hi = lo;
  }
  return acc;
}

}  // namespace

McKayParams params(int d) {
  check_degree(d);
  McKayParams p;
  p.d = d;
  p.omega = 2.0 * std::sqrt(static_cast<double>(d - 1));
  p.xi = 2.0 / (1.0 + std::sqrt(4.0 * d - 3.0));
  p.S_d = std::pow((d - 1) / (d - p.xi), d - 2) / (p.xi * p.xi);
  p.schrijver_exponent = 0.5 * ((d - 1) * std::log(static_cast<double>(d - 1)) -
                                (d - 2) * std::log(static_cast<double>(d)));
  return p;
}

double density(int d, double x) {
  check_degree(d);
  const double omega_sq = 4.0 * (d - 1.0);
  if (x * x > omega_sq) return 0.0;
  const double denom = 2.0 * kPi * (static_cast<double>(d) * d - x * x);
  if (denom == 0.0) return std::numeric_limits<double>::infinity();  // d = 2 endpoints
  return d * std::sqrt(omega_sq - x * x) / denom;
}

Complex eta(int d, Complex gamma) {
  check_branch(d, gamma);
  const double omega_sq = 4.0 * (d - 1.0);
  return 2.0 / (1.0 + std::sqrt(1.0 - omega_sq * gamma * gamma));
}

Complex log_integral(int d, Complex gamma) {
  const Complex h = eta(d, gamma);
  return 0.5 * (d - 2.0) * std::log((static_cast<double>(d) - 1.0) / (static_cast<double>(d) - h)) -
         std::log(h);
}

Complex reciprocal_integral(int d, Complex gamma) {
  const Complex h = eta(d, gamma);
  return (d - 1.0) / (static_cast<double>(d) / h - 1.0);
}

namespace {

// Denominator shared by the derivative integral and the variance limit:
// sqrt(4d-3) (d-2 + d sqrt(4d-3))^2, expanded to avoid the square.
double derivative_integral_denominator(int d) {
  const double root = std::sqrt(4.0 * d - 3.0);
  return 2.0 * d * (d - 2.0) * (4.0 * d - 3.0) +
         ((d - 2.0) * (d - 2.0) + static_cast<double>(d) * d * (4.0 * d - 3.0)) * root;
}

}  // namespace

Complex derivative_integral(int d) {
  check_degree(d);
  return Complex(0.0, 8.0 * d * (d - 1.0) * (d - 1.0) / derivative_integral_denominator(d));
}

double log_abs_integral(int d) { return params(d).schrijver_exponent; }

TheoremLimits theorem_limits(int d) {
  if (d < 3) throw std::invalid_argument("theorem limits need d >= 3");
  const McKayParams p = params(d);
  TheoremLimits limits;
  limits.entropy_limit = 0.5 * std::log(p.S_d);
  limits.expectation_limit = 0.5 * d * (1.0 - p.xi) / (d - p.xi);
  // Im(derivative_integral)/4, by the identity x^2/(1+x^2)^2 = Im(x/(1-ix)^2)/2.
  limits.variance_limit = 2.0 * d * (d - 1.0) * (d - 1.0) / derivative_integral_denominator(d);
  limits.pm_entropy_limit = p.schrijver_exponent;
  return limits;
}

double gurvits_entropy_function(int d, double t) {
  check_degree(d);
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0,1)");
  return t * std::log(d / t) + (d - t) * std::log(1.0 - t / d) - 2.0 * (1.0 - t) * std::log(1.0 - t);
}

namespace {

// h'(t) = ln(d^2 (1-t)^2 / (t (d-t))).
double gurvits_derivative(int d, double t) {
  return std::log(static_cast<double>(d) * d * (1.0 - t) * (1.0 - t) / (t * (d - t)));
}

}  // namespace

double gurvits_argmax_closed_form(int d) {
  check_degree(d);
  return d * (2.0 * d + 1.0 - std::sqrt(4.0 * d - 3.0)) / (2.0 * (static_cast<double>(d) * d + 1.0));
}

GurvitsMax gurvits_max(int d) {
  check_degree(d);
  double lo = 1e-12, hi = 1.0 - 1e-12;
  if (!(gurvits_derivative(d, lo) > 0.0) || !(gurvits_derivative(d, hi) < 0.0)) {
    throw std::logic_error("gurvits maximum bracket failed the derivative sign check");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = gurvits_entropy_function(d, c);
  double fe = gurvits_entropy_function(d, e);
  while (b - a > 1e-12) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = gurvits_entropy_function(d, c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = gurvits_entropy_function(d, e);
    }
  }
  GurvitsMax result;
  result.argmax = 0.5 * (a + b);
  result.value = gurvits_entropy_function(d, result.argmax);
  return result;
}

namespace quadrature {

double mass(int d) {
  check_degree(d);
  return integrate_against_density(d, [](double) { return Complex(1.0, 0.0); }, 1e-11).real();
}

Complex log_integral(int d, Complex gamma) {
  check_branch(d, gamma);
  return integrate_against_density(
      d, [gamma](double x) { return std::log(1.0 - gamma * x); }, 1e-11);
}

Complex reciprocal_integral(int d, Complex gamma) {
  check_branch(d, gamma);
  return integrate_against_density(
      d, [gamma](double x) { return 1.0 / (1.0 - gamma * x); }, 1e-11);
}

Complex derivative_integral(int d) {
  check_degree(d);
  const Complex i(0.0, 1.0);
  return integrate_against_density(
      d, [i](double x) { return x / ((1.0 - i * x) * (1.0 - i * x)); }, 1e-11);
}

double log_abs_integral(int d) {
  check_degree(d);
  return integrate_against_density_log_origin(
             d, [](double x) { return Complex(std::log(std::abs(x)), 0.0); }, 1e-11)
      .real();
}

}  // namespace quadrature

}  // namespace matchkit::mckay
