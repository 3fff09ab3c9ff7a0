#pragma once

#include <complex>

namespace matchkit::mckay {

// Constants attached to the Kesten-McKay limit for d-regular graphs.
struct McKayParams {
  int d = 0;
  double omega = 0.0;               // 2 sqrt(d-1), support endpoint
  double xi = 0.0;                  // 2 / (1 + sqrt(4d-3))
  double S_d = 0.0;                 // (1/xi^2) ((d-1)/(d-xi))^(d-2)
  double schrijver_exponent = 0.0;  // (1/2) ln((d-1)^(d-1) / d^(d-2))
};

McKayParams params(int d);

// Limit density d sqrt(4(d-1)-x^2) / (2 pi (d^2-x^2)) on [-omega, omega].
double density(int d, double x);

// eta = 2 / (1 + sqrt(1 - omega^2 gamma^2)), principal branch. gamma must
// avoid the real half-lines |gamma| >= 1/omega where the branch cut sits.
std::complex<double> eta(int d, std::complex<double> gamma);

// integral f_d(x) ln(1 - gamma x) dx = (d-2)/2 ln((d-1)/(d-eta)) - ln eta.
std::complex<double> log_integral(int d, std::complex<double> gamma);

// integral f_d(x) / (1 - gamma x) dx = (d-1) / ((d/eta) - 1).
std::complex<double> reciprocal_integral(int d, std::complex<double> gamma);

// integral f_d(x) x / (1 - i x)^2 dx, purely imaginary:
// 8d(d-1)^2 i / (sqrt(4d-3) (d-2 + d sqrt(4d-3))^2).
std::complex<double> derivative_integral(int d);

// integral f_d(x) ln|x| dx = schrijver exponent.
double log_abs_integral(int d);

struct TheoremLimits {
  double entropy_limit = 0.0;      // (1/2) ln S_d
  double expectation_limit = 0.0;  // (d/2)(1-xi)/(d-xi)
  double variance_limit = 0.0;     // Im(derivative_integral)/4
  double pm_entropy_limit = 0.0;   // schrijver exponent
};

TheoremLimits theorem_limits(int d);

// t ln(d/t) + (d-t) ln(1-t/d) - 2(1-t) ln(1-t); its maximum over (0,1)
// equals ln S_d.
double gurvits_entropy_function(int d, double t);

struct GurvitsMax {
  double argmax = 0.0;
  double value = 0.0;
};

GurvitsMax gurvits_max(int d);

// Stationary point of the entropy function in closed form, for cross-checks:
// d(2d+1-sqrt(4d-3)) / (2(d^2+1)).
double gurvits_argmax_closed_form(int d);

// Quadrature counterparts of the closed forms above: adaptive Gauss on the
// sine substitution, with log-aware refinement near 0 for the ln|x| kernel.
namespace quadrature {
double mass(int d);
std::complex<double> log_integral(int d, std::complex<double> gamma);
std::complex<double> reciprocal_integral(int d, std::complex<double> gamma);
std::complex<double> derivative_integral(int d);
double log_abs_integral(int d);
}  // namespace quadrature

}  // namespace matchkit::mckay
