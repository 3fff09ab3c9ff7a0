#include "matchkit/mckay.hpp"

#include <doctest.h>

#include <cmath>

using namespace matchkit::mckay;

namespace {
const std::complex<double> kI(0.0, 1.0);
}

TEST_CASE("params at d = 3") {
  const auto p = params(3);
  CHECK(p.xi == 0.5);
  CHECK(p.S_d == doctest::Approx(3.2).epsilon(1e-15));
  CHECK(p.omega == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(p.schrijver_exponent == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(params(1), std::invalid_argument);
}

TEST_CASE("density basics") {
  for (int d = 3; d <= 10; ++d) {
    const double omega = 2.0 * std::sqrt(static_cast<double>(d - 1));
    CHECK(density(d, omega) == 0.0);
    CHECK(density(d, -omega) == 0.0);
    CHECK(density(d, omega + 0.5) == 0.0);
    CHECK(density(d, 0.0) > 0.0);
  }
  CHECK(density(3, 0.0) == doctest::Approx(std::sqrt(8.0) / (6.0 * M_PI)).epsilon(1e-15));
  for (int d = 2; d <= 10; ++d) {
    CHECK(quadrature::mass(d) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("closed forms at gamma = i, d = 3") {
  CHECK(log_integral(3, kI).real() == doctest::Approx(0.5 * std::log(16.0 / 5.0)).epsilon(1e-14));
  CHECK(log_integral(3, {0.0, 0.0}) == std::complex<double>(0.0, 0.0));
  CHECK(reciprocal_integral(3, {0.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(reciprocal_integral(3, kI).real() == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(derivative_integral(3).imag() == doctest::Approx(0.32).epsilon(1e-14));
  CHECK(derivative_integral(3).real() == 0.0);
  CHECK(log_abs_integral(3) == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(log_abs_integral(2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_abs_integral(4) == doctest::Approx(0.5 * std::log(27.0 / 16.0)).epsilon(1e-14));
}

TEST_CASE("branch rejection") {
  CHECK_THROWS_AS(log_integral(3, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eta(3, {0.5, 0.0}), std::invalid_argument);  // 1/omega ~ 0.3536
  CHECK_NOTHROW(eta(3, {0.3, 0.0}));
  CHECK_NOTHROW(eta(3, {5.0, 0.2}));
}

TEST_CASE("quadrature agrees with closed forms") {
  for (int d = 3; d <= 10; ++d) {
    CHECK(std::abs(quadrature::log_integral(d, kI) - log_integral(d, kI)) < 1e-8);
    CHECK(std::abs(quadrature::reciprocal_integral(d, kI) - reciprocal_integral(d, kI)) < 1e-8);
    CHECK(std::abs(quadrature::derivative_integral(d) - derivative_integral(d)) < 1e-8);
    CHECK(std::abs(quadrature::log_abs_integral(d) - log_abs_integral(d)) < 1e-8);
  }
  // off the imaginary axis as well
  for (const std::complex<double> gamma : {std::complex<double>(0.0, 0.5),
                                           std::complex<double>(0.1, 0.2),
                                           std::complex<double>(-0.2, 0.1),
                                           std::complex<double>(0.25, 0.0)}) {
    CHECK(std::abs(quadrature::log_integral(3, gamma) - log_integral(3, gamma)) < 1e-8);
    CHECK(std::abs(quadrature::reciprocal_integral(3, gamma) - reciprocal_integral(3, gamma)) <
          1e-8);
  }
}

TEST_CASE("theorem limits at d = 3") {
  const auto limits = theorem_limits(3);
  CHECK(limits.entropy_limit == doctest::Approx(0.5 * std::log(3.2)).epsilon(1e-15));
  CHECK(std::abs(limits.expectation_limit - 0.3) < 1e-15);
  CHECK(limits.pm_entropy_limit == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-15));
  // internal consistency with the integrals
  for (int d = 3; d <= 10; ++d) {
    const auto lim = theorem_limits(d);
    CHECK(lim.entropy_limit == doctest::Approx(log_integral(d, kI).real()).epsilon(1e-13));
    CHECK(lim.expectation_limit ==
          doctest::Approx(0.5 * (1.0 - reciprocal_integral(d, kI).real())).epsilon(1e-13));
    CHECK(lim.variance_limit == doctest::Approx(derivative_integral(d).imag() / 4).epsilon(1e-13));
    CHECK(lim.pm_entropy_limit == doctest::Approx(log_abs_integral(d)).epsilon(1e-13));
  }
}

TEST_CASE("gurvits entropy maximum") {
  for (int d = 3; d <= 10; ++d) {
    const auto result = gurvits_max(d);
    CHECK(result.value == doctest::Approx(std::log(params(d).S_d)).epsilon(1e-9));
    CHECK(result.argmax == doctest::Approx(gurvits_argmax_closed_form(d)).epsilon(1e-9));
  }
  CHECK(gurvits_max(3).value == doctest::Approx(std::log(16.0 / 5.0)).epsilon(1e-9));
  CHECK(gurvits_argmax_closed_form(3) == doctest::Approx(0.6).epsilon(1e-14));
  // t -> 0+ limit is 0
  CHECK(gurvits_entropy_function(3, 1e-9) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(gurvits_entropy_function(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gurvits_entropy_function(3, 1.0), std::invalid_argument);
}
