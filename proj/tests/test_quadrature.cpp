#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

using namespace casimir;

TEST_CASE("single panels are exact on low-order polynomials") {
  const std::vector<double> bp = {0.0, 1.0};
  const QuadOutcome x5 =
      integrate_adaptive([](double x) { return x * x * x * x * x; }, bp, 1e-12, 10);
  CHECK(x5.value == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  const QuadOutcome poly = integrate_adaptive(
      [](double x) { return 7.0 * std::pow(x, 10) - 3.0 * x * x + 2.0; }, bp,
      1e-12, 10);
  CHECK(poly.value == doctest::Approx(7.0 / 11.0 - 1.0 + 2.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrals") {
  const std::vector<double> bp = {0.0, std::numbers::pi};
  const QuadOutcome s =
      integrate_adaptive([](double x) { return std::sin(x); }, bp, 1e-12, 100);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s.abs_error <= 1e-12 * 2.0 * 1.0001);
}

TEST_CASE("narrow lorentzian against the arctan closed form") {
  const double n = 0.37;
  const double eta = 1e-4;
  const auto f = [&](double x) {
    const double dx = x - n;
    return (eta / (dx * dx + eta * eta)) / std::numbers::pi;
  };
  const std::vector<double> bp = {0.0, n - 10 * eta, n, n + 10 * eta, 1.0};
  const QuadOutcome out = integrate_adaptive(f, bp, 1e-10, 500);
  const double exact =
      (std::atan((1.0 - n) / eta) + std::atan(n / eta)) / std::numbers::pi;
  CHECK(out.value == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("zero integrand integrates to exactly zero") {
  const std::vector<double> bp = {0.0, 2.0, 5.0};
  const QuadOutcome out =
      integrate_adaptive([](double) { return 0.0; }, bp, 1e-12, 10);
  CHECK(out.value == 0.0);
  CHECK(out.abs_error == 0.0);
}

TEST_CASE("identical calls produce identical results") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(13.0 * x); };
  const std::vector<double> bp = {0.0, 10.0};
  const QuadOutcome a = integrate_adaptive(f, bp, 1e-11, 500);
  const QuadOutcome b = integrate_adaptive(f, bp, 1e-11, 500);
  CHECK(a.value == b.value);
  CHECK(a.abs_error == b.abs_error);
  CHECK(a.panels == b.panels);
}

TEST_CASE("input validation") {
  const auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS((void)integrate_adaptive(f, std::vector<double>{1.0}, 1e-8, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)integrate_adaptive(f, std::vector<double>{1.0, 0.0}, 1e-8, 10),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)integrate_adaptive(f, std::vector<double>{0.0, 1.0}, 0.0, 10),
      std::invalid_argument);
}

TEST_CASE("budget exhaustion raises a convergence error") {
  // A spike the initial panel cannot see gets refined panel by panel; with a
  // one-split budget the requested tolerance is unreachable.
  const double eta = 1e-9;
  const auto f = [&](double x) {
    const double dx = x - 0.5;
    return eta / (dx * dx + eta * eta);
  };
  const std::vector<double> bp = {0.0, 1.0};
  CHECK_THROWS_AS((void)integrate_adaptive(f, bp, 1e-12, 1), ConvergenceError);
}

TEST_CASE("tail fit recovers an exact inverse-square model") {
  const auto f = [](double w) { return 3.0 / (w * w) + 5.0 / (w * w * w * w); };
  const double cutoff = 100.0;
  const TailEstimate tail = inverse_square_tail(f, cutoff);
  CHECK(tail.c2 == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(tail.c4 == doctest::Approx(5.0).epsilon(1e-6));
  const double exact = 3.0 / cutoff + 5.0 / (3.0 * cutoff * cutoff * cutoff);
  CHECK(tail.value == doctest::Approx(exact).epsilon(1e-10));
  CHECK(tail.error < 1e-12);

  const TailEstimate zero = inverse_square_tail([](double) { return 0.0; }, 50.0);
  CHECK(zero.value == 0.0);
}
