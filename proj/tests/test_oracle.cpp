#include <doctest.h>

#include <cmath>
#include <random>

#include "hhbounds/bounds.hpp"
#include "hhbounds/oracle.hpp"

using hhb::Interval;
using hhb::KernelSide;
using hhb::KernelWeight;

TEST_CASE("integrate reproduces antiderivatives") {
  const auto square = hhb::integrate([](double x) { return x * x; }, Interval(1, 2));
  CHECK(std::fabs(square.value - 7.0 / 3.0) <= 1e-12);
  CHECK(square.error_estimate >= 0.0);
  CHECK(square.evaluations >= 1);

  const auto log = hhb::integrate([](double x) { return std::log(x); }, Interval(1, 2));
  CHECK(std::fabs(log.value - (2 * std::log(2.0) - 1)) <= 1e-12);

  const auto kink = hhb::integrate([](double x) { return std::fabs(x - 0.3); }, Interval(0, 1));
  CHECK(std::fabs(kink.value - (0.045 + 0.245)) <= 1e-11);

  const auto root = hhb::integrate([](double x) { return std::sqrt(x); }, Interval(0, 1));
  CHECK(std::fabs(root.value - 2.0 / 3.0) <= 1e-11);
}

TEST_CASE("degenerate intervals are rejected") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, INFINITY), std::invalid_argument);
}

TEST_CASE("polynomials up to the embedded degree integrate exactly") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int degree = 0; degree <= 20; ++degree) {
    std::vector<double> c(degree + 1);
    for (double& v : c) v = coef(rng);
    auto poly = [&](double x) {
      double s = 0;
      for (int k = degree; k >= 0; --k) s = s * x + c[k];
      return s;
    };
    double exact = 0;
    for (int k = 0; k <= degree; ++k) exact += c[k] * (std::pow(1.5, k + 1) - std::pow(-0.5, k + 1)) / (k + 1);
    const auto r = hhb::integrate(poly, Interval(-0.5, 1.5), 1e-13);
    CHECK(std::fabs(r.value - exact) <= 1e-13 * std::max(1.0, std::fabs(exact)));
  }
}

TEST_CASE("evaluation budget exhaustion is an explicit failure") {
  CHECK_THROWS_AS(hhb::integrate([](double x) { return std::sin(1.0 / x); }, Interval(1e-12, 1), 1e-13, 2000),
                  hhb::ConvergenceError);
}

TEST_CASE("exceptions from the integrand propagate") {
  CHECK_THROWS_AS(hhb::integrate([](double) -> double { throw hhb::DomainError("boom"); }, Interval(0, 1)),
                  hhb::DomainError);
}

TEST_CASE("kernel moment examples") {
  CHECK(hhb::kernel_moment_numeric(KernelSide::Left, 0.0, 1.0, KernelWeight::One) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(hhb::kernel_moment_numeric(KernelSide::Right, 1.0, 1.0, KernelWeight::One) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(hhb::kernel_moment_numeric(KernelSide::Left, 0.25, 0.0, KernelWeight::One) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(hhb::kernel_moment_numeric(KernelSide::Left, 0.25, -0.5, KernelWeight::One), std::invalid_argument);
}

TEST_CASE("kink splitting equals the sum of the two smooth panels") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 50; ++i) {
    const double shift = 0.05 + 0.4 * u(rng);
    const double e = 3 * u(rng);
    auto g = [&](double t) { return std::pow(std::fabs(shift - t), e) * t; };
    const double left = hhb::integrate(g, Interval(0, shift), 1e-14).value;
    const double right = hhb::integrate(g, Interval(shift, 0.5), 1e-14).value;
    CHECK(std::fabs(hhb::kernel_moment_numeric(KernelSide::Left, shift, e, KernelWeight::T) - (left + right)) <= 1e-12);
  }
}

TEST_CASE("closed-form kernel moments agree with quadrature on 500 draws") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    const double q = 1.05 + 4.95 * u(rng);
    const double p = q * (1e-3 + (1 - 1e-3) * u(rng));
    const bool left = i % 2 == 0;
    const double shift = left ? 0.5 * u(rng) : 0.5 + 0.5 * u(rng);
    const auto side = left ? KernelSide::Left : KernelSide::Right;
    const auto closed = hhb::kernel_moments_closed(shift, side, hhb::HolderParams{p, q});
    const double h = hhb::kernel_moment_numeric(side, shift, (q - p) / (q - 1), KernelWeight::One);
    const double wa = hhb::kernel_moment_numeric(side, shift, p, KernelWeight::T);
    const double wb = hhb::kernel_moment_numeric(side, shift, p, KernelWeight::OneMinusT);
    CHECK(std::fabs(closed.hoelder_factor - h) <= 1e-10);
    CHECK(std::fabs(closed.weight_a - wa) <= 1e-10);
    CHECK(std::fabs(closed.weight_b - wb) <= 1e-10);
  }
}
