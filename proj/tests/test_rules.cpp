#include <doctest.h>

#include <cmath>
#include <functional>

#include "hhbounds/rules.hpp"
#include "support/random_expr.hpp"

using hhb::Expr;
using hhb::Interval;
using hhb::NamedRule;
using hhb::RuleParams;

namespace {

double oracle_integral(const std::function<double(double)>& g, double lo, double hi) {
  return hhb::integrate(g, Interval(lo, hi), 1e-13).value;
}

bool close(double x, double y, double tol) { return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(x)); }

}  // namespace

TEST_CASE("rule_from_lm") {
  const RuleParams simpson = hhb::rule_from_lm({6, 1});
  CHECK(simpson.lambda == doctest::Approx(1.0 / 6).epsilon(1e-16));
  CHECK(simpson.mu == doctest::Approx(5.0 / 6).epsilon(1e-16));
  CHECK(hhb::rule_from_lm({1, 0}) == RuleParams{0.0, 1.0});
  CHECK(hhb::rule_from_lm({2, 1}) == RuleParams{0.5, 0.5});
  CHECK_THROWS_AS(hhb::rule_from_lm({0, 1}), std::invalid_argument);
  CHECK(hhb::LMRule{6, 1}.bound_admissible());
  CHECK_FALSE(hhb::LMRule{2, 1.5}.bound_admissible());
  CHECK_FALSE(hhb::LMRule{-1, 0}.bound_admissible());
  CHECK_FALSE(hhb::rule_from_lm({1, 1}).bound_admissible());
}

TEST_CASE("named rules carry their (m, ell) and names") {
  const std::pair<NamedRule, std::pair<double, double>> expected[] = {
      {NamedRule::Midpoint, {1, 0}}, {NamedRule::Trapezoid, {2, 1}}, {NamedRule::Avg3, {3, 1}},
      {NamedRule::AvgMid, {4, 1}},   {NamedRule::Fifth13, {5, 1}},   {NamedRule::Fifth221, {5, 2}},
      {NamedRule::Simpson, {6, 1}},
  };
  for (const auto& [rule, lm] : expected) {
    CHECK(hhb::lm_of(rule).m == lm.first);
    CHECK(hhb::lm_of(rule).ell == lm.second);
    CHECK(hhb::named_rule_from_string(hhb::rule_name(rule)) == rule);
  }
  CHECK_FALSE(hhb::named_rule_from_string("boole").has_value());
}

TEST_CASE("lhs_value examples") {
  const Expr f = hhb::parse("x^2");
  const Interval iv(1, 2);
  const double mean = hhb::mean_integral(f, iv);
  CHECK(std::fabs(mean - 7.0 / 3) <= 1e-13);
  CHECK(hhb::lhs_value({0.5, 0.5}, f, iv, mean) == doctest::Approx(1.0 / 6).epsilon(1e-13));
  CHECK(hhb::lhs_value({0.0, 1.0}, f, iv, mean) == doctest::Approx(-1.0 / 12).epsilon(1e-13));
  CHECK_THROWS_AS(hhb::lhs_value({0.5, 0.5}, hhb::parse("ln(x)"), Interval(0, 1), 0.0), hhb::DomainError);
}

TEST_CASE("lhs_value vanishes on affine functions for every rule") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const double c0 = u(rng), c1 = u(rng);
    const Expr f = Expr::add(Expr::constant(c0), Expr::mul(Expr::constant(c1), Expr::variable()));
    const double a = u(rng);
    const Interval iv(a, a + 0.1 + std::fabs(u(rng)));
    const double lambda = u(rng);
    const RuleParams rule{lambda, 1 - lambda};
    CHECK(std::fabs(hhb::lhs_value(rule, f, iv, hhb::mean_integral(f, iv))) <= 1e-12 * std::max(1.0, std::fabs(c0) + 3 * std::fabs(c1)));
  }
}

TEST_CASE("identity right-hand sides: examples") {
  const Expr fp = hhb::differentiate(hhb::parse("x^2"));
  const Interval iv(1, 2);
  CHECK(hhb::identity_rhs_qi({0.5, 0.5}, fp, iv) == doctest::Approx(1.0 / 6).epsilon(1e-11));
  CHECK(hhb::identity_rhs_qi({0.3, 0.9}, hhb::differentiate(hhb::parse("4")), iv) == 0.0);

  const Expr cube = hhb::parse("x^3");
  const Interval unit(0, 1);
  const RuleParams simpson = hhb::rule_from_lm({6, 1});
  CHECK(std::fabs(hhb::identity_rhs_qi(simpson, hhb::differentiate(cube), unit) -
                  hhb::lhs_value(simpson, cube, unit, hhb::mean_integral(cube, unit))) <= 1e-10);

  CHECK(hhb::identity_rhs_xi(1, 1, fp, iv) == doctest::Approx(1.0 / 6).epsilon(1e-11));
  CHECK(hhb::identity_rhs_xi(0, 0, fp, iv) == doctest::Approx(-1.0 / 12).epsilon(1e-11));
  CHECK(hhb::identity_rhs_xi(0.4, 0.2, hhb::differentiate(hhb::parse("2.5")), iv) == 0.0);
}

TEST_CASE("both identities hold on random instances, including the substitution between them") {
  testgen::RandomExpr gen(99);
  for (int i = 0; i < 100; ++i) {
    const double a = gen.uniform(0.5, 2.0);
    const Interval iv(a, a + gen.uniform(0.1, 2.0));
    const Expr f = gen.defined_on(iv);
    const Expr fp = hhb::differentiate(f);
    const double mean = hhb::mean_integral(f, iv, 1e-13);
    const double lambda = gen.uniform(-1, 2);
    const double mu = gen.uniform(-1, 2);

    const double lhs = hhb::lhs_value({lambda, mu}, f, iv, mean);
    CHECK_MESSAGE(close(lhs, hhb::identity_rhs_qi({lambda, mu}, fp, iv), 1e-9), f.str());

    const double lhs_xi = hhb::lhs_value_xi(lambda, mu, f, iv, mean);
    CHECK_MESSAGE(close(lhs_xi, hhb::identity_rhs_xi(lambda, mu, fp, iv), 1e-9), f.str());
    // (lambda, mu) in the half-scaled identity is the rule (mu / 2, 1 - lambda / 2).
    CHECK(close(lhs_xi, hhb::lhs_value(hhb::rule_from_xi(lambda, mu), f, iv, mean), 1e-12));
  }
}

TEST_CASE("particular identities of the seven named rules") {
  const Expr f = hhb::parse("exp(x) * x^2 - ln(x + 1)");
  const Expr fp = hhb::differentiate(f);
  const Interval iv(0.3, 1.7);
  const double a = iv.a(), b = iv.b(), c = iv.midpoint(), w = iv.width();
  const double mean = hhb::mean_integral(f, iv, 1e-13);
  auto node = [&](double t) { return fp.eval(t * a + (1 - t) * b); };
  auto kernel_sum = [&](double left, double right) {
    return w * (oracle_integral([&](double t) { return (left - t) * node(t); }, 0, 0.5) +
                oracle_integral([&](double t) { return (right - t) * node(t); }, 0.5, 1));
  };
  const double fa = f.eval(a), fb = f.eval(b), fc = f.eval(c);

  struct Case {
    NamedRule rule;
    double explicit_lhs;
    double explicit_rhs;
  };
  const Case cases[] = {
      {NamedRule::Midpoint, fc - mean,
       w * (oracle_integral([&](double t) { return (1 - t) * node(t); }, 0.5, 1) -
            oracle_integral([&](double t) { return t * node(t); }, 0, 0.5))},
      {NamedRule::Trapezoid, (fa + fb) / 2 - mean, w / 2 * oracle_integral([&](double t) { return (1 - 2 * t) * node(t); }, 0, 1)},
      {NamedRule::Avg3, (fa + fb + fc) / 3 - mean, kernel_sum(1.0 / 3, 2.0 / 3)},
      {NamedRule::AvgMid, ((fa + fb) / 2 + fc) / 2 - mean, kernel_sum(0.25, 0.75)},
      {NamedRule::Fifth13, (fa + fb + 3 * fc) / 5 - mean, kernel_sum(0.2, 0.8)},
      {NamedRule::Fifth221, (2 * (fa + fb) + fc) / 5 - mean, kernel_sum(0.4, 0.6)},
      {NamedRule::Simpson, (fa + fb + 4 * fc) / 6 - mean, kernel_sum(1.0 / 6, 5.0 / 6)},
  };
  for (const auto& cs : cases) {
    const RuleParams rule = hhb::rule_from_lm(hhb::lm_of(cs.rule));
    const double lhs = hhb::lhs_value(rule, f, iv, mean);
    CHECK_MESSAGE(close(lhs, cs.explicit_lhs, 1e-12), hhb::rule_name(cs.rule));
    CHECK_MESSAGE(close(lhs, cs.explicit_rhs, 1e-9), hhb::rule_name(cs.rule));
  }
}
