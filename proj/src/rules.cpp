#include "hhbounds/rules.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhb {

namespace {

struct NamedRuleInfo {
  NamedRule rule;
  std::string_view name;
  LMRule lm;
};

constexpr std::array<NamedRuleInfo, 7> kInfo = {{
    {NamedRule::Midpoint, "midpoint", {1.0, 0.0}},
    {NamedRule::Trapezoid, "trapezoid", {2.0, 1.0}},
    {NamedRule::Avg3, "avg3", {3.0, 1.0}},
    {NamedRule::AvgMid, "avg-mid", {4.0, 1.0}},
    {NamedRule::Fifth13, "fifth-13", {5.0, 1.0}},
    {NamedRule::Fifth221, "fifth-221", {5.0, 2.0}},
    {NamedRule::Simpson, "simpson", {6.0, 1.0}},
}};

const NamedRuleInfo& info(NamedRule rule) noexcept { return kInfo[static_cast<std::size_t>(rule)]; }

double eval_at(const Expr& f, double x, const char* where) {
  try {
    return f.eval(x);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " at " + where + " node", e.kink());
  }
}

}  // namespace

std::string_view rule_name(NamedRule rule) noexcept { return info(rule).name; }

std::optional<NamedRule> named_rule_from_string(std::string_view name) noexcept {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.rule;
  }
  return std::nullopt;
}

LMRule lm_of(NamedRule rule) noexcept { return info(rule).lm; }

RuleParams rule_from_lm(const LMRule& lm) {
  if (lm.m == 0.0 || !std::isfinite(lm.m) || !std::isfinite(lm.ell)) {
    throw std::invalid_argument("(m, ell) rule needs finite ell and nonzero finite m");
  }
  const double lambda = lm.ell / lm.m;
  return RuleParams{lambda, 1.0 - lambda};
}

double mean_integral(const Expr& f, const Interval& interval, double tol) {
  auto g = [&f](double x) { return f.eval(x); };
  return integrate(g, interval, tol * interval.width()).value / interval.width();
}

double lhs_value(const RuleParams& rule, const Expr& f, const Interval& interval, double mean) {
  const auto [wa, wb, wm] = rule.weights();
  const double fa = eval_at(f, interval.a(), "left endpoint");
  const double fb = eval_at(f, interval.b(), "right endpoint");
  const double fm = eval_at(f, interval.midpoint(), "midpoint");
  return wa * fa + wb * fb + wm * fm - mean;
}

double identity_rhs_qi(const RuleParams& rule, const Expr& fprime, const Interval& interval, double tol) {
  const double a = interval.a();
  const double b = interval.b();
  const double scaled_tol = tol / interval.width();
  auto left = [&](double t) { return (rule.lambda - t) * fprime.eval(t * a + (1.0 - t) * b); };
  auto right = [&](double t) { return (rule.mu - t) * fprime.eval(t * a + (1.0 - t) * b); };
  const double il = integrate(left, Interval(0.0, 0.5), scaled_tol).value;
  const double ir = integrate(right, Interval(0.5, 1.0), scaled_tol).value;
  return interval.width() * (il + ir);
}

double lhs_value_xi(double lambda, double mu, const Expr& f, const Interval& interval, double mean) {
  const double fa = eval_at(f, interval.a(), "left endpoint");
  const double fb = eval_at(f, interval.b(), "right endpoint");
  const double fm = eval_at(f, interval.midpoint(), "midpoint");
  return 0.5 * (lambda * fa + mu * fb) + 0.5 * (2.0 - lambda - mu) * fm - mean;
}

double identity_rhs_xi(double lambda, double mu, const Expr& fprime, const Interval& interval, double tol) {
  const double a = interval.a();
  const double b = interval.b();
  const double c = interval.midpoint();
  auto integrand = [&](double t) {
    return (1.0 - lambda - t) * fprime.eval(t * a + (1.0 - t) * c) + (mu - t) * fprime.eval(t * c + (1.0 - t) * b);
  };
  const double scaled_tol = 4.0 * tol / interval.width();
  return 0.25 * interval.width() * integrate(integrand, Interval(0.0, 1.0), scaled_tol).value;
}

}  // namespace hhb
