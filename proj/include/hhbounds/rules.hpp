#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "hhbounds/expr.hpp"
#include "hhbounds/interval.hpp"
#include "hhbounds/oracle.hpp"

namespace hhb {

/// Three-point rule (1 - mu) f(a) + lambda f(b) + (mu - lambda) f((a + b) / 2).
///
/// Any real pair defines a valid quadrature identity; the error bounds additionally
/// need 0 <= lambda <= 1/2 <= mu <= 1.
struct RuleParams {
  double lambda = 0.0;
  double mu = 1.0;

  bool bound_admissible() const noexcept { return 0.0 <= lambda && lambda <= 0.5 && 0.5 <= mu && mu <= 1.0; }

  std::array<double, 3> weights() const noexcept { return {1.0 - mu, lambda, mu - lambda}; }  // f(a), f(b), f(mid)
  friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

/// Symmetric rule with endpoint weight ell/m each and midpoint weight (m - 2 ell)/m.
struct LMRule {
  double m = 1.0;
  double ell = 0.0;

  bool bound_admissible() const noexcept { return m > 0.0 && m >= 2.0 * ell && ell >= 0.0; }
};

enum class NamedRule { Midpoint, Trapezoid, Avg3, AvgMid, Fifth13, Fifth221, Simpson };

inline constexpr std::array<NamedRule, 7> kNamedRules = {
    NamedRule::Midpoint, NamedRule::Trapezoid, NamedRule::Avg3,    NamedRule::AvgMid,
    NamedRule::Fifth13,  NamedRule::Fifth221,  NamedRule::Simpson,
};

std::string_view rule_name(NamedRule rule) noexcept;
std::optional<NamedRule> named_rule_from_string(std::string_view name) noexcept;
LMRule lm_of(NamedRule rule) noexcept;

/// lambda = ell / m, mu = 1 - ell / m. Throws std::invalid_argument for m == 0.
RuleParams rule_from_lm(const LMRule& lm);

/// (1 / (b - a)) times the integral of f over the interval.
double mean_integral(const Expr& f, const Interval& interval, double tol = kDefaultQuadratureTol);

/// Signed deficit of the rule against the mean integral.
double lhs_value(const RuleParams& rule, const Expr& f, const Interval& interval, double mean_integral);

/// (b - a) [ int_0^{1/2} (lambda - t) f'(ta + (1-t)b) dt + int_{1/2}^1 (mu - t) f'(ta + (1-t)b) dt ].
///
/// The node map t -> ta + (1 - t)b sends t = 0 to b and t = 1 to a.
double identity_rhs_qi(const RuleParams& rule, const Expr& fprime, const Interval& interval,
                       double tol = kDefaultQuadratureTol);

/// (lambda f(a) + mu f(b)) / 2 + ((2 - lambda - mu) / 2) f(mid) - mean integral.
double lhs_value_xi(double lambda, double mu, const Expr& f, const Interval& interval, double mean_integral);

/// ((b - a) / 4) int_0^1 [(1 - lambda - t) f'(ta + (1-t)c) + (mu - t) f'(tc + (1-t)b)] dt, c = (a + b) / 2.
double identity_rhs_xi(double lambda, double mu, const Expr& fprime, const Interval& interval,
                       double tol = kDefaultQuadratureTol);

/// The half-scaled pair (lambda, mu) of identity_rhs_xi expressed as a three-point rule.
inline RuleParams rule_from_xi(double lambda, double mu) noexcept { return RuleParams{0.5 * mu, 1.0 - 0.5 * lambda}; }

}  // namespace hhb
