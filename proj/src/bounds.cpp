#include "hhbounds/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hhbounds/minimize.hpp"

namespace hhb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_admissible(const RuleParams& rule) {
  if (!rule.bound_admissible()) {
    throw AdmissibilityError("rule (lambda, mu) = (" + std::to_string(rule.lambda) + ", " + std::to_string(rule.mu) +
                             ") violates 0 <= lambda <= 1/2 <= mu <= 1");
  }
}

void require_q_at_least_one(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw AdmissibilityError("q must satisfy q >= 1");
}

void require_holder(const HolderParams& hp) {
  if (!(hp.q > 1.0) || !std::isfinite(hp.q)) throw AdmissibilityError("Hoelder bound needs q > 1");
  if (!(hp.p > 0.0) || !(hp.p <= hp.q)) throw AdmissibilityError("Hoelder bound needs 0 < p <= q");
}

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

double log_add_exp(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

// Distances from the shift to the two ends of its half interval.
std::pair<double, double> half_gaps(double shift, KernelSide side) {
  if (side == KernelSide::Left) return {0.5 - shift, shift};
  return {shift - 0.5, 1.0 - shift};
}

// log of int |s - t|^((q-p)/(q-1)) dt over the half. The p = 1 and p = q cases are
// written out so they stay defined at q = 1.
double log_hoelder(double shift, KernelSide side, double p, double q) {
  const auto [g1, g2] = half_gaps(shift, side);
  if (p == q) return std::log(0.5);
  double r, c;
  if (p == 1.0) {
    r = 2.0;
    c = 0.5;
  } else {
    r = (2.0 * q - p - 1.0) / (q - 1.0);
    c = (q - 1.0) / (2.0 * q - p - 1.0);
  }
  if (!std::isfinite(r)) throw std::range_error("kernel exponent overflow as q approaches 1");
  return std::log(c) + log_add_exp(r * safe_log(g1), r * safe_log(g2));
}

std::pair<double, double> moment_weights(double shift, KernelSide side, double p) {
  const double norm = (p + 1.0) * (p + 2.0);
  if (side == KernelSide::Left) {
    const double lam = shift;
    const double g = 0.5 - lam;
    const double wa = 0.5 * (p + 1.0 + 2.0 * lam) * std::pow(g, p + 1.0) + std::pow(lam, p + 2.0);
    const double wb = 0.5 * (p + 3.0 - 2.0 * lam) * std::pow(g, p + 1.0) + (p + 2.0 - lam) * std::pow(lam, p + 1.0);
    return {wa / norm, wb / norm};
  }
  const double mu = shift;
  const double g = mu - 0.5;
  const double wa = 0.5 * (p + 1.0 + 2.0 * mu) * std::pow(g, p + 1.0) + (p + 1.0 + mu) * std::pow(1.0 - mu, p + 1.0);
  const double wb = 0.5 * (p + 3.0 - 2.0 * mu) * std::pow(g, p + 1.0) + std::pow(1.0 - mu, p + 2.0);
  return {wa / norm, wb / norm};
}

// (weight_a da^q + weight_b db^q)^(1/q), with the larger magnitude factored out.
double weighted_power_mean(double wa, double wb, const DerivEndpoints& d, double q) {
  const double scale = std::max(d.da, d.db);
  if (scale == 0.0) return 0.0;
  const double sa = d.da / scale;
  const double sb = d.db / scale;
  return scale * std::pow(wa * std::pow(sa, q) + wb * std::pow(sb, q), 1.0 / q);
}

double assemble(const RuleParams& rule, double p, double q, const DerivEndpoints& d, const Interval& interval) {
  double total = 0.0;
  for (auto [shift, side] : {std::pair{rule.lambda, KernelSide::Left}, std::pair{rule.mu, KernelSide::Right}}) {
    const double log_h = log_hoelder(shift, side, p, q);
    const auto [wa, wb] = moment_weights(shift, side, p);
    total += std::exp((1.0 - 1.0 / q) * log_h) * weighted_power_mean(wa, wb, d, q);
  }
  return interval.width() * total;
}

double kink_safe_abs_eval(const Expr& fprime, double x, double towards) {
  try {
    return std::fabs(fprime.eval(x));
  } catch (const DomainError& e) {
    if (!e.kink()) throw;
    return std::fabs(fprime.eval(std::nextafter(x, towards)));
  }
}

}  // namespace

DerivEndpoints DerivEndpoints::checked(double da, double db) {
  if (!(da >= 0.0) || !(db >= 0.0) || !std::isfinite(da) || !std::isfinite(db)) {
    throw std::invalid_argument("derivative magnitudes must be finite and nonnegative");
  }
  return DerivEndpoints{da, db};
}

DerivEndpoints DerivEndpoints::of(const Expr& fprime, const Interval& interval) {
  return checked(kink_safe_abs_eval(fprime, interval.a(), interval.b()),
                 kink_safe_abs_eval(fprime, interval.b(), interval.a()));
}

KernelMoments kernel_moments_closed(double shift, KernelSide side, const HolderParams& hp) {
  require_holder(hp);
  const bool left = side == KernelSide::Left;
  if (left ? !(shift >= 0.0 && shift <= 0.5) : !(shift >= 0.5 && shift <= 1.0)) {
    throw AdmissibilityError(left ? "left shift must lie in [0, 1/2]" : "right shift must lie in [1/2, 1]");
  }
  const double log_h = log_hoelder(shift, side, hp.p, hp.q);
  const auto [wa, wb] = moment_weights(shift, side, hp.p);
  return KernelMoments{std::exp(log_h), log_h, wa, wb};
}

double bound_q1(const RuleParams& rule, const DerivEndpoints& d, const Interval& interval) {
  require_admissible(rule);
  const double l = rule.lambda;
  const double m = rule.mu;
  const double ca = 10.0 - 3.0 * l + 8.0 * l * l * l - 15.0 * m + 8.0 * m * m * m;
  const double cb = 8.0 - 9.0 * l + 24.0 * l * l - 8.0 * l * l * l - 21.0 * m + 24.0 * m * m - 8.0 * m * m * m;
  return interval.width() / 24.0 * (ca * d.da + cb * d.db);
}

double bound_pq(const RuleParams& rule, const HolderParams& hp, const DerivEndpoints& d, const Interval& interval) {
  require_admissible(rule);
  require_holder(hp);
  return assemble(rule, hp.p, hp.q, d, interval);
}

double bound_p1(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval) {
  require_admissible(rule);
  require_q_at_least_one(q);
  return assemble(rule, 1.0, q, d, interval);
}

double bound_p_equals_q(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval) {
  require_admissible(rule);
  require_q_at_least_one(q);
  return assemble(rule, q, q, d, interval);
}

double bound_with_mode(const RuleParams& rule, const BoundMode& mode, const DerivEndpoints& d,
                       const Interval& interval) {
  switch (mode.kind) {
    case BoundMode::Kind::Q1:
      return bound_q1(rule, d, interval);
    case BoundMode::Kind::P1:
      return bound_p1(rule, mode.q, d, interval);
    case BoundMode::Kind::PEqualsQ:
      return bound_p_equals_q(rule, mode.q, d, interval);
    case BoundMode::Kind::General:
      return bound_pq(rule, HolderParams{mode.p, mode.q}, d, interval);
  }
  throw std::logic_error("unknown bound mode");
}

double bound_named(NamedRule rule, const BoundMode& mode, const DerivEndpoints& d, const Interval& interval) {
  return bound_with_mode(rule_from_lm(lm_of(rule)), mode, d, interval);
}

std::string formula_id(RuleForm form, BoundMode::Kind kind, std::string_view rule_name) {
  using K = BoundMode::Kind;
  switch (form) {
    case RuleForm::LambdaMu:
      switch (kind) {
        case K::Q1: return "thm3.1";
        case K::General: return "thm3.2";
        case K::P1: return "cor3.1-p1";
        case K::PEqualsQ: return "cor3.1-pq";
      }
      break;
    case RuleForm::MEll:
      switch (kind) {
        case K::Q1: return "thm3.1";
        case K::General: return "cor3.2";
        case K::P1: return "cor3.3-p1";
        case K::PEqualsQ: return "cor3.3-pq";
      }
      break;
    case RuleForm::Named: {
      const std::string suffix = "-" + std::string(rule_name);
      switch (kind) {
        case K::General: return "cor3.4" + suffix;
        case K::PEqualsQ: return "cor3.5" + suffix;
        case K::P1: return "cor3.6" + suffix;
        case K::Q1: return "cor3.7" + suffix;
      }
      break;
    }
  }
  throw std::logic_error("unknown formula");
}

POptimum optimize_p(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval) {
  require_admissible(rule);
  if (!(q > 1.0) || !std::isfinite(q)) throw AdmissibilityError("optimising over p needs q > 1");

  constexpr int kGrid = 64;
  const double log_lo = std::log(q * 1e-6);
  const double log_hi = std::log(q);
  std::vector<double> grid(kGrid);
  for (int i = 0; i < kGrid; ++i) grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (kGrid - 1));
  grid.back() = q;

  auto objective = [&](double p) { return assemble(rule, p, q, d, interval); };
  ScalarMinimum best = grid_then_golden(objective, grid, 1e-9 * q);

  for (double candidate : {1.0, q}) {
    if (candidate > q) continue;
    const double v = objective(candidate);
    if (v < best.value) best = ScalarMinimum{candidate, v};
  }
  return POptimum{best.x, best.value};
}

RuleOptimum optimize_rule(const BoundMode& mode, const DerivEndpoints& d, const Interval& interval) {
  constexpr int kScan = 33;
  constexpr double kTol = 1e-6;
  std::array<double, kScan> lambda_grid{};
  std::array<double, kScan> mu_grid{};
  for (int i = 0; i < kScan; ++i) {
    lambda_grid[i] = 0.5 * i / (kScan - 1);
    mu_grid[i] = 0.5 + 0.5 * i / (kScan - 1);
  }

  auto value = [&](double lambda, double mu) { return bound_with_mode(RuleParams{lambda, mu}, mode, d, interval); };

  RuleOptimum best{RuleParams{0.0, 1.0}, std::numeric_limits<double>::infinity()};
  for (double lambda0 : {0.0, 0.25, 0.5}) {
    for (double mu0 : {0.5, 0.75, 1.0}) {
      double lambda = lambda0;
      double mu = mu0;
      double current = value(lambda, mu);
      for (int sweep = 0; sweep < 100; ++sweep) {
        const ScalarMinimum along_lambda =
            grid_then_golden([&](double l) { return value(l, mu); }, lambda_grid, 0.1 * kTol);
        const double new_lambda = along_lambda.value <= current ? along_lambda.x : lambda;
        current = std::min(current, along_lambda.value);
        const ScalarMinimum along_mu =
            grid_then_golden([&](double m) { return value(new_lambda, m); }, mu_grid, 0.1 * kTol);
        const double new_mu = along_mu.value <= current ? along_mu.x : mu;
        current = std::min(current, along_mu.value);
        const bool settled = std::fabs(new_lambda - lambda) < kTol && std::fabs(new_mu - mu) < kTol;
        lambda = new_lambda;
        mu = new_mu;
        if (settled) break;
      }
      if (current < best.rhs_star) best = RuleOptimum{RuleParams{lambda, mu}, current};
    }
  }
  return best;
}

}  // namespace hhb
