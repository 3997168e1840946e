#include "hhbounds/means.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hhbounds/bounds.hpp"
#include "hhbounds/convexity.hpp"
#include "hhbounds/format.hpp"

namespace hhb {

namespace {

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("means need finite positive arguments");
  }
}

double log_identric(double a, double b) {
  if (a == b) return std::log(a);
  return (b * std::log(b) - a * std::log(a)) / (b - a) - 1.0;
}

struct TheoremInfo {
  MeansTheorem theorem;
  std::string_view id;
};

constexpr std::array<TheoremInfo, 12> kTheorems = {{
    {MeansTheorem::PowerGeneral, "4.1"},
    {MeansTheorem::PowerP1, "4.2-p1"},
    {MeansTheorem::PowerPQ, "4.2-pq"},
    {MeansTheorem::PowerParticular, "4.2-particular"},
    {MeansTheorem::HarmonicGeneral, "4.3"},
    {MeansTheorem::HarmonicP1, "4.3-p1"},
    {MeansTheorem::HarmonicPQ, "4.3-pq"},
    {MeansTheorem::HarmonicParticular, "4.3-particular"},
    {MeansTheorem::LogGeneral, "4.4"},
    {MeansTheorem::LogP1, "4.5-p1"},
    {MeansTheorem::LogPQ, "4.5-pq"},
    {MeansTheorem::LogParticular, "4.5-particular"},
}};

enum class Family { Power, Harmonic, Log };

Family family_of(MeansTheorem t) {
  switch (t) {
    case MeansTheorem::PowerGeneral:
    case MeansTheorem::PowerP1:
    case MeansTheorem::PowerPQ:
    case MeansTheorem::PowerParticular:
      return Family::Power;
    case MeansTheorem::HarmonicGeneral:
    case MeansTheorem::HarmonicP1:
    case MeansTheorem::HarmonicPQ:
    case MeansTheorem::HarmonicParticular:
      return Family::Harmonic;
    default:
      return Family::Log;
  }
}

BoundMode mode_of(MeansTheorem t, const MeansParams& params) {
  switch (t) {
    case MeansTheorem::PowerGeneral:
    case MeansTheorem::HarmonicGeneral:
    case MeansTheorem::LogGeneral:
      return BoundMode::general(params.p, params.q);
    case MeansTheorem::PowerP1:
    case MeansTheorem::HarmonicP1:
    case MeansTheorem::LogP1:
      return BoundMode::p1(params.q);
    case MeansTheorem::PowerPQ:
    case MeansTheorem::HarmonicPQ:
    case MeansTheorem::LogPQ:
      return BoundMode::p_equals_q(params.q);
    default:
      return BoundMode::q1();
  }
}

void require_lm(double m, double ell) {
  if (!LMRule{m, ell}.bound_admissible()) throw AdmissibilityError("(m, ell) must satisfy m > 0 and m >= 2 ell >= 0");
}

}  // namespace

std::optional<MeanKind::Kind> mean_kind_from_string(std::string_view name) noexcept {
  using K = MeanKind::Kind;
  if (name == "A") return K::A;
  if (name == "G") return K::G;
  if (name == "H") return K::H;
  if (name == "L") return K::L;
  if (name == "I") return K::I;
  if (name == "Ls") return K::Ls;
  return std::nullopt;
}

double power_mean_value(double s, double a, double b) {
  require_positive(a, b);
  if (a == b) return std::pow(a, s);
  if (s == -1.0) return (std::log(b) - std::log(a)) / (b - a);
  const double k = s + 1.0;
  // b^k - a^k = a^k expm1(k ln(b / a)) keeps precision for k near 0.
  return std::pow(a, k) * std::expm1(k * std::log(b / a)) / (k * (b - a));
}

double compute_mean(const MeanKind& kind, double a, double b) {
  require_positive(a, b);
  using K = MeanKind::Kind;
  switch (kind.kind) {
    case K::A:
      return 0.5 * (a + b);
    case K::G:
      return std::sqrt(a * b);
    case K::H:
      return 2.0 * a * b / (a + b);
    case K::L:
      return a == b ? a : (b - a) / (std::log(b) - std::log(a));
    case K::I:
      return a == b ? a : std::exp(log_identric(a, b));
    case K::Ls:
      if (a == b) return a;
      if (kind.s == -1.0) return compute_mean(MeanKind::logarithmic(), a, b);
      if (kind.s == 0.0) return compute_mean(MeanKind::identric(), a, b);
      return std::pow(power_mean_value(kind.s, a, b), 1.0 / kind.s);
  }
  throw std::logic_error("unknown mean");
}

double means_gap_power(double m, double ell, double s, double a, double b) {
  require_positive(a, b);
  require_lm(m, ell);
  if (s == 0.0 || !std::isfinite(s)) throw std::invalid_argument("power means gap needs finite s != 0");
  const double endpoint_mean = 0.5 * (std::pow(a, s) + std::pow(b, s));
  const double mid_power = std::pow(0.5 * (a + b), s);
  return (2.0 * ell * endpoint_mean + (m - 2.0 * ell) * mid_power) / m - power_mean_value(s, a, b);
}

double means_gap_log(double m, double ell, double a, double b) {
  require_positive(a, b);
  require_lm(m, ell);
  const double ln_g = 0.5 * (std::log(a) + std::log(b));
  const double ln_a = std::log(0.5 * (a + b));
  return (2.0 * ell * ln_g + (m - 2.0 * ell) * ln_a) / m - log_identric(a, b);
}

std::string_view means_theorem_id(MeansTheorem t) noexcept {
  for (const auto& info : kTheorems) {
    if (info.theorem == t) return info.id;
  }
  return {};
}

std::optional<MeansTheorem> means_theorem_from_string(std::string_view id) noexcept {
  for (const auto& info : kTheorems) {
    if (info.id == id) return info.theorem;
  }
  return std::nullopt;
}

double means_gap(MeansTheorem t, const MeansParams& params, double a, double b) {
  switch (family_of(t)) {
    case Family::Power:
      return means_gap_power(params.m, params.ell, params.s, a, b);
    case Family::Harmonic:
      return means_gap_power(params.m, params.ell, -1.0, a, b);
    case Family::Log:
      return means_gap_log(params.m, params.ell, a, b);
  }
  throw std::logic_error("unknown theorem family");
}

double means_bound(MeansTheorem t, const MeansParams& params, double a, double b) {
  require_positive(a, b);
  if (a > b) throw std::invalid_argument("means bounds take a <= b");
  require_lm(params.m, params.ell);
  const BoundMode mode = mode_of(t, params);
  const Family family = family_of(t);

  if (family == Family::Power) {
    if (params.s == 0.0 || !std::isfinite(params.s)) throw AdmissibilityError("power family needs finite s != 0");
    if (!admissible_power(params.s, mode.q)) {
      throw AdmissibilityError("|f'|^q is not convex for f = x^s with (s, q) = (" + format_double(params.s) + ", " +
                               format_double(mode.q) + "): need s > 1 and (s - 1) q >= 1, or s < 1 and s != 0");
    }
  }

  DerivEndpoints d;
  switch (family) {
    case Family::Power: {
      const double s = params.s;
      d = DerivEndpoints::checked(std::fabs(s) * std::pow(a, s - 1.0), std::fabs(s) * std::pow(b, s - 1.0));
      break;
    }
    case Family::Harmonic:
      d = DerivEndpoints::checked(1.0 / (a * a), 1.0 / (b * b));
      break;
    case Family::Log:
      d = DerivEndpoints::checked(1.0 / a, 1.0 / b);
      break;
  }
  const RuleParams rule = rule_from_lm(LMRule{params.m, params.ell});
  if (a == b) {
    bound_with_mode(rule, mode, d, Interval(a, a + 1.0));  // validates the mode's hypotheses
    return 0.0;
  }
  return bound_with_mode(rule, mode, d, Interval(a, b));
}

}  // namespace hhb
