#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "hhbounds/bounds.hpp"
#include "hhbounds/convexity.hpp"
#include "hhbounds/oracle.hpp"
#include "hhbounds/rules.hpp"

namespace hhb {

/// A rule together with the form it was specified in, which decides the formula id.
struct RuleSpec {
  RuleForm form = RuleForm::LambdaMu;
  RuleParams params;
  LMRule lm;                        // MEll and Named
  std::optional<NamedRule> named;   // Named

  static RuleSpec from_lambda_mu(double lambda, double mu);
  static RuleSpec from_lm(double m, double ell);
  static RuleSpec from_named(NamedRule rule);

  std::string_view name() const noexcept { return named ? rule_name(*named) : std::string_view{}; }
};

/// How p was chosen for the reported bound.
enum class PChoice { NotApplicable, Given, Optimized };

struct BoundRequest {
  std::string function;
  double a = 0.0;
  double b = 1.0;
  RuleSpec rule;
  double q = 1.0;
  std::optional<double> p;
  double tol = kDefaultQuadratureTol;
  std::size_t certificate_samples = 4096;
  double certificate_tol = 1e-10;
  std::uint64_t seed = 0;
};

/// One evaluated instance. slack = rhs - lhs_abs; it is asserted nonnegative only when the
/// certificate is valid.
struct BoundReport {
  BoundRequest request;
  BoundMode mode;
  PChoice p_choice = PChoice::NotApplicable;
  double mean_integral = 0.0;
  double lhs = 0.0;
  double lhs_abs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  DerivEndpoints endpoints;
  std::string formula_id;
  ConvexityCertificate certificate;
  std::size_t quadrature_evaluations = 0;
};

/// q == 1 uses the q = 1 bound. For q > 1 an explicit p selects the p = 1, p = q or general
/// path; without p the general bound is minimised over p.
BoundMode select_mode(double q, std::optional<double> p);

/// Throws DomainError when f or f' is undefined somewhere on [a, b] (message lists every
/// offending subexpression), ParseError, AdmissibilityError, ConvergenceError.
BoundReport evaluate_bound(const BoundRequest& request);

nlohmann::ordered_json rule_to_json(const RuleSpec& rule);
nlohmann::ordered_json certificate_to_json(const ConvexityCertificate& certificate);

/// The versioned report document. Wall-clock time is included only when given, so the default
/// output is byte-identical across runs.
nlohmann::ordered_json report_to_json(const BoundReport& report, std::optional<double> wall_seconds = std::nullopt);

}  // namespace hhb
