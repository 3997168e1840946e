#include "hhbounds/report.hpp"

#include <cmath>
#include <string>

#include "hhbounds/expr.hpp"
#include "hhbounds/format.hpp"

namespace hhb {

namespace {

void require_defined(const Expr& e, const Interval& interval, const char* what) {
  const DomainReport report = domain_check(e, interval);
  if (report.ok()) return;
  std::string message = std::string(what) + " is not defined on all of [a, b]:";
  for (const auto& v : report.violations) {
    message += " " + v.subexpression + " (" + v.reason + " near x = " + format_double(v.witness) + ");";
  }
  message.pop_back();
  throw DomainError(message);
}

const char* p_choice_name(PChoice choice) {
  switch (choice) {
    case PChoice::Given: return "given";
    case PChoice::Optimized: return "optimized";
    case PChoice::NotApplicable: break;
  }
  return "none";
}

}  // namespace

RuleSpec RuleSpec::from_lambda_mu(double lambda, double mu) {
  RuleSpec spec;
  spec.form = RuleForm::LambdaMu;
  spec.params = RuleParams{lambda, mu};
  return spec;
}

RuleSpec RuleSpec::from_lm(double m, double ell) {
  RuleSpec spec;
  spec.form = RuleForm::MEll;
  spec.lm = LMRule{m, ell};
  spec.params = rule_from_lm(spec.lm);
  return spec;
}

RuleSpec RuleSpec::from_named(NamedRule rule) {
  RuleSpec spec;
  spec.form = RuleForm::Named;
  spec.named = rule;
  spec.lm = lm_of(rule);
  spec.params = rule_from_lm(spec.lm);
  return spec;
}

BoundMode select_mode(double q, std::optional<double> p) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw AdmissibilityError("q must satisfy q >= 1");
  if (q == 1.0) {
    if (p && *p != 1.0) throw AdmissibilityError("q = 1 admits only p = 1");
    return BoundMode::q1();
  }
  if (!p) return BoundMode::general(q, q);  // p is filled in by the optimiser
  if (*p == 1.0) return BoundMode::p1(q);
  if (*p == q) return BoundMode::p_equals_q(q);
  return BoundMode::general(*p, q);
}

BoundReport evaluate_bound(const BoundRequest& request) {
  BoundReport report;
  report.request = request;
  const Interval interval(request.a, request.b);
  const Expr f = parse(request.function);
  require_defined(f, interval, "f");
  const Expr fprime = differentiate(f);
  require_defined(fprime, interval, "f'");

  const RuleParams& rule = request.rule.params;
  if (!rule.bound_admissible()) {
    throw AdmissibilityError("rule (lambda, mu) = (" + std::to_string(rule.lambda) + ", " + std::to_string(rule.mu) +
                             ") violates 0 <= lambda <= 1/2 <= mu <= 1");
  }
  if (request.rule.form != RuleForm::LambdaMu && !request.rule.lm.bound_admissible()) {
    throw AdmissibilityError("(m, ell) must satisfy m > 0 and m >= 2 ell >= 0");
  }

  report.mode = select_mode(request.q, request.p);
  if (request.q > 1.0) report.p_choice = request.p ? PChoice::Given : PChoice::Optimized;

  auto g = [&f](double x) { return f.eval(x); };
  const QuadratureResult integral = integrate(g, interval, request.tol * interval.width());
  report.quadrature_evaluations = integral.evaluations;
  report.mean_integral = integral.value / interval.width();
  report.lhs = lhs_value(rule, f, interval, report.mean_integral);
  report.lhs_abs = std::fabs(report.lhs);

  report.endpoints = DerivEndpoints::of(fprime, interval);
  CertifyOptions options;
  options.samples = request.certificate_samples;
  options.tol = request.certificate_tol;
  options.seed = request.seed;
  options.function_id = request.function;
  report.certificate = certify_derivative_power(fprime, request.q, interval, options);

  if (report.p_choice == PChoice::Optimized) {
    const POptimum best = optimize_p(rule, request.q, report.endpoints, interval);
    report.mode = BoundMode::general(best.p_star, request.q);
    report.rhs = best.rhs_star;
  } else {
    report.rhs = bound_with_mode(rule, report.mode, report.endpoints, interval);
  }
  report.slack = report.rhs - report.lhs_abs;
  report.formula_id = formula_id(request.rule.form, report.mode.kind, request.rule.name());
  return report;
}

nlohmann::ordered_json rule_to_json(const RuleSpec& rule) {
  nlohmann::ordered_json j;
  switch (rule.form) {
    case RuleForm::LambdaMu:
      j["form"] = "lambda-mu";
      break;
    case RuleForm::MEll:
      j["form"] = "m-ell";
      break;
    case RuleForm::Named:
      j["form"] = "named";
      j["name"] = std::string(rule.name());
      break;
  }
  if (rule.form != RuleForm::LambdaMu) {
    j["m"] = rule.lm.m;
    j["ell"] = rule.lm.ell;
  }
  j["lambda"] = rule.params.lambda;
  j["mu"] = rule.params.mu;
  return j;
}

nlohmann::ordered_json certificate_to_json(const ConvexityCertificate& c) {
  nlohmann::ordered_json j;
  j["valid"] = c.valid;
  j["samples"] = c.samples;
  j["max_violation"] = c.max_violation;
  j["tolerance"] = c.tolerance;
  j["kind"] = "sampled midpoint convexity of |f'|^q (evidence, not proof)";
  if (c.witness) j["witness"] = {c.witness->first, c.witness->second};
  return j;
}

nlohmann::ordered_json report_to_json(const BoundReport& r, std::optional<double> wall_seconds) {
  const BoundRequest& q = r.request;
  nlohmann::ordered_json config;
  config["command"] = "bound";
  config["f"] = q.function;
  config["a"] = q.a;
  config["b"] = q.b;
  config["rule"] = rule_to_json(q.rule);
  config["q"] = q.q;
  config["p"] = q.p ? nlohmann::ordered_json(*q.p) : nlohmann::ordered_json(nullptr);
  config["tol"] = q.tol;
  config["certificate_samples"] = q.certificate_samples;
  config["seed"] = q.seed;

  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = std::move(config);
  j["mean_integral"] = r.mean_integral;
  j["lhs"] = r.lhs;
  j["lhs_abs"] = r.lhs_abs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["formula_id"] = r.formula_id;
  j["p_used"] = r.mode.kind == BoundMode::Kind::Q1 ? nlohmann::ordered_json(1.0) : nlohmann::ordered_json(r.mode.p);
  j["p_choice"] = p_choice_name(r.p_choice);
  j["derivative_endpoints"] = {{"da", r.endpoints.da}, {"db", r.endpoints.db}};
  j["certificate"] = certificate_to_json(r.certificate);
  nlohmann::ordered_json timings;
  timings["quadrature_evaluations"] = r.quadrature_evaluations;
  timings["certificate_pairs"] = r.certificate.samples;
  if (wall_seconds) timings["wall_seconds"] = *wall_seconds;
  j["timings"] = std::move(timings);
  return j;
}

}  // namespace hhb
