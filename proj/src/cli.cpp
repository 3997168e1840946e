#include "hhbounds/cli.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhbounds/bounds.hpp"
#include "hhbounds/format.hpp"
#include "hhbounds/generator.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/report.hpp"

namespace hhb {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name, bool csv_allowed) {
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  if (name == "csv") {
    if (!csv_allowed) throw UsageError("--format csv is only available for sweep");
    return Format::Csv;
  }
  throw UsageError("unknown --format '" + name + "' (json, csv or text)");
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

/// Flags shared by the commands that evaluate a single instance.
struct InstanceFlags {
  std::string f;
  double a = 0.0;
  double b = 0.0;
  std::string rule;
  double lambda = 0.0;
  double mu = 0.0;
  double m = 0.0;
  double ell = 0.0;
  double q = 1.0;
  double p = 1.0;
  double tol = kDefaultQuadratureTol;
  std::size_t samples = 4096;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timings = false;

  CLI::Option* f_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* rule_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* ell_opt = nullptr;
  CLI::Option* p_opt = nullptr;

  void attach(CLI::App* app, bool with_rule = true, const char* formats = "json or text") {
    f_opt = app->add_option("--f", f, "function of x, e.g. \"x^2\" or \"ln(x)\"");
    a_opt = app->add_option("--a", a, "left endpoint");
    b_opt = app->add_option("--b", b, "right endpoint (> a)");
    if (with_rule) {
      rule_opt = app->add_option("--rule", rule, "named rule: midpoint, trapezoid, avg3, avg-mid, fifth-13, fifth-221, simpson");
      lambda_opt = app->add_option("--lambda", lambda, "rule parameter lambda (with --mu)");
      mu_opt = app->add_option("--mu", mu, "rule parameter mu (with --lambda)");
      m_opt = app->add_option("--m", m, "rule parameter m (with --ell)");
      ell_opt = app->add_option("--ell", ell, "rule parameter ell (with --m)");
    }
    app->add_option("--q", q, "exponent q >= 1 in the convexity hypothesis on |f'|^q")->capture_default_str();
    p_opt = app->add_option("--p", p, "Hoelder split 0 < p <= q; optimised when omitted and q > 1");
    app->add_option("--tol", tol, "quadrature tolerance")->capture_default_str();
    app->add_option("--samples", samples, "convexity certificate samples (>= 64)")->capture_default_str();
    app->add_option("--seed", seed, "certificate seed")->capture_default_str();
    app->add_option("--format", format, formats)->capture_default_str();
    app->add_flag("--timings", timings, "add wall-clock seconds to the JSON timings block");
  }

  void require_instance(bool need_f = true) const {
    if (need_f && !*f_opt) throw UsageError("--f is required");
    if (!*a_opt || !*b_opt) throw UsageError("--a and --b are required");
  }

  RuleSpec rule_spec() const {
    const int forms = (*rule_opt ? 1 : 0) + ((*lambda_opt || *mu_opt) ? 1 : 0) + ((*m_opt || *ell_opt) ? 1 : 0);
    if (forms != 1) throw UsageError("give exactly one rule: --rule NAME, --lambda with --mu, or --m with --ell");
    if (*rule_opt) {
      const auto named = named_rule_from_string(rule);
      if (!named) throw UsageError("unknown rule '" + rule + "'");
      return RuleSpec::from_named(*named);
    }
    if (*lambda_opt || *mu_opt) {
      if (!*lambda_opt || !*mu_opt) throw UsageError("--lambda and --mu go together");
      return RuleSpec::from_lambda_mu(lambda, mu);
    }
    if (!*m_opt || !*ell_opt) throw UsageError("--m and --ell go together");
    return RuleSpec::from_lm(m, ell);
  }

  std::optional<double> p_value() const { return *p_opt ? std::optional<double>(p) : std::nullopt; }

  BoundRequest request(RuleSpec spec) const {
    BoundRequest r;
    r.function = f;
    r.a = a;
    r.b = b;
    r.rule = std::move(spec);
    r.q = q;
    r.p = p_value();
    r.tol = tol;
    r.certificate_samples = samples;
    r.seed = seed;
    return r;
  }
};

int exit_code_for(bool certificate_valid, double slack) {
  if (!certificate_valid) return kExitCertificateInvalid;
  return slack >= 0.0 ? kExitOk : kExitBoundViolated;
}

std::string describe_rule(const RuleSpec& rule) {
  std::string s;
  if (rule.named) s = std::string(rule.name()) + " ";
  if (rule.form != RuleForm::LambdaMu) s += "(m = " + format_double(rule.lm.m) + ", ell = " + format_double(rule.lm.ell) + ") ";
  return s + "(lambda = " + format_double(rule.params.lambda) + ", mu = " + format_double(rule.params.mu) + ")";
}

void print_bound_text(std::ostream& out, const BoundReport& r) {
  const auto& c = r.certificate;
  out << "f            " << r.request.function << " on [" << format_double(r.request.a) << ", "
      << format_double(r.request.b) << "]\n"
      << "rule         " << describe_rule(r.request.rule) << "\n"
      << "q            " << format_double(r.request.q) << "\n";
  if (r.mode.kind != BoundMode::Kind::Q1) {
    out << "p            " << format_double(r.mode.p) << (r.p_choice == PChoice::Optimized ? " (optimized)" : "") << "\n";
  }
  out << "formula      " << r.formula_id << "\n"
      << "lhs          " << format_double(r.lhs) << "\n"
      << "|lhs|        " << format_double(r.lhs_abs) << "\n"
      << "rhs          " << format_double(r.rhs) << "\n"
      << "slack        " << format_double(r.slack) << "\n"
      << "certificate  " << (c.valid ? "valid" : "INVALID") << " (" << c.samples
      << " pairs, max violation " << format_double(c.max_violation) << ")\n";
  if (!c.valid) out << "note         |f'|^q failed the convexity check; the bound is not asserted\n";
}

int cmd_bound(const InstanceFlags& flags, std::ostream& out) {
  const Format format = parse_format(flags.format, false);
  flags.require_instance();
  const auto start = std::chrono::steady_clock::now();
  const BoundReport report = evaluate_bound(flags.request(flags.rule_spec()));
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (format == Format::Json) {
    emit_json(out, report_to_json(report, flags.timings ? std::optional<double>(wall) : std::nullopt));
  } else {
    print_bound_text(out, report);
  }
  return exit_code_for(report.certificate.valid, report.slack);
}

// ---------------------------------------------------------------------------------------------
// sweep

struct SweepFlags {
  std::string axis;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  bool mirror = false;
  CLI::Option* from_opt = nullptr;
  CLI::Option* to_opt = nullptr;
  CLI::Option* step_opt = nullptr;
};

std::vector<double> sweep_grid(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) throw UsageError("sweep range must be finite");
  if (from == to) return {from};
  if (!(step > 0.0) || to < from) throw UsageError("empty sweep grid: need --from <= --to and --step > 0");
  const double count = std::floor((to - from) / step * (1.0 + 1e-12)) + 1.0;
  if (count > 1e6) throw UsageError("sweep grid has more than 10^6 points");
  std::vector<double> grid;
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) grid.push_back(std::min(to, from + i * step));
  return grid;
}

int cmd_sweep(const InstanceFlags& flags, const SweepFlags& sweep, std::ostream& out) {
  const Format format = parse_format(flags.format, true);
  if (!*sweep.from_opt || !*sweep.to_opt) throw UsageError("--from and --to are required");
  const std::vector<double> grid = sweep_grid(sweep.from, sweep.to, *sweep.step_opt ? sweep.step : 0.0);
  const std::string& axis = sweep.axis;
  if (axis != "lambda" && axis != "mu" && axis != "p" && axis != "q" && axis != "s") {
    throw UsageError("--axis must be one of lambda, mu, p, q, s");
  }
  flags.require_instance(axis != "s");
  if (axis == "s" && *flags.f_opt) throw UsageError("--axis s sweeps f(x) = x^s; drop --f");
  if (sweep.mirror && axis != "lambda" && axis != "mu") throw UsageError("--mirror applies to the lambda and mu axes");

  auto request_at = [&](double v) {
    RuleSpec spec;
    if (axis == "lambda") {
      if (!sweep.mirror && !*flags.mu_opt) throw UsageError("--axis lambda needs --mu or --mirror");
      spec = RuleSpec::from_lambda_mu(v, sweep.mirror ? 1.0 - v : flags.mu);
    } else if (axis == "mu") {
      if (!sweep.mirror && !*flags.lambda_opt) throw UsageError("--axis mu needs --lambda or --mirror");
      spec = RuleSpec::from_lambda_mu(sweep.mirror ? 1.0 - v : flags.lambda, v);
    } else {
      spec = flags.rule_spec();
    }
    BoundRequest r = flags.request(spec);
    if (axis == "p") r.p = v;
    if (axis == "q") r.q = v;
    if (axis == "s") r.function = "x^" + format_double(v);
    return r;
  };

  std::vector<BoundReport> rows;
  rows.reserve(grid.size());
  for (double v : grid) rows.push_back(evaluate_bound(request_at(v)));

  bool all_valid = true;
  bool all_hold = true;
  for (const auto& r : rows) {
    all_valid = all_valid && r.certificate.valid;
    all_hold = all_hold && (!r.certificate.valid || r.slack >= 0.0);
  }

  if (format == Format::Csv) {
    out << "axis,value,lhs_abs,rhs,slack,formula_id\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = rows[i];
      out << axis << ',' << format_double(grid[i]) << ',' << format_double(r.lhs_abs) << ',' << format_double(r.rhs)
          << ',' << format_double(r.slack) << ',' << r.formula_id << '\n';
    }
  } else if (format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["config"] = {{"command", "sweep"}, {"axis", axis}, {"from", sweep.from}, {"to", sweep.to},
                   {"step", *sweep.step_opt ? json(sweep.step) : json(nullptr)}, {"mirror", sweep.mirror}};
    json points = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = rows[i];
      points.push_back({{"value", grid[i]}, {"lhs_abs", r.lhs_abs}, {"rhs", r.rhs}, {"slack", r.slack},
                        {"formula_id", r.formula_id}, {"p_used", r.mode.p},
                        {"certificate_valid", r.certificate.valid}});
    }
    j["points"] = std::move(points);
    emit_json(out, j);
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = rows[i];
      out << axis << " = " << format_double(grid[i]) << ": |lhs| = " << format_double(r.lhs_abs)
          << ", rhs = " << format_double(r.rhs) << ", slack = " << format_double(r.slack) << " [" << r.formula_id
          << (r.certificate.valid ? "" : ", certificate invalid") << "]\n";
    }
  }
  if (!all_valid) return kExitCertificateInvalid;
  return all_hold ? kExitOk : kExitBoundViolated;
}

// ---------------------------------------------------------------------------------------------
// verify

struct VerifyFlags {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double q = 1.0;
  std::string family = "mixed";
  std::size_t threads = 0;
  std::size_t samples = 4096;
  std::string format = "json";
  bool timings = false;
  bool all = false;
  CLI::Option* q_opt = nullptr;
};

std::string reproduce_command(const TrialRecord& t, const PathCheck& c) {
  std::string cmd = "hhbounds bound --f \"" + t.function + "\" --a " + format_double(t.a) + " --b " + format_double(t.b) +
                    " --lambda " + format_double(t.rule.lambda) + " --mu " + format_double(t.rule.mu) + " --q " +
                    format_double(t.q);
  if (c.formula_id != "thm3.1") cmd += " --p " + format_double(c.p);
  return cmd;
}

json trial_to_json(const TrialRecord& t) {
  json j;
  j["index"] = t.index;
  j["family"] = t.family;
  j["f"] = t.function;
  j["a"] = t.a;
  j["b"] = t.b;
  j["lambda"] = t.rule.lambda;
  j["mu"] = t.rule.mu;
  j["q"] = t.q;
  j["lhs"] = t.lhs;
  j["lhs_abs"] = t.lhs_abs;
  j["certified"] = t.certified;
  j["certified_q1"] = t.certified_q1;
  json checks = json::array();
  for (const auto& c : t.checks) {
    json cj = {{"formula_id", c.formula_id}, {"p", c.p}, {"rhs", c.rhs}, {"slack", c.slack}, {"violated", c.violated}};
    if (c.violated) cj["reproduce"] = reproduce_command(t, c);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  const Format format = parse_format(flags.format, false);
  if (flags.trials == 0) throw UsageError("--trials must be at least 1");
  const auto family = family_from_string(flags.family);
  if (!family) throw UsageError("unknown --family '" + flags.family + "' (mixed, poly, power, log, concave)");
  VerifyOptions options;
  options.trials = flags.trials;
  options.seed = flags.seed;
  if (*flags.q_opt) options.q = flags.q;
  options.family = *family;
  options.threads = flags.threads;
  options.certificate_samples = flags.samples;

  const auto start = std::chrono::steady_clock::now();
  const VerifySummary summary = run_verify(options);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::size_t certified = summary.trials.size() - summary.skipped_invalid;

  if (format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["config"] = {{"command", "verify"},
                   {"trials", flags.trials},
                   {"seed", flags.seed},
                   {"q", options.q ? json(*options.q) : json("sampled")},
                   {"family", flags.family},
                   {"certificate_samples", flags.samples}};
    j["trials"] = summary.trials.size();
    j["certified"] = certified;
    j["skipped_invalid_certificate"] = summary.skipped_invalid;
    j["checks"] = summary.checks;
    j["violation_count"] = summary.violations.size();
    json violations = json::array();
    for (std::size_t i : summary.violations) violations.push_back(trial_to_json(summary.trials[i]));
    j["violations"] = std::move(violations);
    j["min_slack"] = summary.min_slack ? json(*summary.min_slack) : json(nullptr);
    if (summary.min_slack_trial) {
      j["min_slack_case"] = trial_to_json(summary.trials[*summary.min_slack_trial]);
      j["min_slack_formula"] = *summary.min_slack_formula;
    }
    if (flags.all) {
      json all = json::array();
      for (const auto& t : summary.trials) all.push_back(trial_to_json(t));
      j["trial_records"] = std::move(all);
    }
    json timings;
    std::size_t attempts = 0;
    for (const auto& t : summary.trials) attempts += t.attempts;
    timings["generator_draws"] = attempts;
    if (flags.timings) timings["wall_seconds"] = wall;
    j["timings"] = std::move(timings);
    emit_json(out, j);
  } else {
    out << "trials       " << summary.trials.size() << " (seed " << flags.seed << ", family " << flags.family << ")\n"
        << "certified    " << certified << "\n"
        << "skipped      " << summary.skipped_invalid << " (certificate invalid, not asserted)\n"
        << "checks       " << summary.checks << "\n"
        << "violations   " << summary.violations.size() << "\n";
    if (summary.min_slack) {
      out << "min slack    " << format_double(*summary.min_slack) << " (trial " << *summary.min_slack_trial << ", "
          << *summary.min_slack_formula << ")\n";
    }
    for (std::size_t i : summary.violations) {
      const auto& t = summary.trials[i];
      for (const auto& c : t.checks) {
        if (c.violated) out << "VIOLATION    " << c.formula_id << ": " << reproduce_command(t, c) << "\n";
      }
    }
  }
  return summary.violations.empty() ? kExitOk : kExitBoundViolated;
}

// ---------------------------------------------------------------------------------------------
// means

struct MeansFlags {
  std::string theorem;
  std::string mean;
  double m = 2.0;
  double ell = 1.0;
  double s = 1.0;
  double p = 1.0;
  double q = 1.0;
  double a = 0.0;
  double b = 0.0;
  std::string format = "json";
  CLI::Option* theorem_opt = nullptr;
  CLI::Option* mean_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* s_opt = nullptr;
};

int cmd_means(const MeansFlags& flags, std::ostream& out) {
  const Format format = parse_format(flags.format, false);
  if (!*flags.a_opt || !*flags.b_opt) throw UsageError("--a and --b are required");
  if (*flags.theorem_opt == *flags.mean_opt) throw UsageError("give exactly one of --theorem and --mean");

  if (*flags.mean_opt) {
    const auto kind = mean_kind_from_string(flags.mean);
    if (!kind) throw UsageError("unknown --mean '" + flags.mean + "' (A, G, H, L, I, Ls)");
    if (*kind == MeanKind::Kind::Ls && !*flags.s_opt) throw UsageError("--mean Ls needs --s");
    const double value = compute_mean(MeanKind{*kind, flags.s}, flags.a, flags.b);
    if (format == Format::Json) {
      json j;
      j["schema"] = 1;
      j["config"] = {{"command", "means"}, {"mean", flags.mean}, {"a", flags.a}, {"b", flags.b}};
      if (*kind == MeanKind::Kind::Ls) j["config"]["s"] = flags.s;
      j["value"] = value;
      emit_json(out, j);
    } else {
      out << flags.mean << "(" << format_double(flags.a) << ", " << format_double(flags.b) << ") = " << format_double(value)
          << "\n";
    }
    return kExitOk;
  }

  const auto theorem = means_theorem_from_string(flags.theorem);
  if (!theorem) throw UsageError("unknown --theorem '" + flags.theorem + "'");
  const MeansParams params{flags.m, flags.ell, flags.s, flags.p, flags.q};
  const double bound = means_bound(*theorem, params, flags.a, flags.b);
  const double gap = means_gap(*theorem, params, flags.a, flags.b);
  const double slack = bound - std::fabs(gap);
  if (format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["config"] = {{"command", "means"}, {"theorem", flags.theorem}, {"m", flags.m}, {"ell", flags.ell},
                   {"s", flags.s},        {"p", flags.p},             {"q", flags.q}, {"a", flags.a},
                   {"b", flags.b}};
    j["gap"] = gap;
    j["gap_abs"] = std::fabs(gap);
    j["bound"] = bound;
    j["slack"] = slack;
    emit_json(out, j);
  } else {
    out << "theorem  " << flags.theorem << "\n"
        << "gap      " << format_double(gap) << "\n"
        << "bound    " << format_double(bound) << "\n"
        << "slack    " << format_double(slack) << "\n";
  }
  return slack >= 0.0 ? kExitOk : kExitBoundViolated;
}

// ---------------------------------------------------------------------------------------------
// optimize

int cmd_optimize(const InstanceFlags& flags, const std::string& over, std::ostream& out) {
  const Format format = parse_format(flags.format, false);
  flags.require_instance();
  const Interval interval(flags.a, flags.b);
  const Expr f = parse(flags.f);
  const Expr fprime = differentiate(f);
  if (!domain_check(fprime, interval).ok()) throw DomainError("f' is not defined on all of [a, b]");
  const DerivEndpoints d = DerivEndpoints::of(fprime, interval);
  CertifyOptions cert;
  cert.samples = flags.samples;
  cert.seed = flags.seed;
  cert.function_id = flags.f;
  const ConvexityCertificate certificate = certify_derivative_power(fprime, flags.q, interval, cert);

  json j;
  j["schema"] = 1;
  j["config"] = {{"command", "optimize"}, {"over", over}, {"f", flags.f}, {"a", flags.a}, {"b", flags.b}, {"q", flags.q}};
  j["derivative_endpoints"] = {{"da", d.da}, {"db", d.db}};
  std::string text;
  if (over == "p") {
    const RuleSpec spec = flags.rule_spec();
    if (*flags.p_opt) throw UsageError("--p is the optimisation variable; drop it");
    j["config"]["rule"] = rule_to_json(spec);
    const POptimum best = optimize_p(spec.params, flags.q, d, interval);
    j["p_star"] = best.p_star;
    j["rhs_star"] = best.rhs_star;
    j["rhs_p1"] = bound_p1(spec.params, flags.q, d, interval);
    j["rhs_pq"] = bound_p_equals_q(spec.params, flags.q, d, interval);
    j["formula_id"] = formula_id(spec.form, BoundMode::Kind::General, spec.name());
    text = "p*    " + format_double(best.p_star) + "\nrhs*  " + format_double(best.rhs_star) + "\n";
  } else if (over == "rule") {
    if (*flags.rule_opt || *flags.lambda_opt || *flags.mu_opt || *flags.m_opt || *flags.ell_opt) {
      throw UsageError("the rule is the optimisation variable; drop the rule flags");
    }
    const BoundMode mode = flags.q == 1.0 ? BoundMode::q1()
                           : *flags.p_opt ? select_mode(flags.q, flags.p)
                                          : BoundMode::p_equals_q(flags.q);
    j["config"]["p"] = mode.p;
    const RuleOptimum best = optimize_rule(mode, d, interval);
    j["lambda_star"] = best.rule.lambda;
    j["mu_star"] = best.rule.mu;
    j["rhs_star"] = best.rhs_star;
    j["formula_id"] = formula_id(RuleForm::LambdaMu, mode.kind);
    text = "lambda*  " + format_double(best.rule.lambda) + "\nmu*      " + format_double(best.rule.mu) + "\nrhs*     " +
           format_double(best.rhs_star) + "\n";
  } else {
    throw UsageError("--over must be p or rule");
  }
  j["certificate"] = certificate_to_json(certificate);
  if (format == Format::Json) {
    emit_json(out, j);
  } else {
    out << text << "certificate " << (certificate.valid ? "valid" : "INVALID") << "\n";
  }
  return certificate.valid ? kExitOk : kExitCertificateInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error bounds for three-point quadrature rules under convexity of |f'|^q", "hhbounds"};
  app.require_subcommand(1);

  InstanceFlags bound_flags;
  auto* bound = app.add_subcommand("bound", "evaluate one bound with its certificate");
  bound_flags.attach(bound);

  InstanceFlags sweep_flags;
  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a bound along a parameter axis");
  sweep_flags.attach(sweep_cmd, true, "json, csv or text");
  sweep_cmd->add_option("--axis", sweep.axis, "lambda, mu, p, q or s")->required();
  sweep.from_opt = sweep_cmd->add_option("--from", sweep.from, "first grid value");
  sweep.to_opt = sweep_cmd->add_option("--to", sweep.to, "last grid value");
  sweep.step_opt = sweep_cmd->add_option("--step", sweep.step, "grid spacing");
  sweep_cmd->add_flag("--mirror", sweep.mirror, "tie the other rule parameter: mu = 1 - lambda");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "randomised soundness campaign");
  verify->add_option("--trials", verify_flags.trials, "number of instances")->capture_default_str();
  verify->add_option("--seed", verify_flags.seed, "campaign seed")->capture_default_str();
  verify_flags.q_opt = verify->add_option("--q", verify_flags.q, "fix q (default: sampled per trial)");
  verify->add_option("--family", verify_flags.family, "mixed, poly, power, log or concave")->capture_default_str();
  verify->add_option("--threads", verify_flags.threads, "worker threads (0: all cores)")->capture_default_str();
  verify->add_option("--samples", verify_flags.samples, "convexity certificate samples")->capture_default_str();
  verify->add_option("--format", verify_flags.format, "json or text")->capture_default_str();
  verify->add_flag("--timings", verify_flags.timings, "add wall-clock seconds to the JSON timings block");
  verify->add_flag("--all", verify_flags.all, "include every trial record in the JSON output");

  MeansFlags means_flags;
  auto* means = app.add_subcommand("means", "special-means inequalities, or a single mean value");
  means_flags.theorem_opt = means->add_option("--theorem", means_flags.theorem,
                                              "4.1, 4.2-p1, 4.2-pq, 4.2-particular, 4.3[...], 4.4, 4.5-p1, 4.5-pq, 4.5-particular");
  means_flags.mean_opt = means->add_option("--mean", means_flags.mean, "A, G, H, L, I or Ls");
  means->add_option("--m", means_flags.m, "rule parameter m")->capture_default_str();
  means->add_option("--ell", means_flags.ell, "rule parameter ell")->capture_default_str();
  means_flags.s_opt = means->add_option("--s", means_flags.s, "power s (power theorems, Ls)");
  means->add_option("--p", means_flags.p, "Hoelder split p (general theorems)")->capture_default_str();
  means->add_option("--q", means_flags.q, "exponent q")->capture_default_str();
  means_flags.a_opt = means->add_option("--a", means_flags.a, "first argument (> 0)");
  means_flags.b_opt = means->add_option("--b", means_flags.b, "second argument (>= a)");
  means->add_option("--format", means_flags.format, "json or text")->capture_default_str();

  InstanceFlags optimize_flags;
  std::string over = "p";
  auto* optimize = app.add_subcommand("optimize", "minimise a bound over p or over the rule");
  optimize_flags.attach(optimize);
  optimize->add_option("--over", over, "p or rule")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("hhbounds");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*bound) return cmd_bound(bound_flags, out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, sweep, out);
    if (*verify) return cmd_verify(verify_flags, out);
    if (*means) return cmd_means(means_flags, out);
    if (*optimize) return cmd_optimize(optimize_flags, over, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitError;
  } catch (const AdmissibilityError& e) {
    err << "inadmissible: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace hhb
