#include "hhbounds/generator.hpp"

#include <algorithm>
#include <atomic>
#include <array>
#include <cmath>
#include <exception>
#include <thread>

#include "hhbounds/bounds.hpp"
#include "hhbounds/convexity.hpp"
#include "hhbounds/format.hpp"

namespace hhb {

namespace {

constexpr std::array<std::string_view, 5> kFamilyNames = {"mixed", "poly", "power", "log", "concave"};

class Draw {
 public:
  Draw(std::uint64_t seed, std::size_t index) {
    const auto i = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    rng_.seed(seq);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double rounded(double lo, double hi) { return std::round(uniform(lo, hi) * 1e4) / 1e4; }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::uint64_t bits() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

struct Candidate {
  std::string function;
  double a;
  double b;
};

Candidate draw_poly(Draw& draw) {
  const std::size_t degree = 1 + draw.index(4);
  std::string source;
  for (std::size_t k = degree + 1; k-- > 0;) {
    double c = draw.rounded(-2.0, 2.0);
    if (k == degree && c == 0.0) c = 1.0;
    if (!source.empty()) source += " + ";
    source += format_double(c);
    if (k >= 1) source += "*x";
    if (k >= 2) source += "^" + std::to_string(k);
  }
  const double a = draw.rounded(-3.0, 3.0);
  return {source, a, a + draw.rounded(0.1, 3.0)};
}

Candidate draw_positive_interval(Draw& draw, std::string function) {
  const double a = draw.rounded(0.1, 3.0);
  return {std::move(function), a, a + draw.rounded(0.1, 3.0)};
}

Candidate draw_power(Draw& draw, double q) {
  double s = 0.0;
  while (s == 0.0 || !admissible_power(s, q)) s = draw.rounded(-2.0, 3.0);
  return draw_positive_interval(draw, "x^" + format_double(s));
}

Candidate draw_log(Draw& draw) {
  double c = 0.0;
  while (c == 0.0) c = draw.rounded(-2.0, 2.0);
  return draw_positive_interval(draw, format_double(c) + "*ln(x)");
}

Candidate draw_concave(Draw& draw, double q) {
  const double s = 1.0 + draw.uniform(0.2, 0.8) / q;
  return draw_positive_interval(draw, "x^" + format_double(s));
}

RuleParams draw_rule(Draw& draw) {
  if (draw.index(4) == 0) return rule_from_lm(lm_of(kNamedRules[draw.index(kNamedRules.size())]));
  const double lambda = draw.uniform(0.0, 0.5);
  const double mu = draw.uniform(0.5, 1.0);
  return RuleParams{lambda, mu};
}

void add_check(TrialRecord& record, std::string id, double p, double rhs) {
  record.checks.push_back(PathCheck{std::move(id), p, rhs, rhs - record.lhs_abs, is_violation(record.lhs_abs, rhs)});
}

}  // namespace

std::string_view family_name(Family family) noexcept { return kFamilyNames[static_cast<std::size_t>(family)]; }

std::optional<Family> family_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

bool is_violation(double lhs_abs, double rhs) noexcept { return lhs_abs > rhs + 1e-9 * std::max(1.0, rhs); }

TrialRecord run_trial(const VerifyOptions& options, std::size_t index) {
  Draw draw(options.seed, index);
  TrialRecord record;
  record.index = index;
  record.q = options.q ? *options.q : (draw.index(4) == 0 ? 1.0 : draw.rounded(1.0, 4.0));
  if (!(record.q >= 1.0)) throw AdmissibilityError("q must satisfy q >= 1");
  Family family = options.family;
  if (family == Family::Mixed) family = static_cast<Family>(1 + draw.index(3));
  record.family = std::string(family_name(family));

  CertifyOptions cert;
  cert.samples = options.certificate_samples;
  cert.seed = draw.bits();

  std::optional<Expr> f;
  std::optional<Expr> fprime;
  Interval interval(0.0, 1.0);
  for (record.attempts = 1;; ++record.attempts) {
    if (record.attempts > options.max_attempts) {
      throw GeneratorExhausted("trial " + std::to_string(index) + ": no admissible " + record.family + " instance in " +
                               std::to_string(options.max_attempts) + " draws");
    }
    Candidate c;
    switch (family) {
      case Family::Poly: c = draw_poly(draw); break;
      case Family::Power: c = draw_power(draw, record.q); break;
      case Family::Log: c = draw_log(draw); break;
      default: c = draw_concave(draw, record.q); break;
    }
    interval = Interval(c.a, c.b);
    f = parse(c.function);
    fprime = differentiate(*f);
    if (!domain_check(*f, interval).ok() || !domain_check(*fprime, interval).ok()) continue;
    cert.function_id = c.function;
    record.certified = certify_derivative_power(*fprime, record.q, interval, cert).valid;
    record.function = c.function;
    record.a = c.a;
    record.b = c.b;
    if (record.certified || family == Family::Concave) break;
  }

  record.rule = draw_rule(draw);
  const double p_sample = record.q * std::pow(10.0, -3.0 * draw.uniform(0.0, 1.0));
  const double mean = mean_integral(*f, interval, options.quadrature_tol);
  record.lhs = lhs_value(record.rule, *f, interval, mean);
  record.lhs_abs = std::fabs(record.lhs);

  record.certified_q1 = record.q == 1.0 ? record.certified
                                        : certify_derivative_power(*fprime, 1.0, interval, cert).valid;
  const DerivEndpoints d = DerivEndpoints::of(*fprime, interval);
  if (record.certified_q1) add_check(record, "thm3.1", 1.0, bound_q1(record.rule, d, interval));
  if (record.certified) {
    if (record.q > 1.0) {
      add_check(record, "thm3.2", p_sample, bound_pq(record.rule, HolderParams{p_sample, record.q}, d, interval));
    }
    add_check(record, "cor3.1-p1", 1.0, bound_p1(record.rule, record.q, d, interval));
    add_check(record, "cor3.1-pq", record.q, bound_p_equals_q(record.rule, record.q, d, interval));
  }
  return record;
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.trials == 0) throw std::invalid_argument("trials must be at least 1");
  VerifySummary summary;
  summary.options = options;
  summary.trials.resize(options.trials);
  std::vector<std::exception_ptr> errors(options.trials);

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, options.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.trials; i = next++) {
      try {
        summary.trials[i] = run_trial(options, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const TrialRecord& record : summary.trials) {
    if (!record.certified) ++summary.skipped_invalid;
    bool violated = false;
    for (const PathCheck& check : record.checks) {
      ++summary.checks;
      violated = violated || check.violated;
      if (!summary.min_slack || check.slack < *summary.min_slack) {
        summary.min_slack = check.slack;
        summary.min_slack_trial = record.index;
        summary.min_slack_formula = check.formula_id;
      }
    }
    if (violated) summary.violations.push_back(record.index);
  }
  return summary;
}

}  // namespace hhb
