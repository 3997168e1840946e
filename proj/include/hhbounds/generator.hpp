#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hhbounds/errors.hpp"
#include "hhbounds/expr.hpp"
#include "hhbounds/interval.hpp"
#include "hhbounds/rules.hpp"

namespace hhb {

/// Random instance families for verification campaigns.
///
///   poly    sum of c_k x^k, k <= 4, c_k uniform in [-2, 2] (four decimals), on [a, a + w] with
///           a in [-3, 3], w in [0.1, 3]; kept only if |f'|^q passes the certificate.
///   power   x^s with s uniform in [-2, 3] minus {0}, kept only if admissible_power(s, q); positive interval.
///   log     c ln(x), c in [-2, 2] minus {0}, on a positive interval.
///   concave x^(1 + u / q), u in [0.2, 0.8]: |f'|^q is strictly concave. Test hook for the
///           certificate gate; never retried.
///   mixed   one of poly, power, log chosen per trial.
enum class Family { Mixed, Poly, Power, Log, Concave };

std::string_view family_name(Family family) noexcept;
std::optional<Family> family_from_string(std::string_view name) noexcept;

class GeneratorExhausted : public Error {
 public:
  using Error::Error;
};

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<double> q;  // fixed q; otherwise q = 1 for a quarter of trials, else uniform in [1, 4]
  Family family = Family::Mixed;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t certificate_samples = 4096;
  double quadrature_tol = 1e-11;
  std::size_t max_attempts = 100;
};

struct PathCheck {
  std::string formula_id;
  double p = 1.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool violated = false;
};

struct TrialRecord {
  std::size_t index = 0;
  std::string family;
  std::string function;
  double a = 0.0;
  double b = 1.0;
  RuleParams rule;
  double q = 1.0;
  double lhs = 0.0;
  double lhs_abs = 0.0;
  bool certified = false;           // |f'|^q passed; the Hoelder paths are asserted
  bool certified_q1 = false;        // |f'| passed; the q = 1 path is asserted
  std::size_t attempts = 0;
  std::vector<PathCheck> checks;
};

struct VerifySummary {
  VerifyOptions options;
  std::size_t skipped_invalid = 0;  // trials whose certificate failed (never asserted)
  std::size_t checks = 0;
  std::vector<TrialRecord> trials;  // in index order
  std::vector<std::size_t> violations;  // indices into trials
  std::optional<double> min_slack;
  std::optional<std::size_t> min_slack_trial;
  std::optional<std::string> min_slack_formula;
};

/// |lhs| > rhs + 1e-9 max(1, rhs).
bool is_violation(double lhs_abs, double rhs) noexcept;

/// Generates and checks one trial. The RNG stream depends only on (seed, index).
TrialRecord run_trial(const VerifyOptions& options, std::size_t index);

/// Runs all trials, fanning out over threads; results are stored in index order.
/// Throws std::invalid_argument for trials == 0 and GeneratorExhausted when a trial
/// cannot find an admissible instance within max_attempts draws.
VerifySummary run_verify(const VerifyOptions& options);

}  // namespace hhb
