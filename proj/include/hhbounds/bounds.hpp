#pragma once

#include <string>

#include "hhbounds/expr.hpp"
#include "hhbounds/interval.hpp"
#include "hhbounds/oracle.hpp"
#include "hhbounds/rules.hpp"

namespace hhb {

/// Hoelder split exponents: the general bound needs q > 1 and 0 < p <= q.
struct HolderParams {
  double p = 1.0;
  double q = 2.0;
};

/// |f'(a)| and |f'(b)|.
struct DerivEndpoints {
  double da = 0.0;
  double db = 0.0;

  /// Throws std::invalid_argument for negative or non-finite magnitudes.
  static DerivEndpoints checked(double da, double db);
  /// Magnitudes of fprime at the endpoints. A kink of an abs() exactly at an endpoint is
  /// stepped over by one ulp towards the interior.
  static DerivEndpoints of(const Expr& fprime, const Interval& interval);
};

/// Closed-form kernel integrals over one half of [0, 1].
///
/// hoelder_factor = int |s - t|^((q-p)/(q-1)) dt, weight_a = int |s - t|^p t dt,
/// weight_b = int |s - t|^p (1 - t) dt, where s is lambda on [0, 1/2] or mu on [1/2, 1].
/// log_hoelder_factor stays finite when hoelder_factor underflows (q close to 1, p < q).
struct KernelMoments {
  double hoelder_factor;
  double log_hoelder_factor;
  double weight_a;
  double weight_b;
};

KernelMoments kernel_moments_closed(double shift, KernelSide side, const HolderParams& hp);

/// Bound for |f'| convex.
double bound_q1(const RuleParams& rule, const DerivEndpoints& d, const Interval& interval);

/// Hoelder bound for |f'|^q convex, q > 1, 0 < p <= q.
double bound_pq(const RuleParams& rule, const HolderParams& hp, const DerivEndpoints& d, const Interval& interval);

/// The p = 1 specialisation; valid for q >= 1 and equal to bound_q1 at q = 1.
double bound_p1(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval);

/// The p = q specialisation; valid for q >= 1 and equal to bound_q1 at q = 1.
double bound_p_equals_q(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval);

struct BoundMode {
  enum class Kind { Q1, P1, PEqualsQ, General };
  Kind kind = Kind::Q1;
  double q = 1.0;
  double p = 1.0;  // used by General only

  static BoundMode q1() { return {Kind::Q1, 1.0, 1.0}; }
  static BoundMode p1(double q) { return {Kind::P1, q, 1.0}; }
  static BoundMode p_equals_q(double q) { return {Kind::PEqualsQ, q, q}; }
  static BoundMode general(double p, double q) { return {Kind::General, q, p}; }
};

double bound_with_mode(const RuleParams& rule, const BoundMode& mode, const DerivEndpoints& d,
                       const Interval& interval);

/// Named rules route through the (m, ell) parametrisation and the general assembly.
double bound_named(NamedRule rule, const BoundMode& mode, const DerivEndpoints& d, const Interval& interval);

/// Which published inequality a value corresponds to, e.g. "thm3.1", "cor3.2", "cor3.6-simpson".
enum class RuleForm { LambdaMu, MEll, Named };
std::string formula_id(RuleForm form, BoundMode::Kind kind, std::string_view rule_name = {});

struct POptimum {
  double p_star;
  double rhs_star;
};

/// Minimises bound_pq over p in (0, q]: 64-point log grid on [1e-6 q, q], golden-section
/// refinement around the best grid point, and the p = 1 and p = q candidates.
POptimum optimize_p(const RuleParams& rule, double q, const DerivEndpoints& d, const Interval& interval);

struct RuleOptimum {
  RuleParams rule;
  double rhs_star;
};

/// Coordinate descent over 0 <= lambda <= 1/2 <= mu <= 1 from a 3 x 3 grid of starts.
/// Local optimum only; no global certificate.
RuleOptimum optimize_rule(const BoundMode& mode, const DerivEndpoints& d, const Interval& interval);

}  // namespace hhb
