#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hhbounds/expr.hpp"
#include "hhbounds/interval.hpp"

namespace hhb {

/// Sampled evidence that g is midpoint convex on an interval.
///
/// A valid certificate is evidence, not proof. An invalid one carries a witness pair
/// (x, y) with g((x + y) / 2) > (g(x) + g(y)) / 2 + tolerance, which is definitive.
struct ConvexityCertificate {
  std::string function_id;
  double q = 1.0;
  Interval interval{0.0, 1.0};
  std::size_t samples = 0;  // number of (x, y) pairs tested
  double max_violation = 0.0;
  double tolerance = 1e-10;
  bool valid = false;
  std::optional<std::pair<double, double>> witness;
};

struct CertifyOptions {
  std::size_t samples = 4096;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string function_id;
  double q = 1.0;
};

/// Residual g(m) - (g(x) + g(y)) / 2 less a rounding allowance of 8 eps times the magnitudes involved.
double midpoint_residual(double g_mid, double g_x, double g_y);

/// Tests every pair of a 64-point van der Corput grid, every neighbouring triple of a
/// uniform grid of `samples` points, and `samples` seeded random pairs.
/// Throws std::invalid_argument when samples < 64; evaluation errors propagate.
ConvexityCertificate certify_convex(const std::function<double(double)>& g, const Interval& interval,
                                    const CertifyOptions& options = {});

/// Certificate for |f'|^q, evaluating the derivative expression; points that land exactly on
/// an abs() kink are moved by one ulp.
ConvexityCertificate certify_derivative_power(const Expr& fprime, double q, const Interval& interval,
                                              CertifyOptions options = {});

/// True iff |f'|^q is convex on the positive axis for f(x) = x^s: (s > 1 and (s - 1) q >= 1) or (s < 1 and s != 0).
bool admissible_power(double s, double q) noexcept;

}  // namespace hhb
