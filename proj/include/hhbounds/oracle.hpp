#pragma once

#include <cstddef>
#include <functional>

#include "hhbounds/errors.hpp"
#include "hhbounds/interval.hpp"

namespace hhb {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t evaluations = 0;
};

inline constexpr double kDefaultQuadratureTol = 1e-11;
inline constexpr std::size_t kDefaultEvaluationBudget = 1'000'000;

/// Globally adaptive 7/15-point Gauss-Kronrod integration with interval bisection.
///
/// Refines the panel with the largest error estimate until the summed estimate
/// drops below max(tol, 100 eps * integral of |f|). Throws ConvergenceError when
/// the evaluation budget runs out first; never returns a best-effort value.
/// Exceptions thrown by f propagate unchanged.
QuadratureResult integrate(const std::function<double(double)>& f, const Interval& interval,
                           double tol = kDefaultQuadratureTol, std::size_t max_evaluations = kDefaultEvaluationBudget);

enum class KernelSide { Left, Right };      // t in [0, 1/2] or [1/2, 1]
enum class KernelWeight { One, T, OneMinusT };

/// Brute-force value of the integral of |shift - t|^exponent * w(t) over one half of [0, 1].
///
/// When shift lies strictly inside the half, the kink is split off analytically and the
/// two smooth panels are integrated separately.
double kernel_moment_numeric(KernelSide side, double shift, double exponent, KernelWeight weight,
                             double tol = 1e-13);

}  // namespace hhb
