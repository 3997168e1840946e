#pragma once

#include <functional>
#include <span>

namespace hhb {

struct ScalarMinimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops when the bracket is narrower than x_tol.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                             int max_iterations = 200);

/// Evaluates f on an increasing grid, then refines by golden-section search between the
/// neighbours of the best grid point. Returns the better of the grid and refined minima.
ScalarMinimum grid_then_golden(const std::function<double(double)>& f, std::span<const double> grid, double x_tol);

}  // namespace hhb
