#include "hhbounds/minimize.hpp"

#include <cmath>
#include <stdexcept>

namespace hhb {

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                             int max_iterations) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_section: empty bracket");
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < max_iterations && (hi - lo) > x_tol; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? ScalarMinimum{x1, f1} : ScalarMinimum{x2, f2};
}

ScalarMinimum grid_then_golden(const std::function<double(double)>& f, std::span<const double> grid, double x_tol) {
  if (grid.empty()) throw std::invalid_argument("grid_then_golden: empty grid");
  std::size_t best = 0;
  double best_value = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  ScalarMinimum result{grid[best], best_value};
  if (grid.size() == 1) return result;
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[best + 1 == grid.size() ? best : best + 1];
  const ScalarMinimum refined = golden_section(f, lo, hi, x_tol);
  if (refined.value < result.value) result = refined;
  return result;
}

}  // namespace hhb
