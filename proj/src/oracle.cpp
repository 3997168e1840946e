#include "hhbounds/oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hhb {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;
  bool splittable;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// One 15-point Kronrod / 7-point Gauss pass with the QUADPACK error heuristic.
Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 15> fv{};
  fv[0] = f(center);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    fv[2 * i - 1] = f(center - half * xk[i]);
    fv[2 * i] = f(center + half * xk[i]);
  }

  double kronrod = wk[0] * fv[0];
  double gauss = wg[0] * fv[0];
  double abs_sum = wk[0] * std::fabs(fv[0]);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    kronrod += wk[i] * pair;
    abs_sum += wk[i] * (std::fabs(fv[2 * i - 1]) + std::fabs(fv[2 * i]));
    if (i % 2 == 0) gauss += wg[i / 2] * pair;  // Gauss nodes are the even Kronrod nodes
  }
  const double mean = 0.5 * kronrod;
  double asc = wk[0] * std::fabs(fv[0] - mean);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    asc += wk[i] * (std::fabs(fv[2 * i - 1] - mean) + std::fabs(fv[2 * i] - mean));
  }

  const double width = std::fabs(half);
  const double result = kronrod * half;
  const double resabs = abs_sum * width;
  const double resasc = asc * width;
  double err = std::fabs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);

  for (double v : fv) {
    if (!std::isfinite(v)) throw DomainError("integrand returned a non-finite value");
  }

  const double mid = center;
  const bool splittable = (mid > lo && mid < hi) && (hi - lo) > 4.0 * kEps * std::max(std::fabs(lo), std::fabs(hi));
  return Panel{lo, hi, result, err, resabs, splittable};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, const Interval& interval, double tol,
                           std::size_t max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("integration tolerance must be positive");

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> closed;
  std::size_t evaluations = 0;

  auto push = [&](Panel p) {
    evaluations += 15;
    if (p.splittable) {
      open.push(p);
    } else {
      closed.push_back(p);
    }
  };

  push(gk15(f, interval.a(), interval.b()));

  auto totals = [&] {
    double err = 0.0, abs_value = 0.0;
    auto visit = [&](const Panel& p) {
      err += p.error;
      abs_value += p.abs_value;
    };
    auto copy = open;
    while (!copy.empty()) {
      visit(copy.top());
      copy.pop();
    }
    for (const auto& p : closed) visit(p);
    return std::pair{err, abs_value};
  };

  double err_sum = open.empty() ? closed.front().error : open.top().error;
  double abs_sum = open.empty() ? closed.front().abs_value : open.top().abs_value;

  for (std::size_t bisections = 1;; ++bisections) {
    const double target = std::max(tol, 100.0 * kEps * abs_sum);
    if (err_sum <= target) break;
    if (open.empty()) {
      throw ConvergenceError("integration stalled: panels cannot be bisected further (error estimate " +
                             std::to_string(err_sum) + ")");
    }
    if (evaluations + 30 > max_evaluations) {
      throw ConvergenceError("integration did not converge within " + std::to_string(max_evaluations) +
                             " evaluations (error estimate " + std::to_string(err_sum) + ")");
    }
    Panel worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = gk15(f, worst.lo, mid);
    Panel right = gk15(f, mid, worst.hi);
    err_sum += left.error + right.error - worst.error;
    abs_sum += left.abs_value + right.abs_value - worst.abs_value;
    push(left);
    push(right);
    // Incremental sums drift; resynchronise occasionally.
    if (bisections % 256 == 0) std::tie(err_sum, abs_sum) = totals();
  }

  // Sum left to right with Neumaier compensation.
  std::vector<Panel> panels = std::move(closed);
  while (!open.empty()) {
    panels.push_back(open.top());
    open.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const auto& p : panels) {
    const double t = sum + p.value;
    comp += std::fabs(sum) >= std::fabs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
    sum = t;
    err += p.error;
  }
  return QuadratureResult{sum + comp, err, evaluations};
}

double kernel_moment_numeric(KernelSide side, double shift, double exponent, KernelWeight weight, double tol) {
  if (!(exponent >= 0.0) || !std::isfinite(exponent)) throw std::invalid_argument("kernel exponent must be >= 0");
  if (!std::isfinite(shift)) throw std::invalid_argument("kernel shift must be finite");
  const double lo = side == KernelSide::Left ? 0.0 : 0.5;
  const double hi = side == KernelSide::Left ? 0.5 : 1.0;

  auto integrand = [shift, exponent, weight](double t) {
    const double kernel = exponent == 0.0 ? 1.0 : std::pow(std::fabs(shift - t), exponent);
    switch (weight) {
      case KernelWeight::One: return kernel;
      case KernelWeight::T: return kernel * t;
      case KernelWeight::OneMinusT: return kernel * (1.0 - t);
    }
    return kernel;
  };

  if (shift > lo && shift < hi) {
    return integrate(integrand, Interval(lo, shift), tol).value + integrate(integrand, Interval(shift, hi), tol).value;
  }
  return integrate(integrand, Interval(lo, hi), tol).value;
}

}  // namespace hhb
