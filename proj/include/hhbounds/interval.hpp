#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhb {

/// Closed interval [a, b] with a < b strictly.
class Interval {
 public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("interval endpoints must be finite");
    if (!(a < b)) throw std::invalid_argument("interval requires a < b");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

}  // namespace hhb
