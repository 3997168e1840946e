#include "hhbounds/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace hhb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kLowDiscrepancyPoints = 64;

double van_der_corput(std::uint32_t n) {
  double result = 0.0;
  double denom = 1.0;
  while (n > 0) {
    denom *= 2.0;
    result += (n & 1u) / denom;
    n >>= 1;
  }
  return result;
}

class Checker {
 public:
  explicit Checker(const std::function<double(double)>& g) : g_(g) {}

  void pair(double x, double y) {
    if (x > y) std::swap(x, y);
    const double mid = 0.5 * (x + y);
    const double r = midpoint_residual(g_(mid), g_(x), g_(y));
    ++count_;
    if (r > worst_) {
      worst_ = r;
      witness_ = {x, y};
    }
  }

  std::size_t count() const { return count_; }
  double worst() const { return worst_; }
  std::pair<double, double> witness() const { return witness_; }

 private:
  const std::function<double(double)>& g_;
  std::size_t count_ = 0;
  double worst_ = -std::numeric_limits<double>::infinity();
  std::pair<double, double> witness_{0.0, 0.0};
};

}  // namespace

double midpoint_residual(double g_mid, double g_x, double g_y) {
  const double avg = 0.5 * (g_x + g_y);
  const double scale = std::fabs(g_mid) + 0.5 * (std::fabs(g_x) + std::fabs(g_y));
  return g_mid - avg - 8.0 * kEps * scale;
}

ConvexityCertificate certify_convex(const std::function<double(double)>& g, const Interval& interval,
                                    const CertifyOptions& options) {
  if (options.samples < 64) throw std::invalid_argument("convexity certificate needs at least 64 samples");
  const double a = interval.a();
  const double w = interval.width();
  Checker check(g);

  std::vector<double> ld;
  ld.reserve(kLowDiscrepancyPoints);
  ld.push_back(a);
  ld.push_back(interval.b());
  for (std::uint32_t k = 1; ld.size() < kLowDiscrepancyPoints; ++k) ld.push_back(a + w * van_der_corput(k));
  for (std::size_t i = 0; i < ld.size(); ++i) {
    for (std::size_t j = i + 1; j < ld.size(); ++j) check.pair(ld[i], ld[j]);
  }

  const std::size_t n = options.samples;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const double x = a + w * (static_cast<double>(i) / (n - 1));
    const double y = i + 2 == n - 1 ? interval.b() : a + w * (static_cast<double>(i + 2) / (n - 1));
    check.pair(x, y);
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a + w * unit(rng);
    const double y = a + w * unit(rng);
    if (x != y) check.pair(x, y);
  }

  ConvexityCertificate cert;
  cert.function_id = options.function_id;
  cert.q = options.q;
  cert.interval = interval;
  cert.samples = check.count();
  cert.max_violation = check.worst();
  cert.tolerance = options.tol;
  cert.valid = cert.max_violation <= options.tol;
  if (!cert.valid) cert.witness = check.witness();
  return cert;
}

ConvexityCertificate certify_derivative_power(const Expr& fprime, double q, const Interval& interval,
                                              CertifyOptions options) {
  if (!(q >= 1.0)) throw std::invalid_argument("convexity of |f'|^q is only used for q >= 1");
  const double a = interval.a();
  const double b = interval.b();
  auto g = [&fprime, q, a, b](double x) {
    double v;
    try {
      v = fprime.eval(x);
    } catch (const DomainError& e) {
      if (!e.kink()) throw;
      v = fprime.eval(std::nextafter(x, x < b ? b : a));
    }
    return q == 1.0 ? std::fabs(v) : std::pow(std::fabs(v), q);
  };
  options.q = q;
  return certify_convex(g, interval, options);
}

bool admissible_power(double s, double q) noexcept {
  return (s > 1.0 && (s - 1.0) * q >= 1.0) || (s < 1.0 && s != 0.0);
}

}  // namespace hhb
