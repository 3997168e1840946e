#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hhbounds/errors.hpp"

namespace hhb {

/// Two-argument means of positive reals. Ls(s) falls through to L at s = -1 and to I at s = 0.
struct MeanKind {
  enum class Kind { A, G, H, L, I, Ls };
  Kind kind = Kind::A;
  double s = 1.0;  // Ls only

  static MeanKind arithmetic() { return {Kind::A, 1.0}; }
  static MeanKind geometric() { return {Kind::G, 1.0}; }
  static MeanKind harmonic() { return {Kind::H, 1.0}; }
  static MeanKind logarithmic() { return {Kind::L, 1.0}; }
  static MeanKind identric() { return {Kind::I, 1.0}; }
  static MeanKind generalized_log(double s) { return {Kind::Ls, s}; }
};

/// Parses "A", "G", "H", "L", "I" or "Ls" (the latter takes s separately).
std::optional<MeanKind::Kind> mean_kind_from_string(std::string_view name) noexcept;

/// Throws std::invalid_argument unless a, b > 0. Returns a when a == b.
double compute_mean(const MeanKind& kind, double a, double b);

/// [L_s(a, b)]^s, the mean value of x^s over [a, b]; at s = -1 this is 1 / L(a, b). Needs s != 0.
double power_mean_value(double s, double a, double b);

/// (2 ell A(a^s, b^s) + (m - 2 ell) A(a, b)^s) / m - L_s(a, b)^s.
double means_gap_power(double m, double ell, double s, double a, double b);

/// (2 ell ln G(a, b) + (m - 2 ell) ln A(a, b)) / m - ln I(a, b).
double means_gap_log(double m, double ell, double a, double b);

/// Published special-means inequalities. Each id fixes the function (x^s, 1/x or ln x) and
/// the bound family it is routed through.
enum class MeansTheorem {
  PowerGeneral,        // "4.1":  x^s, general (p, q), q > 1
  PowerP1,             // "4.2-p1"
  PowerPQ,             // "4.2-pq"
  PowerParticular,     // "4.2-particular": q = 1
  HarmonicGeneral,     // "4.3":  s = -1, general (p, q)
  HarmonicP1,          // "4.3-p1"
  HarmonicPQ,          // "4.3-pq"
  HarmonicParticular,  // "4.3-particular"
  LogGeneral,          // "4.4":  ln x, general (p, q)
  LogP1,               // "4.5-p1"
  LogPQ,               // "4.5-pq"
  LogParticular,       // "4.5-particular"
};

std::string_view means_theorem_id(MeansTheorem t) noexcept;
std::optional<MeansTheorem> means_theorem_from_string(std::string_view id) noexcept;

struct MeansParams {
  double m = 1.0;
  double ell = 0.0;
  double s = 1.0;  // power family only
  double p = 1.0;  // general theorems only
  double q = 1.0;
};

/// Left-hand side of the theorem's inequality (signed).
double means_gap(MeansTheorem t, const MeansParams& params, double a, double b);

/// Right-hand side, computed by feeding |f'(a)|, |f'(b)| of the underlying function into the
/// bounds module. Throws AdmissibilityError with the failing hypothesis. Returns 0 when a == b.
double means_bound(MeansTheorem t, const MeansParams& params, double a, double b);

}  // namespace hhb
