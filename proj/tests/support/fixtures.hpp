#pragma once

// Closed-form bound displays transcribed term by term, used as golden values against the
// single assembly in the bounds module. Every function takes the interval width ba and the
// derivative magnitudes da = |f'(a)|, db = |f'(b)|.

#include <cmath>
#include <stdexcept>

#include "hhbounds/rules.hpp"

namespace fixtures {

using hhb::NamedRule;

// (A da^q + B db^q)^(1/q) + (B da^q + A db^q)^(1/q)
inline double swapped_pair(double A, double B, double da, double db, double q) {
  const double x = std::pow(da, q);
  const double y = std::pow(db, q);
  return std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q);
}

// ((A da^q + B db^q) / D)^(1/q) + ((B da^q + A db^q) / D)^(1/q)
inline double swapped_means(double A, double B, double D, double da, double db, double q) {
  return swapped_pair(A / D, B / D, da, db, q);
}

inline double hoelder_exponent(double p, double q) { return (2.0 * q - p - 1.0) / (q - 1.0); }
inline double hoelder_prefactor(double p, double q) { return std::pow((q - 1.0) / (2.0 * q - p - 1.0), 1.0 - 1.0 / q); }

/// General (p, q) bound for arbitrary (lambda, mu), with its prefactors arranged as printed.
inline double general_theorem(double lambda, double mu, double p, double q, double da, double db, double ba) {
  const double h = 0.5;
  const double r = hoelder_exponent(p, q);
  const double x = std::pow(da, q);
  const double y = std::pow(db, q);
  const double left = std::pow(std::pow(h - lambda, r) + std::pow(lambda, r), 1.0 - 1.0 / q) *
                      std::pow((h * (p + 1 + 2 * lambda) * std::pow(h - lambda, p + 1) + std::pow(lambda, p + 2)) * x +
                                   (h * (p + 3 - 2 * lambda) * std::pow(h - lambda, p + 1) +
                                    (p + 2 - lambda) * std::pow(lambda, p + 1)) * y,
                               1.0 / q);
  const double right = std::pow(std::pow(mu - h, r) + std::pow(1 - mu, r), 1.0 - 1.0 / q) *
                       std::pow((h * (p + 1 + 2 * mu) * std::pow(mu - h, p + 1) + (p + 1 + mu) * std::pow(1 - mu, p + 1)) * x +
                                    (h * (p + 3 - 2 * mu) * std::pow(mu - h, p + 1) + std::pow(1 - mu, p + 2)) * y,
                                1.0 / q);
  return ba * hoelder_prefactor(p, q) * std::pow(1.0 / ((p + 1) * (p + 2)), 1.0 / q) * (left + right);
}

/// p = 1 display for arbitrary (lambda, mu).
inline double lambda_mu_p1(double lambda, double mu, double q, double da, double db, double ba) {
  const double h = 0.5;
  const double x = std::pow(da, q);
  const double y = std::pow(db, q);
  const double left =
      std::pow(std::pow(h - lambda, 2) + lambda * lambda, 1.0 - 1.0 / q) *
      std::pow(((1 + lambda) * std::pow(h - lambda, 2) + std::pow(lambda, 3)) * x +
                   ((2 - lambda) * std::pow(h - lambda, 2) + (3 - lambda) * lambda * lambda) * y,
               1.0 / q);
  const double right =
      std::pow(std::pow(mu - h, 2) + std::pow(1 - mu, 2), 1.0 - 1.0 / q) *
      std::pow(((1 + mu) * std::pow(mu - h, 2) + (2 + mu) * std::pow(1 - mu, 2)) * x +
                   ((2 - mu) * std::pow(mu - h, 2) + std::pow(1 - mu, 3)) * y,
               1.0 / q);
  return ba * h * std::pow(1.0 / 3.0, 1.0 / q) * (left + right);
}

/// p = q display for arbitrary (lambda, mu).
inline double lambda_mu_pq(double lambda, double mu, double q, double da, double db, double ba) {
  const double h = 0.5;
  const double x = std::pow(da, q);
  const double y = std::pow(db, q);
  const double left = std::pow((h * (q + 1 + 2 * lambda) * std::pow(h - lambda, q + 1) + std::pow(lambda, q + 2)) * x +
                                   (h * (q + 3 - 2 * lambda) * std::pow(h - lambda, q + 1) +
                                    (q + 2 - lambda) * std::pow(lambda, q + 1)) * y,
                               1.0 / q);
  const double right = std::pow((h * (q + 1 + 2 * mu) * std::pow(mu - h, q + 1) + (q + 1 + mu) * std::pow(1 - mu, q + 1)) * x +
                                    (h * (q + 3 - 2 * mu) * std::pow(mu - h, q + 1) + std::pow(1 - mu, q + 2)) * y,
                                1.0 / q);
  return ba * h * std::pow(2.0 / ((q + 1) * (q + 2)), 1.0 / q) * (left + right);
}

/// (m, ell) family, general (p, q).
inline double lm_general(double m, double l, double p, double q, double da, double db, double ba) {
  const double r = hoelder_exponent(p, q);
  const double A = std::pow(2 * l, p + 2) + (m * p + m + 2 * l) * std::pow(m - 2 * l, p + 1);
  const double B = (2 * m * p + 4 * m - 2 * l) * std::pow(2 * l, p + 1) + (m * p + 3 * m - 2 * l) * std::pow(m - 2 * l, p + 1);
  return ba / (4 * m * m) * hoelder_prefactor(p, q) * std::pow(1.0 / (2 * m * (p + 1) * (p + 2)), 1.0 / q) *
         std::pow(std::pow(2 * l, r) + std::pow(m - 2 * l, r), 1.0 - 1.0 / q) * swapped_pair(A, B, da, db, q);
}

/// (m, ell) family, p = q.
inline double lm_pq(double m, double l, double q, double da, double db, double ba) {
  const double A = std::pow(2 * l, q + 2) + (m * q + m + 2 * l) * std::pow(m - 2 * l, q + 1);
  const double B = (2 * m * q + 4 * m - 2 * l) * std::pow(2 * l, q + 1) + (m * q + 3 * m - 2 * l) * std::pow(m - 2 * l, q + 1);
  return ba / (4 * m) * std::pow(1.0 / (2 * m * m * (q + 1) * (q + 2)), 1.0 / q) * swapped_pair(A, B, da, db, q);
}

/// (m, ell) family, p = 1.
inline double lm_p1(double m, double l, double q, double da, double db, double ba) {
  const double A = (m + l) * std::pow(m - 2 * l, 2) + 4 * l * l * l;
  const double B = (2 * m - l) * std::pow(m - 2 * l, 2) + 4 * (3 * m - l) * l * l;
  return ba / (8 * m * m) * std::pow(1.0 / (3 * m), 1.0 / q) *
         std::pow(std::pow(m - 2 * l, 2) + 4 * l * l, 1.0 - 1.0 / q) * swapped_pair(A, B, da, db, q);
}

/// Seven named rules, general (p, q).
inline double named_general(NamedRule rule, double p, double q, double da, double db, double ba) {
  const double pre = hoelder_prefactor(p, q);
  const double r = hoelder_exponent(p, q);
  const double k = 1.0 - 1.0 / q;
  auto inv = [&](double c) { return std::pow(1.0 / (c * (p + 1) * (p + 2)), 1.0 / q); };
  switch (rule) {
    case NamedRule::Midpoint:
      return ba / 4 * pre * inv(2) * swapped_pair(p + 1, p + 3, da, db, q);
    case NamedRule::Trapezoid:
      return ba / 4 * pre * inv(2) * swapped_pair(1, 2 * p + 3, da, db, q);
    case NamedRule::Avg3:
      return ba / 36 * pre * inv(6) * std::pow(1 + std::pow(2.0, r), k) *
             swapped_pair(std::pow(2.0, p + 2) + 3 * p + 5, (3 * p + 5) * std::pow(2.0, p + 2) + 3 * p + 7, da, db, q);
    case NamedRule::AvgMid:
      return ba / 8 * pre * inv(4) * swapped_pair(p + 2, 3 * p + 6, da, db, q);
    case NamedRule::Fifth13:
      return ba / 100 * pre * inv(10) * std::pow(std::pow(2.0, r) + std::pow(3.0, r), k) *
             swapped_pair(std::pow(2.0, p + 2) + (5 * p + 7) * std::pow(3.0, p + 1),
                          (5 * p + 9) * std::pow(2.0, p + 2) + (5 * p + 13) * std::pow(3.0, p + 1), da, db, q);
    case NamedRule::Fifth221:
      return ba / 100 * pre * inv(10) * std::pow(1 + std::pow(4.0, r), k) *
             swapped_pair(std::pow(4.0, p + 2) + 5 * p + 9, (5 * p + 8) * std::pow(2.0, 2 * p + 3) + 5 * p + 11, da, db, q);
    case NamedRule::Simpson:
      return ba / 36 * pre * inv(6) * std::pow(1 + std::pow(2.0, r), k) *
             swapped_pair((3 * p + 4) * std::pow(2.0, p + 1) + 1, (3 * p + 8) * std::pow(2.0, p + 1) + 6 * p + 11, da, db, q);
  }
  throw std::logic_error("unknown rule");
}

/// Seven named rules, p = q. The avg-mid display carries stray 4(q + 2) factors inside its
/// brackets; it is kept separately as named_pq_avg_mid_as_printed and is not a valid fixture.
/// The simpson display writes p for q in its brackets; it is transcribed with q.
inline double named_pq(NamedRule rule, double q, double da, double db, double ba) {
  auto inv = [&](double c) { return std::pow(1.0 / (c * (q + 1) * (q + 2)), 1.0 / q); };
  switch (rule) {
    case NamedRule::Midpoint:
      return ba / 4 * inv(2) * swapped_pair(q + 1, q + 3, da, db, q);
    case NamedRule::Trapezoid:
      return ba / 4 * inv(2) * swapped_pair(1, 2 * q + 3, da, db, q);
    case NamedRule::Avg3:
      return ba / 12 * inv(18) *
             swapped_pair(std::pow(2.0, q + 2) + 3 * q + 5, (3 * q + 5) * std::pow(2.0, q + 2) + 3 * q + 7, da, db, q);
    case NamedRule::AvgMid:
      return ba / 8 * inv(4) * swapped_pair(q + 2, 3 * q + 6, da, db, q);
    case NamedRule::Fifth13:
      return ba / 20 * inv(50) *
             swapped_pair(std::pow(2.0, q + 2) + (5 * q + 7) * std::pow(3.0, q + 1),
                          (5 * q + 9) * std::pow(2.0, q + 2) + (5 * q + 13) * std::pow(3.0, q + 1), da, db, q);
    case NamedRule::Fifth221:
      return ba / 20 * inv(50) *
             swapped_pair(std::pow(4.0, q + 2) + 5 * q + 9, (5 * q + 8) * std::pow(2.0, 2 * q + 3) + 5 * q + 11, da, db, q);
    case NamedRule::Simpson:
      return ba / 12 * inv(18) *
             swapped_pair((3 * q + 4) * std::pow(2.0, q + 1) + 1, (3 * q + 8) * std::pow(2.0, q + 1) + 6 * q + 11, da, db, q);
  }
  throw std::logic_error("unknown rule");
}

inline double named_pq_avg_mid_as_printed(double q, double da, double db, double ba) {
  const double stray = 4 * (q + 2);
  return ba / 8 * std::pow(1.0 / (4 * (q + 1) * (q + 2)), 1.0 / q) *
         swapped_pair((q + 2) * stray, (3 * q + 6) * stray, da, db, q);
}

struct RationalConstant {
  long numerator;
  long denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Constant c of the q = 1 bound c (b - a)(|f'(a)| + |f'(b)|).
inline RationalConstant named_q1_constant(NamedRule rule) {
  switch (rule) {
    case NamedRule::Midpoint: return {1, 8};
    case NamedRule::Trapezoid: return {1, 8};
    case NamedRule::Avg3: return {5, 72};
    case NamedRule::AvgMid: return {1, 16};
    case NamedRule::Fifth13: return {13, 200};
    case NamedRule::Fifth221: return {17, 200};
    case NamedRule::Simpson: return {5, 72};
  }
  throw std::logic_error("unknown rule");
}

struct P1Weights {
  double A;
  double B;
  double D;
};

/// Power-mean weights (A, B) / D of the p = 1 displays.
inline P1Weights named_p1_weights(NamedRule rule) {
  switch (rule) {
    case NamedRule::Midpoint: return {1, 2, 3};
    case NamedRule::Trapezoid: return {1, 5, 6};
    case NamedRule::Avg3: return {8, 37, 45};
    case NamedRule::AvgMid: return {1, 3, 4};
    case NamedRule::Fifth13: return {58, 137, 195};
    case NamedRule::Fifth221: return {13, 72, 85};
    case NamedRule::Simpson: return {29, 61, 90};
  }
  throw std::logic_error("unknown rule");
}

/// Seven named rules, p = 1: c (b - a) times the swapped weighted power means.
inline double named_p1(NamedRule rule, double q, double da, double db, double ba) {
  const P1Weights w = named_p1_weights(rule);
  return named_q1_constant(rule).value() * ba * swapped_means(w.A, w.B, w.D, da, db, q);
}

/// The earlier published Simpson-type estimate 5(b - a)/72 [((29 da^q + 61 db^q)/90)^(1/q) + ((61 da^q + 29 db^q)/90)^(1/q)].
inline double simpson_published(double q, double da, double db, double ba) {
  return 5.0 * ba / 72.0 * (std::pow((29 * std::pow(da, q) + 61 * std::pow(db, q)) / 90, 1.0 / q) +
                            std::pow((61 * std::pow(da, q) + 29 * std::pow(db, q)) / 90, 1.0 / q));
}

// Special-means displays. Each evaluates the printed right-hand side for b > a > 0.

/// Power family, general (p, q).
inline double means_power_general(double m, double l, double s, double p, double q, double a, double b) {
  const double r = hoelder_exponent(p, q);
  const double A = std::pow(2 * l, p + 2) + (m * p + m + 2 * l) * std::pow(m - 2 * l, p + 1);
  const double B = (2 * m * p + 4 * m - 2 * l) * std::pow(2 * l, p + 1) + (m * p + 3 * m - 2 * l) * std::pow(m - 2 * l, p + 1);
  const double x = std::pow(a, (s - 1) * q);
  const double y = std::pow(b, (s - 1) * q);
  return (b - a) / (4 * m * m) * std::fabs(s) * hoelder_prefactor(p, q) *
         std::pow(1.0 / (2 * m * (p + 1) * (p + 2)), 1.0 / q) *
         std::pow(std::pow(2 * l, r) + std::pow(m - 2 * l, r), 1.0 - 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_harmonic_general(double m, double l, double p, double q, double a, double b) {
  const double r = hoelder_exponent(p, q);
  const double A = std::pow(2 * l, p + 2) + (m * p + m + 2 * l) * std::pow(m - 2 * l, p + 1);
  const double B = (2 * m * p + 4 * m - 2 * l) * std::pow(2 * l, p + 1) + (m * p + 3 * m - 2 * l) * std::pow(m - 2 * l, p + 1);
  const double x = 1.0 / std::pow(a, 2 * q);
  const double y = 1.0 / std::pow(b, 2 * q);
  return (b - a) / (4 * m * m) * hoelder_prefactor(p, q) * std::pow(1.0 / (2 * m * (p + 1) * (p + 2)), 1.0 / q) *
         std::pow(std::pow(2 * l, r) + std::pow(m - 2 * l, r), 1.0 - 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_power_p1(double m, double l, double s, double q, double a, double b) {
  const double A = 4 * l * l * l + (m + l) * std::pow(m - 2 * l, 2);
  const double B = 4 * (3 * m - l) * l * l + (2 * m - l) * std::pow(m - 2 * l, 2);
  const double x = std::pow(a, (s - 1) * q);
  const double y = std::pow(b, (s - 1) * q);
  return (b - a) / (8 * m * m) * std::pow(1.0 / (3 * m), 1.0 / q) * std::pow(4 * l * l + std::pow(m - 2 * l, 2), 1.0 - 1.0 / q) *
         std::fabs(s) * (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

/// The power-family p = q display with its second bracket corrected: as printed, the exponents
/// q + 2 and q + 1 on 2 ell are exchanged there relative to the first bracket.
inline double means_power_pq(double m, double l, double s, double q, double a, double b) {
  const double A = std::pow(2 * l, q + 2) + (m * q + m + 2 * l) * std::pow(m - 2 * l, q + 1);
  const double B = (2 * m * q + 4 * m - 2 * l) * std::pow(2 * l, q + 1) + (m * q + 3 * m - 2 * l) * std::pow(m - 2 * l, q + 1);
  const double x = std::pow(a, (s - 1) * q);
  const double y = std::pow(b, (s - 1) * q);
  return (b - a) / (4 * m) * std::fabs(s) * std::pow(1.0 / (2 * m * m * (q + 1) * (q + 2)), 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_power_pq_as_printed(double m, double l, double s, double q, double a, double b) {
  const double A = std::pow(2 * l, q + 2) + (m * q + m + 2 * l) * std::pow(m - 2 * l, q + 1);
  const double B = (2 * m * q + 4 * m - 2 * l) * std::pow(2 * l, q + 1) + (m * q + 3 * m - 2 * l) * std::pow(m - 2 * l, q + 1);
  const double B2 = (2 * m * q + 4 * m - 2 * l) * std::pow(2 * l, q + 2) + (m * q + 3 * m - 2 * l) * std::pow(m - 2 * l, q + 1);
  const double A2 = std::pow(2 * l, q + 1) + (m * q + m + 2 * l) * std::pow(m - 2 * l, q + 1);
  const double x = std::pow(a, (s - 1) * q);
  const double y = std::pow(b, (s - 1) * q);
  return (b - a) / (4 * m) * std::fabs(s) * std::pow(1.0 / (2 * m * m * (q + 1) * (q + 2)), 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B2 * x + A2 * y, 1.0 / q));
}

inline double means_power_particular(double m, double l, double s, double a, double b) {
  return (b - a) / (4 * m * m) * std::fabs(s) * (4 * l * l + std::pow(m - 2 * l, 2)) *
         0.5 * (std::pow(a, s - 1) + std::pow(b, s - 1));
}

inline double means_harmonic_particular(double m, double l, double a, double b) {
  const double h_sq = 2 * a * a * b * b / (a * a + b * b);
  return (b - a) / (4 * m * m) * (4 * l * l + std::pow(m - 2 * l, 2)) / h_sq;
}

/// ln x family: the general display, with |f'|^q endpoints a^-q, b^-q.
inline double means_log_general(double m, double l, double p, double q, double a, double b) {
  const double r = hoelder_exponent(p, q);
  const double A = std::pow(2 * l, p + 2) + (m * p + m + 2 * l) * std::pow(m - 2 * l, p + 1);
  const double B = (m * p + 3 * m - 2 * l) * std::pow(m - 2 * l, p + 1) + (2 * m * p + 4 * m - 2 * l) * std::pow(2 * l, p + 1);
  const double x = 1.0 / std::pow(a, q);
  const double y = 1.0 / std::pow(b, q);
  return (b - a) / (4 * m * m) * hoelder_prefactor(p, q) * std::pow(1.0 / (2 * m * (p + 1) * (p + 2)), 1.0 / q) *
         std::pow(std::pow(m - 2 * l, r) + std::pow(2 * l, r), 1.0 - 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_log_pq(double m, double l, double q, double a, double b) {
  const double A = std::pow(2 * l, q + 2) + (m * q + m + 2 * l) * std::pow(m - 2 * l, q + 1);
  const double B = (m * q + 3 * m - 2 * l) * std::pow(m - 2 * l, q + 1) + (2 * m * q + 4 * m - 2 * l) * std::pow(2 * l, q + 1);
  const double x = 1.0 / std::pow(a, q);
  const double y = 1.0 / std::pow(b, q);
  return (b - a) / (4 * m) * std::pow(1.0 / (2 * m * m * (q + 1) * (q + 2)), 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_log_p1(double m, double l, double q, double a, double b) {
  const double A = 4 * l * l * l + (m + l) * std::pow(m - 2 * l, 2);
  const double B = (2 * m - l) * std::pow(m - 2 * l, 2) + 4 * (3 * m - l) * l * l;
  const double x = 1.0 / std::pow(a, q);
  const double y = 1.0 / std::pow(b, q);
  return (b - a) / (8 * m * m) * std::pow(1.0 / (3 * m), 1.0 / q) * std::pow(std::pow(m - 2 * l, 2) + 4 * l * l, 1.0 - 1.0 / q) *
         (std::pow(A * x + B * y, 1.0 / q) + std::pow(B * x + A * y, 1.0 / q));
}

inline double means_log_particular(double m, double l, double a, double b) {
  const double h = 2 * a * b / (a + b);
  return (b - a) / (4 * m * m) * (4 * l * l + std::pow(m - 2 * l, 2)) / h;
}

}  // namespace fixtures
