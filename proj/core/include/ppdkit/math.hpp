#pragma once

#include <cmath>
#include <span>

#include "ppdkit/errors.hpp"

namespace ppdkit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
};

// 2x2 matrix, row major. All solves in this project are 2x2 with an explicit
// closed-form inverse; the determinant guard below rejects |det| <= 1e-300.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  double det() const { return a11 * a22 - a12 * a21; }
  bool symmetric(double tol = 1e-12) const {
    return std::abs(a12 - a21) <=
           tol * (1.0 + std::abs(a12) + std::abs(a21));
  }
  // Symmetric positive definite: positive leading minors.
  bool spd() const { return symmetric() && a11 > 0.0 && det() > 0.0; }

  Mat2 operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Vec2 operator*(const Vec2& v) const {
    return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
  }

  Mat2 inverse() const {
    const double d = det();
    if (!(std::abs(d) > 1e-300)) {
      throw SingularStepError("2x2 inverse: |det| <= 1e-300");
    }
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  // Lower Cholesky factor of an SPD matrix.
  Mat2 cholesky_lower() const {
    if (!(a11 > 0.0)) throw SingularStepError("cholesky: a11 <= 0");
    const double l11 = std::sqrt(a11);
    const double l21 = a21 / l11;
    const double rest = a22 - l21 * l21;
    if (!(rest > 0.0)) throw SingularStepError("cholesky: not SPD");
    return {l11, 0.0, l21, std::sqrt(rest)};
  }
};

double logsumexp(std::span<const double> values);

inline double log_normal_pdf(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * (std::log(2.0 * M_PI * variance) + d * d / variance);
}

// Standard normal CDF and quantile. The quantile uses Acklam's rational
// approximation refined by two Halley steps, accurate to ~1e-15.
double normal_cdf(double x);
double normal_quantile(double p);

}  // namespace ppdkit
