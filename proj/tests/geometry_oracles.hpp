#pragma once

// Test-only oracles, kept independent of the library's constraint machinery:
// membership is decided by brute-force triangle decomposition and gauges by
// exact ray / edge intersection over the raw vertex list.

#include "polarity/ext_scalar.hpp"
#include "polarity/rational.hpp"

#include <vector>

namespace polarity::testing {

inline bool oracle_in_triangle(const Vec& a, const Vec& b, const Vec& c, const Vec& x) {
  const Rational d1 = cross2(sub(b, a), sub(x, a));
  const Rational d2 = cross2(sub(c, b), sub(x, b));
  const Rational d3 = cross2(sub(a, c), sub(x, c));
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

inline bool oracle_on_segment(const Vec& a, const Vec& b, const Vec& x) {
  if (cross2(sub(b, a), sub(x, a)) != 0) return false;
  const Rational t = dot(sub(x, a), sub(b, a));
  return t >= 0 && t <= dot(sub(b, a), sub(b, a));
}

// x in conv(points), decided by enumerating point/segment/triangle hulls.
inline bool oracle_in_hull(const std::vector<Vec>& points, const Vec& x) {
  for (const auto& p : points)
    if (p == x) return true;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (oracle_on_segment(points[i], points[j], x)) return true;
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (oracle_in_triangle(points[i], points[j], points[k], x)) return true;
    }
  return false;
}

// Gauge of conv(points) at x: the smallest lambda > 0 with x in
// lambda*conv(points), found by intersecting the ray through x with every
// vertex-pair segment: mu*x = alpha*v_i + (1-alpha)*v_j, lambda = 1/mu.
inline ExtNonNeg oracle_gauge(const std::vector<Vec>& points, const Vec& x) {
  if (is_zero_vec(x))
    return oracle_in_hull(points, x) ? ExtNonNeg::zero() : ExtNonNeg::infinity();
  bool found = false;
  Rational best = 0;
  auto consider = [&](const Rational& mu) {
    if (mu <= 0) return;
    const Rational lambda = 1 / mu;
    if (!found || lambda < best) best = lambda;
    found = true;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec& v = points[i];
    // Ray through a single vertex: mu*x = v.
    if (cross2(x, v) == 0) {
      const Rational num = dot(v, x), den = dot(x, x);
      consider(num / den);
    }
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec& w = points[j];
      // Solve mu*x + alpha*(w - v) = w for (mu, alpha).
      const Vec d = sub(w, v);
      const Rational det = cross2(x, d);
      if (det == 0) continue;
      const Rational mu = cross2(w, d) / det;
      const Rational alpha = cross2(x, w) / det;
      if (alpha >= 0 && alpha <= 1) consider(mu);
    }
  }
  return found ? ExtNonNeg::from(best) : ExtNonNeg::infinity();
}

}  // namespace polarity::testing
