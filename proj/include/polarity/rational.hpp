#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarity {

// Exact rational scalar. Every finite coordinate, grid node and function
// value in the library is one of these, so identity checks on exact routes
// compare with tolerance zero.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec zero_vec(std::size_t dim) { return Vec(dim, Rational(0)); }

inline bool is_zero_vec(const Vec& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

// 2D cross product a.x*b.y - a.y*b.x; sign gives orientation.
inline Rational cross2(const Vec& a, const Vec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Counterclockwise perpendicular of a 2D vector.
inline Vec perp2(const Vec& a) { return Vec{-a[1], a[0]}; }

// Scales a nonzero rational vector to the primitive integer vector with the
// same orientation. Used as the canonical form of a ray direction.
inline Vec primitive_direction(const Vec& a) {
  if (is_zero_vec(a)) throw std::invalid_argument("primitive_direction: zero vector");
  BigInt l = 1;
  for (const auto& c : a) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<BigInt> ints(a.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ints[i] = numerator(a[i] * Rational(l));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints[i]));
  }
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "p/q", "p", or a decimal such as "-1.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

}  // namespace polarity
