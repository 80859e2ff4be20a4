#include "polarity/ext_scalar.hpp"

#include <limits>
#include <ostream>

namespace polarity {

ExtNonNeg upper_mul(const ExtNonNeg& a, const ExtNonNeg& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtNonNeg::infinity();
  if (a.is_zero() || b.is_zero()) return ExtNonNeg::zero();
  return ExtNonNeg::from(a.value() * b.value());
}

ExtNonNeg lower_mul(const ExtNonNeg& a, const ExtNonNeg& b) {
  if (a.is_zero() || b.is_zero()) return ExtNonNeg::zero();
  if (a.is_infinite() || b.is_infinite()) return ExtNonNeg::infinity();
  return ExtNonNeg::from(a.value() * b.value());
}

double ExtNonNeg::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return polarity::to_double(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtNonNeg& a) {
  if (a.is_infinite()) return os << "inf";
  return os << a.value();
}

ExtReal upper_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_infinite() || b.is_pos_infinite()) return ExtReal::pos_infinity();
  if (a.is_neg_infinite() || b.is_neg_infinite()) return ExtReal::neg_infinity();
  return ExtReal::from(a.value() + b.value());
}

ExtReal lower_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_neg_infinite() || b.is_neg_infinite()) return ExtReal::neg_infinity();
  if (a.is_pos_infinite() || b.is_pos_infinite()) return ExtReal::pos_infinity();
  return ExtReal::from(a.value() + b.value());
}

double ExtReal::to_double() const {
  if (is_pos_infinite()) return std::numeric_limits<double>::infinity();
  if (is_neg_infinite()) return -std::numeric_limits<double>::infinity();
  return polarity::to_double(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& a) {
  if (a.is_pos_infinite()) return os << "inf";
  if (a.is_neg_infinite()) return os << "-inf";
  return os << a.value();
}

ExtNonNeg to_ext_nonneg(const ExtReal& v) {
  if (v.is_pos_infinite()) return ExtNonNeg::infinity();
  if (v.is_neg_infinite() || v.value() < 0)
    throw std::domain_error("to_ext_nonneg: negative extended real");
  return ExtNonNeg::from(v.value());
}

}  // namespace polarity
