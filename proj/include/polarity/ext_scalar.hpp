#pragma once

#include "polarity/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>

namespace polarity {

// Canonical enlargements of two totally ordered groups, each carrying an
// upper and a lower composition that differ only in which absorbing element
// wins the indeterminate clash:
//
//   ExtNonNeg : (R_\{0}+, x) enlarged with 0 and +inf.  In upper_mul the
//               clash 0 * inf resolves to +inf, in lower_mul to 0.
//   ExtReal   : (R, +) enlarged with -inf and +inf.  In upper_add the clash
//               (+inf) + (-inf) resolves to +inf, in lower_add to -inf.
//
// The two instances are written out separately on purpose: the absorbing
// tables stay explicit and auditable.

// ---------------------------------------------------------------------------
// Multiplicative enlargement [0, +inf].

class ExtNonNeg {
 public:
  ExtNonNeg() : kind_(Kind::Zero) {}

  static ExtNonNeg zero() { return ExtNonNeg(Kind::Zero); }
  static ExtNonNeg one() { return from(Rational(1)); }
  static ExtNonNeg infinity() { return ExtNonNeg(Kind::Inf); }

  // q must be >= 0; q == 0 canonicalizes to the zero element.
  static ExtNonNeg from(const Rational& q) {
    if (q < 0) throw std::invalid_argument("ExtNonNeg: negative value");
    if (q == 0) return zero();
    ExtNonNeg e(Kind::Finite);
    e.value_ = q;
    return e;
  }

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_finite() const { return kind_ != Kind::Inf; }
  bool is_infinite() const { return kind_ == Kind::Inf; }

  // Finite value; 0 for the zero element. Throws on +inf.
  const Rational& value() const {
    if (is_infinite()) throw std::domain_error("ExtNonNeg::value on +inf");
    return value_;
  }

  // Involution swapping 0 and +inf, reciprocal on positives.
  ExtNonNeg inverse() const {
    if (is_zero()) return infinity();
    if (is_infinite()) return zero();
    return from(1 / value_);
  }

  friend bool operator==(const ExtNonNeg& a, const ExtNonNeg& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtNonNeg& a, const ExtNonNeg& b) {
    if (a.kind_ == b.kind_)
      return a.kind_ == Kind::Finite && a.value_ < b.value_;
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  }
  friend bool operator<=(const ExtNonNeg& a, const ExtNonNeg& b) { return a < b || a == b; }
  friend bool operator>(const ExtNonNeg& a, const ExtNonNeg& b) { return b < a; }
  friend bool operator>=(const ExtNonNeg& a, const ExtNonNeg& b) { return b <= a; }
  friend bool operator!=(const ExtNonNeg& a, const ExtNonNeg& b) { return !(a == b); }

  double to_double() const;

 private:
  enum class Kind { Zero = 0, Finite = 1, Inf = 2 };
  explicit ExtNonNeg(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_{0};  // positive iff Finite
};

// +inf absorbs every partner; 0 absorbs only finite ones.
ExtNonNeg upper_mul(const ExtNonNeg& a, const ExtNonNeg& b);

// 0 absorbs every partner; +inf absorbs only positive/infinite ones.
ExtNonNeg lower_mul(const ExtNonNeg& a, const ExtNonNeg& b);

inline ExtNonNeg ext_inverse(const ExtNonNeg& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const ExtNonNeg& a);

// ---------------------------------------------------------------------------
// Additive enlargement [-inf, +inf].

class ExtReal {
 public:
  ExtReal() : kind_(Kind::Finite) {}
  ExtReal(const Rational& q) : kind_(Kind::Finite), value_(q) {}

  static ExtReal neg_infinity() { return ExtReal(Kind::NegInf); }
  static ExtReal pos_infinity() { return ExtReal(Kind::PosInf); }
  static ExtReal from(const Rational& q) { return ExtReal(q); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_infinite() const { return kind_ == Kind::NegInf; }
  bool is_pos_infinite() const { return kind_ == Kind::PosInf; }

  const Rational& value() const {
    if (!is_finite()) throw std::domain_error("ExtReal::value on infinity");
    return value_;
  }

  // Extended group inverse: negation with (+inf) <-> (-inf).
  ExtReal negated() const {
    switch (kind_) {
      case Kind::NegInf: return pos_infinity();
      case Kind::PosInf: return neg_infinity();
      default: return ExtReal(-value_);
    }
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == b.kind_)
      return a.kind_ == Kind::Finite && a.value_ < b.value_;
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

  double to_double() const;

 private:
  enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_{0};
};

// +inf absorbs every partner; -inf absorbs only finite/-inf ones.
ExtReal upper_add(const ExtReal& a, const ExtReal& b);

// -inf absorbs every partner; +inf absorbs only finite/+inf ones.
ExtReal lower_add(const ExtReal& a, const ExtReal& b);

std::ostream& operator<<(std::ostream& os, const ExtReal& a);

// ---------------------------------------------------------------------------
// Bridges between the two enlargements and the raw scalars.

// max(z, 0) lifted into the multiplicative enlargement.
inline ExtNonNeg positive_part(const Rational& z) {
  return z > 0 ? ExtNonNeg::from(z) : ExtNonNeg::zero();
}

// Nonnegative extended real -> multiplicative element. Throws when negative.
ExtNonNeg to_ext_nonneg(const ExtReal& v);

inline ExtReal to_ext_real(const ExtNonNeg& v) {
  return v.is_infinite() ? ExtReal::pos_infinity() : ExtReal::from(v.value());
}

}  // namespace polarity
