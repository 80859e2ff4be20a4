#include "polarity/ext_scalar.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace polarity;

namespace {

// The five-element probe sets cover every absorbing-case combination.
std::vector<ExtNonNeg> mul_probe() {
  return {ExtNonNeg::zero(), ExtNonNeg::from(Rational(1, 2)), ExtNonNeg::one(),
          ExtNonNeg::from(Rational(2)), ExtNonNeg::infinity()};
}

std::vector<ExtReal> add_probe() {
  return {ExtReal::neg_infinity(), ExtReal::from(-1), ExtReal::from(0), ExtReal::from(1),
          ExtReal::pos_infinity()};
}

ExtNonNeg inf_of(const std::vector<ExtNonNeg>& xs) {
  ExtNonNeg m = ExtNonNeg::infinity();  // inf of the empty family is the top
  for (const auto& x : xs)
    if (x < m) m = x;
  return m;
}

ExtNonNeg sup_of(const std::vector<ExtNonNeg>& xs) {
  ExtNonNeg m = ExtNonNeg::zero();  // sup of the empty family is the bottom
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

ExtReal inf_of(const std::vector<ExtReal>& xs) {
  ExtReal m = ExtReal::pos_infinity();
  for (const auto& x : xs)
    if (x < m) m = x;
  return m;
}

ExtReal sup_of(const std::vector<ExtReal>& xs) {
  ExtReal m = ExtReal::neg_infinity();
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

}  // namespace

TEST_CASE("multiplicative enlargement: absorbing tables") {
  const auto inf = ExtNonNeg::infinity();
  const auto zero = ExtNonNeg::zero();
  const auto two = ExtNonNeg::from(Rational(2));
  const auto three = ExtNonNeg::from(Rational(3));
  const auto five = ExtNonNeg::from(Rational(5));

  // +inf absorbs everything under upper multiplication.
  CHECK(upper_mul(inf, zero) == inf);
  CHECK(upper_mul(zero, inf) == inf);
  CHECK(upper_mul(inf, two) == inf);
  // 0 absorbs finite partners under upper multiplication.
  CHECK(upper_mul(zero, five) == zero);
  CHECK(upper_mul(five, zero) == zero);
  // 0 absorbs everything under lower multiplication.
  CHECK(lower_mul(zero, inf) == zero);
  CHECK(lower_mul(inf, zero) == zero);
  // +inf absorbs positive partners under lower multiplication.
  CHECK(lower_mul(inf, two) == inf);
  CHECK(lower_mul(two, inf) == inf);
  // Group operation on positives.
  CHECK(upper_mul(two, three) == ExtNonNeg::from(Rational(6)));
  CHECK(lower_mul(two, three) == ExtNonNeg::from(Rational(6)));
}

TEST_CASE("multiplicative enlargement: extended inverse") {
  CHECK(ExtNonNeg::zero().inverse() == ExtNonNeg::infinity());
  CHECK(ExtNonNeg::infinity().inverse() == ExtNonNeg::zero());
  CHECK(ExtNonNeg::from(Rational(2)).inverse() == ExtNonNeg::from(Rational(1, 2)));
  for (const auto& a : mul_probe()) CHECK(a.inverse().inverse() == a);
}

TEST_CASE("multiplicative enlargement: order") {
  const auto p = mul_probe();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      CHECK((p[i] <= p[j] || p[j] <= p[i]));
      if (i < j) CHECK(p[i] < p[j]);
    }
  CHECK(ExtNonNeg::zero() <= ExtNonNeg::infinity());
}

TEST_CASE("multiplicative enlargement: exhaustive laws over the probe set") {
  const auto p = mul_probe();
  for (const auto& a : p)
    for (const auto& b : p) {
      CHECK(upper_mul(a, b) == upper_mul(b, a));
      CHECK(lower_mul(a, b) == lower_mul(b, a));
      CHECK(lower_mul(a, b) <= upper_mul(a, b));
      // De Morgan under the inverse.
      CHECK(upper_mul(a, b).inverse() == lower_mul(a.inverse(), b.inverse()));
      CHECK(lower_mul(a, b).inverse() == upper_mul(a.inverse(), b.inverse()));
      for (const auto& c : p) {
        CHECK(upper_mul(upper_mul(a, b), c) == upper_mul(a, upper_mul(b, c)));
        CHECK(lower_mul(lower_mul(a, b), c) == lower_mul(a, lower_mul(b, c)));
        // Isotony in the second argument.
        if (b <= c) {
          CHECK(upper_mul(a, b) <= upper_mul(a, c));
          CHECK(lower_mul(a, b) <= lower_mul(a, c));
        }
        // Galois-style comparisons.
        const bool g1 = lower_mul(a, b.inverse()) <= c;
        const bool g2 = a <= upper_mul(b, c);
        const bool g3 = lower_mul(a, c.inverse()) <= b;
        CHECK(g1 == g2);
        CHECK(g2 == g3);
        // Mixed associativity inequality.
        CHECK(lower_mul(upper_mul(a, b), c) <= upper_mul(a, lower_mul(b, c)));
      }
      // a composed with its inverse brackets the unit.
      CHECK(upper_mul(a, a.inverse()) >= ExtNonNeg::one());
      CHECK(lower_mul(a, a.inverse()) <= ExtNonNeg::one());
    }
}

TEST_CASE("multiplicative enlargement: inverse swaps inf and sup over families") {
  const auto p = mul_probe();
  // All subsets of the probe set, the empty family included.
  for (unsigned mask = 0; mask < (1u << p.size()); ++mask) {
    std::vector<ExtNonNeg> family, inverses;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (mask & (1u << i)) {
        family.push_back(p[i]);
        inverses.push_back(p[i].inverse());
      }
    CHECK(inf_of(family).inverse() == sup_of(inverses));
    CHECK(sup_of(family).inverse() == inf_of(inverses));
  }
}

TEST_CASE("additive enlargement: absorbing tables") {
  const auto pinf = ExtReal::pos_infinity();
  const auto ninf = ExtReal::neg_infinity();
  CHECK(upper_add(pinf, ninf) == pinf);
  CHECK(upper_add(ninf, pinf) == pinf);
  CHECK(lower_add(pinf, ninf) == ninf);
  CHECK(lower_add(ninf, pinf) == ninf);
  CHECK(upper_add(ExtReal::from(1), ExtReal::from(2)) == ExtReal::from(3));
  CHECK(lower_add(ExtReal::from(1), ExtReal::from(2)) == ExtReal::from(3));
  CHECK(upper_add(ninf, ExtReal::from(5)) == ninf);
  CHECK(lower_add(pinf, ExtReal::from(5)) == pinf);
}

TEST_CASE("additive enlargement: extended negation") {
  CHECK(ExtReal::pos_infinity().negated() == ExtReal::neg_infinity());
  CHECK(ExtReal::neg_infinity().negated() == ExtReal::pos_infinity());
  for (const auto& a : add_probe()) CHECK(a.negated().negated() == a);
}

TEST_CASE("additive enlargement: exhaustive laws over the probe set") {
  const auto p = add_probe();
  for (const auto& a : p)
    for (const auto& b : p) {
      CHECK(upper_add(a, b) == upper_add(b, a));
      CHECK(lower_add(a, b) == lower_add(b, a));
      CHECK(lower_add(a, b) <= upper_add(a, b));
      CHECK(upper_add(a, b).negated() == lower_add(a.negated(), b.negated()));
      CHECK(lower_add(a, b).negated() == upper_add(a.negated(), b.negated()));
      for (const auto& c : p) {
        CHECK(upper_add(upper_add(a, b), c) == upper_add(a, upper_add(b, c)));
        CHECK(lower_add(lower_add(a, b), c) == lower_add(a, lower_add(b, c)));
        if (b <= c) {
          CHECK(upper_add(a, b) <= upper_add(a, c));
          CHECK(lower_add(a, b) <= lower_add(a, c));
        }
        const bool g1 = lower_add(a, b.negated()) <= c;
        const bool g2 = a <= upper_add(b, c);
        const bool g3 = lower_add(a, c.negated()) <= b;
        CHECK(g1 == g2);
        CHECK(g2 == g3);
        CHECK(lower_add(upper_add(a, b), c) <= upper_add(a, lower_add(b, c)));
      }
      CHECK(upper_add(a, a.negated()) >= ExtReal::from(0));
      CHECK(lower_add(a, a.negated()) <= ExtReal::from(0));
    }
}

TEST_CASE("additive enlargement: negation swaps inf and sup over families") {
  const auto p = add_probe();
  for (unsigned mask = 0; mask < (1u << p.size()); ++mask) {
    std::vector<ExtReal> family, negs;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (mask & (1u << i)) {
        family.push_back(p[i]);
        negs.push_back(p[i].negated());
      }
    CHECK(inf_of(family).negated() == sup_of(negs));
    CHECK(sup_of(family).negated() == inf_of(negs));
  }
}

TEST_CASE("randomized finite values obey the group laws") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> num(-24, 24), den(1, 8);
  auto rand_pos = [&]() {
    int n = num(rng);
    if (n <= 0) n = 1 - n;
    return ExtNonNeg::from(Rational(n, den(rng)));
  };
  auto rand_real = [&]() { return ExtReal::from(Rational(num(rng), den(rng))); };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = rand_pos(), b = rand_pos(), c = rand_pos();
    CHECK(upper_mul(a, b) == lower_mul(a, b));
    CHECK(upper_mul(upper_mul(a, b), c) == upper_mul(a, upper_mul(b, c)));
    CHECK(upper_mul(a, b).inverse() == lower_mul(a.inverse(), b.inverse()));
    const auto x = rand_real(), y = rand_real(), z = rand_real();
    CHECK(upper_add(x, y) == lower_add(x, y));
    CHECK(upper_add(upper_add(x, y), z) == upper_add(x, upper_add(y, z)));
    CHECK(upper_add(x, x.negated()) == ExtReal::from(0));
  }
}

TEST_CASE("bridges between the enlargements") {
  CHECK(positive_part(Rational(-3)) == ExtNonNeg::zero());
  CHECK(positive_part(Rational(3)) == ExtNonNeg::from(Rational(3)));
  CHECK(to_ext_nonneg(ExtReal::pos_infinity()) == ExtNonNeg::infinity());
  CHECK(to_ext_real(ExtNonNeg::zero()) == ExtReal::from(0));
  CHECK_THROWS(to_ext_nonneg(ExtReal::from(-1)));
  CHECK_THROWS(to_ext_nonneg(ExtReal::neg_infinity()));
}
