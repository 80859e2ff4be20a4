#pragma once

#include "polarity/ext_scalar.hpp"
#include "polarity/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polarity {

// Closed halfspace <normal, x> <= offset. A zero normal with negative offset
// encodes the empty set; zero normals with nonnegative offsets are dropped.
struct Halfspace {
  Vec normal;
  Rational offset;
};

// Finite generator description: the represented set is
// closed-conv(points) + cone(rays). No points means the empty set.
struct Generators {
  std::vector<Vec> points;
  std::vector<Vec> rays;
};

// A closed convex subset of R^d held in generator form, constraint form, or
// both. All coordinates are exact rationals; every predicate on these bodies
// is decided exactly. Values are immutable after construction; conversions
// between the two forms return enriched copies.
//
// Form conversions (vertex/ray enumeration and facet enumeration) are
// implemented for d <= 2. Higher-dimensional bodies work with whichever
// forms the caller supplies.
class ConvexBody {
 public:
  static ConvexBody from_generators(int dim, Generators gen);
  static ConvexBody from_points(int dim, std::vector<Vec> points);
  static ConvexBody from_constraints(int dim, std::vector<Halfspace> halfspaces);
  static ConvexBody whole_space(int dim);
  static ConvexBody origin(int dim);
  static ConvexBody empty(int dim);

  int dim() const { return dim_; }
  bool has_generators() const { return gen_.has_value(); }
  bool has_constraints() const { return cons_.has_value(); }
  const Generators& generators() const;
  const std::vector<Halfspace>& constraints() const;

  bool is_empty() const;

 private:
  ConvexBody(int dim) : dim_(dim) {}
  int dim_ = 0;
  std::optional<Generators> gen_;
  std::optional<std::vector<Halfspace>> cons_;

  friend ConvexBody with_generators(const ConvexBody&);
  friend ConvexBody with_constraints(const ConvexBody&);
};

// Returns a copy carrying generator form (vertex/ray enumeration, d <= 2).
ConvexBody with_generators(const ConvexBody& body);

// Returns a copy carrying constraint form (facet enumeration, d <= 2).
ConvexBody with_constraints(const ConvexBody& body);

// Deduplicates generators, keeps only extreme points of the point hull and
// primitive ray directions.
Generators canonicalize_generators(int dim, const Generators& gen);

// Validity certificate for membership in the class of bipolar sets.
struct BipolarCertificate {
  ConvexBody body;
  bool contains_zero = false;
  bool closed_convex = false;
  bool valid() const { return contains_zero && closed_convex; }
};

// ---------------------------------------------------------------------------
// Polarity operations. All take the Euclidean dot product as the pairing.

// { y : <p,y> <= 1 for generator points p, <r,y> <= 0 for rays r }.
// The empty set maps to the whole space.
ConvexBody polar_set(const ConvexBody& body);

// { y : <g,y> <= 0 for every generator g, points and rays alike }.
ConvexBody polar_cone(const ConvexBody& body);

// closed-conv(body united with {0}); in dimension <= 2 the double-polar route
// is evaluated as well and a mismatch throws.
ConvexBody bipolar_set(const ConvexBody& body);

BipolarCertificate is_bipolar_set(const ConvexBody& body);

// Lattice operations on bipolar sets: meet is the intersection, join the
// closed convex hull of the union. Non-bipolar inputs throw with the name of
// the violated certificate flag.
ConvexBody set_meet(const ConvexBody& a, const ConvexBody& b);
ConvexBody set_join(const ConvexBody& a, const ConvexBody& b);

// sup over the body of <x, .>; -inf on the empty set, +inf if some ray has
// positive dot with x.
ExtReal support_eval(const ConvexBody& body, const Vec& x);

// inf { lambda > 0 : x in lambda * body }, inf of the empty set being +inf.
ExtNonNeg minkowski_eval(const ConvexBody& body, const Vec& x);

// Face of the body exposed by y: generators attaining max <., y>, plus the
// rays orthogonal to y. Throws if the support value is infinite.
ConvexBody exposed_face(const ConvexBody& body, const Vec& y);

// True iff <p - x, y> <= 0 for all generator points and <r, y> <= 0 for all
// rays. Throws when x is outside the body.
bool normal_cone_contains(const ConvexBody& body, const Vec& x, const Vec& y);

// ---------------------------------------------------------------------------
// Membership and comparison (all exact).

bool contains_point(const ConvexBody& body, const Vec& x);

// conv(points_a) + cone(rays_a) inside b, decided against b's constraints.
bool contains_body(const ConvexBody& outer, const ConvexBody& inner);

bool set_eq(const ConvexBody& a, const ConvexBody& b);

// Smallest closed cone containing the body (generator route).
ConvexBody closed_conic_hull(const ConvexBody& body);

// r * body for r > 0, preserving whichever forms are present.
ConvexBody scale_body(const Rational& r, const ConvexBody& body);

// { d : <a,d> <= 0 for every constraint normal a }.
ConvexBody recession_cone(const ConvexBody& body);

// Extreme points of a 2D point set in counterclockwise order; collinear
// interior points removed. Degenerate inputs yield the segment endpoints or
// the single point.
std::vector<Vec> convex_hull_2d(const std::vector<Vec>& points);

}  // namespace polarity
