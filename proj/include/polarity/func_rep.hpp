#pragma once

#include "polarity/convex_body.hpp"
#include "polarity/ext_scalar.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace polarity {

// Finite rectangular evaluation lattice. Axis endpoints and spacings are
// rational, so node coordinates are exact. When an axis straddles zero, the
// lattice is translated minimally so that zero is a node: many identities in
// the library are anchored at the origin.
class Grid {
 public:
  struct Axis {
    Rational lo, hi;
    int count = 0;
  };

  explicit Grid(std::vector<Axis> axes);

  static Grid uniform(int dim, const Rational& lo, const Rational& hi, int count);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const { return axes_; }
  Rational spacing(int axis) const;
  std::size_t size() const { return total_; }

  Vec node(std::size_t index) const;
  std::vector<Vec> all_nodes() const;
  std::optional<std::size_t> index_of(const Vec& x) const;
  std::size_t origin_index() const;

  // Largest axis spacing, for discretization-tolerance bookkeeping.
  double max_spacing() const;

 private:
  std::vector<Axis> axes_;
  std::size_t total_ = 0;
};

// ---------------------------------------------------------------------------
// Function representations on R^d with values in [-inf, +inf].

struct Sampled {
  Grid grid;
  std::vector<ExtReal> values;  // one per grid node, row-major
};

// max over pieces of <slope, x> + intercept, +inf outside the optional
// domain; -inf when the piece list is empty.
struct MaxAffine {
  struct Piece {
    Vec slope;
    Rational intercept;
  };
  std::vector<Piece> pieces;
  std::optional<ConvexBody> domain;
};

struct Indicator {
  ConvexBody body;  // 0 on the body, +inf outside
};

struct GenIndicator {
  ConvexBody body;  // 1 on the body, +inf outside
};

struct Valley {
  ConvexBody body;  // -inf on the body, +inf outside
};

struct SupportOf {
  ConvexBody body;
};

struct MinkowskiOf {
  ConvexBody body;
};

using FuncRep =
    std::variant<Sampled, MaxAffine, Indicator, GenIndicator, Valley, SupportOf, MinkowskiOf>;

int func_dim(const FuncRep& f);

// Exact pointwise evaluation. Sampled representations answer only at their
// own nodes and deliberately do not interpolate.
ExtReal eval(const FuncRep& f, const Vec& x);

// Samples any representation onto a grid.
Sampled sample(const FuncRep& f, const Grid& grid);

// ---------------------------------------------------------------------------
// Level machinery. Node filters work for every representation; the exact
// polyhedral route is available where the variant admits one.

std::vector<std::size_t> level_set_nodes(const FuncRep& f, const Grid& grid, const ExtReal& r);
std::vector<std::size_t> strict_level_set_nodes(const FuncRep& f, const Grid& grid,
                                                const ExtReal& r);
std::vector<std::size_t> level_curve_nodes(const FuncRep& f, const Grid& grid, const ExtReal& r);

// { x : f(x) <= r } as a ConvexBody. Supported: MaxAffine at finite r
// (constraint assembly, intersected with the domain), Indicator/GenIndicator/
// Valley at any r, SupportOf at r >= 0, MinkowskiOf over a bipolar body at
// finite r > 0. Throws otherwise, pointing the caller to the node route.
ConvexBody level_set_exact(const FuncRep& f, const ExtReal& r);

}  // namespace polarity
