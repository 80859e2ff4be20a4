#include "polarity/func_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarity {

namespace {

BigInt floor_rational(const Rational& q) {
  BigInt quot = numerator(q) / denominator(q);
  if (q < 0 && quot * denominator(q) != numerator(q)) quot -= 1;
  return quot;
}

BigInt round_nearest(const Rational& q) { return floor_rational(q + Rational(1, 2)); }

}  // namespace

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw std::invalid_argument("Grid: no axes");
  total_ = 1;
  for (auto& ax : axes_) {
    if (ax.count < 2) throw std::invalid_argument("Grid: axis count must be >= 2");
    if (ax.lo >= ax.hi) throw std::invalid_argument("Grid: axis lo must be below hi");
    if (ax.lo <= 0 && 0 <= ax.hi) {
      const Rational h = (ax.hi - ax.lo) / (ax.count - 1);
      const Rational shift = ax.lo + Rational(round_nearest(-ax.lo / h)) * h;
      ax.lo -= shift;
      ax.hi -= shift;
    }
    total_ *= static_cast<std::size_t>(ax.count);
  }
}

Grid Grid::uniform(int dim, const Rational& lo, const Rational& hi, int count) {
  return Grid(std::vector<Axis>(static_cast<std::size_t>(dim), Axis{lo, hi, count}));
}

Rational Grid::spacing(int axis) const {
  const Axis& ax = axes_.at(static_cast<std::size_t>(axis));
  return (ax.hi - ax.lo) / (ax.count - 1);
}

Vec Grid::node(std::size_t index) const {
  Vec x(axes_.size());
  std::size_t rem = index;
  for (int a = dim() - 1; a >= 0; --a) {
    const auto& ax = axes_[static_cast<std::size_t>(a)];
    const std::size_t k = rem % static_cast<std::size_t>(ax.count);
    rem /= static_cast<std::size_t>(ax.count);
    x[static_cast<std::size_t>(a)] = ax.lo + Rational(k) * spacing(a);
  }
  return x;
}

std::vector<Vec> Grid::all_nodes() const {
  std::vector<Vec> nodes;
  nodes.reserve(total_);
  for (std::size_t i = 0; i < total_; ++i) nodes.push_back(node(i));
  return nodes;
}

std::optional<std::size_t> Grid::index_of(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim()) return std::nullopt;
  std::size_t index = 0;
  for (int a = 0; a < dim(); ++a) {
    const auto& ax = axes_[static_cast<std::size_t>(a)];
    const Rational t = (x[static_cast<std::size_t>(a)] - ax.lo) / spacing(a);
    if (denominator(t) != 1) return std::nullopt;
    const BigInt k = numerator(t);
    if (k < 0 || k >= ax.count) return std::nullopt;
    index = index * static_cast<std::size_t>(ax.count) + k.convert_to<std::size_t>();
  }
  return index;
}

std::size_t Grid::origin_index() const {
  const auto idx = index_of(zero_vec(static_cast<std::size_t>(dim())));
  if (!idx) throw std::logic_error("Grid: origin is not a node");
  return *idx;
}

double Grid::max_spacing() const {
  double h = 0;
  for (int a = 0; a < dim(); ++a) h = std::max(h, to_double(spacing(a)));
  return h;
}

// ---------------------------------------------------------------------------

int func_dim(const FuncRep& f) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Sampled>)
          return v.grid.dim();
        else if constexpr (std::is_same_v<T, MaxAffine>) {
          if (!v.pieces.empty()) return static_cast<int>(v.pieces[0].slope.size());
          if (v.domain) return v.domain->dim();
          throw std::invalid_argument("MaxAffine: cannot infer dimension");
        } else
          return v.body.dim();
      },
      f);
}

ExtReal eval(const FuncRep& f, const Vec& x) {
  return std::visit(
      [&](const auto& v) -> ExtReal {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Sampled>) {
          const auto idx = v.grid.index_of(x);
          if (!idx) throw std::invalid_argument("eval: off-grid query on a sampled function");
          return v.values[*idx];
        } else if constexpr (std::is_same_v<T, MaxAffine>) {
          if (v.domain && !contains_point(*v.domain, x)) return ExtReal::pos_infinity();
          if (v.pieces.empty()) return ExtReal::neg_infinity();
          Rational m = dot(v.pieces[0].slope, x) + v.pieces[0].intercept;
          for (const auto& piece : v.pieces)
            m = std::max(m, dot(piece.slope, x) + piece.intercept);
          return ExtReal::from(m);
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return contains_point(v.body, x) ? ExtReal::from(0) : ExtReal::pos_infinity();
        } else if constexpr (std::is_same_v<T, GenIndicator>) {
          return contains_point(v.body, x) ? ExtReal::from(1) : ExtReal::pos_infinity();
        } else if constexpr (std::is_same_v<T, Valley>) {
          return contains_point(v.body, x) ? ExtReal::neg_infinity() : ExtReal::pos_infinity();
        } else if constexpr (std::is_same_v<T, SupportOf>) {
          return support_eval(v.body, x);
        } else {
          return to_ext_real(minkowski_eval(v.body, x));
        }
      },
      f);
}

Sampled sample(const FuncRep& f, const Grid& grid) {
  Sampled out{grid, {}};
  out.values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.values.push_back(eval(f, grid.node(i)));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Cmp>
std::vector<std::size_t> filter_nodes(const FuncRep& f, const Grid& grid, const ExtReal& r,
                                      Cmp cmp) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (cmp(eval(f, grid.node(i)), r)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::size_t> level_set_nodes(const FuncRep& f, const Grid& grid, const ExtReal& r) {
  return filter_nodes(f, grid, r, [](const ExtReal& a, const ExtReal& b) { return a <= b; });
}

std::vector<std::size_t> strict_level_set_nodes(const FuncRep& f, const Grid& grid,
                                                const ExtReal& r) {
  return filter_nodes(f, grid, r, [](const ExtReal& a, const ExtReal& b) { return a < b; });
}

std::vector<std::size_t> level_curve_nodes(const FuncRep& f, const Grid& grid, const ExtReal& r) {
  return filter_nodes(f, grid, r, [](const ExtReal& a, const ExtReal& b) { return a == b; });
}

ConvexBody level_set_exact(const FuncRep& f, const ExtReal& r) {
  const int dim = func_dim(f);
  if (r.is_pos_infinite()) return ConvexBody::whole_space(dim);
  return std::visit(
      [&](const auto& v) -> ConvexBody {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MaxAffine>) {
          if (!r.is_finite())
            throw std::invalid_argument("level_set_exact: MaxAffine needs a finite level");
          std::vector<Halfspace> cons;
          for (const auto& piece : v.pieces)
            cons.push_back(Halfspace{piece.slope, r.value() - piece.intercept});
          if (v.domain) {
            const ConvexBody dom = with_constraints(*v.domain);
            for (const auto& h : dom.constraints()) cons.push_back(h);
          }
          ConvexBody body = ConvexBody::from_constraints(dim, std::move(cons));
          return dim <= 2 ? with_generators(body) : body;
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return r >= ExtReal::from(0) ? v.body : ConvexBody::empty(dim);
        } else if constexpr (std::is_same_v<T, GenIndicator>) {
          return r >= ExtReal::from(1) ? v.body : ConvexBody::empty(dim);
        } else if constexpr (std::is_same_v<T, Valley>) {
          return v.body;
        } else if constexpr (std::is_same_v<T, SupportOf>) {
          if (v.body.is_empty()) return ConvexBody::whole_space(dim);
          if (!r.is_finite() || r.value() < 0)
            throw std::invalid_argument("level_set_exact: SupportOf needs a level >= 0");
          if (r.value() == 0) return polar_cone(v.body);
          return scale_body(r.value(), polar_set(v.body));
        } else if constexpr (std::is_same_v<T, MinkowskiOf>) {
          if (r.is_neg_infinite() || (r.is_finite() && r.value() < 0))
            return ConvexBody::empty(dim);
          if (r.value() == 0) return recession_cone(v.body);
          if (!is_bipolar_set(v.body).valid())
            throw std::invalid_argument(
                "level_set_exact: MinkowskiOf level sets are exact for bipolar bodies only; "
                "use the node route");
          return scale_body(r.value(), v.body);
        } else {
          throw std::invalid_argument(
              "level_set_exact: sampled functions use the node route");
        }
      },
      f);
}

}  // namespace polarity
