#include "polarity/convex_body.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarity {

namespace {

// --------------------------------------------------------------------------
// 2D direction helpers. Directions are compared by angle without transcending
// rationals: first by half-plane (upper half including +x axis first), then
// by orientation.

int half_id(const Vec& v) {
  return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
}

bool angle_less(const Vec& a, const Vec& b) {
  const int ha = half_id(a), hb = half_id(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

// Recession-cone classification of cone(rays) in 2D.
struct ConeInfo {
  enum class Kind { Trivial, Ray, Wedge, Line, HalfPlane, Full };
  Kind kind = Kind::Trivial;
  std::vector<Vec> extreme;  // Ray: 1 entry; Wedge: 2; Line: the direction
  Vec halfplane_normal;      // HalfPlane: cone = {d : <n,d> <= 0}
};

std::vector<Vec> dedupe_primitive_rays(const std::vector<Vec>& rays) {
  std::vector<Vec> out;
  for (const auto& r : rays) {
    if (is_zero_vec(r)) continue;
    Vec p = primitive_direction(r);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

ConeInfo classify_cone_2d(const std::vector<Vec>& rays_in) {
  std::vector<Vec> rays = dedupe_primitive_rays(rays_in);
  ConeInfo info;
  if (rays.empty()) {
    info.kind = ConeInfo::Kind::Trivial;
    return info;
  }
  if (rays.size() == 1) {
    info.kind = ConeInfo::Kind::Ray;
    info.extreme = {rays[0]};
    return info;
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  const std::size_t n = rays.size();
  // Cyclic gaps between consecutive sorted rays. cross > 0 means the ccw gap
  // is below pi, cross == 0 (distinct primitives) means exactly pi, cross < 0
  // means above pi. The gaps sum to 2*pi, so at most one reaches pi.
  std::size_t wide_at = n, flat_at = n;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % n];
    const Rational c = cross2(a, b);
    if (c < 0) wide_at = i;
    if (c == 0) flat_at = i;
  }
  if (wide_at != n) {
    info.kind = ConeInfo::Kind::Wedge;
    info.extreme = {rays[(wide_at + 1) % n], rays[wide_at]};
    return info;
  }
  if (flat_at != n) {
    if (n == 2) {
      info.kind = ConeInfo::Kind::Line;
      info.extreme = {rays[0]};
      return info;
    }
    // All rays in the closed half-plane whose boundary passes through the
    // pair of opposite rays; orient the normal against any interior ray.
    const Vec boundary = rays[(flat_at + 1) % n];
    Vec normal = perp2(boundary);
    for (const auto& r : rays) {
      const Rational s = dot(normal, r);
      if (s > 0) {
        normal = Vec{-normal[0], -normal[1]};
        break;
      }
      if (s < 0) break;
    }
    info.kind = ConeInfo::Kind::HalfPlane;
    info.halfplane_normal = primitive_direction(normal);
    info.extreme = {boundary, rays[flat_at]};
    return info;
  }
  info.kind = ConeInfo::Kind::Full;
  return info;
}

std::vector<Vec> cone_extreme_rays(const ConeInfo& info) {
  switch (info.kind) {
    case ConeInfo::Kind::Trivial: return {};
    case ConeInfo::Kind::Ray:
    case ConeInfo::Kind::Wedge: return info.extreme;
    case ConeInfo::Kind::Line: {
      const Vec& d = info.extreme[0];
      return {d, Vec{-d[0], -d[1]}};
    }
    case ConeInfo::Kind::HalfPlane: {
      const Vec& d = info.extreme[0];
      const Vec& n = info.halfplane_normal;
      return {d, Vec{-d[0], -d[1]}, Vec{-n[0], -n[1]}};
    }
    case ConeInfo::Kind::Full: {
      return {Vec{Rational(1), Rational(0)}, Vec{Rational(-1), Rational(0)},
              Vec{Rational(0), Rational(1)}, Vec{Rational(0), Rational(-1)}};
    }
  }
  return {};
}

Halfspace canonical_halfspace(Vec normal, Rational offset) {
  // Scale so the normal is a primitive integer vector.
  const Vec prim = primitive_direction(normal);
  Rational factor;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] != 0) {
      factor = prim[i] / normal[i];
      break;
    }
  }
  return Halfspace{prim, offset * factor};
}

void push_unique_halfspace(std::vector<Halfspace>& out, Halfspace h) {
  for (const auto& e : out)
    if (e.normal == h.normal && e.offset == h.offset) return;
  out.push_back(std::move(h));
}

// --------------------------------------------------------------------------
// Constraint form -> generator form, dimensions 1 and 2.

Generators whole_space_generators(int dim) {
  Generators g;
  g.points.push_back(zero_vec(dim));
  for (int i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = 1;
    g.rays.push_back(e);
    e[i] = -1;
    g.rays.push_back(e);
  }
  return g;
}

Generators enumerate_generators_1d(const std::vector<Halfspace>& cons) {
  bool has_lo = false, has_hi = false;
  Rational lo = 0, hi = 0;
  for (const auto& h : cons) {
    const Rational a = h.normal[0];
    const Rational bound = h.offset / a;
    if (a > 0) {
      if (!has_hi || bound < hi) hi = bound;
      has_hi = true;
    } else {
      if (!has_lo || bound > lo) lo = bound;
      has_lo = true;
    }
  }
  Generators g;
  if (has_lo && has_hi && lo > hi) return g;  // empty
  if (!has_lo && !has_hi) return whole_space_generators(1);
  if (has_lo) g.points.push_back(Vec{lo});
  if (has_hi) g.points.push_back(Vec{hi});
  if (!has_lo) g.rays.push_back(Vec{Rational(-1)});
  if (!has_hi) g.rays.push_back(Vec{Rational(1)});
  return g;
}

Generators enumerate_generators_2d(const std::vector<Halfspace>& cons) {
  Generators g;
  if (cons.empty()) return whole_space_generators(2);

  const Vec n0 = primitive_direction(cons[0].normal);
  bool all_parallel = true;
  for (const auto& h : cons)
    if (cross2(h.normal, n0) != 0) {
      all_parallel = false;
      break;
    }

  if (all_parallel) {
    // Every constraint bounds t = <n0, x> on one side; the body is a slab,
    // half-plane, line or empty set with lineality perp to n0.
    bool has_lo = false, has_hi = false;
    Rational lo = 0, hi = 0;
    const Rational nn = dot(n0, n0);
    for (const auto& h : cons) {
      const Rational c = dot(h.normal, n0) / nn;
      const Rational bound = h.offset / c;
      if (c > 0) {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi && lo > hi) return g;  // empty
    auto on_axis = [&](const Rational& t) { return scale(t / nn, n0); };
    if (has_lo) g.points.push_back(on_axis(lo));
    if (has_hi) g.points.push_back(on_axis(hi));
    const Vec ell = perp2(n0);
    g.rays.push_back(ell);
    g.rays.push_back(Vec{-ell[0], -ell[1]});
    if (!has_hi) g.rays.push_back(n0);
    if (!has_lo) g.rays.push_back(Vec{-n0[0], -n0[1]});
    return g;
  }

  // Two independent normals: the body is pointed, so it is empty or carries
  // at least one vertex, and every vertex solves two independent active
  // constraints.
  auto feasible = [&](const Vec& x) {
    for (const auto& h : cons)
      if (dot(h.normal, x) > h.offset) return false;
    return true;
  };
  std::vector<Vec> vertices;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const Vec& a = cons[i].normal;
      const Vec& b = cons[j].normal;
      const Rational det = cross2(a, b);
      if (det == 0) continue;
      Vec x{(cons[i].offset * b[1] - cons[j].offset * a[1]) / det,
            (a[0] * cons[j].offset - b[0] * cons[i].offset) / det};
      if (!feasible(x)) continue;
      if (std::find(vertices.begin(), vertices.end(), x) == vertices.end())
        vertices.push_back(std::move(x));
    }
  }
  if (vertices.empty()) return g;  // pointed and vertex-free: empty

  std::vector<Vec> ray_candidates;
  for (const auto& h : cons) {
    const Vec p = perp2(h.normal);
    ray_candidates.push_back(p);
    ray_candidates.push_back(Vec{-p[0], -p[1]});
  }
  std::vector<Vec> rays;
  for (const auto& r : dedupe_primitive_rays(ray_candidates)) {
    bool ok = true;
    for (const auto& h : cons)
      if (dot(h.normal, r) > 0) {
        ok = false;
        break;
      }
    if (ok) rays.push_back(r);
  }
  if (rays.size() > 2) {
    // Pointed recession cone: keep the two angular extremes.
    std::vector<Vec> extreme;
    for (const auto& r : rays) {
      bool all_ccw = true, all_cw = true;
      for (const auto& w : rays) {
        const Rational c = cross2(r, w);
        if (c < 0) all_ccw = false;
        if (c > 0) all_cw = false;
      }
      if (all_ccw || all_cw) extreme.push_back(r);
    }
    rays = dedupe_primitive_rays(extreme);
  }

  g.points = std::move(vertices);
  g.rays = std::move(rays);
  return g;
}

// --------------------------------------------------------------------------
// Generator form -> constraint form, dimensions 1 and 2.

std::vector<Halfspace> empty_set_constraints(int dim) {
  return {Halfspace{zero_vec(dim), Rational(-1)}};
}

std::vector<Halfspace> derive_constraints_1d(const Generators& gen) {
  Rational lo = gen.points[0][0], hi = gen.points[0][0];
  for (const auto& p : gen.points) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  bool up = false, down = false;
  for (const auto& r : gen.rays) (r[0] > 0 ? up : down) = true;
  std::vector<Halfspace> cons;
  if (!up) cons.push_back(Halfspace{Vec{Rational(1)}, hi});
  if (!down) cons.push_back(Halfspace{Vec{Rational(-1)}, -lo});
  return cons;
}

std::vector<Halfspace> derive_constraints_2d(const Generators& gen) {
  const ConeInfo cone = classify_cone_2d(gen.rays);
  const auto& pts = gen.points;

  auto max_over_points = [&](const Vec& u) {
    Rational m = dot(u, pts[0]);
    for (const auto& p : pts) m = std::max(m, dot(u, p));
    return m;
  };
  auto min_over_points = [&](const Vec& u) {
    Rational m = dot(u, pts[0]);
    for (const auto& p : pts) m = std::min(m, dot(u, p));
    return m;
  };

  std::vector<Halfspace> cons;
  switch (cone.kind) {
    case ConeInfo::Kind::Full:
      return cons;  // whole plane
    case ConeInfo::Kind::HalfPlane: {
      const Vec& n = cone.halfplane_normal;
      cons.push_back(canonical_halfspace(n, max_over_points(n)));
      return cons;
    }
    case ConeInfo::Kind::Line: {
      const Vec n = perp2(cone.extreme[0]);
      cons.push_back(canonical_halfspace(n, max_over_points(n)));
      cons.push_back(canonical_halfspace(Vec{-n[0], -n[1]}, -min_over_points(n)));
      return cons;
    }
    default:
      break;  // pointed: Trivial, Ray or Wedge
  }

  const std::vector<Vec>& ext_rays = cone.extreme;

  // Bodies contained in a line (point, segment, half-line, nothing wider).
  const bool single_pt = pts.size() == 1;
  Vec line_dir;
  bool on_line = false;
  if (single_pt && cone.kind == ConeInfo::Kind::Trivial) {
    // Single point: axis-aligned equality pairs.
    for (int i = 0; i < 2; ++i) {
      Vec e = zero_vec(2);
      e[i] = 1;
      cons.push_back(Halfspace{e, pts[0][i]});
      e[i] = -1;
      cons.push_back(Halfspace{e, -pts[0][i]});
    }
    return cons;
  }
  if (single_pt && cone.kind == ConeInfo::Kind::Ray) {
    line_dir = ext_rays[0];
    on_line = true;
  } else if (pts.size() == 2) {
    line_dir = primitive_direction(sub(pts[1], pts[0]));
    on_line = true;
    for (const auto& r : ext_rays)
      if (cross2(r, line_dir) != 0) {
        on_line = false;
        break;
      }
  }
  if (on_line) {
    const Vec n = perp2(line_dir);
    cons.push_back(canonical_halfspace(n, dot(n, pts[0])));
    cons.push_back(canonical_halfspace(Vec{-n[0], -n[1]}, -dot(n, pts[0])));
    bool up = false, down = false;
    for (const auto& r : ext_rays) (dot(r, line_dir) > 0 ? up : down) = true;
    if (!up) cons.push_back(canonical_halfspace(line_dir, max_over_points(line_dir)));
    if (!down)
      cons.push_back(canonical_halfspace(Vec{-line_dir[0], -line_dir[1]},
                                         -min_over_points(line_dir)));
    return cons;
  }

  // Full-dimensional pointed body. Candidate facet normals: outward normals
  // of hull edges plus both perpendiculars of each extreme ray; a candidate
  // is kept when the support value in that direction is finite.
  std::vector<Vec> candidates;
  if (pts.size() >= 3) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec e = sub(pts[(i + 1) % pts.size()], pts[i]);
      candidates.push_back(Vec{e[1], -e[0]});  // outward for ccw order
    }
  } else if (pts.size() == 2) {
    const Vec e = sub(pts[1], pts[0]);
    candidates.push_back(Vec{e[1], -e[0]});
    candidates.push_back(Vec{-e[1], e[0]});
  }
  for (const auto& r : ext_rays) {
    const Vec p = perp2(r);
    candidates.push_back(p);
    candidates.push_back(Vec{-p[0], -p[1]});
  }
  for (const auto& u : candidates) {
    bool finite = true;
    for (const auto& r : ext_rays)
      if (dot(u, r) > 0) {
        finite = false;
        break;
      }
    if (finite) push_unique_halfspace(cons, canonical_halfspace(u, max_over_points(u)));
  }
  return cons;
}

}  // namespace

// --------------------------------------------------------------------------
// Canonicalization.

Generators canonicalize_generators(int dim, const Generators& gen) {
  Generators out;
  if (gen.points.empty()) return out;  // empty set drops rays too
  if (dim == 2) {
    out.points = convex_hull_2d(gen.points);
  } else if (dim == 1) {
    Rational lo = gen.points[0][0], hi = gen.points[0][0];
    for (const auto& p : gen.points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    out.points.push_back(Vec{lo});
    if (hi != lo) out.points.push_back(Vec{hi});
  } else {
    for (const auto& p : gen.points)
      if (std::find(out.points.begin(), out.points.end(), p) == out.points.end())
        out.points.push_back(p);
  }
  out.rays = dedupe_primitive_rays(gen.rays);
  if (dim == 2 && out.rays.size() > 2) {
    out.rays = cone_extreme_rays(classify_cone_2d(out.rays));
  }
  return out;
}

std::vector<Vec> convex_hull_2d(const std::vector<Vec>& points) {
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vec> hull;
  auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
    return cross2(sub(a, o), sub(b, o));
  };
  for (const auto& p : pts) {  // lower chain
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  return hull;
}

// --------------------------------------------------------------------------
// ConvexBody basics.

ConvexBody ConvexBody::from_generators(int dim, Generators gen) {
  for (const auto& p : gen.points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("ConvexBody: point dimension mismatch");
  for (const auto& r : gen.rays)
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("ConvexBody: ray dimension mismatch");
  ConvexBody b(dim);
  b.gen_ = canonicalize_generators(dim, gen);
  return b;
}

ConvexBody ConvexBody::from_points(int dim, std::vector<Vec> points) {
  Generators g;
  g.points = std::move(points);
  return from_generators(dim, std::move(g));
}

ConvexBody ConvexBody::from_constraints(int dim, std::vector<Halfspace> halfspaces) {
  std::vector<Halfspace> kept;
  bool infeasible = false;
  for (auto& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != dim)
      throw std::invalid_argument("ConvexBody: halfspace dimension mismatch");
    if (is_zero_vec(h.normal)) {
      if (h.offset < 0) infeasible = true;
    } else {
      kept.push_back(std::move(h));
    }
  }
  if (infeasible) return empty(dim);
  ConvexBody b(dim);
  b.cons_ = std::move(kept);
  return b;
}

ConvexBody ConvexBody::whole_space(int dim) {
  ConvexBody b(dim);
  b.gen_ = whole_space_generators(dim);
  b.cons_ = std::vector<Halfspace>{};
  return b;
}

ConvexBody ConvexBody::origin(int dim) {
  Generators g;
  g.points.push_back(zero_vec(dim));
  return from_generators(dim, std::move(g));
}

ConvexBody ConvexBody::empty(int dim) {
  ConvexBody b(dim);
  b.gen_ = Generators{};
  b.cons_ = empty_set_constraints(dim);
  return b;
}

const Generators& ConvexBody::generators() const {
  if (!gen_) throw std::logic_error("ConvexBody: generator form not available");
  return *gen_;
}

const std::vector<Halfspace>& ConvexBody::constraints() const {
  if (!cons_) throw std::logic_error("ConvexBody: constraint form not available");
  return *cons_;
}

bool ConvexBody::is_empty() const {
  if (gen_) return gen_->points.empty();
  return with_generators(*this).generators().points.empty();
}

ConvexBody with_generators(const ConvexBody& body) {
  if (body.gen_) return body;
  ConvexBody b = body;
  const auto& cons = body.constraints();
  Generators g;
  if (body.dim_ == 1) {
    g = enumerate_generators_1d(cons);
  } else if (body.dim_ == 2) {
    g = enumerate_generators_2d(cons);
  } else {
    throw std::logic_error("vertex enumeration is implemented for dimension <= 2");
  }
  b.gen_ = canonicalize_generators(body.dim_, g);
  if (b.gen_->points.empty()) b.cons_ = empty_set_constraints(body.dim_);
  return b;
}

ConvexBody with_constraints(const ConvexBody& body) {
  if (body.cons_) return body;
  ConvexBody b = body;
  const Generators& gen = body.generators();
  if (gen.points.empty()) {
    b.cons_ = empty_set_constraints(body.dim_);
    return b;
  }
  if (body.dim_ == 1) {
    b.cons_ = derive_constraints_1d(gen);
  } else if (body.dim_ == 2) {
    b.cons_ = derive_constraints_2d(gen);
  } else {
    throw std::logic_error("facet enumeration is implemented for dimension <= 2");
  }
  return b;
}

// --------------------------------------------------------------------------
// Polarity operations.

ConvexBody polar_set(const ConvexBody& body) {
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  std::vector<Halfspace> cons;
  for (const auto& p : gen.points)
    if (!is_zero_vec(p)) push_unique_halfspace(cons, canonical_halfspace(p, Rational(1)));
  for (const auto& r : gen.rays)
    push_unique_halfspace(cons, canonical_halfspace(r, Rational(0)));
  return ConvexBody::from_constraints(body.dim(), std::move(cons));
}

ConvexBody polar_cone(const ConvexBody& body) {
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  std::vector<Halfspace> cons;
  for (const auto& p : gen.points)
    if (!is_zero_vec(p)) push_unique_halfspace(cons, canonical_halfspace(p, Rational(0)));
  for (const auto& r : gen.rays)
    push_unique_halfspace(cons, canonical_halfspace(r, Rational(0)));
  return ConvexBody::from_constraints(body.dim(), std::move(cons));
}

ConvexBody bipolar_set(const ConvexBody& body) {
  const ConvexBody b = with_generators(body);
  Generators g = b.generators();
  g.points.push_back(zero_vec(body.dim()));
  ConvexBody hull_route = ConvexBody::from_generators(body.dim(), std::move(g));
  if (body.dim() <= 2) {
    const ConvexBody double_polar = polar_set(polar_set(b));
    if (!set_eq(hull_route, double_polar))
      throw std::logic_error("bipolar_set: hull route and double-polar route disagree");
  }
  return hull_route;
}

BipolarCertificate is_bipolar_set(const ConvexBody& body) {
  BipolarCertificate cert{body, false, true};  // representation is closed convex
  const ConvexBody b =
      body.has_constraints() ? body : with_constraints(body);
  cert.contains_zero = contains_point(b, zero_vec(body.dim()));
  return cert;
}

namespace {
void require_bipolar(const ConvexBody& body, const char* op, const char* which) {
  const BipolarCertificate cert = is_bipolar_set(body);
  if (!cert.valid())
    throw std::invalid_argument(std::string(op) + ": " + which +
                                " argument is not a bipolar set (contains_zero=" +
                                (cert.contains_zero ? "true" : "false") +
                                ", closed_convex=" + (cert.closed_convex ? "true" : "false") +
                                ")");
}
}  // namespace

ConvexBody set_meet(const ConvexBody& a, const ConvexBody& b) {
  require_bipolar(a, "set_meet", "first");
  require_bipolar(b, "set_meet", "second");
  const ConvexBody ca = with_constraints(a);
  const ConvexBody cb = with_constraints(b);
  std::vector<Halfspace> cons = ca.constraints();
  for (const auto& h : cb.constraints()) push_unique_halfspace(cons, h);
  ConvexBody meet = ConvexBody::from_constraints(a.dim(), std::move(cons));
  return a.dim() <= 2 ? with_generators(meet) : meet;
}

ConvexBody set_join(const ConvexBody& a, const ConvexBody& b) {
  require_bipolar(a, "set_join", "first");
  require_bipolar(b, "set_join", "second");
  const ConvexBody ga = with_generators(a);
  const ConvexBody gb = with_generators(b);
  Generators g = ga.generators();
  g.points.insert(g.points.end(), gb.generators().points.begin(),
                  gb.generators().points.end());
  g.rays.insert(g.rays.end(), gb.generators().rays.begin(), gb.generators().rays.end());
  return ConvexBody::from_generators(a.dim(), std::move(g));
}

ExtReal support_eval(const ConvexBody& body, const Vec& x) {
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  if (gen.points.empty()) return ExtReal::neg_infinity();
  for (const auto& r : gen.rays)
    if (dot(x, r) > 0) return ExtReal::pos_infinity();
  Rational m = dot(x, gen.points[0]);
  for (const auto& p : gen.points) m = std::max(m, dot(x, p));
  return ExtReal::from(m);
}

ExtNonNeg minkowski_eval(const ConvexBody& body, const Vec& x) {
  const ConvexBody b = with_constraints(body);
  // x in lambda*body iff <a,x> <= lambda*b for every constraint; each
  // constraint bounds lambda on one side depending on the sign of b.
  Rational lower = 0;
  bool has_upper = false;
  Rational upper = 0;
  for (const auto& h : b.constraints()) {
    const Rational s = dot(h.normal, x);
    if (h.offset > 0) {
      lower = std::max(lower, Rational(s / h.offset));
    } else if (h.offset == 0) {
      if (s > 0) return ExtNonNeg::infinity();
    } else {
      const Rational u = s / h.offset;
      if (!has_upper || u < upper) upper = u;
      has_upper = true;
    }
  }
  if (has_upper && (upper <= 0 || lower > upper)) return ExtNonNeg::infinity();
  return ExtNonNeg::from(lower);
}

ConvexBody exposed_face(const ConvexBody& body, const Vec& y) {
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  if (gen.points.empty())
    throw std::invalid_argument("exposed_face: empty body");
  for (const auto& r : gen.rays)
    if (dot(y, r) > 0) throw std::invalid_argument("exposed_face: support infinite");
  Rational m = dot(y, gen.points[0]);
  for (const auto& p : gen.points) m = std::max(m, dot(y, p));
  Generators face;
  for (const auto& p : gen.points)
    if (dot(y, p) == m) face.points.push_back(p);
  for (const auto& r : gen.rays)
    if (dot(y, r) == 0) face.rays.push_back(r);
  return ConvexBody::from_generators(body.dim(), std::move(face));
}

bool normal_cone_contains(const ConvexBody& body, const Vec& x, const Vec& y) {
  if (!contains_point(with_constraints(body), x))
    throw std::invalid_argument("normal_cone_contains: point is outside the body");
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  for (const auto& p : gen.points)
    if (dot(sub(p, x), y) > 0) return false;
  for (const auto& r : gen.rays)
    if (dot(r, y) > 0) return false;
  return true;
}

// --------------------------------------------------------------------------
// Membership and comparison.

bool contains_point(const ConvexBody& body, const Vec& x) {
  const ConvexBody b = with_constraints(body);
  // The empty set carries the marker constraint <0,x> <= -1, which no point
  // satisfies.
  for (const auto& h : b.constraints())
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

bool contains_body(const ConvexBody& outer, const ConvexBody& inner) {
  const ConvexBody in = with_generators(inner);
  if (in.generators().points.empty()) return true;
  const ConvexBody out = with_constraints(outer);
  for (const auto& p : in.generators().points)
    if (!contains_point(out, p)) return false;
  for (const auto& r : in.generators().rays)
    for (const auto& h : out.constraints())
      if (dot(h.normal, r) > 0) return false;
  return true;
}

bool set_eq(const ConvexBody& a, const ConvexBody& b) {
  return contains_body(a, b) && contains_body(b, a);
}

ConvexBody closed_conic_hull(const ConvexBody& body) {
  const ConvexBody b = with_generators(body);
  const Generators& gen = b.generators();
  if (gen.points.empty()) return ConvexBody::empty(body.dim());
  Generators g;
  g.points.push_back(zero_vec(body.dim()));
  for (const auto& p : gen.points)
    if (!is_zero_vec(p)) g.rays.push_back(p);
  g.rays.insert(g.rays.end(), gen.rays.begin(), gen.rays.end());
  return ConvexBody::from_generators(body.dim(), std::move(g));
}

ConvexBody scale_body(const Rational& r, const ConvexBody& body) {
  if (r <= 0) throw std::invalid_argument("scale_body: factor must be positive");
  if (body.has_generators()) {
    Generators g = body.generators();
    for (auto& p : g.points) p = scale(r, p);
    ConvexBody out = ConvexBody::from_generators(body.dim(), std::move(g));
    return body.has_constraints() ? with_constraints(out) : out;
  }
  std::vector<Halfspace> cons = body.constraints();
  for (auto& h : cons) h.offset *= r;  // x in r*B iff <a,x> <= r*b
  return ConvexBody::from_constraints(body.dim(), std::move(cons));
}

ConvexBody recession_cone(const ConvexBody& body) {
  if (body.is_empty()) return ConvexBody::empty(body.dim());
  std::vector<Halfspace> cons = with_constraints(body).constraints();
  for (auto& h : cons) h.offset = 0;
  ConvexBody cone = ConvexBody::from_constraints(body.dim(), std::move(cons));
  return body.dim() <= 2 ? with_generators(cone) : cone;
}

}  // namespace polarity
