#include "geoclique/geometry.hpp"

#include <algorithm>
#include <limits>

namespace geoclique {

ConvexPolygon::ConvexPolygon(std::vector<Point2> vs) : vertices(std::move(vs)) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("convex polygon needs >= 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    Point2 a = vertices[i];
    Point2 b = vertices[(i + 1) % n];
    Point2 c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) <= 0.0)
      throw std::invalid_argument("polygon must be strictly convex and counter-clockwise");
  }
}

Line2 Line2::through(Point2 a, Point2 b) {
  Point2 d = b - a;
  double len = norm(d);
  if (len == 0.0) throw std::invalid_argument("line through coincident points");
  Point2 n = (1.0 / len) * perp(d);
  return Line2{n, dot(n, a)};
}

double dist_point_segment(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  auto orient = [](Point2 p, Point2 q, Point2 r) {
    double v = cross(q - p, r - p);
    return (v > 0.0) - (v < 0.0);
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on_segment = [](Point2 p, Point2 q, Point2 r) {
    return cross(q - p, r - p) == 0.0 && std::min(p.x, q.x) <= r.x &&
           r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
  };
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

double dist_segment_segment(Point2 a, Point2 b, Point2 c, Point2 d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min(std::min(dist_point_segment(a, c, d), dist_point_segment(b, c, d)),
                  std::min(dist_point_segment(c, a, b), dist_point_segment(d, a, b)));
}

bool point_in_convex(Point2 p, const ConvexPolygon& poly, double eps) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point2 e = v[(i + 1) % n] - v[i];
    if (cross(e, p - v[i]) < -eps * norm(e)) return false;
  }
  return true;
}

double dist_point_polygon(Point2 p, const ConvexPolygon& poly) {
  if (point_in_convex(p, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, dist_point_segment(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

double dist_segment_polygon(Point2 a, Point2 b, const ConvexPolygon& poly) {
  if (point_in_convex(a, poly) || point_in_convex(b, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point2 c = v[i], d = v[(i + 1) % v.size()];
    if (segments_intersect(a, b, c, d)) return 0.0;
    best = std::min(best, dist_segment_segment(a, b, c, d));
  }
  return best;
}

double dist_polygon_polygon(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (point_in_convex(p.vertices[0], q) || point_in_convex(q.vertices[0], p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& pv = p.vertices;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    double d = dist_segment_polygon(pv[i], pv[(i + 1) % pv.size()], q);
    if (d == 0.0) return 0.0;
    best = std::min(best, d);
  }
  return best;
}

double dist_segment_circle(Point2 a, Point2 b, const Circle& c) {
  return std::max(0.0, dist_point_segment(c.center, a, b) - c.radius);
}

namespace {

// Every supported object is a convex core inflated by a Minkowski radius:
// disk = (point, 1), pancake = (spine segment, 1), circle = (point, r),
// polygon = (polygon, 0). Set distance and the intersection predicate both
// reduce to core distances.
struct ConvexCore {
  enum class Kind { point, segment, polygon } kind;
  Point2 a, b;
  const ConvexPolygon* poly = nullptr;
  double inflate = 0.0;
};

ConvexCore core_of(const GeomObject& obj) {
  return std::visit(
      [](const auto& o) -> ConvexCore {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, UnitDisk>)
          return {ConvexCore::Kind::point, o.center, o.center, nullptr, 1.0};
        else if constexpr (std::is_same_v<T, Pancake2>)
          return {ConvexCore::Kind::segment, {o.x1, 0.0}, {o.x2, 0.0}, nullptr, 1.0};
        else if constexpr (std::is_same_v<T, Circle>)
          return {ConvexCore::Kind::point, o.center, o.center, nullptr, o.radius};
        else
          return {ConvexCore::Kind::polygon, {}, {}, &o, 0.0};
      },
      obj);
}

double core_distance(const ConvexCore& x, const ConvexCore& y) {
  using K = ConvexCore::Kind;
  if (x.kind == K::point && y.kind == K::point) return dist(x.a, y.a);
  if (x.kind == K::point && y.kind == K::segment) return dist_point_segment(x.a, y.a, y.b);
  if (x.kind == K::segment && y.kind == K::point) return dist_point_segment(y.a, x.a, x.b);
  if (x.kind == K::segment && y.kind == K::segment)
    return dist_segment_segment(x.a, x.b, y.a, y.b);
  if (x.kind == K::point && y.kind == K::polygon) return dist_point_polygon(x.a, *y.poly);
  if (x.kind == K::polygon && y.kind == K::point) return dist_point_polygon(y.a, *x.poly);
  if (x.kind == K::segment && y.kind == K::polygon)
    return dist_segment_polygon(x.a, x.b, *y.poly);
  if (x.kind == K::polygon && y.kind == K::segment)
    return dist_segment_polygon(y.a, y.b, *x.poly);
  return dist_polygon_polygon(*x.poly, *y.poly);
}

}  // namespace

bool intersects(const GeomObject& a, const GeomObject& b, Tolerance tol) {
  ConvexCore ca = core_of(a), cb = core_of(b);
  return core_distance(ca, cb) <= ca.inflate + cb.inflate + tol.eps;
}

double distance(const GeomObject& a, const GeomObject& b) {
  if (const auto* da = std::get_if<UnitDisk>(&a)) {
    if (const auto* db = std::get_if<UnitDisk>(&b)) return dist(da->center, db->center);
    if (const auto* pb = std::get_if<Pancake2>(&b))
      return dist_point_segment(da->center, {pb->x1, 0.0}, {pb->x2, 0.0});
  } else if (const auto* pa = std::get_if<Pancake2>(&a)) {
    if (const auto* db = std::get_if<UnitDisk>(&b))
      return dist_point_segment(db->center, {pa->x1, 0.0}, {pa->x2, 0.0});
    if (const auto* pb = std::get_if<Pancake2>(&b))
      return std::max(0.0, std::max(pa->x1, pb->x1) - std::min(pa->x2, pb->x2));
  }
  throw std::invalid_argument("distance is defined for unit disks and 2-pancakes only");
}

bool is_lens(const UnitDisk& d, const Pancake2& p, Tolerance tol) {
  if (!intersects(GeomObject{d}, GeomObject{p}, tol)) return false;
  if (!(d.center.x <= p.x1 || d.center.x >= p.x2)) return false;
  const Point2 corners[4] = {
      {p.x1, 1.0}, {p.x1, -1.0}, {p.x2, 1.0}, {p.x2, -1.0}};
  for (Point2 q : corners)
    if (dist(d.center, q) < 1.0 - tol.eps) return false;
  return true;
}

Point2 lens_witness(const Circle& a, const Circle& b, Tolerance tol) {
  double d = dist(a.center, b.center);
  if (d > a.radius + b.radius + tol.eps)
    throw std::invalid_argument("lens_witness: no intersection");
  if (d <= std::abs(a.radius - b.radius))
    return a.radius <= b.radius ? a.center : b.center;
  double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d * d);
  return a.center + t * (b.center - a.center);
}

ExternalTangents external_tangents(const Circle& a, const Circle& b, Tolerance tol) {
  double d = dist(a.center, b.center);
  if (d <= std::abs(a.radius - b.radius) + tol.eps)
    throw std::invalid_argument("external_tangents: no external tangents");
  Point2 u = (1.0 / d) * (a.center - b.center);
  double delta = (a.radius - b.radius) / d;
  double s = std::sqrt(std::max(0.0, 1.0 - delta * delta));
  Point2 up = perp(u);
  ExternalTangents out;
  Point2 n1 = delta * u + s * up;
  Point2 n2 = delta * u + (-s) * up;
  out.first = Line2{n1, dot(n1, a.center) - a.radius};
  out.second = Line2{n2, dot(n2, a.center) - a.radius};
  out.intersecting = d <= a.radius + b.radius + tol.eps;
  return out;
}

bool half_lens_contains(Point2 c, double rho, Point2 c2, double rho2, Point2 q,
                        LensSide side, Tolerance tol) {
  double d = dist(c, c2);
  if (d > rho + rho2 + tol.eps)
    throw std::invalid_argument("half_lens_contains: disjoint circles");
  if (d < 1e-12)
    throw std::invalid_argument("half_lens_contains: coincident centres");
  if (dist(q, c) > rho + tol.eps || dist(q, c2) > rho2 + tol.eps) return false;
  double sd = cross(c2 - c, q - c) / d;
  return side == LensSide::upper ? sd >= -tol.eps : sd <= tol.eps;
}

bool pancake3_intersects_unit_ball(double bx, double by, double bz,
                                   Point2 disk_center, double rho, Tolerance tol) {
  if (std::abs(bz) > 2.0 + tol.eps) return false;
  double slice = std::sqrt(std::max(0.0, 4.0 - bz * bz));
  return dist({bx, by}, disk_center) <= slice + rho + tol.eps;
}

std::optional<std::array<Point2, 2>> circle_boundary_intersections(
    const Circle& a, const Circle& b, Tolerance tol) {
  double d = dist(a.center, b.center);
  if (d < 1e-12) return std::nullopt;
  if (d > a.radius + b.radius + tol.eps) return std::nullopt;
  if (d < std::abs(a.radius - b.radius) - tol.eps) return std::nullopt;
  double x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  double h = std::sqrt(std::max(0.0, a.radius * a.radius - x * x));
  Point2 u = (1.0 / d) * (b.center - a.center);
  Point2 base = a.center + x * u;
  return std::array<Point2, 2>{base + h * perp(u), base + (-h) * perp(u)};
}

}  // namespace geoclique
