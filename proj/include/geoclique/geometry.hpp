// Planar primitives and predicates for unit disks, 2-pancakes, circles and
// convex polygons. Closed-set semantics throughout: tangency counts as
// intersection, up to a symmetric tolerance.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace geoclique {

struct Tolerance {
  double eps = 1e-9;
};

// Raised when a classification quantity sits within tolerance of a decision
// boundary (tangent segments, grazing contacts). Generators avoid these by
// margin; solvers surface them instead of perturbing silently.
struct DegenerateInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

/// Unit-radius closed disk.
struct UnitDisk {
  Point2 center;
};

/// Minkowski sum of the unit disk and the spine segment [x1,x2] x {0}.
/// x1 == x2 is allowed and behaves exactly like a unit disk at (x1,0).
struct Pancake2 {
  double x1 = 0.0;
  double x2 = 0.0;

  Pancake2() = default;
  Pancake2(double a, double b) : x1(a), x2(b) {
    if (!(a <= b)) throw std::invalid_argument("pancake spine requires x1 <= x2");
  }
  double spine_length() const { return x2 - x1; }
};

/// Closed disk of arbitrary positive radius.
struct Circle {
  Point2 center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point2 c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw std::invalid_argument("circle radius must be positive");
  }
};

/// Strictly convex polygon, vertices in counter-clockwise order.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> vs);
};

/// Line {p : dot(normal, p) == offset} with unit normal. Undirected where
/// tangency is queried, directed (by the stored normal) where a side matters.
struct Line2 {
  Point2 normal{0.0, 1.0};
  double offset = 0.0;

  static Line2 through(Point2 a, Point2 b);
  double signed_dist(Point2 p) const { return dot(normal, p) - offset; }
};

using GeomObject = std::variant<UnitDisk, Pancake2, Circle, ConvexPolygon>;

// -- low-level distance helpers -------------------------------------------

double dist_point_segment(Point2 p, Point2 a, Point2 b);
double dist_segment_segment(Point2 a, Point2 b, Point2 c, Point2 d);
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);
bool point_in_convex(Point2 p, const ConvexPolygon& poly, double eps = 0.0);
double dist_point_polygon(Point2 p, const ConvexPolygon& poly);
double dist_segment_polygon(Point2 a, Point2 b, const ConvexPolygon& poly);
double dist_polygon_polygon(const ConvexPolygon& p, const ConvexPolygon& q);

/// Distance between a segment [a,b] and a closed disk.
double dist_segment_circle(Point2 a, Point2 b, const Circle& c);

// -- predicates and constructions ------------------------------------------

/// Closed-set intersection test for any pair of planar objects.
bool intersects(const GeomObject& a, const GeomObject& b, Tolerance tol = {});

/// Edge-length measure used by the geometric edge ordering: centre distance
/// for two disks, centre-to-spine distance for disk/pancake, spine gap for
/// two pancakes. Other combinations are a contract violation.
double distance(const GeomObject& a, const GeomObject& b);

/// Whether the intersection of a unit disk and a 2-pancake is a lens:
/// the centre projects outside the open spine interval and no spine corner
/// (x1,+-1), (x2,+-1) lies strictly inside the disk. False when disjoint.
bool is_lens(const UnitDisk& d, const Pancake2& p, Tolerance tol = {});

/// Canonical point in a nonempty circle-circle intersection: the foot of the
/// radical line on the centre segment; for one disk inside the other, the
/// smaller disk's centre. Throws std::invalid_argument when disjoint.
Point2 lens_witness(const Circle& a, const Circle& b, Tolerance tol = {});

struct ExternalTangents {
  Line2 first;
  Line2 second;
  bool intersecting = false;  // inputs overlap; tangents still exist
};

/// The two common tangents keeping both centres on their positive side.
/// Throws std::invalid_argument when one disk contains the other.
ExternalTangents external_tangents(const Circle& a, const Circle& b,
                                   Tolerance tol = {});

enum class LensSide { upper, lower };

/// Membership in the closed half-lens of circles (c,rho),(c2,rho2) cut by the
/// directed line c -> c2; upper = left of that line.
bool half_lens_contains(Point2 c, double rho, Point2 c2, double rho2, Point2 q,
                        LensSide side, Tolerance tol = {});

/// Unit ball at (bx,by,bz) versus the Minkowski body of a unit ball and a
/// horizontal disk (disk_center, rho) in the plane z = 0.
bool pancake3_intersects_unit_ball(double bx, double by, double bz,
                                   Point2 disk_center, double rho,
                                   Tolerance tol = {});

/// Boundary intersection points of two circles, nullopt when the boundaries
/// do not cross (disjoint or nested). Order: +perp side first.
std::optional<std::array<Point2, 2>> circle_boundary_intersections(
    const Circle& a, const Circle& b, Tolerance tol = {});

}  // namespace geoclique
