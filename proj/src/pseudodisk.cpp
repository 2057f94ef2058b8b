#include "geoclique/pseudodisk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geoclique {

namespace {

constexpr double kEps = 1e-9;

bool circles_intersect(const Circle& a, const Circle& b, double eps = kEps) {
  return dist(a.center, b.center) <= a.radius + b.radius + eps;
}

bool contains_circle(const Circle& outer, const Circle& inner, double eps = kEps) {
  return dist(outer.center, inner.center) + inner.radius <= outer.radius + eps;
}

bool point_in_circle(Point2 p, const Circle& c, double eps = kEps) {
  return dist(p, c.center) <= c.radius + eps;
}

std::array<int, 2> other_indices(int i) {
  switch (i) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

// Along-line direction for a Line2, consistent with the transversal module.
Point2 line_dir(const Line2& l) { return {l.normal.y, -l.normal.x}; }

bool segment_hits_circle(Point2 a, Point2 b, const Circle& c) {
  return dist_point_segment(c.center, a, b) <= c.radius;
}

// Deterministic samples covering the closed lens dp ∩ other: the witness,
// the boundary crossings, both boundary arcs inside the other disk, and the
// crossing chord.
std::vector<Point2> lens_samples(const Circle& a, const Circle& b, int per_arc) {
  std::vector<Point2> out;
  out.push_back(lens_witness(a, b));
  auto crossings = circle_boundary_intersections(a, b);
  if (!crossings) {
    const Circle& small = a.radius <= b.radius ? a : b;
    for (int k = 0; k < 2 * per_arc; ++k) {
      double ang = 2.0 * std::numbers::pi * k / (2 * per_arc);
      out.push_back(small.center + small.radius * Point2{std::cos(ang), std::sin(ang)});
    }
    return out;
  }
  out.push_back((*crossings)[0]);
  out.push_back((*crossings)[1]);

  auto arc_inside = [&](const Circle& c, const Circle& other) {
    Point2 r0 = (*crossings)[0] - c.center;
    Point2 r1 = (*crossings)[1] - c.center;
    double a0 = std::atan2(r0.y, r0.x);
    double a1 = std::atan2(r1.y, r1.x);
    double span = a1 - a0;
    while (span < 0) span += 2.0 * std::numbers::pi;
    double mid = a0 + span / 2.0;
    Point2 pm = c.center + c.radius * Point2{std::cos(mid), std::sin(mid)};
    double lo = a0, sweep = span;
    if (!point_in_circle(pm, other)) {
      lo = a1;
      sweep = 2.0 * std::numbers::pi - span;
    }
    for (int k = 1; k < per_arc; ++k) {
      double ang = lo + sweep * k / per_arc;
      out.push_back(c.center + c.radius * Point2{std::cos(ang), std::sin(ang)});
    }
  };
  arc_inside(a, b);
  arc_inside(b, a);
  for (int k = 1; k < per_arc; ++k) {
    double s = static_cast<double>(k) / per_arc;
    out.push_back((*crossings)[0] + s * ((*crossings)[1] - (*crossings)[0]));
  }
  return out;
}

enum class SegmentSide { above, below, crossing };

// Side of the middle disk relative to the directed witness segment p1 -> p3;
// "above" = the disk centre left of the segment line.
SegmentSide segment_side(Point2 p1, Point2 p3, const Circle& mid) {
  Point2 d = p3 - p1;
  double len = norm(d);
  if (len < 1e-12) throw DegenerateInstance("witness points coincide");
  double h = cross(d, mid.center - p1) / len;
  if (std::abs(std::abs(h) - mid.radius) < kEps)
    throw DegenerateInstance("degenerate instance: case segment tangent to middle disk");
  if (h > mid.radius) return SegmentSide::above;
  if (h < -mid.radius) return SegmentSide::below;
  return SegmentSide::crossing;
}

// For a segment crossing the middle disk with endpoints inside dp, decide
// which split part dp contains, via the extremal boundary probes.
bool dp_contains_left_part(const Circle& dp, Point2 p1, Point2 p3, const Circle& mid) {
  Point2 d = p3 - p1;
  Point2 n = (1.0 / norm(d)) * perp(d);
  Point2 q_left = mid.center + mid.radius * n;
  Point2 q_right = mid.center + (-mid.radius) * n;
  auto probe = [&](Point2 q) {
    double slack = dist(q, dp.center) - dp.radius;
    if (std::abs(slack) < kEps)
      throw DegenerateInstance("degenerate instance: split probe on boundary");
    return slack < 0.0;
  };
  bool left = probe(q_left), right = probe(q_right);
  if (left == right)
    throw DegenerateInstance("degenerate instance: split containment undecided");
  return left;
}

// Boundary crossing of dp and disk closest to `target`; falls back to the
// lens witness when the boundaries do not cross (nested circles).
Point2 closest_crossing(const Circle& dp, const Circle& disk, Point2 target) {
  auto crossings = circle_boundary_intersections(dp, disk);
  if (!crossings) return lens_witness(dp, disk);
  return dist((*crossings)[0], target) <= dist((*crossings)[1], target)
             ? (*crossings)[0]
             : (*crossings)[1];
}

}  // namespace

Triple::Triple(const Circle& a, const Circle& b, const Circle& c) : disks{a, b, c} {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (circles_intersect(disks[i], disks[j]))
        throw std::invalid_argument("triple disks must be pairwise disjoint");
}

Triple3 Triple::as_convex_sets() const {
  return {ConvexSet{disks[0]}, ConvexSet{disks[1]}, ConvexSet{disks[2]}};
}

MiddleMode classify_middle_mode(const Triple& t, int resolution) {
  TransversalReport report = middle_profile(t.as_convex_sets(), resolution);
  const auto& prof = report.middle_profile;
  switch (prof.size()) {
    case 0: return {MiddleTag::no_transversal, -1};
    case 1: return {MiddleTag::one_middle, prof[0]};
    case 2: {
      int excluded = 3 - prof[0] - prof[1];
      return {MiddleTag::two_middles, excluded};
    }
    default: return {MiddleTag::all_three, -1};
  }
}

TangentShape tangent_shape(const Triple& t, int i) {
  auto [a, b] = other_indices(i);
  ExternalTangents tangents = external_tangents(t.disks[a], t.disks[b]);
  const Circle& di = t.disks[i];
  double sd1 = tangents.first.signed_dist(di.center);
  double sd2 = tangents.second.signed_dist(di.center);
  bool meets1 = std::abs(sd1) <= di.radius;
  bool meets2 = std::abs(sd2) <= di.radius;

  TangentShape shape;
  shape.tangent1 = tangents.first;
  shape.tangent2 = tangents.second;
  if (meets1 && meets2) {
    shape.tag = ShapeTag::two_intersecting;
    return shape;
  }
  if (meets1 || meets2) {
    shape.tag = ShapeTag::one_intersecting;
    shape.a_side = meets1 ? tangents.first : tangents.second;
    return shape;
  }

  // Meets neither tangent: the disk must lie in the middle component of the
  // tangent strip, between the two tangency chords.
  if (sd1 < 0.0 || sd2 < 0.0)
    throw DegenerateInstance("tangent_shape: middle disk outside the tangent strip");
  auto chord_of = [&](const Circle& c) {
    Point2 t1 = c.center + (-c.radius) * tangents.first.normal;
    Point2 t2 = c.center + (-c.radius) * tangents.second.normal;
    return Line2::through(t1, t2);
  };
  Line2 chord_a = chord_of(t.disks[a]);
  Line2 chord_b = chord_of(t.disks[b]);
  auto same_side = [](const Line2& l, Point2 p, Point2 q) {
    return l.signed_dist(p) * l.signed_dist(q) > 0.0;
  };
  if (!same_side(chord_a, di.center, t.disks[b].center) ||
      !same_side(chord_b, di.center, t.disks[a].center))
    throw DegenerateInstance("tangent_shape: middle disk not between the outer disks");
  shape.tag = ShapeTag::contained;
  return shape;
}

bool is_outside_containing(const Circle& dp, const Triple& t, int i,
                           const TangentShape& shape) {
  if (shape.tag != ShapeTag::one_intersecting || !shape.a_side)
    throw std::invalid_argument("is_outside_containing: shape must be 1-intersecting");
  for (const Circle& d : t.disks)
    if (!circles_intersect(dp, d))
      throw std::invalid_argument("is_outside_containing: dp must intersect the triple");

  const Circle& di = t.disks[i];
  if (contains_circle(dp, di)) return true;
  if (contains_circle(di, dp)) return false;

  auto crossings = circle_boundary_intersections(dp, di);
  if (!crossings)
    throw DegenerateInstance("is_outside_containing: boundary relation undecided");
  const Line2& tau = *shape.a_side;
  if (tau.signed_dist((*crossings)[0]) < -kEps ||
      tau.signed_dist((*crossings)[1]) < -kEps)
    return false;
  Point2 far_point = di.center + (-di.radius) * tau.normal;
  return point_in_circle(far_point, dp);
}

bool is_centred(const Circle& dp, const Triple& t, int i, const TangentShape& shape) {
  if (shape.tag != ShapeTag::one_intersecting || !shape.a_side)
    throw std::invalid_argument("is_centred: shape must be 1-intersecting");
  const Line2& tau = *shape.a_side;
  Point2 dir = line_dir(tau);
  const Circle& di = t.disks[i];
  double h = tau.signed_dist(di.center);
  double half = std::sqrt(std::max(0.0, di.radius * di.radius - h * h));
  double sc = dot(di.center, dir);
  double lo = sc - half, hi = sc + half;

  auto [a, b] = other_indices(i);
  double sa = dot(lens_witness(dp, t.disks[a]), dir);
  double sb = dot(lens_witness(dp, t.disks[b]), dir);
  return (sa < lo && sb > hi) || (sa > hi && sb < lo);
}

DiskCase case_of(const Circle& dp, const Triple& t, int middle, int lemma_cases,
                 bool flip) {
  if (lemma_cases != 4 && lemma_cases != 6)
    throw std::invalid_argument("case_of: lemma_cases must be 4 or 6");
  auto [ia, ib] = other_indices(middle);
  const Circle& da = t.disks[ia];
  const Circle& db = t.disks[ib];
  const Circle& dm = t.disks[middle];

  DiskCase result;
  result.lemma_cases = lemma_cases;
  result.p1 = lens_witness(dp, da);
  result.p3 = lens_witness(dp, db);

  auto effective = [&](SegmentSide s) {
    if (s == SegmentSide::crossing || !flip) return s;
    return s == SegmentSide::above ? SegmentSide::below : SegmentSide::above;
  };

  SegmentSide side = effective(segment_side(result.p1, result.p3, dm));

  if (lemma_cases == 4) {
    switch (side) {
      case SegmentSide::above: result.case_id = 1; break;
      case SegmentSide::below: result.case_id = 3; break;
      case SegmentSide::crossing: {
        bool left = dp_contains_left_part(dp, result.p1, result.p3, dm);
        bool above = left != flip;
        result.case_id = above ? 2 : 4;
        break;
      }
    }
    return result;
  }

  // Six-case enumeration: when the witness segment clears the middle disk,
  // re-anchor the witnesses at the boundary crossings closest to it.
  if (side != SegmentSide::crossing) {
    Point2 p1c = closest_crossing(dp, da, dm.center);
    Point2 p3c = closest_crossing(dp, db, dm.center);
    SegmentSide side2 = effective(segment_side(p1c, p3c, dm));
    if (side2 == SegmentSide::crossing) {
      side = side2;
    } else if (side2 != side) {
      throw DegenerateInstance("degenerate instance: witness side ambiguous");
    }
    result.p1 = p1c;
    result.p3 = p3c;
  }

  if (side == SegmentSide::crossing) {
    bool left = dp_contains_left_part(dp, result.p1, result.p3, dm);
    bool above = left != flip;
    result.case_id = above ? 2 : 5;
    return result;
  }

  // Existence of a middle witness p2 whose segments to p1 and p3 clear the
  // opposite outer disks, probed over a deterministic cover of dp ∩ dm.
  bool exists_clear = false;
  for (Point2 p2 : lens_samples(dp, dm, 48)) {
    if (!segment_hits_circle(result.p1, p2, db) &&
        !segment_hits_circle(result.p3, p2, da)) {
      exists_clear = true;
      result.p2 = p2;
      break;
    }
  }
  if (side == SegmentSide::above)
    result.case_id = exists_clear ? 1 : 6;
  else
    result.case_id = exists_clear ? 4 : 3;
  return result;
}

std::pair<std::vector<int>, std::vector<int>> build_bipartition(
    const Triple& t, std::span<const Circle> family, int resolution) {
  const int n = static_cast<int>(family.size());
  for (int j = 0; j < n; ++j)
    for (const Circle& d : t.disks)
      if (!circles_intersect(family[j], d))
        throw std::invalid_argument("family must fully intersect the triple");

  std::vector<int> x1, x2;
  if (n == 0) return {x1, x2};

  TripleAnalysis an = analyze_triple(t, resolution);

  auto is_container = [&](const Circle& dp) {
    for (const Circle& d : t.disks)
      if (contains_circle(dp, d)) return true;
    return false;
  };

  if (an.mode.tag == MiddleTag::no_transversal) {
    for (int j = 0; j < n; ++j) x1.push_back(j);
    return {x1, x2};
  }

  std::vector<char> assigned_first(n, 0);
  if (an.mode.tag == MiddleTag::one_middle) {
    const int m = an.mode.index;
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n; ++j) {
      if (is_container(family[j])) {
        assigned_first[j] = 1;
        continue;
      }
      DiskCase c = case_of(family[j], t, m, 4);
      assigned_first[j] = c.case_id <= 2;
    }
  } else {
    int contained_middle = -1;
    for (int i = 0; i < 3; ++i)
      if (an.shapes[i] && an.shapes[i]->tag == ShapeTag::contained) {
        contained_middle = i;
        break;
      }
    if (contained_middle >= 0) {
      const int m = contained_middle;
#pragma omp parallel for schedule(dynamic)
      for (int j = 0; j < n; ++j) {
        if (is_container(family[j])) {
          assigned_first[j] = 1;
          continue;
        }
        DiskCase c = case_of(family[j], t, m, 6);
        assigned_first[j] = c.case_id <= 3;
      }
    } else {
      for (int i : an.profile)
        if (an.shapes[i]->tag == ShapeTag::two_intersecting)
          throw DegenerateInstance("middle profile inconsistent with 2-intersecting shape");
#pragma omp parallel for schedule(dynamic)
      for (int j = 0; j < n; ++j) {
        if (is_container(family[j])) {
          assigned_first[j] = 1;
          continue;
        }
        bool centred_any = false;
        for (int i : an.profile) {
          const TangentShape& shape = *an.shapes[i];
          if (is_outside_containing(family[j], t, i, shape) &&
              is_centred(family[j], t, i, shape)) {
            centred_any = true;
            break;
          }
        }
        assigned_first[j] = centred_any;
      }
    }
  }

  for (int j = 0; j < n; ++j) (assigned_first[j] ? x1 : x2).push_back(j);
  return {x1, x2};
}

bool verify_bipartition(std::span<const Circle> family, std::span<const int> x1,
                        std::span<const int> x2, Tolerance tol) {
  std::vector<char> seen(family.size(), 0);
  for (int j : x1) seen.at(j) += 1;
  for (int j : x2) seen.at(j) += 1;
  for (char c : seen)
    if (c != 1) throw std::invalid_argument("verify_bipartition: not a partition");

  auto part_is_clique = [&](std::span<const int> part) {
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (!circles_intersect(family[part[i]], family[part[j]], tol.eps))
          return false;
    return true;
  };
  return part_is_clique(x1) && part_is_clique(x2);
}

TripleAnalysis analyze_triple(const Triple& t, int resolution) {
  TripleAnalysis an;
  TransversalReport report = middle_profile(t.as_convex_sets(), resolution);
  an.profile = report.middle_profile;
  switch (an.profile.size()) {
    case 0: an.mode = {MiddleTag::no_transversal, -1}; break;
    case 1: an.mode = {MiddleTag::one_middle, an.profile[0]}; break;
    case 2: an.mode = {MiddleTag::two_middles, 3 - an.profile[0] - an.profile[1]}; break;
    default: an.mode = {MiddleTag::all_three, -1}; break;
  }
  for (int i : an.profile) an.shapes[i] = tangent_shape(t, i);
  return an;
}

double classification_slack(const TripleAnalysis& an, const Triple& t, const Circle& dp) {
  double slack = 1e300;
  auto take = [&](double v) { slack = std::min(slack, std::abs(v)); };

  for (const Circle& d : t.disks) {
    double dd = dist(dp.center, d.center);
    take(dp.radius + d.radius - dd);                 // intersection threshold
    take(dd - std::abs(dp.radius - d.radius));       // nesting threshold
  }

  for (int i : an.profile) {
    const TangentShape& shape = *an.shapes[i];
    if (shape.tag != ShapeTag::one_intersecting) continue;
    const Line2& tau = *shape.a_side;
    const Circle& di = t.disks[i];
    if (auto crossings = circle_boundary_intersections(dp, di)) {
      take(tau.signed_dist((*crossings)[0]));
      take(tau.signed_dist((*crossings)[1]));
    }
    Point2 far_point = di.center + (-di.radius) * tau.normal;
    take(dist(far_point, dp.center) - dp.radius);

    Point2 dir = line_dir(tau);
    double h = tau.signed_dist(di.center);
    double half = std::sqrt(std::max(0.0, di.radius * di.radius - h * h));
    double sc = dot(di.center, dir);
    auto [a, b] = other_indices(i);
    for (int o : {a, b}) {
      double s = dot(lens_witness(dp, t.disks[o]), dir);
      take(s - (sc - half));
      take(s - (sc + half));
    }
  }

  // Witness-segment slacks for the case classifications.
  auto segment_slacks = [&](int m) {
    auto [ia, ib] = other_indices(m);
    Point2 p1 = lens_witness(dp, t.disks[ia]);
    Point2 p3 = lens_witness(dp, t.disks[ib]);
    Point2 d = p3 - p1;
    double len = norm(d);
    if (len < 1e-12) return;
    double h = cross(d, t.disks[m].center - p1) / len;
    take(std::abs(h) - t.disks[m].radius);
    Point2 nrm = (1.0 / len) * perp(d);
    take(dist(t.disks[m].center + t.disks[m].radius * nrm, dp.center) - dp.radius);
    take(dist(t.disks[m].center + (-t.disks[m].radius) * nrm, dp.center) - dp.radius);
  };
  if (an.mode.tag == MiddleTag::one_middle) segment_slacks(an.mode.index);
  for (int i : an.profile)
    if (an.shapes[i]->tag == ShapeTag::contained) segment_slacks(i);

  return slack;
}

double triple_slack(const Triple& t) {
  double slack = 1e300;
  auto take = [&](double v) { slack = std::min(slack, std::abs(v)); };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      take(dist(t.disks[i].center, t.disks[j].center) - t.disks[i].radius -
           t.disks[j].radius);
  for (int i = 0; i < 3; ++i) {
    auto [a, b] = other_indices(i);
    ExternalTangents tangents = external_tangents(t.disks[a], t.disks[b]);
    take(std::abs(tangents.first.signed_dist(t.disks[i].center)) - t.disks[i].radius);
    take(std::abs(tangents.second.signed_dist(t.disks[i].center)) - t.disks[i].radius);
  }
  return slack;
}

}  // namespace geoclique
