#include "geoclique/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geoclique {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 direction(double theta) { return {std::cos(theta), std::sin(theta)}; }
Point2 normal_of(double theta) { return {-std::sin(theta), std::cos(theta)}; }

GeomObject as_object(const ConvexSet& s) {
  return std::visit([](const auto& o) { return GeomObject{o}; }, s);
}

void require_disjoint(const Triple3& triple) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (intersects(as_object(triple[i]), as_object(triple[j])))
        throw std::invalid_argument("triple must be pairwise disjoint");
}

struct Window {
  double lo, hi;
  bool nonempty() const { return hi >= lo; }
};

Window window_at(const Triple3& triple, double theta) {
  Window w{-1e300, 1e300};
  for (const ConvexSet& s : triple) {
    SupportInterval si = support_interval(s, theta);
    w.lo = std::max(w.lo, si.lo);
    w.hi = std::min(w.hi, si.hi);
  }
  return w;
}

double overlap(const Triple3& triple, double theta) {
  Window w = window_at(triple, theta);
  return w.hi - w.lo;
}

// Chord of the line {p.n = t} through one convex set, as an interval of the
// along-line parameter s, points p(s) = t*n + s*dir.
std::pair<double, double> chord_interval(const Line2& line, const ConvexSet& s) {
  Point2 n = line.normal;
  Point2 dir{n.y, -n.x};
  if (const auto* c = std::get_if<Circle>(&s)) {
    double d = std::abs(dot(n, c->center) - line.offset);
    if (d > c->radius + 1e-9)
      throw std::invalid_argument("middle_of_line: line misses a set");
    double half = std::sqrt(std::max(0.0, c->radius * c->radius - d * d));
    double sc = dot(c->center, dir);
    return {sc - half, sc + half};
  }
  const auto& poly = std::get<ConvexPolygon>(s);
  double slo = -1e300, shi = 1e300;
  const auto& v = poly.vertices;
  Point2 p0 = line.offset * n;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Point2 a = v[i], b = v[(i + 1) % v.size()];
    Point2 e = b - a;
    double alpha = cross(e, dir);
    double beta = cross(e, p0 - a);
    if (std::abs(alpha) < 1e-15 * norm(e)) {
      if (beta < -1e-9 * norm(e))
        throw std::invalid_argument("middle_of_line: line misses a set");
      continue;
    }
    double bound = -beta / alpha;
    if (alpha > 0.0)
      slo = std::max(slo, bound);
    else
      shi = std::min(shi, bound);
  }
  if (slo > shi + 1e-9)
    throw std::invalid_argument("middle_of_line: line misses a set");
  return {slo, std::max(slo, shi)};
}

std::vector<TransversalSample> samples_at_angle(const Triple3& triple, double theta) {
  std::vector<TransversalSample> out;
  Window w = window_at(triple, theta);
  if (!w.nonempty()) return out;
  double width = w.hi - w.lo;
  double delta = width * 1e-4;
  double offsets[3] = {w.lo + delta, 0.5 * (w.lo + w.hi), w.hi - delta};
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (double t : offsets) {
    if (t == prev) continue;
    prev = t;
    Line2 line{normal_of(theta), t};
    out.push_back({theta, t, middle_of_line(line, triple)});
  }
  return out;
}

}  // namespace

SupportInterval support_interval(const ConvexSet& s, double theta) {
  Point2 n = normal_of(theta);
  if (const auto* c = std::get_if<Circle>(&s)) {
    double proj = dot(n, c->center);
    return {proj - c->radius, proj + c->radius};
  }
  const auto& poly = std::get<ConvexPolygon>(s);
  double lo = 1e300, hi = -1e300;
  for (Point2 v : poly.vertices) {
    double proj = dot(n, v);
    lo = std::min(lo, proj);
    hi = std::max(hi, proj);
  }
  return {lo, hi};
}

int middle_of_line(const Line2& line, const Triple3& triple) {
  std::array<std::pair<double, double>, 3> chords;
  for (int i = 0; i < 3; ++i) chords[i] = chord_interval(line, triple[i]);

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return chords[a].first < chords[b].first; });
  for (int i = 0; i + 1 < 3; ++i)
    if (chords[order[i + 1]].first < chords[order[i]].second - 1e-9)
      throw DegenerateInstance("middle_of_line: chord intervals overlap");
  return order[1];
}

std::optional<TransversalSample> transversal_exists(const Triple3& triple,
                                                    int resolution,
                                                    double refine_tol) {
  require_disjoint(triple);
  const double step = kPi / resolution;
  std::vector<double> g(resolution);
  for (int i = 0; i < resolution; ++i) g[i] = overlap(triple, i * step);

  for (int i = 0; i < resolution; ++i) {
    if (g[i] >= 0.0) {
      double theta = i * step;
      Window w = window_at(triple, theta);
      double t = 0.5 * (w.lo + w.hi);
      return TransversalSample{theta, t, middle_of_line({normal_of(theta), t}, triple)};
    }
  }

  // No grid hit. The overlap function is continuous and pi-periodic; refine
  // every local maximum of the sampled values down to refine_tol before
  // declaring nonexistence.
  for (int i = 0; i < resolution; ++i) {
    double gp = g[(i + resolution - 1) % resolution];
    double gn = g[(i + 1) % resolution];
    if (g[i] < gp || g[i] < gn) continue;
    double lo = (i - 1) * step, hi = (i + 1) * step;
    while (hi - lo > refine_tol) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (overlap(triple, m1) < overlap(triple, m2))
        lo = m1;
      else
        hi = m2;
    }
    double theta = 0.5 * (lo + hi);
    if (overlap(triple, theta) >= 0.0) {
      double wrapped = theta - std::floor(theta / kPi) * kPi;
      Window w = window_at(triple, wrapped);
      double t = 0.5 * (w.lo + w.hi);
      return TransversalSample{wrapped, t,
                               middle_of_line({normal_of(wrapped), t}, triple)};
    }
  }
  return std::nullopt;
}

namespace {

TransversalReport profile_impl(const Triple3& triple, int resolution, bool parallel) {
  require_disjoint(triple);
  const double step = kPi / resolution;
  std::vector<std::vector<TransversalSample>> per_angle(resolution);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < resolution; ++i)
      per_angle[i] = samples_at_angle(triple, i * step);
  } else {
    for (int i = 0; i < resolution; ++i)
      per_angle[i] = samples_at_angle(triple, i * step);
  }

  TransversalReport report;
  report.resolution = resolution;
  bool seen[3] = {false, false, false};
  for (auto& block : per_angle)
    for (auto& s : block) {
      seen[s.middle] = true;
      report.samples.push_back(s);
    }
  for (int i = 0; i < 3; ++i)
    if (seen[i]) report.middle_profile.push_back(i);
  return report;
}

}  // namespace

TransversalReport middle_profile(const Triple3& triple, int resolution) {
  return profile_impl(triple, resolution, /*parallel=*/true);
}

namespace ref {
TransversalReport middle_profile(const Triple3& triple, int resolution) {
  return profile_impl(triple, resolution, /*parallel=*/false);
}
}  // namespace ref

}  // namespace geoclique
