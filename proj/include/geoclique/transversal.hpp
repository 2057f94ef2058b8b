// Line transversals of disjoint convex-set triples by angular sweep over
// support intervals. Directions are parametrized by theta in [0,pi):
// a line is {p : dot(p, n(theta)) == t} with n(theta) = (-sin, cos), and
// points along it are ordered by d(theta) = (cos, sin).

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "geoclique/geometry.hpp"

namespace geoclique {

using ConvexSet = std::variant<Circle, ConvexPolygon>;
using Triple3 = std::array<ConvexSet, 3>;

struct SupportInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct TransversalSample {
  double theta = 0.0;
  double offset = 0.0;
  int middle = -1;  // index into the triple
};

struct TransversalReport {
  std::vector<TransversalSample> samples;  // sorted by (theta, offset)
  std::vector<int> middle_profile;         // sorted subset of {0,1,2}
  int resolution = 0;
};

/// Offsets t for which the line {p . n(theta) = t} meets the set.
SupportInterval support_interval(const ConvexSet& s, double theta);

/// First transversal found on the angle grid, with bisection refinement of
/// the continuous overlap function before declaring nonexistence.
std::optional<TransversalSample> transversal_exists(const Triple3& triple,
                                                    int resolution = 4096,
                                                    double refine_tol = 1e-10);

/// Index of the set whose chord interval along the line lies between the
/// other two. Throws if the line misses a set; chord intervals of the
/// disjoint sets are asserted pairwise disjoint.
int middle_of_line(const Line2& line, const Triple3& triple);

/// Full sweep; per angle with nonempty overlap, samples near both interval
/// ends and the midpoint and records each line's middle.
TransversalReport middle_profile(const Triple3& triple, int resolution = 4096);

namespace ref {
TransversalReport middle_profile(const Triple3& triple, int resolution = 4096);
}  // namespace ref

}  // namespace geoclique
