// Case machinery for circle triples acting as convex pseudo-disks: middle
// modes from transversal profiles, tangent-shape taxonomy, the
// outside-containing / centred tests, per-lemma case classification and the
// clique bipartition builder for families fully intersecting a triple.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geoclique/geometry.hpp"
#include "geoclique/transversal.hpp"

namespace geoclique {

/// Three pairwise disjoint circles (the independent triple H).
struct Triple {
  std::array<Circle, 3> disks;

  Triple() = default;
  Triple(const Circle& a, const Circle& b, const Circle& c);
  Triple3 as_convex_sets() const;
};

enum class MiddleTag { no_transversal, one_middle, two_middles, all_three };

struct MiddleMode {
  MiddleTag tag = MiddleTag::no_transversal;
  int index = -1;  // one_middle: the middle disk; two_middles: the excluded disk
};

enum class ShapeTag { contained, one_intersecting, two_intersecting };

/// Position of a middle disk relative to the external tangents of the
/// other two. For one_intersecting, `a_side` is the meeting tangent with its
/// normal oriented so that A_i = {p in D_i : signed_dist(p) >= 0}.
struct TangentShape {
  ShapeTag tag = ShapeTag::contained;
  Line2 tangent1, tangent2;
  std::optional<Line2> a_side;
};

struct DiskCase {
  int lemma_cases = 4;  // 4 or 6: which enumeration governed the id
  int case_id = 0;      // 1-based
  Point2 p1, p3;        // recorded witness points
  std::optional<Point2> p2;
};

MiddleMode classify_middle_mode(const Triple& t, int resolution = 4096);

/// Tangent taxonomy of disk i against the external tangents of the other
/// two. Assumes i contributes to the middle profile.
TangentShape tangent_shape(const Triple& t, int i);

/// Whether D_i minus A_i is covered by dp (two-crossings argument: both
/// boundary crossings in A_i and the extremal far point inside dp).
bool is_outside_containing(const Circle& dp, const Triple& t, int i,
                           const TangentShape& shape);

/// Whether dp's intersections with the other two disks sit on opposite sides
/// of the span D_i occupies along the tangent. Assumes outside-containing.
bool is_centred(const Circle& dp, const Triple& t, int i, const TangentShape& shape);

/// Case id under the governing enumeration around `middle`: lemma_cases = 4
/// for the single-middle partition, 6 for the contained-middle partition.
/// `flip` mirrors the above/below labels.
DiskCase case_of(const Circle& dp, const Triple& t, int middle, int lemma_cases,
                 bool flip = false);

/// Splits a fully intersecting family into two intended cliques, dispatching
/// on the triple's middle mode. Members containing a whole triple disk go to
/// the first part.
std::pair<std::vector<int>, std::vector<int>> build_bipartition(
    const Triple& t, std::span<const Circle> family, int resolution = 4096);

/// True iff every pair within each part intersects.
bool verify_bipartition(std::span<const Circle> family, std::span<const int> x1,
                        std::span<const int> x2, Tolerance tol = {});

// -- generator support -------------------------------------------------------

struct TripleAnalysis {
  MiddleMode mode;
  std::array<std::optional<TangentShape>, 3> shapes;  // set for profile members
  std::vector<int> profile;
};

TripleAnalysis analyze_triple(const Triple& t, int resolution = 4096);

/// Smallest absolute slack among the quantities the classifiers branch on
/// for this family member; generators reject candidates below margin.
double classification_slack(const TripleAnalysis& an, const Triple& t, const Circle& dp);

/// Slack of the triple itself: disjointness gaps and tangent-line distances.
double triple_slack(const Triple& t);

}  // namespace geoclique
