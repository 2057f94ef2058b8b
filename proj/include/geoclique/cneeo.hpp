// Cobipartite-neighbourhood edge elimination orderings: geometric
// construction for unit-disk/2-pancake instances, greedy construction for
// abstract graphs, and maximum-clique extraction from a valid ordering.

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "geoclique/graph.hpp"

namespace geoclique {

/// Total order on a graph's edges; position k (1-based in reports) induces
/// the suffix graph on edges k..m and the common neighbourhood of edge k's
/// endpoints therein.
struct EdgeOrdering {
  std::vector<std::pair<int, int>> edges;  // each normalized u < v
};

/// Greedy failure: no remaining edge has a cobipartite common neighbourhood.
/// One odd-cycle witness is stored; the other remaining edges are verifiable
/// on demand via verify_cneeo_failure.
struct CneeoFailure {
  std::vector<std::pair<int, int>> prefix;
  std::vector<std::pair<int, int>> remaining;  // lex sorted
  std::pair<int, int> witness_edge{-1, -1};
  OddCycleCertificate certificate;
};

struct CliqueResult {
  enum class Method { geometric, robust, oracle };
  std::vector<int> vertices;
  int size = 0;
  Method method = Method::geometric;
  std::optional<int> ordering_position;  // 1-based k of the winning edge
};

const char* to_string(CliqueResult::Method m);

struct CneeoViolation {
  int position = 0;  // 1-based
  OddCycleCertificate certificate;
};

struct CneeoViolationError : std::runtime_error {
  explicit CneeoViolationError(CneeoViolation v)
      : std::runtime_error("edge ordering is not a CNEEO at position " +
                           std::to_string(v.position)),
        violation(std::move(v)) {}
  CneeoViolation violation;
};

/// Checks every position's common neighbourhood for cobipartiteness in g.
/// Returns the first violating position with a certificate, or nullopt.
std::optional<CneeoViolation> is_valid_cneeo(const Graph& g, const EdgeOrdering& ordering);

/// Greedy construction: repeatedly takes the lexicographically first
/// remaining edge whose common neighbourhood in the remaining graph induces
/// a cobipartite subgraph of g.
std::variant<EdgeOrdering, CneeoFailure> greedy_cneeo(const Graph& g);

/// Re-checks a failure object: the witness certificate and every remaining
/// edge's non-cobipartite neighbourhood at the failure point.
bool verify_cneeo_failure(const Graph& g, const CneeoFailure& failure);

/// Edge ordering from a representation: disk-disk and disk/lens-pancake
/// edges by non-increasing length, then remaining disk-pancake edges, then
/// pancake-pancake edges smallest spines first.
EdgeOrdering geometric_cneeo_ordering(std::span<const GeomObject> objects,
                                      Tolerance tol = {});

/// Best clique over all positions of a CNEEO. Throws CneeoViolationError if
/// a visited neighbourhood fails the cobipartite check.
CliqueResult clique_from_cneeo(const Graph& g, const EdgeOrdering& ordering);

CliqueResult solve_pi2_geometric(std::span<const GeomObject> objects, Tolerance tol = {});
std::variant<CliqueResult, CneeoFailure> solve_pi2_robust(const Graph& g);

namespace ref {
std::optional<CneeoViolation> is_valid_cneeo(const Graph& g, const EdgeOrdering& ordering);
CliqueResult clique_from_cneeo(const Graph& g, const EdgeOrdering& ordering);
}  // namespace ref

}  // namespace geoclique
