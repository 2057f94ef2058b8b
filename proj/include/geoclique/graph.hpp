// Undirected simple graphs with bitset adjacency, cobipartite detection with
// constructive certificates, matching-based clique extraction in cobipartite
// graphs, and the exact branch-and-bound oracle.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geoclique/geometry.hpp"

namespace geoclique {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-size bitset over vertex indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const;
  void and_with(const Bitset& o);
  /// Appends set positions to `out` in increasing order.
  void collect(std::vector<int>& out) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  /// All edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Common neighbours of u and v, increasing order.
  std::vector<int> common_neighbors(int u, int v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
};

/// Two vertex sets each inducing a complete subgraph.
struct CobipartitePartition {
  std::vector<int> part1;
  std::vector<int> part2;
};

/// Odd cycle in the complement of the queried induced subgraph: consecutive
/// vertices (cyclically) are non-adjacent in the original graph.
struct OddCycleCertificate {
  std::vector<int> cycle;
};

using CobipartiteResult = std::variant<CobipartitePartition, OddCycleCertificate>;

/// Two-colours the complement of the induced subgraph. Success yields a
/// partition into two cliques of G; failure yields an odd complement cycle.
CobipartiteResult is_cobipartite(const Graph& g, std::span<const int> subset);

bool cobipartite(const Graph& g, std::span<const int> subset);

/// Checks the certificate against g: odd length >= 3, all cyclically
/// consecutive pairs non-adjacent.
bool validate_odd_cycle(const Graph& g, const OddCycleCertificate& cert);

/// Maximum independent set of the induced subgraph, which must be properly
/// 2-coloured by `coloring` (parallel to `subset`, values 0/1). Matching via
/// lowest-index augmenting order, vertex cover by Koenig extraction.
std::vector<int> bipartite_mis(const Graph& g, std::span<const int> subset,
                               std::span<const int> coloring);

/// Maximum clique of the induced subgraph given a valid cobipartite
/// partition; the result is re-verified pairwise adjacent.
std::vector<int> max_clique_cobipartite(const Graph& g, std::span<const int> subset,
                                        const CobipartitePartition& partition);

/// Exact maximum clique, lexicographically smallest among optima.
/// Throws CapExceeded above `cap` vertices.
std::vector<int> max_clique_bruteforce(const Graph& g, int cap = 40);

/// Intersection graph of the objects: vertex i <-> objects[i].
Graph build_intersection_graph(std::span<const GeomObject> objects, Tolerance tol = {});

namespace ref {
/// Serial reference for the parallel builder above.
Graph build_intersection_graph(std::span<const GeomObject> objects, Tolerance tol = {});
}  // namespace ref

}  // namespace geoclique
