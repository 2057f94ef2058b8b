#include "geoclique/cneeo.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>

namespace geoclique {

const char* to_string(CliqueResult::Method m) {
  switch (m) {
    case CliqueResult::Method::geometric: return "geometric";
    case CliqueResult::Method::robust: return "robust";
    case CliqueResult::Method::oracle: return "oracle";
  }
  return "?";
}

namespace {

// Edge-position lookup table; pos(u,v) = 0-based index of edge {u,v} in the
// ordering, -1 if absent. Validates that the ordering is a permutation of
// the graph's edge set.
struct PositionMap {
  int n;
  std::vector<std::int32_t> pos;

  PositionMap(const Graph& g, const EdgeOrdering& ordering)
      : n(g.num_vertices()), pos(static_cast<std::size_t>(n) * n, -1) {
    if (static_cast<int>(ordering.edges.size()) != g.num_edges())
      throw std::invalid_argument("edge ordering is not a permutation of the edge set");
    for (std::size_t k = 0; k < ordering.edges.size(); ++k) {
      auto [u, v] = ordering.edges[k];
      if (u < 0 || v < 0 || u >= n || v >= n || u == v || !g.adjacent(u, v) ||
          at(u, v) != -1)
        throw std::invalid_argument("edge ordering is not a permutation of the edge set");
      pos[static_cast<std::size_t>(u) * n + v] = static_cast<std::int32_t>(k);
      pos[static_cast<std::size_t>(v) * n + u] = static_cast<std::int32_t>(k);
    }
  }

  std::int32_t at(int u, int v) const {
    return pos[static_cast<std::size_t>(u) * n + v];
  }
};

// N_{Lambda,k}: common neighbours of edge k's endpoints among edges at
// positions >= k.
std::vector<int> suffix_common_neighborhood(const Graph& g, const PositionMap& pm,
                                            const EdgeOrdering& ordering, int k) {
  auto [u, v] = ordering.edges[k];
  std::vector<int> out;
  for (int w : g.common_neighbors(u, v))
    if (pm.at(u, w) >= k && pm.at(v, w) >= k) out.push_back(w);
  return out;
}

std::optional<CneeoViolation> validate_positions(const Graph& g,
                                                 const EdgeOrdering& ordering,
                                                 bool parallel) {
  PositionMap pm(g, ordering);
  const int m = static_cast<int>(ordering.edges.size());
  std::atomic<int> first_bad{INT_MAX};
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (int k = 0; k < m; ++k) {
      if (k >= first_bad.load(std::memory_order_relaxed)) continue;
      std::vector<int> nbhd = suffix_common_neighborhood(g, pm, ordering, k);
      if (!cobipartite(g, nbhd)) {
        int cur = first_bad.load(std::memory_order_relaxed);
        while (k < cur && !first_bad.compare_exchange_weak(cur, k)) {
        }
      }
    }
  } else {
    for (int k = 0; k < m; ++k) {
      std::vector<int> nbhd = suffix_common_neighborhood(g, pm, ordering, k);
      if (!cobipartite(g, nbhd)) {
        first_bad = k;
        break;
      }
    }
  }
  if (first_bad == INT_MAX) return std::nullopt;
  int k = first_bad.load();
  auto res = is_cobipartite(g, suffix_common_neighborhood(g, pm, ordering, k));
  return CneeoViolation{k + 1, std::get<OddCycleCertificate>(res)};
}

CliqueResult extract_clique(const Graph& g, const EdgeOrdering& ordering,
                            bool parallel) {
  const int n = g.num_vertices();
  const int m = static_cast<int>(ordering.edges.size());
  CliqueResult result;
  if (m == 0) {
    if (n > 0) {
      result.vertices = {0};
      result.size = 1;
    }
    return result;
  }

  PositionMap pm(g, ordering);
  std::vector<int> sizes(m, 0);
  std::atomic<int> first_bad{INT_MAX};

  auto body = [&](int k) {
    if (k >= first_bad.load(std::memory_order_relaxed)) return;
    std::vector<int> nbhd = suffix_common_neighborhood(g, pm, ordering, k);
    auto res = is_cobipartite(g, nbhd);
    if (auto* part = std::get_if<CobipartitePartition>(&res)) {
      sizes[k] = static_cast<int>(max_clique_cobipartite(g, nbhd, *part).size()) + 2;
    } else {
      int cur = first_bad.load(std::memory_order_relaxed);
      while (k < cur && !first_bad.compare_exchange_weak(cur, k)) {
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (int k = 0; k < m; ++k) body(k);
  } else {
    for (int k = 0; k < m; ++k) body(k);
  }

  if (first_bad != INT_MAX) {
    int k = first_bad.load();
    auto res = is_cobipartite(g, suffix_common_neighborhood(g, pm, ordering, k));
    throw CneeoViolationError({k + 1, std::get<OddCycleCertificate>(res)});
  }

  // Deterministic reduction: largest size, ties to the smallest position.
  int best_k = 0;
  for (int k = 1; k < m; ++k)
    if (sizes[k] > sizes[best_k]) best_k = k;

  std::vector<int> nbhd = suffix_common_neighborhood(g, pm, ordering, best_k);
  auto part = std::get<CobipartitePartition>(is_cobipartite(g, nbhd));
  std::vector<int> clique = max_clique_cobipartite(g, nbhd, part);
  auto [u, v] = ordering.edges[best_k];
  clique.push_back(u);
  clique.push_back(v);
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw std::logic_error("clique_from_cneeo: candidate is not a clique");

  result.vertices = std::move(clique);
  result.size = static_cast<int>(result.vertices.size());
  result.ordering_position = best_k + 1;
  return result;
}

}  // namespace

std::optional<CneeoViolation> is_valid_cneeo(const Graph& g, const EdgeOrdering& ordering) {
  return validate_positions(g, ordering, /*parallel=*/true);
}

CliqueResult clique_from_cneeo(const Graph& g, const EdgeOrdering& ordering) {
  return extract_clique(g, ordering, /*parallel=*/true);
}

namespace ref {
std::optional<CneeoViolation> is_valid_cneeo(const Graph& g, const EdgeOrdering& ordering) {
  return validate_positions(g, ordering, /*parallel=*/false);
}

CliqueResult clique_from_cneeo(const Graph& g, const EdgeOrdering& ordering) {
  return extract_clique(g, ordering, /*parallel=*/false);
}
}  // namespace ref

std::variant<EdgeOrdering, CneeoFailure> greedy_cneeo(const Graph& g) {
  const int n = g.num_vertices();
  auto edge_list = g.edges();  // lex sorted
  const int m = static_cast<int>(edge_list.size());

  std::vector<Bitset> rem(n, Bitset(n));
  for (int v = 0; v < n; ++v) rem[v] = g.neighbors(v);

  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[edge_list[e].first].push_back(e);
    incident[edge_list[e].second].push_back(e);
  }

  // Per-edge cache. Shrinking the remaining graph only shrinks common
  // neighbourhoods, and induced subgraphs of cobipartite graphs stay
  // cobipartite, so a qualifying edge stays qualifying and a failing edge
  // stays failing until an incident edge is removed.
  enum : unsigned char { kDirty = 0, kOk = 1, kFail = 2 };
  std::vector<unsigned char> status(m, kDirty);
  std::vector<char> alive(m, 1);

  auto remaining_neighborhood = [&](int e) {
    auto [u, v] = edge_list[e];
    Bitset both = rem[u];
    both.and_with(rem[v]);
    std::vector<int> out;
    both.collect(out);
    return out;
  };

  EdgeOrdering ordering;
  ordering.edges.reserve(m);
  int taken = 0;
  while (taken < m) {
    int chosen = -1;
    for (int e = 0; e < m; ++e) {
      if (!alive[e]) continue;
      if (status[e] == kFail) continue;
      if (status[e] == kDirty)
        status[e] = cobipartite(g, remaining_neighborhood(e)) ? kOk : kFail;
      if (status[e] == kOk) {
        chosen = e;
        break;
      }
    }
    if (chosen == -1) {
      CneeoFailure fail;
      fail.prefix = ordering.edges;
      for (int e = 0; e < m; ++e)
        if (alive[e]) fail.remaining.push_back(edge_list[e]);
      fail.witness_edge = fail.remaining.front();
      auto res = is_cobipartite(g, remaining_neighborhood(
                                       static_cast<int>(std::find(edge_list.begin(),
                                                                  edge_list.end(),
                                                                  fail.witness_edge) -
                                                        edge_list.begin())));
      fail.certificate = std::get<OddCycleCertificate>(res);
      return fail;
    }
    auto [u, v] = edge_list[chosen];
    ordering.edges.push_back(edge_list[chosen]);
    alive[chosen] = 0;
    rem[u].reset(v);
    rem[v].reset(u);
    for (int e : incident[u])
      if (alive[e]) status[e] = kDirty;
    for (int e : incident[v])
      if (alive[e]) status[e] = kDirty;
    ++taken;
  }
  return ordering;
}

bool verify_cneeo_failure(const Graph& g, const CneeoFailure& failure) {
  if (!validate_odd_cycle(g, failure.certificate)) return false;
  if (failure.prefix.size() + failure.remaining.size() !=
      static_cast<std::size_t>(g.num_edges()))
    return false;

  const int n = g.num_vertices();
  std::vector<Bitset> rem(n, Bitset(n));
  for (auto [u, v] : failure.remaining) {
    if (u < 0 || v < 0 || u >= n || v >= n || !g.adjacent(u, v)) return false;
    rem[u].set(v);
    rem[v].set(u);
  }
  bool witness_seen = false;
  for (auto [u, v] : failure.remaining) {
    Bitset both = rem[u];
    both.and_with(rem[v]);
    std::vector<int> nbhd;
    both.collect(nbhd);
    if (cobipartite(g, nbhd)) return false;
    if (std::pair{u, v} == failure.witness_edge) {
      witness_seen = true;
      // The stored cycle must lie inside this edge's neighbourhood.
      for (int x : failure.certificate.cycle)
        if (!std::binary_search(nbhd.begin(), nbhd.end(), x)) return false;
    }
  }
  return witness_seen;
}

EdgeOrdering geometric_cneeo_ordering(std::span<const GeomObject> objects, Tolerance tol) {
  struct Keyed {
    double primary;
    double secondary;
    int u, v;
  };
  std::vector<Keyed> e1, e3;
  std::vector<std::pair<int, int>> e2;

  const int n = static_cast<int>(objects.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!intersects(objects[i], objects[j], tol)) continue;
      const auto* di = std::get_if<UnitDisk>(&objects[i]);
      const auto* dj = std::get_if<UnitDisk>(&objects[j]);
      const auto* pi = std::get_if<Pancake2>(&objects[i]);
      const auto* pj = std::get_if<Pancake2>(&objects[j]);
      if ((!di && !pi) || (!dj && !pj))
        throw std::invalid_argument("geometric ordering expects unit disks and 2-pancakes");
      if (di && dj) {
        e1.push_back({distance(objects[i], objects[j]), 0.0, i, j});
      } else if (pi && pj) {
        double a = pi->spine_length(), b = pj->spine_length();
        e3.push_back({std::min(a, b), std::max(a, b), i, j});
      } else {
        const UnitDisk& d = di ? *di : *dj;
        const Pancake2& p = pi ? *pi : *pj;
        if (is_lens(d, p, tol))
          e1.push_back({distance(objects[i], objects[j]), 0.0, i, j});
        else
          e2.emplace_back(i, j);
      }
    }

  std::sort(e1.begin(), e1.end(), [](const Keyed& a, const Keyed& b) {
    if (a.primary != b.primary) return a.primary > b.primary;  // non-increasing length
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  std::sort(e2.begin(), e2.end());
  std::sort(e3.begin(), e3.end(), [](const Keyed& a, const Keyed& b) {
    if (a.primary != b.primary) return a.primary < b.primary;  // smallest spines first
    if (a.secondary != b.secondary) return a.secondary < b.secondary;
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });

  EdgeOrdering out;
  out.edges.reserve(e1.size() + e2.size() + e3.size());
  for (const auto& k : e1) out.edges.emplace_back(k.u, k.v);
  for (const auto& p : e2) out.edges.push_back(p);
  for (const auto& k : e3) out.edges.emplace_back(k.u, k.v);
  return out;
}

CliqueResult solve_pi2_geometric(std::span<const GeomObject> objects, Tolerance tol) {
  Graph g = build_intersection_graph(objects, tol);
  EdgeOrdering ordering = geometric_cneeo_ordering(objects, tol);
  CliqueResult result = clique_from_cneeo(g, ordering);
  result.method = CliqueResult::Method::geometric;
  return result;
}

std::variant<CliqueResult, CneeoFailure> solve_pi2_robust(const Graph& g) {
  auto greedy = greedy_cneeo(g);
  if (auto* fail = std::get_if<CneeoFailure>(&greedy)) return *fail;
  CliqueResult result = clique_from_cneeo(g, std::get<EdgeOrdering>(greedy));
  result.method = CliqueResult::Method::robust;
  return result;
}

}  // namespace geoclique
