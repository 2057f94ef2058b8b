#include "geoclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace geoclique {

int Bitset::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

void Bitset::and_with(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
}

void Bitset::collect(std::vector<int>& out) const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(wi * 64 + b));
      w &= w - 1;
    }
  }
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (!adj_[u].test(v)) {
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  std::vector<int> row;
  for (int u = 0; u < n_; ++u) {
    row.clear();
    adj_[u].collect(row);
    for (int v : row)
      if (v > u) out.emplace_back(u, v);
  }
  return out;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
  Bitset both = adj_[u];
  both.and_with(adj_[v]);
  std::vector<int> out;
  both.collect(out);
  return out;
}

CobipartiteResult is_cobipartite(const Graph& g, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> color(k, -1), parent(k, -1), depth(k, 0);

  // Complement neighbours of local vertex u, increasing local order.
  auto comp_neighbors = [&](int u, std::vector<int>& out) {
    out.clear();
    for (int w = 0; w < k; ++w)
      if (w != u && !g.adjacent(subset[u], subset[w])) out.push_back(w);
  };

  std::vector<int> nbrs;
  std::deque<int> queue;
  for (int start = 0; start < k; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.clear();
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp_neighbors(u, nbrs);
      for (int w : nbrs) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Odd cycle through the BFS tree paths of u and w.
          std::vector<int> pu{u}, pw{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
          while (a != b) {
            pu.push_back(a = parent[a]);
            pw.push_back(b = parent[b]);
          }
          OddCycleCertificate cert;
          for (int x : pu) cert.cycle.push_back(subset[x]);
          for (auto it = pw.rbegin(); it != pw.rend(); ++it)
            if (*it != a) cert.cycle.push_back(subset[*it]);
          return cert;
        }
      }
    }
  }
  CobipartitePartition part;
  for (int i = 0; i < k; ++i)
    (color[i] == 0 ? part.part1 : part.part2).push_back(subset[i]);
  return part;
}

bool cobipartite(const Graph& g, std::span<const int> subset) {
  return std::holds_alternative<CobipartitePartition>(is_cobipartite(g, subset));
}

bool validate_odd_cycle(const Graph& g, const OddCycleCertificate& cert) {
  const auto& c = cert.cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int u = c[i], v = c[(i + 1) % c.size()];
    if (u == v || g.adjacent(u, v)) return false;
  }
  return true;
}

std::vector<int> bipartite_mis(const Graph& g, std::span<const int> subset,
                               std::span<const int> coloring) {
  const int k = static_cast<int>(subset.size());
  if (static_cast<int>(coloring.size()) != k)
    throw std::invalid_argument("bipartite_mis: coloring size mismatch");

  std::vector<int> left, right;          // local indices into subset
  std::vector<int> side_index(k, -1);    // position within its side
  for (int i = 0; i < k; ++i) {
    if (coloring[i] == 0) {
      side_index[i] = static_cast<int>(left.size());
      left.push_back(i);
    } else {
      side_index[i] = static_cast<int>(right.size());
      right.push_back(i);
    }
  }

  std::vector<std::vector<int>> adj(left.size());  // left-local -> right-local
  for (std::size_t li = 0; li < left.size(); ++li)
    for (std::size_t ri = 0; ri < right.size(); ++ri)
      if (g.adjacent(subset[left[li]], subset[right[ri]]))
        adj[li].push_back(static_cast<int>(ri));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (coloring[i] == coloring[j] && g.adjacent(subset[i], subset[j]))
        throw std::invalid_argument("bipartite_mis: improper coloring");

  // Kuhn's augmenting paths, left vertices and neighbours in ascending order.
  std::vector<int> match_l(left.size(), -1), match_r(right.size(), -1);
  std::vector<char> used(right.size(), 0);
  auto augment = [&](auto&& self, int li) -> bool {
    for (int ri : adj[li]) {
      if (used[ri]) continue;
      used[ri] = 1;
      if (match_r[ri] == -1 || self(self, match_r[ri])) {
        match_l[li] = ri;
        match_r[ri] = li;
        return true;
      }
    }
    return false;
  };
  for (std::size_t li = 0; li < left.size(); ++li) {
    std::fill(used.begin(), used.end(), 0);
    augment(augment, static_cast<int>(li));
  }

  // Koenig: Z = vertices reachable by alternating paths from unmatched left.
  std::vector<char> zl(left.size(), 0), zr(right.size(), 0);
  std::deque<int> queue;
  for (std::size_t li = 0; li < left.size(); ++li)
    if (match_l[li] == -1) {
      zl[li] = 1;
      queue.push_back(static_cast<int>(li));
    }
  while (!queue.empty()) {
    int li = queue.front();
    queue.pop_front();
    for (int ri : adj[li]) {
      if (zr[ri]) continue;
      zr[ri] = 1;
      int nl = match_r[ri];
      if (nl != -1 && !zl[nl]) {
        zl[nl] = 1;
        queue.push_back(nl);
      }
    }
  }

  // MIS = (L in Z) + (R not in Z), reported in subset order.
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    bool keep = coloring[i] == 0 ? zl[side_index[i]] != 0 : zr[side_index[i]] == 0;
    if (keep) out.push_back(subset[i]);
  }
  return out;
}

std::vector<int> max_clique_cobipartite(const Graph& g, std::span<const int> subset,
                                        const CobipartitePartition& partition) {
  const int k = static_cast<int>(subset.size());
  std::vector<int> local_color(k, -1);
  auto paint = [&](const std::vector<int>& part, int col) {
    for (int v : part) {
      auto it = std::find(subset.begin(), subset.end(), v);
      if (it == subset.end())
        throw std::invalid_argument("max_clique_cobipartite: partition outside subset");
      local_color[it - subset.begin()] = col;
    }
  };
  paint(partition.part1, 0);
  paint(partition.part2, 1);
  for (int c : local_color)
    if (c == -1)
      throw std::invalid_argument("max_clique_cobipartite: partition does not cover subset");

  // Clique in G[subset] = independent set in the complement, which the
  // partition 2-colours. Materialize the small complement graph.
  Graph comp(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!g.adjacent(subset[i], subset[j])) comp.add_edge(i, j);
  std::vector<int> locals(k);
  std::iota(locals.begin(), locals.end(), 0);
  std::vector<int> mis = bipartite_mis(comp, locals, local_color);

  std::vector<int> out;
  out.reserve(mis.size());
  for (int i : mis) out.push_back(subset[i]);
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!g.adjacent(out[i], out[j]))
        throw std::logic_error("max_clique_cobipartite: result not a clique");
  return out;
}

namespace {

struct BruteState {
  const std::vector<std::uint64_t>* adj;
  int n;
  std::vector<int> best;
  std::vector<int> current;
};

void brute_expand(BruteState& st, std::uint64_t cand) {
  int size = static_cast<int>(st.current.size());
  if (size + std::popcount(cand) < static_cast<int>(st.best.size())) return;
  if (cand == 0) {
    if (size > static_cast<int>(st.best.size()) ||
        (size == static_cast<int>(st.best.size()) && st.current < st.best))
      st.best = st.current;
    return;
  }
  std::uint64_t rest = cand;
  while (rest) {
    if (static_cast<int>(st.current.size()) + std::popcount(rest) <
        static_cast<int>(st.best.size()))
      return;
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    st.current.push_back(v);
    brute_expand(st, rest & (*st.adj)[v]);
    st.current.pop_back();
  }
}

}  // namespace

std::vector<int> max_clique_bruteforce(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > 64)
    throw CapExceeded("max_clique_bruteforce: oracle cap exceeded");
  if (n == 0) return {};

  std::vector<std::uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= std::uint64_t{1} << v;

  BruteState st;
  st.adj = &adj;
  st.n = n;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  brute_expand(st, all);
  return st.best;
}

Graph build_intersection_graph(std::span<const GeomObject> objects, Tolerance tol) {
  const int n = static_cast<int>(objects.size());
  std::vector<Bitset> upper(n, Bitset(n));
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(objects[i], objects[j], tol)) upper[i].set(j);

  Graph g(n);
  std::vector<int> row;
  for (int i = 0; i < n; ++i) {
    row.clear();
    upper[i].collect(row);
    for (int j : row) g.add_edge(i, j);
  }
  return g;
}

namespace ref {

Graph build_intersection_graph(std::span<const GeomObject> objects, Tolerance tol) {
  const int n = static_cast<int>(objects.size());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(objects[i], objects[j], tol)) g.add_edge(i, j);
  return g;
}

}  // namespace ref

}  // namespace geoclique
