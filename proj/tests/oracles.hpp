#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library beyond reading a Graph's adjacency.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "twotree/graph.hpp"

namespace oracle {

using twotree::Edge;
using twotree::Graph;
using twotree::VertexId;

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<char>(g.order(), 0));
  for (VertexId v = 0; v < g.order(); ++v)
    for (VertexId w : g.neighbors(v)) m[v][w] = 1;
  return m;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Vertices reachable from `from` inside `allowed`.
inline std::vector<char> reach(const Matrix& m, VertexId from, const std::vector<char>& allowed) {
  std::vector<char> seen(m.size(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y = 0; y < m.size(); ++y)
      if (m[x][y] && allowed[y] && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return seen;
}

enum class Shape { Empty, Path, Tree, Cycle, Disconnected };

inline Shape classify(const Graph& g, const std::vector<VertexId>& s) {
  if (s.empty()) return Shape::Empty;
  const Matrix m = matrix(g);
  std::vector<char> in(g.order(), 0);
  for (VertexId v : s) in[v] = 1;
  const auto seen = reach(m, s[0], in);
  for (VertexId v : s)
    if (!seen[v]) return Shape::Disconnected;
  std::size_t edges = 0, maxdeg = 0;
  for (VertexId v : s) {
    std::size_t d = 0;
    for (VertexId w : s) d += m[v][w];
    edges += d;
    maxdeg = std::max(maxdeg, d);
  }
  edges /= 2;
  if (edges != s.size() - 1) return Shape::Cycle;
  return maxdeg <= 2 ? Shape::Path : Shape::Tree;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const Matrix ma = matrix(a), mb = matrix(b);
  std::vector<VertexId> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (VertexId u = 0; u < a.order() && ok; ++u)
      for (VertexId v = u + 1; v < a.order() && ok; ++v) ok = ma[u][v] == mb[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// 6-sets inducing C6 plus one chord between opposite vertices.
inline std::size_t bricks(const Graph& g) {
  const Matrix m = matrix(g);
  const std::size_t n = g.order();
  std::size_t count = 0;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - std::min<std::size_t>(6, n), pick.end(), 1);
  if (n < 6) return 0;
  do {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        if (m[s[i]][s[j]]) edges.emplace_back(s[i], s[j]);
    if (edges.size() != 7) continue;
    // Try each edge as the chord: the rest must be a 6-cycle with the chord
    // ends three steps apart.
    bool brick = false;
    for (std::size_t c = 0; c < 7 && !brick; ++c) {
      Matrix sub(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < 7; ++i)
        if (i != c) sub[edges[i].u][edges[i].v] = sub[edges[i].v][edges[i].u] = 1;
      bool two_regular = true;
      for (VertexId v : s) two_regular = two_regular && std::count(sub[v].begin(), sub[v].end(), 1) == 2;
      if (!two_regular) continue;
      // Walk the cycle from the chord's first end.
      std::vector<VertexId> walk{edges[c].u};
      VertexId prev = edges[c].u, cur = edges[c].u;
      for (VertexId w = 0; w < n; ++w)
        if (sub[cur][w]) {
          cur = w;
          break;
        }
      while (cur != edges[c].u && walk.size() < 7) {
        walk.push_back(cur);
        VertexId next = cur;
        for (VertexId w = 0; w < n; ++w)
          if (sub[cur][w] && w != prev) {
            next = w;
            break;
          }
        prev = cur;
        cur = next;
      }
      brick = walk.size() == 6 && walk[3] == edges[c].v;
    }
    count += brick;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

// Undirected Hamiltonian cycles by permutation enumeration (n <= 10).
inline std::size_t hamiltonian_cycles(const Graph& g, const std::vector<Edge>& forced = {}) {
  const std::size_t n = g.order();
  if (n < 3) return 0;
  const Matrix m = matrix(g);
  std::vector<VertexId> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  std::size_t count = 0;
  do {
    if (p.front() > p.back()) continue;
    bool ok = m[0][p.front()] && m[p.back()][0];
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = m[p[i]][p[i + 1]];
    if (!ok) continue;
    std::vector<VertexId> cyc{0};
    cyc.insert(cyc.end(), p.begin(), p.end());
    std::set<Edge> used;
    for (std::size_t i = 0; i < n; ++i) used.insert(Edge(cyc[i], cyc[(i + 1) % n]));
    if (std::all_of(forced.begin(), forced.end(), [&](const Edge& e) { return used.count(e) > 0; })) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// All labeled 2-trees on n vertices as sorted edge lists (n <= 7).
inline std::set<std::vector<Edge>> labeled_two_trees(std::size_t n) {
  using Tree = std::pair<std::uint32_t, std::set<Edge>>;
  std::set<std::pair<std::uint32_t, std::vector<Edge>>> level;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        level.insert({(1u << a) | (1u << b) | (1u << c), {Edge(a, b), Edge(a, c), Edge(b, c)}});
  for (std::size_t size = 3; size < n; ++size) {
    std::set<std::pair<std::uint32_t, std::vector<Edge>>> next;
    for (const auto& [mask, edges] : level)
      for (VertexId v = 0; v < n; ++v) {
        if (mask & (1u << v)) continue;
        for (const Edge& e : edges) {
          std::vector<Edge> grown = edges;
          grown.emplace_back(e.u, v);
          grown.emplace_back(e.v, v);
          std::sort(grown.begin(), grown.end());
          next.insert({mask | (1u << v), grown});
        }
      }
    level = std::move(next);
  }
  std::set<std::vector<Edge>> out;
  for (auto& [mask, edges] : level) out.insert(edges);
  return out;
}

inline std::size_t spanning_two_trees(const Graph& g) {
  const Matrix m = matrix(g);
  std::size_t count = 0;
  for (const auto& t : labeled_two_trees(g.order()))
    count += std::all_of(t.begin(), t.end(), [&](const Edge& e) { return m[e.u][e.v] != 0; });
  return count;
}

// Every subgraph has a vertex of degree <= k (all vertex subsets; n <= 12).
inline bool k_degenerate(const Matrix& m, std::size_t k) {
  const std::size_t n = m.size();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool low = false;
    for (VertexId v = 0; v < n && !low; ++v) {
      if (!(s & (1u << v))) continue;
      std::size_t d = 0;
      for (VertexId w = 0; w < n; ++w) d += (s & (1u << w)) && m[v][w];
      low = d <= k;
    }
    if (!low) return false;
  }
  return true;
}

inline bool maximal_k_degenerate(const Graph& g, std::size_t k) {
  Matrix m = matrix(g);
  if (!k_degenerate(m, k)) return false;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (m[u][v]) continue;
      m[u][v] = m[v][u] = 1;
      const bool still = k_degenerate(m, k);
      m[u][v] = m[v][u] = 0;
      if (still) return false;
    }
  return true;
}

// Smallest vertex set whose removal disconnects g (n - 1 if none).
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  const Matrix m = matrix(g);
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      std::vector<char> allowed(n);
      for (VertexId v = 0; v < n; ++v) allowed[v] = !pick[v];
      VertexId start = 0;
      while (!allowed[start]) ++start;
      const auto seen = reach(m, start, allowed);
      for (VertexId v = 0; v < n; ++v)
        if (allowed[v] && !seen[v]) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

// Some three edges whose removal leaves two components of >= 2 vertices.
inline bool nontrivial_3_edge_cut(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      for (std::size_t k = j + 1; k < edges.size(); ++k) {
        Matrix m = matrix(g);
        for (std::size_t e : {i, j, k}) m[edges[e].u][edges[e].v] = m[edges[e].v][edges[e].u] = 0;
        const std::vector<char> all(n, 1);
        const auto side = reach(m, 0, all);
        const std::size_t a = std::count(side.begin(), side.end(), 1);
        if (a == n || a < 2 || n - a < 2) continue;
        std::vector<char> rest(n);
        VertexId other = 0;
        for (VertexId v = 0; v < n; ++v) {
          rest[v] = !side[v];
          if (rest[v]) other = v;
        }
        const auto side2 = reach(m, other, rest);
        if (static_cast<std::size_t>(std::count(side2.begin(), side2.end(), 1)) == n - a) return true;
      }
  return false;
}

}  // namespace oracle
