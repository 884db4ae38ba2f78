#include "twotree/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace twotree {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adj(order);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
    if (e.u >= order || e.v >= order) throw Error("edge " + to_string(e) + " out of range");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
  Graph g;
  const std::size_t n = adjacency.size();
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw Error("repeated edge at vertex " + std::to_string(v));
    for (VertexId w : list) {
      if (w >= n) throw Error("neighbor " + std::to_string(w) + " out of range");
      if (w == v) throw Error("loop at vertex " + std::to_string(v));
    }
    degree_sum += list.size();
  }
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : adjacency[v])
      if (!std::binary_search(adjacency[w].begin(), adjacency[w].end(), static_cast<VertexId>(v)))
        throw Error("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(w));
  g.adjacency_ = std::move(adjacency);
  g.size_ = degree_sum / 2;
  return g;
}

std::size_t Graph::min_degree() const {
  std::size_t d = order() == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& list : adjacency_) d = std::min(d, list.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adjacency_) d = std::max(d, list.size());
  return d;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::ptrdiff_t Graph::edge_index(const Edge& e) const {
  if (!adjacent(e.u, e.v)) return -1;
  std::ptrdiff_t index = 0;
  for (VertexId u = 0; u < e.u; ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) ++index;
  for (VertexId v : adjacency_[e.u]) {
    if (v == e.v) return index;
    if (v > e.u) ++index;
  }
  return -1;
}

bool Graph::is_connected() const {
  const std::size_t n = order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  if (perm.size() != order()) throw Error("relabeling has wrong length");
  std::vector<std::vector<VertexId>> adj(order());
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : adjacency_[u]) adj[perm[u]].push_back(perm[v]);
  return from_adjacency(std::move(adj));
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> kept = edges();
  for (const Edge& e : removed) {
    auto it = std::lower_bound(kept.begin(), kept.end(), e);
    if (it == kept.end() || *it != e) throw Error("edge " + to_string(e) + " not in graph");
    kept.erase(it);
  }
  return from_edges(order(), kept);
}

InducedSubgraph induced(const Graph& g, std::span<const VertexId> vertices) {
  InducedSubgraph out;
  std::vector<std::int64_t> index(g.order(), -1);
  for (VertexId v : vertices) {
    if (v >= g.order()) throw Error("vertex " + std::to_string(v) + " out of range");
    if (index[v] >= 0) continue;
    index[v] = static_cast<std::int64_t>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<std::vector<VertexId>> adj(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (VertexId w : g.neighbors(out.original[i]))
      if (index[w] >= 0) adj[i].push_back(static_cast<VertexId>(index[w]));
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

std::string to_string(InducedShape shape) {
  switch (shape) {
    case InducedShape::Empty: return "empty";
    case InducedShape::Path: return "path";
    case InducedShape::TreeNotPath: return "tree";
    case InducedShape::CycleContaining: return "cycle";
    case InducedShape::Disconnected: return "disconnected";
  }
  return "?";
}

InducedShape classify_induced(const Graph& g, std::span<const VertexId> vertices) {
  const InducedSubgraph sub = induced(g, vertices);
  const Graph& h = sub.graph;
  if (h.order() == 0) return InducedShape::Empty;
  if (!h.is_connected()) return InducedShape::Disconnected;
  if (h.size() != h.order() - 1) return InducedShape::CycleContaining;
  return h.max_degree() <= 2 ? InducedShape::Path : InducedShape::TreeNotPath;
}

bool is_cubic(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph, stopping at `limit`.
class VertexDisjointPaths {
 public:
  explicit VertexDisjointPaths(const Graph& g) : n_(g.order()), head_(2 * g.order(), -1) {
    for (VertexId v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
    for (const Edge& e : g.edges()) {
      add_arc(out(e.u), in(e.v), 1);
      add_arc(out(e.v), in(e.u), 1);
    }
  }

  std::size_t count(VertexId s, VertexId t, std::size_t limit) {
    for (auto& a : arcs_) a.flow = 0;
    std::size_t flow = 0;
    const std::size_t source = out(s), sink = in(t);
    std::vector<std::int64_t> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<std::size_t> q;
      q.push(source);
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        std::size_t x = q.front();
        q.pop();
        for (std::int64_t a = head_[x]; a >= 0; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.flow < arc.cap && via[arc.to] == -1) {
            via[arc.to] = a;
            q.push(arc.to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (std::size_t x = sink; x != source;) {
        std::int64_t a = via[x];
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int flow;
    std::int64_t next;
  };

  std::size_t in(VertexId v) const { return 2 * v; }
  std::size_t out(VertexId v) const { return 2 * v + 1; }

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, cap, 0, head_[from]});
    head_[from] = static_cast<std::int64_t>(arcs_.size() - 1);
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<std::int64_t>(arcs_.size() - 1);
  }

  std::size_t n_;
  std::vector<std::int64_t> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  std::size_t best = n - 1;
  VertexDisjointPaths paths(g);
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, paths.count(s, t, best));
    }
  return best;
}

bool has_nontrivial_3_edge_cut(const Graph& g) {
  if (!is_cubic(g)) throw Error("3-edge-cut check requires a cubic graph");
  const std::size_t n = g.order();
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<VertexId> parent(n);
  std::vector<std::size_t> comp_size(n);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t e = 0; e < m; ++e) {
          if (e == i || e == j || e == k) continue;
          VertexId a = find(edges[e].u), b = find(edges[e].v);
          if (a != b) parent[a] = b;
        }
        std::fill(comp_size.begin(), comp_size.end(), 0);
        for (VertexId v = 0; v < n; ++v) ++comp_size[find(v)];
        for (VertexId v = 0; v < n; ++v)
          if (comp_size[v] >= 2 && comp_size[v] + 2 <= n) return true;
      }
  return false;
}

namespace {

// Individualization-refinement canonical labeling. Colors are cell start
// indices in the ordered partition, so they are isomorphism invariant.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    std::vector<VertexId> colors(n_, 0);
    {
      std::vector<VertexId> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::vector<std::size_t> deg(n_);
      for (VertexId v = 0; v < n_; ++v) deg[v] = g_.degree(v);
      std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return deg[a] < deg[b]; });
      for (std::size_t i = 0; i < n_; ++i) {
        VertexId v = order[i];
        colors[v] = (i > 0 && deg[order[i - 1]] == deg[v]) ? colors[order[i - 1]] : static_cast<VertexId>(i);
      }
    }
    refine(colors);
    std::vector<VertexId> prefix;
    search(colors, prefix);
    CanonicalLabeling out;
    out.form.order = n_;
    out.form.edges = best_edges_;
    out.labeling = best_labeling_;
    return out;
  }

 private:
  void refine(std::vector<VertexId>& colors) const {
    std::vector<std::pair<VertexId, std::vector<VertexId>>> sig(n_);
    std::vector<VertexId> order(n_);
    std::size_t cells = count_cells(colors);
    while (true) {
      for (VertexId v = 0; v < n_; ++v) {
        sig[v].first = colors[v];
        sig[v].second.clear();
        for (VertexId w : g_.neighbors(v)) sig[v].second.push_back(colors[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return sig[a] < sig[b]; });
      for (std::size_t i = 0; i < n_; ++i) {
        VertexId v = order[i];
        colors[v] = (i > 0 && sig[order[i - 1]] == sig[v]) ? colors[order[i - 1]] : static_cast<VertexId>(i);
      }
      std::size_t now = count_cells(colors);
      if (now == cells) return;
      cells = now;
    }
  }

  std::size_t count_cells(const std::vector<VertexId>& colors) const {
    std::vector<char> used(n_ + 1, 0);
    std::size_t count = 0;
    for (VertexId c : colors)
      if (!used[c]) {
        used[c] = 1;
        ++count;
      }
    return count;
  }

  std::vector<Edge> relabel(const std::vector<VertexId>& lab) const {
    std::vector<Edge> out;
    out.reserve(g_.size());
    for (const Edge& e : g_.edges()) out.emplace_back(lab[e.u], lab[e.v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void search(const std::vector<VertexId>& colors, std::vector<VertexId>& prefix) {
    // Target cell: the non-singleton cell with the smallest color.
    std::vector<std::size_t> cell_size(n_, 0);
    for (VertexId c : colors) ++cell_size[c];
    VertexId target = static_cast<VertexId>(n_);
    for (VertexId c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target == n_) {
      leaf(colors);
      return;
    }
    std::vector<VertexId> cell;
    for (VertexId v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<VertexId> explored;
    for (VertexId v : cell) {
      if (equivalent_to_explored(v, explored, prefix)) continue;
      std::vector<VertexId> child = colors;
      for (VertexId u : cell)
        if (u != v) child[u] = target + 1;
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  // True when some stored automorphism fixing `prefix` pointwise links v to
  // an explored sibling (via the orbit partition of the group they generate).
  bool equivalent_to_explored(VertexId v, const std::vector<VertexId>& explored,
                              const std::vector<VertexId>& prefix) const {
    if (explored.empty()) return false;
    std::vector<VertexId> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](VertexId p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (VertexId x = 0; x < n_; ++x) {
        VertexId a = find(x), b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    for (VertexId e : explored)
      if (find(e) == find(v)) return true;
    return false;
  }

  void leaf(const std::vector<VertexId>& lab) {
    std::vector<Edge> edges = relabel(lab);
    if (best_labeling_.empty() || edges < best_edges_) {
      best_edges_ = std::move(edges);
      best_labeling_ = lab;
      return;
    }
    if (edges == best_edges_) {
      std::vector<VertexId> inverse_best(n_);
      for (VertexId v = 0; v < n_; ++v) inverse_best[best_labeling_[v]] = v;
      std::vector<VertexId> gamma(n_);
      for (VertexId v = 0; v < n_; ++v) gamma[v] = inverse_best[lab[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Edge> best_edges_;
  std::vector<VertexId> best_labeling_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::size_t hash_value(const CanonicalForm& form) {
  std::size_t h = std::hash<std::size_t>{}(form.order);
  for (const Edge& e : form.edges) {
    std::size_t x = (static_cast<std::size_t>(e.u) << 32) ^ e.v;
    h ^= std::hash<std::size_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  const std::size_t len = vertices.size();
  for (std::size_t i = 0; i < len; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % len]);
  return out;
}

bool HamCycle::contains(const Edge& e) const {
  const std::size_t len = vertices.size();
  for (std::size_t i = 0; i < len; ++i)
    if (Edge(vertices[i], vertices[(i + 1) % len]) == e) return true;
  return false;
}

bool is_hamiltonian_cycle(const Graph& g, const HamCycle& c) {
  const std::size_t n = g.order();
  if (n < 3 || c.vertices.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (VertexId v : c.vertices) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (const Edge& e : c.edges())
    if (!g.adjacent(e.u, e.v)) return false;
  return true;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

}  // namespace twotree
