#include "twotree/ktree.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace twotree {

std::vector<Edge> KTreeSequence::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) out.emplace_back(base[i], base[j]);
  for (const auto& step : steps)
    for (VertexId w : step.attach) out.emplace_back(step.vertex, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> sequence_error(const KTreeSequence& seq, const Graph* host) {
  if (seq.base.size() != seq.k && seq.base.size() != seq.k + 1) return "base must have k or k+1 vertices";
  std::set<VertexId> present;
  std::set<Edge> realized;
  for (VertexId v : seq.base)
    if (!present.insert(v).second) return "base vertex " + std::to_string(v) + " repeated";
  for (std::size_t i = 0; i < seq.base.size(); ++i)
    for (std::size_t j = i + 1; j < seq.base.size(); ++j) realized.emplace(seq.base[i], seq.base[j]);
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    const auto& step = seq.steps[s];
    const std::string where = "step " + std::to_string(s) + ": ";
    if (present.count(step.vertex)) return where + "vertex " + std::to_string(step.vertex) + " already present";
    if (step.attach.size() != seq.k) return where + "attachment does not have k vertices";
    for (std::size_t i = 0; i < step.attach.size(); ++i) {
      if (!present.count(step.attach[i])) return where + "attachment vertex " + std::to_string(step.attach[i]) + " absent";
      for (std::size_t j = i + 1; j < step.attach.size(); ++j) {
        if (step.attach[i] == step.attach[j]) return where + "attachment repeats a vertex";
        if (!realized.count(Edge(step.attach[i], step.attach[j])))
          return where + "attachment " + to_string(Edge(step.attach[i], step.attach[j])) + " is not an existing edge";
      }
    }
    for (VertexId w : step.attach) realized.emplace(step.vertex, w);
    present.insert(step.vertex);
  }
  if (host) {
    for (VertexId v : present)
      if (v >= host->order()) return "vertex " + std::to_string(v) + " not in host graph";
    for (const Edge& e : realized)
      if (!host->adjacent(e.u, e.v)) return "edge " + to_string(e) + " not in host graph";
  }
  return std::nullopt;
}

Graph realize(const KTreeSequence& seq) {
  if (auto err = sequence_error(seq)) throw Error("invalid construction sequence: " + *err);
  const std::size_t n = seq.order();
  std::vector<char> seen(n, 0);
  auto mark = [&](VertexId v) {
    if (v >= n) throw Error("sequence vertex ids must be 0..order-1");
    seen[v] = 1;
  };
  for (VertexId v : seq.base) mark(v);
  for (const auto& step : seq.steps) mark(step.vertex);
  return Graph::from_edges(n, seq.edges());
}

std::optional<KTreeSequence> recognize_k_tree(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k == 0 || n < k) return std::nullopt;
  std::vector<std::set<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> removed(n, 0);
  std::vector<ConstructionStep> stripped;
  std::size_t remaining = n;
  while (remaining > k) {
    bool found = false;
    for (VertexId v = 0; v < n && !found; ++v) {
      if (removed[v] || adj[v].size() != k) continue;
      std::vector<VertexId> nb(adj[v].begin(), adj[v].end());
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = adj[nb[i]].count(nb[j]) > 0;
      if (!clique) continue;
      for (VertexId w : nb) adj[w].erase(v);
      adj[v].clear();
      removed[v] = 1;
      --remaining;
      stripped.push_back({v, nb});
      found = true;
    }
    if (!found) return std::nullopt;
  }
  KTreeSequence seq;
  seq.k = k;
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) seq.base.push_back(v);
  for (std::size_t i = 0; i < seq.base.size(); ++i)
    for (std::size_t j = i + 1; j < seq.base.size(); ++j)
      if (!adj[seq.base[i]].count(seq.base[j])) return std::nullopt;
  seq.steps.assign(stripped.rbegin(), stripped.rend());
  return seq;
}

TwoTreeSequence reroot_two_tree(const Graph& t, std::span<const VertexId> triangle) {
  if (triangle.size() != 3) throw Error("a triangle has three vertices");
  const VertexId a = triangle[0], b = triangle[1], c = triangle[2];
  if (!t.adjacent(a, b) || !t.adjacent(b, c) || !t.adjacent(a, c)) throw Error("triangle not contained in the 2-tree");
  if (!recognize_k_tree(t, 2)) throw Error("graph is not a 2-tree");
  const std::size_t n = t.order();
  TwoTreeSequence seq;
  seq.k = 2;
  seq.base = {a, b, c};
  std::vector<char> in(n, 0);
  in[a] = in[b] = in[c] = 1;
  std::size_t placed = 3;
  while (placed < n) {
    bool found = false;
    for (VertexId v = 0; v < n && !found; ++v) {
      if (in[v]) continue;
      std::vector<VertexId> inside;
      for (VertexId w : t.neighbors(v))
        if (in[w]) inside.push_back(w);
      if (inside.size() != 2 || !t.adjacent(inside[0], inside[1])) continue;
      seq.steps.push_back({v, inside});
      in[v] = 1;
      ++placed;
      found = true;
    }
    if (!found) throw InvariantViolation("2-tree cannot be grown from the given triangle");
  }
  if (seq.edges() != t.edges()) throw InvariantViolation("rerooted sequence does not realize the 2-tree");
  return seq;
}

std::optional<DegeneracyWitness> degeneracy_order(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> gone(n, 0);
  DegeneracyWitness w;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    std::size_t best_deg = static_cast<std::size_t>(-1);
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    if (best_deg > k) return std::nullopt;
    gone[best] = 1;
    w.deletion_order.push_back(best);
    w.degree_at_deletion.push_back(best_deg);
    for (VertexId x : g.neighbors(best))
      if (!gone[x]) --deg[x];
  }
  return w;
}

bool check_degeneracy_witness(const Graph& g, std::size_t k, const DegeneracyWitness& w) {
  const std::size_t n = g.order();
  if (w.deletion_order.size() != n || w.degree_at_deletion.size() != n) return false;
  std::vector<char> gone(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = w.deletion_order[i];
    if (v >= n || gone[v]) return false;
    std::size_t d = 0;
    for (VertexId x : g.neighbors(v))
      if (!gone[x]) ++d;
    if (d != w.degree_at_deletion[i] || d > k) return false;
    gone[v] = 1;
  }
  return true;
}

std::optional<DegeneracyWitness> is_maximal_k_degenerate(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (n < k) return std::nullopt;
  if (g.size() + k * (k + 1) / 2 != k * n) return std::nullopt;
  return degeneracy_order(g, k);
}

}  // namespace twotree
