#include "twotree/spanning.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "twotree/error.hpp"

namespace twotree {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g, const char* what) {
  if (g.order() > 64) throw Error(std::string(what) + " supports graphs of order at most 64");
  std::vector<Mask> nb(g.order(), 0);
  for (VertexId v = 0; v < g.order(); ++v)
    for (VertexId w : g.neighbors(v)) nb[v] |= bit(w);
  return nb;
}

class HamSearch {
 public:
  HamSearch(const Graph& g, std::span<const Edge> forced, bool undirected)
      : n_(g.order()), undirected_(undirected), nb_(adjacency_masks(g, "Hamiltonian search")), forced_(n_, 0) {
    for (const Edge& e : forced) {
      forced_[e.u] |= bit(e.v);
      forced_[e.v] |= bit(e.u);
    }
    all_ = n_ == 64 ? ~Mask{0} : bit(static_cast<VertexId>(n_)) - 1;
  }

  void run(const std::function<bool(const HamCycle&)>& visit) {
    visit_ = &visit;
    path_.assign(1, 0);
    stopped_ = false;
    if (n_ == 1) return;
    dfs(bit(0));
  }

 private:
  bool viable(Mask visited) const {
    const VertexId cur = path_.back();
    const Mask open = all_ & ~visited;
    const Mask ends = bit(cur) | bit(0);
    for (Mask m = open; m; m &= m - 1) {
      const VertexId w = static_cast<VertexId>(std::countr_zero(m));
      if (std::popcount(nb_[w] & (open | ends)) < 2) return false;
      // A forced edge into the visited interior can never be used.
      if (forced_[w] & visited & ~ends) return false;
    }
    if (!open) return true;
    if (!(nb_[0] & open) || !(nb_[cur] & open)) return false;
    Mask seen = nb_[cur] & open & -(nb_[cur] & open), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nb_[std::countr_zero(f)];
      next &= open & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == open;
  }

  void dfs(Mask visited) {
    const VertexId cur = path_.back();
    if (path_.size() == n_) {
      if (!(nb_[cur] & bit(0)) || n_ < 3) return;
      if (forced_[cur] & ~(bit(path_[path_.size() - 2]) | bit(0))) return;
      if (forced_[0] & ~(bit(path_[1]) | bit(cur))) return;
      if (undirected_ && path_[1] > cur) return;
      HamCycle c{path_};
      if (!(*visit_)(c)) stopped_ = true;
      return;
    }
    Mask options = nb_[cur] & ~visited;
    if (path_.size() == 1) {
      if (forced_[0]) options &= forced_[0] & -forced_[0];
    } else {
      const Mask req = forced_[cur] & ~bit(path_[path_.size() - 2]);
      if (std::popcount(req) > 1) return;
      if (req) {
        if (req & bit(0)) return;
        options &= req;
      }
    }
    for (Mask m = options; m && !stopped_; m &= m - 1) {
      const VertexId w = static_cast<VertexId>(std::countr_zero(m));
      path_.push_back(w);
      if (viable(visited | bit(w))) dfs(visited | bit(w));
      path_.pop_back();
    }
  }

  std::size_t n_;
  bool undirected_;
  std::vector<Mask> nb_, forced_;
  Mask all_ = 0;
  std::vector<VertexId> path_;
  const std::function<bool(const HamCycle&)>* visit_ = nullptr;
  bool stopped_ = false;
};

// Forced edges must form vertex-disjoint paths, or one Hamiltonian cycle.
bool forced_edges_feasible(std::size_t n, std::span<const Edge> forced) {
  std::vector<int> deg(n, 0);
  std::vector<VertexId> parent(n);
  for (VertexId v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t cycles = 0;
  for (const Edge& e : forced) {
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    const VertexId a = find(e.u), b = find(e.v);
    if (a == b)
      ++cycles;
    else
      parent[a] = b;
  }
  return cycles == 0 || (cycles == 1 && forced.size() == n);
}

}  // namespace

std::optional<HamCycle> find_hamiltonian_cycle(const Graph& g, std::span<const Edge> forced) {
  std::vector<Edge> unique(forced.begin(), forced.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (const Edge& e : unique)
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) throw Error("forced edge " + to_string(e) + " is not in the graph");
  if (g.order() < 3 || !forced_edges_feasible(g.order(), unique)) return std::nullopt;
  std::optional<HamCycle> found;
  HamSearch search(g, unique, false);
  search.run([&](const HamCycle& c) {
    found = c;
    return false;
  });
  return found;
}

void for_each_hamiltonian_cycle(const Graph& g, const std::function<bool(const HamCycle&)>& visit) {
  if (g.order() < 3) return;
  HamSearch search(g, {}, true);
  search.run(visit);
}

std::uint64_t count_hamiltonian_cycles(const Graph& g) {
  std::uint64_t count = 0;
  for_each_hamiltonian_cycle(g, [&](const HamCycle&) {
    ++count;
    return true;
  });
  return count;
}

LinearFlags linear_hamiltonian_check(const EmbeddedGraph& eg, const HamCycle& c) {
  if (!is_hamiltonian_cycle(eg.graph(), c)) throw Error("cycle is not Hamiltonian in the graph");
  const HamiltonianDual hd = hamiltonian_dual(eg, c);
  auto is_path = [](const InducedSubgraph& side) {
    std::vector<VertexId> all(side.graph.order());
    for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
    return classify_induced(side.graph, all) == InducedShape::Path;
  };
  return {is_path(hd.inside), is_path(hd.outside)};
}

std::optional<HamCycle> has_linear_hamiltonian_cycle(const EmbeddedGraph& eg) {
  std::optional<HamCycle> found;
  for_each_hamiltonian_cycle(eg.graph(), [&](const HamCycle& c) {
    const LinearFlags flags = linear_hamiltonian_check(eg, c);
    if (flags.inside || flags.outside) found = c;
    return !found;
  });
  return found;
}

TwoTreeSequence two_tree_from_ham_cycle(const EmbeddedGraph& eg, const HamCycle& c, int side) {
  if (side != 0 && side != 1) throw Error("side must be 0 or 1");
  if (!is_hamiltonian_cycle(eg.graph(), c)) throw Error("cycle is not Hamiltonian in the graph");
  if (!is_maximal_planar(eg)) throw Error("two_tree_from_ham_cycle needs a maximal planar embedding");
  const FaceSet fs(eg);
  const HamiltonianDual hd = hamiltonian_dual(eg, c);
  std::vector<Edge> edges = c.edges();
  for (const Edge& e : eg.graph().edges()) {
    if (c.contains(e)) continue;
    if (hd.side[fs.face_of(e.u, e.v)] == side) edges.push_back(e);
  }
  const Graph t = Graph::from_edges(eg.order(), edges);
  auto seq = recognize_k_tree(t, 2);
  if (!seq) throw InvariantViolation("cycle plus one side is not a 2-tree");
  return *seq;
}

namespace {

// Grows partial 2-trees T[P] from a start triangle. At each node one vertex v
// is chosen: either it attaches now to an edge of the current tree, or it is
// banned from every edge present now (its final attachment edge then has an
// endpoint outside the current vertex set).
class TwoTreeSearch {
 public:
  // Every triangle in `hit` must keep at least one edge in the tree.
  explicit TwoTreeSearch(const Graph& g, std::vector<std::array<VertexId, 3>> hit = {})
      : n_(g.order()), nb_(adjacency_masks(g, "spanning 2-tree search")), hit_(std::move(hit)), hit_at_(n_) {
    all_ = n_ == 64 ? ~Mask{0} : bit(static_cast<VertexId>(n_)) - 1;
    for (std::size_t i = 0; i < hit_.size(); ++i)
      for (VertexId x : hit_[i]) hit_at_[x].push_back(i);
  }

  struct State {
    Mask placed = 0;
    std::vector<Mask> tree;
    std::vector<Mask> ban;
  };

  State start(VertexId a, VertexId b, VertexId c) const {
    State s;
    s.tree.assign(n_, 0);
    s.ban.assign(n_, 0);
    s.placed = bit(a) | bit(b) | bit(c);
    s.tree[a] = bit(b) | bit(c);
    s.tree[b] = bit(a) | bit(c);
    s.tree[c] = bit(a) | bit(b);
    return s;
  }

  // visit(state, steps) is called on complete trees; return false to stop.
  bool dfs(State& s, std::vector<ConstructionStep>& steps, SpanningSearchStats& stats,
           const std::function<bool(const State&, const std::vector<ConstructionStep>&)>& visit) const {
    ++stats.nodes;
    if (s.placed == all_) return visit(s, steps);

    VertexId best = 0;
    int best_score = 1 << 30;
    std::vector<std::pair<VertexId, VertexId>> best_options;
    bool best_later = false;
    std::vector<std::pair<VertexId, VertexId>> options;
    for (Mask m = all_ & ~s.placed; m; m &= m - 1) {
      const VertexId v = static_cast<VertexId>(std::countr_zero(m));
      options.clear();
      const Mask cand = nb_[v] & s.placed;
      for (Mask mu = cand; mu; mu &= mu - 1) {
        const VertexId u = static_cast<VertexId>(std::countr_zero(mu));
        for (Mask mw = s.tree[u] & cand & ~((bit(u) << 1) - 1); mw; mw &= mw - 1) {
          const VertexId w = static_cast<VertexId>(std::countr_zero(mw));
          if ((s.ban[v] & bit(u)) && (s.ban[v] & bit(w))) continue;
          options.emplace_back(u, w);
        }
      }
      bool later = false;
      for (Mask mu = nb_[v] & ~s.placed; mu && !later; mu &= mu - 1)
        later = (nb_[std::countr_zero(mu)] & nb_[v]) != 0;
      const int score = static_cast<int>(options.size()) + (later ? 1 : 0);
      if (score == 0) {
        ++stats.prunes;
        return true;
      }
      if (!options.empty() && score < best_score) {
        best_score = score;
        best = v;
        best_options = options;
        best_later = later;
      }
    }
    if (best_options.empty()) {
      ++stats.prunes;
      return true;
    }

    const VertexId v = best;
    for (auto [u, w] : best_options) {
      s.placed |= bit(v);
      s.tree[v] = bit(u) | bit(w);
      s.tree[u] |= bit(v);
      s.tree[w] |= bit(v);
      steps.push_back({v, {u, w}});
      bool go_on = true;
      if (hits_ok(s, v))
        go_on = dfs(s, steps, stats, visit);
      else
        ++stats.prunes;
      steps.pop_back();
      s.tree[u] &= ~bit(v);
      s.tree[w] &= ~bit(v);
      s.tree[v] = 0;
      s.placed &= ~bit(v);
      if (!go_on) return false;
    }
    if (best_later) {
      const Mask old = s.ban[v];
      s.ban[v] = s.placed;
      const bool go_on = dfs(s, steps, stats, visit);
      s.ban[v] = old;
      if (!go_on) return false;
    }
    return true;
  }

  // Triangles through a minimum-degree vertex; every spanning 2-tree
  // contains one of them.
  std::vector<std::array<VertexId, 3>> start_triangles() const {
    VertexId s = 0;
    for (VertexId v = 1; v < n_; ++v)
      if (std::popcount(nb_[v]) < std::popcount(nb_[s])) s = v;
    std::vector<std::array<VertexId, 3>> out;
    for (Mask mu = nb_[s]; mu; mu &= mu - 1) {
      const VertexId u = static_cast<VertexId>(std::countr_zero(mu));
      for (Mask mw = nb_[s] & nb_[u] & ~((bit(u) << 1) - 1); mw; mw &= mw - 1)
        out.push_back({s, u, static_cast<VertexId>(std::countr_zero(mw))});
    }
    return out;
  }

  std::size_t order() const { return n_; }

 private:
  // Triangles at v whose vertices are all placed still have a tree edge.
  bool hits_ok(const State& s, VertexId v) const {
    for (std::size_t i : hit_at_[v]) {
      const auto& [a, b, c] = hit_[i];
      const Mask tri = bit(a) | bit(b) | bit(c);
      if ((s.placed & tri) != tri) continue;
      if (!(s.tree[a] & (bit(b) | bit(c))) && !(s.tree[b] & bit(c))) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> nb_;
  Mask all_ = 0;
  std::vector<std::array<VertexId, 3>> hit_;
  std::vector<std::vector<std::size_t>> hit_at_;
};

// Peels degree-3 vertices with a triangular neighborhood. G has a spanning
// 2-tree iff G - x has one using an edge of the triangle N(x): a tree leaf x
// is dropped, and a tree vertex x of degree 3 is contracted into a neighbor.
struct Reduction {
  Graph reduced;
  std::vector<VertexId> original;
  std::vector<std::array<VertexId, 3>> hit;
  // Peeled vertices and their triangles (original ids), in peeling order.
  std::vector<std::pair<VertexId, std::array<VertexId, 3>>> peeled;
};

Reduction peel_stacked(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> gone(n, 0), in_hit(n, 0);
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  Reduction r;
  std::size_t left = n;
  for (bool changed = true; changed && left > 3;) {
    changed = false;
    for (VertexId x = 0; x < n && left > 3; ++x) {
      if (gone[x] || in_hit[x] || deg[x] != 3) continue;
      std::array<VertexId, 3> t{};
      std::size_t k = 0;
      for (VertexId y : g.neighbors(x))
        if (!gone[y]) t[k++] = y;
      if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2])) continue;
      gone[x] = 1;
      --left;
      for (VertexId y : t) {
        --deg[y];
        in_hit[y] = 1;
      }
      r.peeled.emplace_back(x, t);
      changed = true;
    }
  }
  std::vector<VertexId> local(n, 0);
  for (VertexId v = 0; v < n; ++v)
    if (!gone[v]) {
      local[v] = static_cast<VertexId>(r.original.size());
      r.original.push_back(v);
    }
  r.reduced = induced(g, r.original).graph;
  for (const auto& [x, t] : r.peeled) r.hit.push_back({local[t[0]], local[t[1]], local[t[2]]});
  return r;
}

}  // namespace

SpanningSearchResult find_spanning_two_tree(const Graph& g, const SpanningSearchOptions& options) {
  if (g.order() < 3) throw Error("a spanning 2-tree needs order at least 3");
  Reduction red;
  if (options.peel) {
    red = peel_stacked(g);
  } else {
    red.reduced = g;
    for (VertexId v = 0; v < g.order(); ++v) red.original.push_back(v);
  }
  const TwoTreeSearch search(red.reduced, red.hit);
  const auto starts = search.start_triangles();
  SpanningSearchResult result;
  result.branches = starts.size();
  result.peeled = red.peeled.size();
  std::optional<TwoTreeSequence> local;
  for (std::size_t i = options.resume_from; i < starts.size() && !local; ++i) {
    const auto [a, b, c] = starts[i];
    auto state = search.start(a, b, c);
    std::vector<ConstructionStep> steps;
    search.dfs(state, steps, result.stats, [&](const TwoTreeSearch::State&, const std::vector<ConstructionStep>& st) {
      local = TwoTreeSequence{2, {a, b, c}, st};
      return false;
    });
    if (options.progress) options.progress(i + 1, starts.size());
  }
  if (local) {
    TwoTreeSequence seq{2, {}, {}};
    for (VertexId v : local->base) seq.base.push_back(red.original[v]);
    for (const auto& step : local->steps)
      seq.steps.push_back({red.original[step.vertex], {red.original[step.attach[0]], red.original[step.attach[1]]}});
    std::set<Edge> present;
    for (const Edge& e : seq.edges()) present.insert(e);
    for (auto it = red.peeled.rbegin(); it != red.peeled.rend(); ++it) {
      const auto& [x, t] = *it;
      const Edge sides[] = {Edge(t[0], t[1]), Edge(t[1], t[2]), Edge(t[0], t[2])};
      auto e = std::find_if(std::begin(sides), std::end(sides), [&](const Edge& s) { return present.count(s) > 0; });
      if (e == std::end(sides)) throw InvariantViolation("peeled vertex has no tree edge to attach to");
      seq.steps.push_back({x, {e->u, e->v}});
      present.insert(Edge(x, e->u));
      present.insert(Edge(x, e->v));
    }
    if (auto err = sequence_error(seq, &g)) throw InvariantViolation("spanning 2-tree search: " + *err);
    if (seq.order() != g.order()) throw InvariantViolation("spanning 2-tree search returned a partial tree");
    result.tree = std::move(seq);
  }
  return result;
}

std::vector<std::vector<Edge>> enumerate_spanning_two_trees(const Graph& g) {
  if (g.order() < 3) throw Error("a spanning 2-tree needs order at least 3");
  const TwoTreeSearch search(g);
  std::set<std::vector<Edge>> seen;
  SpanningSearchStats stats;
  for (const auto& [a, b, c] : search.start_triangles()) {
    auto state = search.start(a, b, c);
    std::vector<ConstructionStep> steps;
    search.dfs(state, steps, stats, [&](const TwoTreeSearch::State& s, const std::vector<ConstructionStep>&) {
      std::vector<Edge> edges;
      for (VertexId v = 0; v < g.order(); ++v)
        for (Mask m = s.tree[v] & ~((bit(v) << 1) - 1); m; m &= m - 1)
          edges.emplace_back(v, static_cast<VertexId>(std::countr_zero(m)));
      seen.insert(std::move(edges));
      return true;
    });
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::array<VertexId, 3>> separating_triangles(const Graph& g) {
  std::vector<std::array<VertexId, 3>> out;
  const std::size_t n = g.order();
  std::vector<char> removed(n, 0);
  std::vector<VertexId> stack;
  for (const Edge& e : g.edges())
    for (VertexId w : g.neighbors(e.v)) {
      if (w <= e.v || !g.adjacent(e.u, w)) continue;
      if (n <= 4) continue;
      removed.assign(n, 0);
      removed[e.u] = removed[e.v] = removed[w] = 1;
      VertexId root = 0;
      while (removed[root]) ++root;
      std::vector<char> seen(n, 0);
      seen[root] = 1;
      stack.assign(1, root);
      std::size_t reached = 1;
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : g.neighbors(x))
          if (!removed[y] && !seen[y]) {
            seen[y] = 1;
            ++reached;
            stack.push_back(y);
          }
      }
      if (reached != n - 3) out.push_back({e.u, e.v, w});
    }
  return out;
}

namespace {

// Vertex sets of the blocks, split recursively along separating triangles.
void split_blocks(const Graph& g, const std::vector<VertexId>& vertices, std::vector<std::vector<VertexId>>& out) {
  const InducedSubgraph sub = induced(g, vertices);
  const auto triangles = separating_triangles(sub.graph);
  if (triangles.empty()) {
    out.push_back(vertices);
    return;
  }
  const auto& t = triangles.front();
  const std::size_t n = sub.graph.order();
  std::vector<int> comp(n, -1);
  for (VertexId x : t) comp[x] = -2;
  int components = 0;
  for (VertexId r = 0; r < n; ++r) {
    if (comp[r] != -1) continue;
    std::vector<VertexId> stack{r};
    comp[r] = components;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : sub.graph.neighbors(x))
        if (comp[y] == -1) {
          comp[y] = components;
          stack.push_back(y);
        }
    }
    ++components;
  }
  for (int c = 0; c < components; ++c) {
    std::vector<VertexId> part;
    for (VertexId x = 0; x < n; ++x)
      if (comp[x] == c || comp[x] == -2) part.push_back(sub.original[x]);
    std::sort(part.begin(), part.end());
    split_blocks(g, part, out);
  }
}

bool contains_all(const std::vector<VertexId>& sorted, const std::vector<VertexId>& items) {
  return std::all_of(items.begin(), items.end(),
                     [&](VertexId x) { return std::binary_search(sorted.begin(), sorted.end(), x); });
}

}  // namespace

BlockTree four_block_tree(const EmbeddedGraph& eg) {
  if (!is_maximal_planar(eg)) throw Error("four_block_tree needs a maximal planar embedding");
  const Graph& g = eg.graph();
  std::vector<VertexId> all(g.order());
  for (VertexId v = 0; v < g.order(); ++v) all[v] = v;
  std::vector<std::vector<VertexId>> sets;
  split_blocks(g, all, sets);
  std::sort(sets.begin(), sets.end());

  // Each separating triangle lies in exactly two blocks; those are glued.
  std::vector<std::vector<std::pair<std::size_t, std::vector<VertexId>>>> adj(sets.size());
  for (const auto& t : separating_triangles(g)) {
    const std::vector<VertexId> tri(t.begin(), t.end());
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (contains_all(sets[i], tri)) holders.push_back(i);
    if (holders.size() != 2) throw InvariantViolation("separating triangle is not shared by exactly two blocks");
    adj[holders[0]].emplace_back(holders[1], tri);
    adj[holders[1]].emplace_back(holders[0], tri);
  }

  BlockTree tree;
  std::vector<int> index(sets.size(), -1);
  std::vector<std::size_t> queue{0};
  index[0] = 0;
  tree.blocks.push_back({sets[0], induced_embedding(eg, sets[0]).embedding, -1, {}});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t b = queue[head];
    auto links = adj[b];
    std::sort(links.begin(), links.end());
    for (const auto& [other, tri] : links) {
      if (index[other] != -1) continue;
      index[other] = static_cast<int>(tree.blocks.size());
      tree.blocks.push_back({sets[other], induced_embedding(eg, sets[other]).embedding, index[b], tri});
      queue.push_back(other);
    }
  }
  if (tree.blocks.size() != sets.size()) throw InvariantViolation("block tree is not connected");
  return tree;
}

namespace {

// Spanning 2-tree of a 4-connected block containing all of `tri` (local ids),
// rerooted at tri.
TwoTreeSequence block_two_tree(const EmbeddedGraph& block, const std::vector<VertexId>& tri) {
  const Graph& g = block.graph();
  const Edge ab(tri[0], tri[1]), bc(tri[1], tri[2]), ca(tri[0], tri[2]);
  const Edge forced[] = {ab, bc};
  auto cycle = find_hamiltonian_cycle(g, forced);
  if (!cycle) throw InvariantViolation("no Hamiltonian cycle through two edges of a face in a 4-connected block");
  const FaceSet fs(block);
  const HamiltonianDual hd = hamiltonian_dual(block, *cycle);
  const int side = hd.side[fs.face_of(ca.u, ca.v)];
  const Graph t = Graph::from_edges(g.order(), two_tree_from_ham_cycle(block, *cycle, side).edges());
  return reroot_two_tree(t, tri);
}

}  // namespace

MaxDegenerateResult spanning_max_2_degenerate(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  if (g.order() < 3) throw Error("spanning_max_2_degenerate needs order at least 3");
  if (!is_maximal_planar(eg)) throw Error("spanning_max_2_degenerate needs a maximal planar embedding");
  std::vector<Edge> edges;
  if (g.order() == 3) {
    edges = g.edges();
  } else {
    const BlockTree tree = four_block_tree(eg);
    for (const FourBlock& block : tree.blocks) {
      const auto& ids = block.vertices;
      auto local = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
      };
      if (block.parent < 0) {
        if (ids.size() == 4) {
          for (const Edge& e : induced(g, ids).graph.edges())
            if (e != Edge(2, 3)) edges.emplace_back(ids[e.u], ids[e.v]);
          continue;
        }
        auto cycle = find_hamiltonian_cycle(block.embedding.graph());
        if (!cycle) throw InvariantViolation("4-connected block without a Hamiltonian cycle");
        for (const Edge& e : two_tree_from_ham_cycle(block.embedding, *cycle, 0).edges())
          edges.emplace_back(ids[e.u], ids[e.v]);
        continue;
      }
      const std::vector<VertexId> tri{local(block.gluing[0]), local(block.gluing[1]), local(block.gluing[2])};
      if (ids.size() == 4) {
        VertexId x = 0;
        while (std::find(tri.begin(), tri.end(), x) != tri.end()) ++x;
        edges.emplace_back(ids[x], ids[tri[0]]);
        edges.emplace_back(ids[x], ids[tri[1]]);
        continue;
      }
      for (const ConstructionStep& step : block_two_tree(block.embedding, tri).steps)
        for (VertexId a : step.attach) edges.emplace_back(ids[step.vertex], ids[a]);
    }
  }
  std::sort(edges.begin(), edges.end());
  MaxDegenerateResult result{Graph::from_edges(g.order(), edges), {}};
  auto witness = is_maximal_k_degenerate(result.subgraph, 2);
  if (!witness || result.subgraph.size() != 2 * g.order() - 3)
    throw InvariantViolation("block construction did not give a maximal 2-degenerate subgraph");
  result.witness = *witness;
  return result;
}

}  // namespace twotree
