#include "twotree/partition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "twotree/error.hpp"

namespace twotree {

std::string to_string(Shape s) { return s == Shape::Path ? "path" : "tree"; }

Shape parse_shape(const std::string& text) {
  if (text == "path" || text == "PATH") return Shape::Path;
  if (text == "tree" || text == "TREE") return Shape::Tree;
  throw Error("unknown shape '" + text + "' (expected path or tree)");
}

std::string to_string(UnsatReason r) {
  switch (r) {
    case UnsatReason::None: return "none";
    case UnsatReason::OddOrder: return "odd-order";
    case UnsatReason::Disconnected: return "disconnected";
    case UnsatReason::Exhausted: return "exhausted";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

void check_constraint_edges(const Graph& g, const PartitionSpec& spec) {
  for (const auto* list : {&spec.required_internal, &spec.required_crossing})
    for (const Edge& e : *list)
      if (e.v >= g.order() || !g.adjacent(e.u, e.v)) throw Error("constraint edge " + to_string(e) + " is not in the graph");
}

class Search {
 public:
  Search(const Graph& g, const PartitionSpec& spec) : n_(g.order()), spec_(spec) {
    nbr_.assign(n_, 0);
    for (VertexId v = 0; v < n_; ++v)
      for (VertexId w : g.neighbors(v)) nbr_[v] |= bit(w);
    all_ = n_ == 64 ? ~Mask{0} : bit(static_cast<VertexId>(n_)) - 1;
    cap_ = is_cubic(g) ? n_ / 2 : n_;
    symmetric_ = spec.left == spec.right;
    same_.assign(n_, 0);
    cross_.assign(n_, 0);
    for (const Edge& e : spec.required_internal) {
      same_[e.u] |= bit(e.v);
      same_[e.v] |= bit(e.u);
    }
    for (const Edge& e : spec.required_crossing) {
      cross_[e.u] |= bit(e.v);
      cross_[e.v] |= bit(e.u);
    }
  }

  struct Node {
    std::size_t depth;
    Mask side[2];
  };

  // Depth-first from `start`; true when a leaf is reached.
  bool run(Node start, const std::atomic<bool>* stop, SearchStats& stats, Node& found) const {
    return dfs(start, stop, stats, found);
  }

  // All consistent nodes at the given depth, in search order.
  std::vector<Node> frontier(std::size_t depth, SearchStats& stats) const {
    std::vector<Node> out;
    collect(Node{0, {0, 0}}, depth, stats, out);
    return out;
  }

  std::size_t order() const { return n_; }

  PartitionCertificate certificate(const Node& node) const {
    PartitionCertificate c;
    c.left_shape = spec_.left;
    c.right_shape = spec_.right;
    for (VertexId v = 0; v < n_; ++v) (node.side[0] & bit(v) ? c.left : c.right).push_back(v);
    return c;
  }

 private:
  Shape shape(int s) const { return s == 0 ? spec_.left : spec_.right; }

  Mask closure(Mask from, Mask within) const {
    Mask seen = from, frontier = from;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr_[std::countr_zero(f)];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Adding v (already in node.side[s]) keeps everything consistent.
  bool consistent(const Node& node, VertexId v, int s) const {
    const Mask mine = node.side[s];
    const Mask before = mine & ~bit(v);
    const Mask unassigned = all_ & ~(node.side[0] | node.side[1]);

    if (static_cast<std::size_t>(std::popcount(mine)) > cap_) return false;
    if ((same_[v] & node.side[1 - s]) || (cross_[v] & mine)) return false;

    const Mask inner = nbr_[v] & before;
    if (shape(s) == Shape::Path) {
      if (std::popcount(inner) > 2) return false;
      for (Mask m = inner; m; m &= m - 1)
        if (std::popcount(nbr_[std::countr_zero(m)] & mine) > 2) return false;
    }
    if (std::popcount(inner) >= 2) {
      Mask seen = 0;
      for (Mask m = inner; m; m &= m - 1) {
        const Mask x = m & -m;
        if (seen & x) return false;
        seen |= closure(x, before);
      }
    }

    for (int t = 0; t < 2; ++t) {
      const Mask part = node.side[t];
      if (!part) continue;
      const Mask reach = closure(part & -part, part | unassigned);
      if ((reach & part) != part) return false;
      if (cap_ < n_ && static_cast<std::size_t>(std::popcount(reach)) < cap_) return false;
      const std::size_t target = cap_ < n_ ? cap_ : 0;
      int ends = 0;
      for (Mask m = part; m; m &= m - 1) {
        const VertexId x = static_cast<VertexId>(std::countr_zero(m));
        if (nbr_[x] & unassigned) continue;
        const int d = std::popcount(nbr_[x] & part);
        if (d == 0 && target > 1) return false;
        if (shape(t) == Shape::Path && d <= 1) ends += d == 0 ? 2 : 1;
      }
      if (ends > 2) return false;
    }
    return true;
  }

  bool leaf_ok(const Node& node) const {
    for (int t = 0; t < 2; ++t) {
      const Mask part = node.side[t];
      if (!part) return false;
      if (closure(part & -part, part) != part) return false;
    }
    if (cap_ < n_ && (node.side[0] == 0 || node.side[1] == 0)) return false;
    return true;
  }

  bool allowed(const Node& node, int s) const {
    return !(node.depth == 0 && symmetric_ && s == 1);
  }

  bool dfs(const Node& node, const std::atomic<bool>* stop, SearchStats& stats, Node& found) const {
    ++stats.nodes;
    if (stop && (stats.nodes & 1023) == 0 && stop->load(std::memory_order_relaxed)) return false;
    if (node.depth == n_) {
      if (leaf_ok(node)) {
        found = node;
        return true;
      }
      ++stats.prunes;
      return false;
    }
    const VertexId v = static_cast<VertexId>(node.depth);
    for (int s = 0; s < 2; ++s) {
      if (!allowed(node, s)) continue;
      Node child = node;
      child.depth++;
      child.side[s] |= bit(v);
      if (!consistent(child, v, s)) {
        ++stats.prunes;
        continue;
      }
      if (dfs(child, stop, stats, found)) return true;
    }
    return false;
  }

  void collect(const Node& node, std::size_t depth, SearchStats& stats, std::vector<Node>& out) const {
    ++stats.nodes;
    if (node.depth == depth || node.depth == n_) {
      out.push_back(node);
      return;
    }
    const VertexId v = static_cast<VertexId>(node.depth);
    for (int s = 0; s < 2; ++s) {
      if (!allowed(node, s)) continue;
      Node child = node;
      child.depth++;
      child.side[s] |= bit(v);
      if (!consistent(child, v, s)) {
        ++stats.prunes;
        continue;
      }
      collect(child, depth, stats, out);
    }
  }

  std::size_t n_;
  const PartitionSpec& spec_;
  std::vector<Mask> nbr_, same_, cross_;
  Mask all_ = 0;
  std::size_t cap_ = 0;
  bool symmetric_ = false;
};

}  // namespace

PartitionResult find_partition(const Graph& g, const PartitionSpec& spec, const PartitionOptions& options) {
  check_constraint_edges(g, spec);
  if (g.order() > 64) throw Error("find_partition supports graphs of order at most 64");
  PartitionResult result;
  if (g.order() < 2) {
    result.reason = UnsatReason::Exhausted;
    return result;
  }
  if (is_cubic(g) && g.order() % 2 == 1) {
    result.reason = UnsatReason::OddOrder;
    return result;
  }
  if (!g.is_connected()) {
    result.reason = UnsatReason::Disconnected;
    return result;
  }

  const Search search(g, spec);
  Search::Node found{};
  bool sat = false;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    sat = search.run(Search::Node{0, {0, 0}}, nullptr, result.stats, found);
  } else {
    const auto work = search.frontier(std::min<std::size_t>(g.order(), 12), result.stats);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex lock;
    auto worker = [&] {
      SearchStats local;
      Search::Node hit{};
      for (std::size_t i; !stop.load() && (i = next.fetch_add(1)) < work.size();) {
        if (search.run(work[i], &stop, local, hit)) {
          std::lock_guard guard(lock);
          if (!sat) {
            sat = true;
            found = hit;
          }
          stop.store(true);
        }
      }
      std::lock_guard guard(lock);
      result.stats.nodes += local.nodes;
      result.stats.prunes += local.prunes;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (sat) {
    result.certificate = search.certificate(found);
    if (!verify_certificate(g, *result.certificate, spec))
      throw InvariantViolation("partition search produced an invalid certificate");
  } else {
    result.reason = UnsatReason::Exhausted;
  }
  return result;
}

bool verify_certificate(const Graph& g, const PartitionCertificate& cert, const PartitionSpec& spec) {
  if (cert.left_shape != spec.left || cert.right_shape != spec.right) return false;
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < 2; ++s)
    for (VertexId v : s == 0 ? cert.left : cert.right) {
      if (v >= n || side[v] != -1) return false;
      side[v] = s;
    }
  if (std::count(side.begin(), side.end(), -1) != 0) return false;

  auto matches = [&](std::span<const VertexId> part, Shape shape) {
    const InducedShape got = classify_induced(g, part);
    return got == InducedShape::Path || (shape == Shape::Tree && got == InducedShape::TreeNotPath);
  };
  if (!matches(cert.left, spec.left) || !matches(cert.right, spec.right)) return false;

  for (const Edge& e : spec.required_internal)
    if (e.v >= n || !g.adjacent(e.u, e.v) || side[e.u] != side[e.v]) return false;
  for (const Edge& e : spec.required_crossing)
    if (e.v >= n || !g.adjacent(e.u, e.v) || side[e.u] == side[e.v]) return false;
  return true;
}

namespace {

// Shape test on a bitmask, written without the search machinery.
bool mask_has_shape(const std::vector<std::uint32_t>& nbr, std::uint32_t part, Shape shape) {
  if (!part) return false;
  int edges2 = 0, maxdeg = 0;
  for (std::uint32_t m = part; m; m &= m - 1) {
    const int d = std::popcount(nbr[std::countr_zero(m)] & part);
    edges2 += d;
    maxdeg = std::max(maxdeg, d);
  }
  if (edges2 / 2 != std::popcount(part) - 1) return false;
  std::uint32_t seen = part & -part;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t m = seen; m; m &= m - 1) {
      const std::uint32_t more = nbr[std::countr_zero(m)] & part & ~seen;
      if (more) {
        seen |= more;
        grew = true;
      }
    }
  }
  if (seen != part) return false;
  return shape == Shape::Tree || maxdeg <= 2;
}

}  // namespace

std::optional<PartitionCertificate> oracle_find_partition(const Graph& g, const PartitionSpec& spec) {
  check_constraint_edges(g, spec);
  const std::size_t n = g.order();
  if (n > 26) throw Error("oracle_find_partition supports graphs of order at most 26");
  if (n < 2) return std::nullopt;
  std::vector<std::uint32_t> nbr(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) nbr[v] |= 1u << w;
  const std::uint32_t all = (1u << n) - 1;

  auto accept = [&](std::uint32_t left) -> std::optional<PartitionCertificate> {
    const std::uint32_t right = all & ~left;
    for (const Edge& e : spec.required_internal)
      if (((left >> e.u) & 1) != ((left >> e.v) & 1)) return std::nullopt;
    for (const Edge& e : spec.required_crossing)
      if (((left >> e.u) & 1) == ((left >> e.v) & 1)) return std::nullopt;
    if (!mask_has_shape(nbr, left, spec.left) || !mask_has_shape(nbr, right, spec.right)) return std::nullopt;
    PartitionCertificate c;
    c.left_shape = spec.left;
    c.right_shape = spec.right;
    for (VertexId v = 0; v < n; ++v) ((left >> v) & 1 ? c.left : c.right).push_back(v);
    return c;
  };

  if (is_cubic(g)) {
    if (n % 2) return std::nullopt;
    // Gosper's hack over all n/2-subsets.
    std::uint32_t s = (1u << (n / 2)) - 1;
    while (s <= all) {
      if (auto c = accept(s)) return c;
      const std::uint32_t low = s & -s, ripple = s + low;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    return std::nullopt;
  }
  for (std::uint32_t s = 1; s < all; ++s)
    if (auto c = accept(s)) return c;
  return std::nullopt;
}

}  // namespace twotree
