#pragma once

// Simple undirected graphs over dense integer vertex ids.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twotree/error.hpp"

namespace twotree {

using VertexId = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Immutable simple graph. Adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws Error on loops, repeated edges or out-of-range endpoints.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return size_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool adjacent(VertexId u, VertexId v) const;

  // Sorted edge list.
  std::vector<Edge> edges() const;

  // Index of e in edges(), or -1 when absent.
  std::ptrdiff_t edge_index(const Edge& e) const;

  bool is_connected() const;

  // Graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const VertexId> perm) const;

  // Graph with the given edges removed (edges must exist).
  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t size_ = 0;
};

// Vertex set -> induced subgraph; original[i] is the id in the parent graph of
// vertex i of the subgraph.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> original;
};

InducedSubgraph induced(const Graph& g, std::span<const VertexId> vertices);

enum class InducedShape { Empty, Path, TreeNotPath, CycleContaining, Disconnected };

std::string to_string(InducedShape shape);

// A single vertex is a path. A disconnected set that also has a cycle is
// reported as Disconnected.
InducedShape classify_induced(const Graph& g, std::span<const VertexId> vertices);

bool is_cubic(const Graph& g);

// Exact minimum vertex cut size; n - 1 for complete graphs, 0 when
// disconnected.
std::size_t vertex_connectivity(const Graph& g);

// Removes every triple of edges and looks for a disconnection leaving a
// component C with 2 <= |C| <= n - 2. Throws Error for non-cubic input.
bool has_nontrivial_3_edge_cut(const Graph& g);

// Canonical edge list under a canonical relabeling. Equal iff isomorphic.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<Edge> edges;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[v] = canonical id of v.
  std::vector<VertexId> labeling;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

std::size_t hash_value(const CanonicalForm& form);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return hash_value(f); }
};

// Cyclic vertex sequence; consecutive vertices (and last/first) are joined.
struct HamCycle {
  std::vector<VertexId> vertices;

  std::vector<Edge> edges() const;
  bool contains(const Edge& e) const;
};

// True iff c visits every vertex once and uses only edges of g.
bool is_hamiltonian_cycle(const Graph& g, const HamCycle& c);

// Small named graphs used throughout the tests and CLI.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace twotree
