#pragma once

// Hamiltonian cycles, spanning 2-trees, 4-block decomposition and spanning
// maximal 2-degenerate subgraphs of maximal planar graphs.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twotree/embedding.hpp"
#include "twotree/ktree.hpp"

namespace twotree {

// Hamiltonian cycle through every forced edge. Throws Error when a forced
// edge is missing from g.
std::optional<HamCycle> find_hamiltonian_cycle(const Graph& g, std::span<const Edge> forced = {});

// Calls visit once per undirected Hamiltonian cycle (starting at vertex 0,
// second vertex < last vertex) until it returns false.
void for_each_hamiltonian_cycle(const Graph& g, const std::function<bool(const HamCycle&)>& visit);

std::uint64_t count_hamiltonian_cycles(const Graph& g);

struct LinearFlags {
  // Side 0 holds face 0 of the embedding; side 1 is the other side.
  bool inside = false;
  bool outside = false;
};

// Whether the dual faces on each side of c induce a path.
LinearFlags linear_hamiltonian_check(const EmbeddedGraph& eg, const HamCycle& c);

std::optional<HamCycle> has_linear_hamiltonian_cycle(const EmbeddedGraph& eg);

// c plus every edge lying on the given side (0 = side of face 0), as a 2-tree
// construction sequence. eg must be maximal planar.
TwoTreeSequence two_tree_from_ham_cycle(const EmbeddedGraph& eg, const HamCycle& c, int side);

struct SpanningSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

struct SpanningSearchOptions {
  // Called after each top-level branch with (finished, total).
  std::function<void(std::size_t, std::size_t)> progress;
  // Top-level branches below this index are taken as already refuted.
  std::size_t resume_from = 0;
  // Remove degree-3 vertices with a triangular neighborhood first and demand
  // that each such triangle keeps a tree edge.
  bool peel = true;
};

struct SpanningSearchResult {
  std::optional<TwoTreeSequence> tree;
  SpanningSearchStats stats;
  std::size_t branches = 0;
  std::size_t peeled = 0;
};

// Exhaustive search for a spanning 2-tree (order 3..64).
SpanningSearchResult find_spanning_two_tree(const Graph& g, const SpanningSearchOptions& options = {});

// Every spanning 2-tree as a sorted edge list, each exactly once, in sorted
// order. Intended for order <= 14.
std::vector<std::vector<Edge>> enumerate_spanning_two_trees(const Graph& g);

struct FourBlock {
  // Sorted ids of the block's vertices in the input graph.
  std::vector<VertexId> vertices;
  // Embedding of the block; vertex i is vertices[i].
  EmbeddedGraph embedding;
  // Index of the block this one is glued to (-1 for the first block).
  int parent = -1;
  // Shared triangle with the parent, sorted (empty for the first block).
  std::vector<VertexId> gluing;
};

// Blocks listed in attachment order: every block after the first is glued
// along a triangle to an earlier block.
struct BlockTree {
  std::vector<FourBlock> blocks;
};

// Splits along separating triangles until every block is K_4 or 4-connected.
// Throws Error when eg is not maximal planar.
BlockTree four_block_tree(const EmbeddedGraph& eg);

// Triangles whose removal disconnects g, each sorted, in sorted order.
std::vector<std::array<VertexId, 3>> separating_triangles(const Graph& g);

struct MaxDegenerateResult {
  Graph subgraph;
  DegeneracyWitness witness;
};

// Spanning maximal 2-degenerate subgraph (size 2n - 3) built block by block.
MaxDegenerateResult spanning_max_2_degenerate(const EmbeddedGraph& eg);

}  // namespace twotree
