#pragma once

// Named graph families with plane embeddings, random generators and brick
// counting.
//
// Vertex numbering:
//   prism(r):        a_i = i, b_i = r + i (0 <= i < r); spokes a_i b_i.
//   double_wheel(n): rim v_i = i (0 <= i < n - 2), hubs n - 2 and n - 1.
//   g_k(k):          a_i = i, b_i = 2k + i, c_i = 4k + i (0 <= i < 2k);
//                    chords c_{2j} c_{2j+1}. The 1-based pairs
//                    (c_1 c_2), (c_3 c_4), ... become (c_0 c_1), (c_2 c_3), ...
//   h_22():          a_i = i, b_i = 8 + i (0 <= i < 8); c-vertices exist at
//                    positions 0 1 2 3 5 6 with ids 16..21 in that order;
//                    chords c_0 c_1, c_2 c_3, c_5 c_6; spokes a_4 b_4, a_7 b_7.
//
// Random generators draw from std::mt19937_64 seeded with the given 64-bit
// seed; a uniform index below m is taken as engine() % m. Both are fully
// specified, so outputs are reproducible across platforms.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "twotree/embedding.hpp"
#include "twotree/ktree.hpp"

namespace twotree {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t m) { return static_cast<std::size_t>(engine_() % m); }

 private:
  std::mt19937_64 engine_;
};

// Rotation system read off a straight-line drawing (clockwise = decreasing
// angle).
EmbeddedGraph embedding_from_drawing(std::span<const std::pair<double, double>> points, std::span<const Edge> edges);

EmbeddedGraph prism(std::size_t r);
std::vector<Edge> prism_spokes(std::size_t r);
EmbeddedGraph cube();
EmbeddedGraph k4();
EmbeddedGraph cycle(std::size_t n);
EmbeddedGraph double_wheel(std::size_t n);
EmbeddedGraph g_k(std::size_t k);
EmbeddedGraph h_22();
std::vector<Edge> h_22_spokes();

// Vertices 0..k-1 form the base clique; step i adds vertex k + i.
Graph k_tree(std::size_t k, std::span<const std::vector<VertexId>> attachments);
Graph random_k_tree(std::size_t n, std::size_t k, std::uint64_t seed);
Graph random_maximal_k_degenerate(std::size_t n, std::size_t k, std::uint64_t seed);

// Random 4MP dual of the given (even, >= 8) order grown from the cube by
// handles that keep every intermediate graph a 4MP dual.
EmbeddedGraph random_4mp_dual(std::size_t order, std::uint64_t seed);

// Random 4-connected triangulation of order n >= 6 (dual of the above).
EmbeddedGraph random_4mp(std::size_t n, std::uint64_t seed);

// Starts from a random 4MP and repeatedly glues a random small 4MP or a
// single stacked vertex into a random face until the order reaches
// `order` (never exceeded).
EmbeddedGraph random_stacked_triangulation(std::size_t order, std::uint64_t seed);

// Sorted 6-vertex sets inducing a brick (C6 plus a chord between opposite
// vertices).
std::vector<std::vector<VertexId>> find_bricks(const Graph& g);
std::size_t count_bricks(const Graph& g);

// The order-14 maximal planar graph as drawn (two copies of the end vertex
// identified), used only as a fixture to cross-check dual(g_k(4)).
Graph g4_dual_drawing();

// Family by CLI name: k4 cn prism double-wheel cube gk h22 random-4mp
// random-4mp-dual stacked ktree maxkdeg.
struct FamilySpec {
  std::string name;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// ktree and maxkdeg come without an embedding.
struct FamilyGraph {
  Graph graph;
  std::optional<EmbeddedGraph> embedding;
};

FamilyGraph build_family(const FamilySpec& spec);

}  // namespace twotree
