#pragma once

// k-tree construction sequences, k-tree recognition and k-degeneracy.

#include <optional>
#include <span>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

// New vertex `vertex` joined to every vertex of `attach`.
struct ConstructionStep {
  VertexId vertex = 0;
  std::vector<VertexId> attach;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

// Base clique on `base` (k vertices for a k-tree; a 2-tree built from a
// triangle has base.size() == 3 and attachments of size 2), followed by
// simplicial additions.
struct KTreeSequence {
  std::size_t k = 0;
  std::vector<VertexId> base;
  std::vector<ConstructionStep> steps;

  std::size_t order() const { return base.size() + steps.size(); }
  // Edges realized by the sequence, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const KTreeSequence&, const KTreeSequence&) = default;
};

using TwoTreeSequence = KTreeSequence;

// Checks the sequence is well formed: base is a clique of size k or k + 1,
// every step adds a fresh vertex joined to k distinct vertices that are
// pairwise adjacent at that moment, and (when `host` is given) every realized
// edge is an edge of host. Returns an explanation on failure.
std::optional<std::string> sequence_error(const KTreeSequence& seq, const Graph* host = nullptr);

// Graph over vertex ids [0, order) realized by a sequence whose vertex ids are
// exactly 0..order-1. Throws Error when an attachment is not a clique.
Graph realize(const KTreeSequence& seq);

// Repeatedly strips a degree-k vertex with a clique neighborhood; the
// returned sequence starts from the final K_k. Fails when g is not a k-tree.
std::optional<KTreeSequence> recognize_k_tree(const Graph& g, std::size_t k);

// A construction of the 2-tree t that starts from `triangle`. Throws Error
// when t lacks the triangle or is not a 2-tree.
TwoTreeSequence reroot_two_tree(const Graph& t, std::span<const VertexId> triangle);

struct DegeneracyWitness {
  std::vector<VertexId> deletion_order;
  std::vector<std::size_t> degree_at_deletion;
};

// Greedy minimum-degree deletion; fails if some deletion exceeds k.
std::optional<DegeneracyWitness> degeneracy_order(const Graph& g, std::size_t k);

// Valid witness for g with bound k.
bool check_degeneracy_witness(const Graph& g, std::size_t k, const DegeneracyWitness& w);

// k-degenerate and of size kn - k(k+1)/2 with n >= k.
std::optional<DegeneracyWitness> is_maximal_k_degenerate(const Graph& g, std::size_t k);

}  // namespace twotree
