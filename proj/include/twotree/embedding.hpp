#pragma once

// Combinatorial plane embeddings given by rotation systems.
//
// rotation(v) lists the neighbors of v in clockwise order. Faces are traced
// with the rule: after the directed edge (u, v) comes (v, w) where w is the
// successor of u in the rotation of v.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

struct Face {
  // Boundary walk; the directed edges are (vertices[i], vertices[i + 1]) and
  // the closing (back, front).
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  std::vector<Edge> edges() const;
};

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  // Each rotation list must be a permutation of that vertex's neighbors; the
  // adjacency is read off the lists themselves.
  static EmbeddedGraph from_rotation(std::vector<std::vector<VertexId>> rotation);

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }

  std::span<const VertexId> rotation(VertexId v) const { return rotation_.at(v); }
  const std::vector<std::vector<VertexId>>& rotations() const { return rotation_; }

  // Neighbor following u in the rotation of v.
  VertexId successor(VertexId v, VertexId u) const;
  VertexId predecessor(VertexId v, VertexId u) const;

  // Position of u within rotation(v).
  std::size_t slot(VertexId v, VertexId u) const;

  EmbeddedGraph relabeled(std::span<const VertexId> perm) const;

  // Rotation with every list reversed.
  EmbeddedGraph mirrored() const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  Graph graph_;
  std::vector<std::vector<VertexId>> rotation_;
};

// Faces plus the face index of every directed edge.
class FaceSet {
 public:
  explicit FaceSet(const EmbeddedGraph& eg);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t count() const { return faces_.size(); }
  const Face& operator[](std::size_t i) const { return faces_[i]; }

  // Face containing the directed edge (u, v).
  std::size_t face_of(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> dart_face_;
};

// Faces in order of their least directed edge; each face starts at that edge.
std::vector<Face> faces(const EmbeddedGraph& eg);

bool check_genus_zero(const EmbeddedGraph& eg);

// Vertex i of the dual is faces(eg)[i]. Throws Error when the dual would have
// a loop (bridge) or parallel edges (two faces sharing two edges).
EmbeddedGraph dual(const EmbeddedGraph& eg);

struct HamiltonianDual {
  // side[f] is 0 for faces on the same side of the cycle as face 0, else 1.
  std::vector<int> side;
  // Dual subgraphs induced by each side (cycle-crossing dual edges dropped).
  InducedSubgraph inside;
  InducedSubgraph outside;
};

HamiltonianDual hamiltonian_dual(const EmbeddedGraph& eg, const HamCycle& c);

bool is_maximal_planar(const EmbeddedGraph& eg);

// Adds a degree-3 vertex inside every face; new vertex n + i sits in face i.
EmbeddedGraph stack_all_faces(const EmbeddedGraph& eg);

// Adds one degree-3 vertex (id n) inside triangular face `face`.
EmbeddedGraph stack_face(const EmbeddedGraph& eg, std::size_t face);

// Identifies triangular face `guest_face` of `guest` with triangular face
// `host_face` of `host`, placing the guest inside the host face. Guest
// vertices off the glued triangle get ids n_host, n_host + 1, ... in guest
// order.
EmbeddedGraph glue_into_face(const EmbeddedGraph& host, std::size_t host_face, const EmbeddedGraph& guest,
                             std::size_t guest_face);

// Embedding restricted to a vertex subset (rotations filtered).
struct InducedEmbedding {
  EmbeddedGraph embedding;
  std::vector<VertexId> original;
};

InducedEmbedding induced_embedding(const EmbeddedGraph& eg, std::span<const VertexId> vertices);

bool is_4mp(const EmbeddedGraph& eg);
bool is_4mp_dual(const EmbeddedGraph& eg);

// "rot" text format: `rot <n>` then one line `<i>: <clockwise neighbors>` per
// vertex. ParseError offsets are 1-based line numbers.
EmbeddedGraph read_rot(std::istream& in);
void write_rot(std::ostream& out, const EmbeddedGraph& eg);

}  // namespace twotree
