#pragma once

// Exact search for vertex bipartitions whose sides induce a path or a tree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

// TREE accepts any tree, paths included.
enum class Shape { Path, Tree };

std::string to_string(Shape s);
Shape parse_shape(const std::string& text);

struct PartitionSpec {
  Shape left = Shape::Path;
  Shape right = Shape::Tree;
  // Both endpoints on one side.
  std::vector<Edge> required_internal;
  // Endpoints on different sides.
  std::vector<Edge> required_crossing;
};

struct PartitionCertificate {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  Shape left_shape = Shape::Path;
  Shape right_shape = Shape::Tree;
};

enum class UnsatReason { None, OddOrder, Disconnected, Exhausted };

std::string to_string(UnsatReason r);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

struct PartitionResult {
  std::optional<PartitionCertificate> certificate;
  UnsatReason reason = UnsatReason::None;
  SearchStats stats;

  bool sat() const { return certificate.has_value(); }
};

struct PartitionOptions {
  // 1 = deterministic depth-first search. More threads split the search
  // tree at a fixed frontier; any valid certificate may be returned.
  unsigned threads = 1;
};

// Complete branch-and-prune search (order <= 64). On cubic graphs both sides
// must have n/2 vertices, so odd orders are reported UNSAT. Throws Error if a
// constraint edge is not an edge of g.
PartitionResult find_partition(const Graph& g, const PartitionSpec& spec, const PartitionOptions& options = {});

// Independent check using classify_induced and set arithmetic only.
bool verify_certificate(const Graph& g, const PartitionCertificate& cert, const PartitionSpec& spec);

// Plain enumeration of every bipartition (balanced ones only on cubic
// graphs). Throws Error for order > 26.
std::optional<PartitionCertificate> oracle_find_partition(const Graph& g, const PartitionSpec& spec);

}  // namespace twotree
