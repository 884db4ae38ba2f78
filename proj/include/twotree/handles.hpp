#pragma once

// Handles on embedded cubic graphs: subdivide two edges of a common face and
// join the two new vertices across that face.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "twotree/embedding.hpp"

namespace twotree {

struct HandleSite {
  Edge first;
  Edge second;
  // Face (index into faces()) the new edge runs through; required when the
  // two edges share more than one face.
  std::optional<std::size_t> face;
};

struct HandleResult {
  EmbeddedGraph embedding;
  // y subdivides site.first, z subdivides site.second; y = n, z = n + 1.
  VertexId y = 0;
  VertexId z = 0;
};

HandleResult add_handle(const EmbeddedGraph& eg, const HandleSite& site);

// Handle between the two opposite edges of a length-4 face: pair 0 uses the
// face's edges 0 and 2, pair 1 uses edges 1 and 3. The input must be a 4MP
// dual.
HandleResult four_handle(const EmbeddedGraph& eg, std::size_t face, int pair);

// Every (face, unordered edge pair) of the embedding.
std::vector<HandleSite> handle_sites(const EmbeddedGraph& eg);

// Every 4-handle site as (face, pair).
std::vector<std::pair<std::size_t, int>> four_handle_sites(const EmbeddedGraph& eg);

// Deletes edge yz and suppresses y and z (the inverse of add_handle).
EmbeddedGraph remove_handle(const EmbeddedGraph& eg, VertexId y, VertexId z);

// Isomorphism classes of 4MP duals reachable from the cube by handles, with
// every intermediate graph a 4MP dual, grouped by order (max_order <= 16 is
// the intended range).
std::map<std::size_t, std::vector<EmbeddedGraph>> handle_closure(std::size_t max_order);

// Isomorphism classes obtained from `start` by exactly `steps` handles placed
// in every possible way. When `keep_4mp_duals_only` is set, intermediate and
// final graphs that are not 4MP duals are discarded.
std::vector<EmbeddedGraph> handle_descendants(const EmbeddedGraph& start, std::size_t steps,
                                              bool keep_4mp_duals_only);

// 4MP duals obtained from prism(r) by exactly h handles (h <= 2), up to
// isomorphism. Intermediates need not be 4MP duals.
std::vector<EmbeddedGraph> prism_handle_family(std::size_t r, std::size_t h);

}  // namespace twotree
