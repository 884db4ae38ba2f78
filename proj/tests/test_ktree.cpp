#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "twotree/families.hpp"
#include "twotree/ktree.hpp"

using namespace twotree;

namespace {

Graph k2_plus_3() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}};
  return Graph::from_edges(5, e);
}

std::vector<std::array<VertexId, 3>> triangles(const Graph& g) {
  std::vector<std::array<VertexId, 3>> out;
  for (const Edge& e : g.edges())
    for (VertexId w : g.neighbors(e.v))
      if (w > e.v && g.adjacent(e.u, w)) out.push_back({e.u, e.v, w});
  return out;
}

}  // namespace

TEST_CASE("k_tree construction") {
  CHECK(k_tree(3, {}) == complete_graph(3));
  std::vector<std::vector<VertexId>> steps{{0, 1}, {1, 2}, {2, 3}};
  const Graph t = k_tree(2, steps);
  CHECK(t.order() == 5);
  CHECK(t.size() == 7);
  CHECK_THROWS_AS(k_tree(2, std::vector<std::vector<VertexId>>{{0, 1}, {3, 4}}), Error);
  CHECK_THROWS_AS(k_tree(2, std::vector<std::vector<VertexId>>{{0, 1}, {0, 1}, {2, 3}}), Error);
  CHECK_NOTHROW(k_tree(2, std::vector<std::vector<VertexId>>{{0, 1}, {0, 2}}));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(random_k_tree(10, 2, seed).size() == 17);
    const Graph g3 = random_k_tree(14, 3, seed);
    CHECK(g3.size() == 3 * 14 - 6);
    CHECK(recognize_k_tree(g3, 3).has_value());
  }
}

TEST_CASE("k-tree recognition") {
  CHECK(recognize_k_tree(complete_graph(3), 2).has_value());
  CHECK(recognize_k_tree(k2_plus_3(), 2).has_value());
  CHECK_FALSE(recognize_k_tree(cycle_graph(4), 2).has_value());
  CHECK_FALSE(recognize_k_tree(complete_graph(4), 2).has_value());
  CHECK(recognize_k_tree(complete_graph(4), 3).has_value());

  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3 + rng() % 12;
    const Graph g = random_k_tree(n, 2, rng());
    const auto seq = recognize_k_tree(g, 2);
    REQUIRE(seq.has_value());
    CHECK(seq->order() == n);
    CHECK(seq->edges() == g.edges());
    CHECK_FALSE(sequence_error(*seq, &g).has_value());
    CHECK(realize(*seq) == g);
  }
}

TEST_CASE("sequence_error explains malformed sequences") {
  KTreeSequence seq{2, {0, 1, 2}, {{3, {0, 1}}}};
  CHECK_FALSE(sequence_error(seq).has_value());
  KTreeSequence repeat{2, {0, 1, 2}, {{2, {0, 1}}}};
  CHECK(sequence_error(repeat).has_value());
  KTreeSequence nonclique{2, {0, 1, 2}, {{3, {0, 1}}, {4, {2, 3}}}};
  CHECK(sequence_error(nonclique).has_value());
  const Graph host = cycle_graph(4);
  CHECK(sequence_error(seq, &host).has_value());
}

TEST_CASE("reroot realizes the tree from every triangle") {
  const Graph k3 = complete_graph(3);
  const auto self = reroot_two_tree(k3, std::vector<VertexId>{0, 1, 2});
  CHECK(self.steps.empty());

  const auto hub = reroot_two_tree(k2_plus_3(), std::vector<VertexId>{0, 1, 3});
  CHECK(hub.steps.size() == 2);
  CHECK(hub.edges() == k2_plus_3().edges());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph t = random_k_tree(3 + seed % 8, 2, seed);
    for (const auto& tri : triangles(t)) {
      const auto seq = reroot_two_tree(t, tri);
      CHECK(std::set<VertexId>(seq.base.begin(), seq.base.end()) == std::set<VertexId>(tri.begin(), tri.end()));
      CHECK(seq.edges() == t.edges());
      CHECK_FALSE(sequence_error(seq, &t).has_value());
    }
  }
  CHECK_THROWS_AS(reroot_two_tree(k2_plus_3(), std::vector<VertexId>{2, 3, 4}), Error);
  CHECK_THROWS_AS(reroot_two_tree(cycle_graph(4), std::vector<VertexId>{0, 1, 2}), Error);
}

TEST_CASE("degeneracy witnesses") {
  const auto w = degeneracy_order(cycle_graph(5), 2);
  REQUIRE(w.has_value());
  CHECK(check_degeneracy_witness(cycle_graph(5), 2, *w));
  CHECK_FALSE(degeneracy_order(complete_graph(4), 2).has_value());

  auto bad = *w;
  bad.degree_at_deletion[0] = 1;
  CHECK_FALSE(check_degeneracy_witness(cycle_graph(5), 2, bad));
  bad = *w;
  bad.deletion_order.pop_back();
  bad.degree_at_deletion.pop_back();
  CHECK_FALSE(check_degeneracy_witness(cycle_graph(5), 2, bad));
}

TEST_CASE("maximal k-degenerate examples") {
  CHECK(is_maximal_k_degenerate(complete_graph(3), 2).has_value());
  CHECK_FALSE(is_maximal_k_degenerate(cycle_graph(5), 2).has_value());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_maximal_k_degenerate(random_k_tree(9, 2, seed), 2).has_value());
    const Graph m = random_maximal_k_degenerate(5, 2, seed);
    CHECK(m.size() == 7);
    CHECK(is_maximal_k_degenerate(m, 2).has_value());
    const Graph m3 = random_maximal_k_degenerate(12, 3, seed);
    CHECK(m3.size() == 3 * 12 - 6);
    CHECK(is_maximal_k_degenerate(m3, 3).has_value());
  }
  // The converse of "k-trees are maximal k-degenerate" fails for k = 2.
  bool found = false;
  for (std::uint64_t seed = 0; seed < 50 && !found; ++seed)
    found = !recognize_k_tree(random_maximal_k_degenerate(8, 2, seed), 2).has_value();
  CHECK(found);
}

TEST_CASE("maximal 2-degenerate agrees with the definitional check for n <= 9") {
  std::mt19937_64 rng(99);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + rng() % 7;
    Graph g;
    if (i % 2 == 0) {
      g = random_maximal_k_degenerate(n, 2, rng());
      if (i % 4 == 0) {
        auto edges = g.edges();
        edges.erase(edges.begin() + rng() % edges.size());
        g = Graph::from_edges(n, edges);
      }
    } else {
      g = oracle::random_graph(n, 0.5, rng);
    }
    const bool want = oracle::maximal_k_degenerate(g, 2);
    CHECK(is_maximal_k_degenerate(g, 2).has_value() == want);
    positives += want;
  }
  CHECK(positives > 20);
}
