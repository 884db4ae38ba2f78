#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "twotree/embedding.hpp"
#include "twotree/families.hpp"
#include "twotree/spanning.hpp"

using namespace twotree;

namespace {

std::set<Edge> edge_set(const std::vector<Edge>& e) { return {e.begin(), e.end()}; }

bool subgraph_of(const Graph& h, const Graph& g) {
  for (const Edge& e : h.edges())
    if (!g.adjacent(e.u, e.v)) return false;
  return true;
}

// Triangles whose removal disconnects g, by deleting each triangle.
std::vector<std::array<VertexId, 3>> separating_by_deletion(const Graph& g) {
  const auto m = oracle::matrix(g);
  std::vector<std::array<VertexId, 3>> out;
  const std::size_t n = g.order();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c) {
        if (!m[a][b] || !m[a][c] || !m[b][c] || n < 5) continue;
        std::vector<char> allowed(n, 1);
        allowed[a] = allowed[b] = allowed[c] = 0;
        VertexId s = 0;
        while (!allowed[s]) ++s;
        const auto seen = oracle::reach(m, s, allowed);
        for (VertexId v = 0; v < n; ++v)
          if (allowed[v] && !seen[v]) {
            out.push_back({a, b, c});
            break;
          }
      }
  return out;
}

}  // namespace

TEST_CASE("hamiltonian cycle examples") {
  const auto oct = find_hamiltonian_cycle(double_wheel(6).graph());
  REQUIRE(oct.has_value());
  CHECK(oct->vertices.size() == 6);
  CHECK(is_hamiltonian_cycle(double_wheel(6).graph(), *oct));
  const auto k = find_hamiltonian_cycle(complete_graph(4));
  REQUIRE(k.has_value());
  CHECK(k->vertices.size() == 4);
  CHECK_FALSE(find_hamiltonian_cycle(cycle_graph(5).without_edges(std::vector<Edge>{Edge(0, 1)})).has_value());

  std::vector<Edge> absent{Edge(0, 2)};
  CHECK_THROWS_AS(find_hamiltonian_cycle(cycle_graph(5), absent), Error);
  // Three forced edges at one vertex.
  std::vector<Edge> star{Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  CHECK_FALSE(find_hamiltonian_cycle(complete_graph(5), star).has_value());
  // Forced edges closing a short cycle.
  std::vector<Edge> tri{Edge(0, 1), Edge(1, 2), Edge(0, 2)};
  CHECK_FALSE(find_hamiltonian_cycle(complete_graph(5), tri).has_value());
}

TEST_CASE("hamiltonian counts") {
  CHECK(count_hamiltonian_cycles(cycle_graph(6)) == 1);
  CHECK(count_hamiltonian_cycles(complete_graph(4)) == 3);
  CHECK(count_hamiltonian_cycles(double_wheel(6).graph()) == oracle::hamiltonian_cycles(double_wheel(6).graph()));
  CHECK(count_hamiltonian_cycles(double_wheel(6).graph()) == 16);
  CHECK(count_hamiltonian_cycles(cube().graph()) == 6);
}

TEST_CASE("hamiltonian search agrees with permutation enumeration") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 3 + rng() % 7;
    const Graph g = oracle::random_graph(n, 0.35 + 0.1 * (i % 5), rng);
    CHECK(count_hamiltonian_cycles(g) == oracle::hamiltonian_cycles(g));
    std::vector<Edge> forced;
    const auto edges = g.edges();
    for (int f = 0; f < 2 && !edges.empty(); ++f) {
      const Edge e = edges[rng() % edges.size()];
      if (std::find(forced.begin(), forced.end(), e) == forced.end()) forced.push_back(e);
    }
    const auto c = find_hamiltonian_cycle(g, forced);
    CHECK(c.has_value() == (oracle::hamiltonian_cycles(g, forced) > 0));
    if (c) {
      CHECK(is_hamiltonian_cycle(g, *c));
      for (const Edge& e : forced) CHECK(c->contains(e));
    }
  }
}

TEST_CASE("hamiltonian cycles through two edges of any face of double_wheel(8)") {
  const auto eg = double_wheel(8);
  for (const Face& f : faces(eg)) {
    const auto fe = f.edges();
    for (std::size_t i = 0; i < fe.size(); ++i)
      for (std::size_t j = i + 1; j < fe.size(); ++j) {
        std::vector<Edge> forced{fe[i], fe[j]};
        const auto c = find_hamiltonian_cycle(eg.graph(), forced);
        REQUIRE(c.has_value());
        CHECK(c->contains(fe[i]));
        CHECK(c->contains(fe[j]));
      }
  }
}

TEST_CASE("linear hamiltonian cycles") {
  // Each side of an octahedron cycle holds four faces; it is a star exactly
  // when one face has no edge on the cycle.
  const auto oct = double_wheel(6);
  std::size_t linear = 0, stars = 0;
  for_each_hamiltonian_cycle(oct.graph(), [&](const HamCycle& c) {
    const auto flags = linear_hamiltonian_check(oct, c);
    bool star = false;
    for (const Face& f : faces(oct)) {
      const auto fe = f.edges();
      star = star || std::none_of(fe.begin(), fe.end(), [&](const Edge& e) { return c.contains(e); });
    }
    CHECK(flags.inside == !star);
    CHECK(flags.outside == !star);
    (star ? stars : linear) += 1;
    return true;
  });
  CHECK(linear == 12);
  CHECK(stars == 4);

  // Some cycle of double_wheel(10) has a star (not a path) on one side.
  const auto dw = double_wheel(10);
  bool star = false;
  for_each_hamiltonian_cycle(dw.graph(), [&](const HamCycle& c) {
    const auto hd = hamiltonian_dual(dw, c);
    if (hd.inside.graph.max_degree() >= 3) {
      CHECK_FALSE(linear_hamiltonian_check(dw, c).inside);
      star = true;
    }
    return !star;
  });
  CHECK(star);

  for (std::size_t n = 6; n <= 10; ++n) {
    const auto c = has_linear_hamiltonian_cycle(double_wheel(n));
    REQUIRE(c.has_value());
    const auto flags = linear_hamiltonian_check(double_wheel(n), *c);
    CHECK((flags.inside || flags.outside));
  }
  CHECK_FALSE(has_linear_hamiltonian_cycle(dual(g_k(4))).has_value());
}

TEST_CASE("2-trees from hamiltonian cycles") {
  for (const auto& eg : {double_wheel(6), double_wheel(9), random_4mp(11, 3), stack_all_faces(k4())}) {
    std::size_t seen = 0;
    for_each_hamiltonian_cycle(eg.graph(), [&](const HamCycle& c) {
      for (int side : {0, 1}) {
        const auto seq = two_tree_from_ham_cycle(eg, c, side);
        CHECK_FALSE(sequence_error(seq, &eg.graph()).has_value());
        const auto edges = seq.edges();
        CHECK(edges.size() == 2 * eg.order() - 3);
        const Graph t = Graph::from_edges(eg.order(), edges);
        CHECK(recognize_k_tree(t, 2).has_value());
        for (const Edge& e : c.edges()) CHECK(t.adjacent(e.u, e.v));
        // The cycle is the 2-tree's only hamiltonian cycle.
        CHECK(count_hamiltonian_cycles(t) == 1);
        const auto only = find_hamiltonian_cycle(t);
        REQUIRE(only.has_value());
        CHECK(edge_set(only->edges()) == edge_set(c.edges()));
      }
      return ++seen < 30;
    });
    CHECK(seen > 0);
  }
  const auto oct = double_wheel(6);
  const auto c = *find_hamiltonian_cycle(oct.graph());
  CHECK(two_tree_from_ham_cycle(oct, c, 0).edges().size() == 9);
}

TEST_CASE("spanning 2-tree search") {
  const auto oct = find_spanning_two_tree(double_wheel(6).graph());
  REQUIRE(oct.tree.has_value());
  CHECK_FALSE(sequence_error(*oct.tree, &double_wheel(6).graph()).has_value());
  CHECK(oct.tree->order() == 6);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_k_tree(12, 3, seed);
    const auto r = find_spanning_two_tree(g);
    REQUIRE(r.tree.has_value());
    CHECK_FALSE(sequence_error(*r.tree, &g).has_value());
    CHECK(r.tree->order() == 12);
  }
  CHECK_FALSE(find_spanning_two_tree(cycle_graph(6)).tree.has_value());
}

TEST_CASE("spanning 2-tree search agrees with enumeration of labeled 2-trees") {
  std::mt19937_64 rng(55);
  std::size_t yes = 0;
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 3 + rng() % 5;
    const Graph g = oracle::random_graph(n, 0.5 + 0.1 * (i % 5), rng);
    const std::size_t want = oracle::spanning_two_trees(g);
    const auto peel = find_spanning_two_tree(g);
    const auto plain = find_spanning_two_tree(g, {{}, 0, false});
    CHECK(peel.tree.has_value() == (want > 0));
    CHECK(plain.tree.has_value() == (want > 0));
    if (peel.tree) CHECK_FALSE(sequence_error(*peel.tree, &g).has_value());
    CHECK(enumerate_spanning_two_trees(g).size() == want);
    yes += want > 0;
  }
  CHECK(yes > 20);
}

TEST_CASE("peeling does not change the answer on stacked triangulations") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto eg = random_stacked_triangulation(9 + seed % 6, seed);
    const auto a = find_spanning_two_tree(eg.graph());
    const auto b = find_spanning_two_tree(eg.graph(), {{}, 0, false});
    CHECK(a.tree.has_value() == b.tree.has_value());
    if (a.tree) CHECK_FALSE(sequence_error(*a.tree, &eg.graph()).has_value());
  }
}

TEST_CASE("order-38 stacked graph has no spanning 2-tree") {
  const auto s = stack_all_faces(dual(g_k(4)));
  std::size_t last_done = 0, total = 0;
  SpanningSearchOptions opts;
  opts.progress = [&](std::size_t done, std::size_t t) {
    CHECK(done > last_done);
    last_done = done;
    total = t;
  };
  const auto r = find_spanning_two_tree(s.graph(), opts);
  CHECK_FALSE(r.tree.has_value());
  CHECK(r.peeled == 24);
  CHECK(last_done == total);
  CHECK(total == r.branches);

  // Resuming past every branch refutes nothing new.
  SpanningSearchOptions resume;
  resume.resume_from = r.branches;
  CHECK_FALSE(find_spanning_two_tree(s.graph(), resume).tree.has_value());
}

TEST_CASE("spanning 2-tree enumeration") {
  CHECK(enumerate_spanning_two_trees(complete_graph(4)).size() == 6);
  CHECK(oracle::spanning_two_trees(complete_graph(4)) == 6);
  const auto oct = double_wheel(6).graph();
  CHECK(enumerate_spanning_two_trees(oct).size() == oracle::spanning_two_trees(oct));
  for (std::size_t n = 6; n <= 8; ++n) {
    const Graph g = double_wheel(n).graph();
    CHECK(enumerate_spanning_two_trees(g).size() == 2 * count_hamiltonian_cycles(g));
  }
  CHECK(oracle::spanning_two_trees(double_wheel(7).graph()) == 60);

  const auto all = enumerate_spanning_two_trees(oct);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (const auto& t : all) CHECK(recognize_k_tree(Graph::from_edges(6, t), 2).has_value());
}

TEST_CASE("every spanning 2-tree of the order-14 dual misses a face") {
  const auto d = dual(g_k(4));
  const auto trees = enumerate_spanning_two_trees(d.graph());
  CHECK(trees.size() == 2368);
  CHECK(count_hamiltonian_cycles(d.graph()) == 1184);
  const auto fs = faces(d);
  for (const auto& t : trees) {
    const auto te = edge_set(t);
    bool misses = false;
    for (const Face& f : fs) {
      const auto fe = f.edges();
      misses = misses || std::none_of(fe.begin(), fe.end(), [&](const Edge& e) { return te.count(e) > 0; });
    }
    CHECK(misses);
  }
}

TEST_CASE("separating triangles and 4-block trees") {
  CHECK(four_block_tree(double_wheel(6)).blocks.size() == 1);
  CHECK(separating_triangles(double_wheel(6).graph()).empty());

  const auto oct = double_wheel(6);
  const auto two = glue_into_face(oct, 0, oct, 0);
  const auto bt = four_block_tree(two);
  REQUIRE(bt.blocks.size() == 2);
  CHECK(bt.blocks[1].parent == 0);
  CHECK(bt.blocks[1].gluing.size() == 3);
  CHECK(separating_triangles(two.graph()).size() == 1);

  const auto s = stack_all_faces(dual(g_k(4)));
  const auto tree = four_block_tree(s);
  CHECK(tree.blocks.size() == 25);
  std::size_t k4s = 0, big = 0;
  std::set<VertexId> covered;
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    const auto& b = tree.blocks[i];
    covered.insert(b.vertices.begin(), b.vertices.end());
    if (b.vertices.size() == 4) ++k4s;
    if (b.vertices.size() == 14) {
      ++big;
      CHECK(is_4mp(b.embedding));
    }
    if (i > 0) {
      CHECK(b.parent >= 0);
      CHECK(static_cast<std::size_t>(b.parent) < i);
      for (VertexId v : b.gluing) {
        CHECK(std::binary_search(b.vertices.begin(), b.vertices.end(), v));
        const auto& p = tree.blocks[b.parent].vertices;
        CHECK(std::binary_search(p.begin(), p.end(), v));
      }
    }
  }
  CHECK(k4s == 24);
  CHECK(big == 1);
  CHECK(covered.size() == 38);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto eg = random_stacked_triangulation(10 + seed, seed);
    CHECK(separating_triangles(eg.graph()) == separating_by_deletion(eg.graph()));
    const auto t = four_block_tree(eg);
    CHECK(t.blocks.size() == separating_triangles(eg.graph()).size() + 1);
    for (const auto& b : t.blocks) CHECK((b.vertices.size() == 4 || is_4mp(b.embedding)));
  }
  CHECK_THROWS_AS(four_block_tree(cube()), Error);
}

TEST_CASE("spanning maximal 2-degenerate subgraphs") {
  const auto k = spanning_max_2_degenerate(k4());
  CHECK(k.subgraph.size() == 5);

  const auto oct = spanning_max_2_degenerate(double_wheel(6));
  CHECK(oct.subgraph.size() == 9);
  CHECK(recognize_k_tree(oct.subgraph, 2).has_value());

  const auto s = stack_all_faces(dual(g_k(4)));
  const auto m = spanning_max_2_degenerate(s);
  CHECK(m.subgraph.order() == 38);
  CHECK(m.subgraph.size() == 73);
  CHECK(subgraph_of(m.subgraph, s.graph()));
  CHECK(check_degeneracy_witness(m.subgraph, 2, m.witness));
  CHECK(is_maximal_k_degenerate(m.subgraph, 2).has_value());
  CHECK_FALSE(recognize_k_tree(m.subgraph, 2).has_value());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto eg = random_stacked_triangulation(8 + seed % 30, 1000 + seed);
    const auto r = spanning_max_2_degenerate(eg);
    CHECK(r.subgraph.order() == eg.order());
    CHECK(r.subgraph.size() == 2 * eg.order() - 3);
    CHECK(subgraph_of(r.subgraph, eg.graph()));
    CHECK(check_degeneracy_witness(r.subgraph, 2, r.witness));
  }
  // Small cases checked against the definition of maximality.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto eg = random_stacked_triangulation(9, 50 + seed);
    CHECK(oracle::maximal_k_degenerate(spanning_max_2_degenerate(eg).subgraph, 2));
  }
}
