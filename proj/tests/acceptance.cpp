// Acceptance run: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "twotree/embedding.hpp"
#include "twotree/families.hpp"
#include "twotree/handles.hpp"
#include "twotree/partition.hpp"
#include "twotree/spanning.hpp"

using namespace twotree;

namespace {

// Wall-clock budgets in seconds.
constexpr double kEngineG4 = 60;
constexpr double kOracleG4 = 1800;
constexpr double kH22Each = 300;
constexpr double kH22Sat = 10;
constexpr double kPrismSweep = 600;
constexpr double kFourHandleEach = 300;
constexpr double kDualityPipeline = 1;
constexpr double kEnumeration14 = 1800;
constexpr double kCountIdentity = 300;
constexpr double kLinearDuality = 1800;
constexpr double kTutte = 600;
constexpr double kMaxDegenerate = 600;
constexpr double kThreeTrees = 600;
constexpr double kClosure = 3600;
constexpr double kStructure = 60;

// Regression fixture for criterion 7.
constexpr std::size_t kDual14TwoTrees = 2368;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (ok) detail += (detail.empty() ? "" : "; ") + what;
  }
};

class Timer {
 public:
  Timer(Outcome& out, double budget, std::string label) : out_(out), budget_(budget), label_(std::move(label)) {}
  ~Timer() {
    const double s = since(start_);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.2fs (limit %.0fs)", label_.c_str(), s, budget_);
    out_.require(s < budget_, std::string(buf) + " over budget");
    if (s >= budget_) return;
    out_.note(buf);
  }

 private:
  Outcome& out_;
  double budget_;
  std::string label_;
  Clock::time_point start_ = Clock::now();
};

std::vector<EmbeddedGraph> four_mps_up_to_10() {
  std::vector<EmbeddedGraph> out;
  for (const auto& [order, members] : handle_closure(16))
    for (const auto& d : members) out.push_back(dual(d));
  return out;
}

bool pp_sat(const Graph& g, std::vector<Edge> internal = {}) {
  const PartitionSpec spec{Shape::Path, Shape::Path, std::move(internal), {}};
  const auto r = find_partition(g, spec);
  return r.sat() && verify_certificate(g, *r.certificate, spec);
}

void c1(Outcome& o) {
  const Graph g4 = g_k(4).graph();
  {
    Timer t(o, kEngineG4, "engine");
    const auto r = find_partition(g4, {Shape::Path, Shape::Tree});
    o.require(!r.sat() && r.reason == UnsatReason::Exhausted, "engine found a path-tree partition");
    o.note("nodes " + std::to_string(r.stats.nodes));
  }
  {
    Timer t(o, kOracleG4, "oracle");
    o.require(!oracle_find_partition(g4, {Shape::Path, Shape::Tree}).has_value(), "oracle found a path-tree partition");
  }
}

void c2(Outcome& o) {
  const Graph h = h_22().graph();
  {
    Timer t(o, kH22Each, "engine");
    o.require(!find_partition(h, {Shape::Path, Shape::Path}).sat(), "engine found a path-path partition");
  }
  {
    Timer t(o, kH22Each, "oracle");
    o.require(!oracle_find_partition(h, {Shape::Path, Shape::Path}).has_value(), "oracle found a path-path partition");
  }
}

void c3(Outcome& o) {
  Timer t(o, kH22Sat, "search");
  const Graph h = h_22().graph();
  const PartitionSpec spec{Shape::Path, Shape::Tree};
  const auto r = find_partition(h, spec);
  o.require(r.sat() && verify_certificate(h, *r.certificate, spec), "no verified path-tree certificate");
}

void c4(Outcome& o) {
  Timer t(o, kPrismSweep, "sweep");
  std::size_t instances = 0;
  for (std::size_t r = 4; r <= 8; ++r) {
    const Graph p = prism(r).graph();
    o.require(pp_sat(p), "prism(" + std::to_string(r) + ") has no path-path partition");
    const auto spokes = prism_spokes(r);
    for (std::size_t i = 0; i < spokes.size(); ++i)
      for (std::size_t j = i + 1; j < spokes.size(); ++j) {
        ++instances;
        o.require(pp_sat(p, {spokes[i], spokes[j]}), "prism(" + std::to_string(r) + ") spokes " +
                                                          to_string(spokes[i]) + " " + to_string(spokes[j]));
      }
  }
  for (std::size_t r = 4; r <= 6; ++r)
    for (std::size_t h = 0; h <= 2; ++h)
      for (const auto& eg : prism_handle_family(r, h)) {
        ++instances;
        o.require(pp_sat(eg.graph()), "prism(" + std::to_string(r) + ") + " + std::to_string(h) +
                                          " handles: no path-path partition");
      }
  o.note(std::to_string(instances) + " instances");
}

void c5(Outcome& o) {
  const auto g4 = g_k(4);
  double worst = 0;
  const auto sites = four_handle_sites(g4);
  for (const auto& [face, pair] : sites) {
    const auto start = Clock::now();
    const auto h = four_handle(g4, face, pair).embedding;
    o.require(h.order() == 26 && is_4mp_dual(h), "site is not a 4MP dual of order 26");
    o.require(!find_partition(h.graph(), {Shape::Path, Shape::Tree}).sat(),
              "site " + std::to_string(face) + "/" + std::to_string(pair) + " has a path-tree partition");
    worst = std::max(worst, since(start));
  }
  o.require(worst < kFourHandleEach, "an instance exceeded its budget");
  o.note(std::to_string(sites.size()) + " sites, slowest " + std::to_string(worst) + "s");
}

void c6(Outcome& o) {
  Timer t(o, kDualityPipeline, "pipeline");
  const auto d = dual(g_k(4));
  o.require(d.order() == 14 && d.size() == 36 && faces(d).size() == 24 && is_maximal_planar(d),
            "dual of g_4 is not an order-14 triangulation with 36 edges and 24 faces");
  const auto s = stack_all_faces(d);
  o.require(s.order() == 38 && s.size() == 108 && is_maximal_planar(s), "stacking is not order 38 / size 108");
}

void c7(Outcome& o) {
  Timer t(o, kEnumeration14, "enumeration");
  const auto d = dual(g_k(4));
  const auto fs = faces(d);
  const auto trees = enumerate_spanning_two_trees(d.graph());
  std::size_t covering = 0;
  for (const auto& tree : trees) {
    const std::set<Edge> te(tree.begin(), tree.end());
    bool misses = false;
    for (const Face& f : fs) {
      bool any = false;
      for (const Edge& e : f.edges()) any = any || te.count(e);
      misses = misses || !any;
    }
    covering += !misses;
  }
  o.require(covering == 0, std::to_string(covering) + " spanning 2-trees touch every face");
  o.require(trees.size() == kDual14TwoTrees, "count " + std::to_string(trees.size()) + " differs from fixture");
  o.note(std::to_string(trees.size()) + " spanning 2-trees");
}

void c8(Outcome& o) {
  const auto s = stack_all_faces(dual(g_k(4)));
  const auto start = Clock::now();
  const auto r = find_spanning_two_tree(s.graph());
  o.require(!r.tree.has_value(), "found a spanning 2-tree");
  o.note("nodes " + std::to_string(r.stats.nodes) + ", peeled " + std::to_string(r.peeled) + ", " +
         std::to_string(since(start)) + "s");
}

void c9(Outcome& o) {
  Timer t(o, kCountIdentity, "counts");
  for (std::size_t n = 6; n <= 8; ++n) {
    const Graph g = double_wheel(n).graph();
    const auto trees = enumerate_spanning_two_trees(g).size();
    const auto cycles = count_hamiltonian_cycles(g);
    o.require(trees == 2 * cycles, "double_wheel(" + std::to_string(n) + "): " + std::to_string(trees) + " vs 2 x " +
                                       std::to_string(cycles));
    o.note("dw" + std::to_string(n) + " " + std::to_string(trees) + "=2x" + std::to_string(cycles));
  }
}

void c10(Outcome& o) {
  Timer t(o, kLinearDuality, "check");
  auto agree = [&](const EmbeddedGraph& eg, const std::string& name) {
    const bool linear = has_linear_hamiltonian_cycle(eg).has_value();
    const bool pt = find_partition(dual(eg).graph(), {Shape::Path, Shape::Tree}).sat();
    o.require(linear == pt, name + ": linear " + std::to_string(linear) + " vs path-tree " + std::to_string(pt));
    return linear;
  };
  std::size_t count = 0;
  for (const auto& eg : four_mps_up_to_10()) agree(eg, "4MP of order " + std::to_string(eg.order())), ++count;
  o.require(!agree(dual(g_k(4)), "dual of g_4"), "dual of g_4 has a linear Hamiltonian cycle");
  o.note(std::to_string(count) + " small 4MPs");
}

void c11(Outcome& o) {
  Timer t(o, kTutte, "searches");
  std::size_t searches = 0;
  for (const auto& eg : four_mps_up_to_10())
    for (const Face& f : faces(eg)) {
      const auto fe = f.edges();
      for (std::size_t i = 0; i < fe.size(); ++i)
        for (std::size_t j = i + 1; j < fe.size(); ++j) {
          ++searches;
          std::vector<Edge> forced{fe[i], fe[j]};
          const auto c = find_hamiltonian_cycle(eg.graph(), forced);
          o.require(c && is_hamiltonian_cycle(eg.graph(), *c) && c->contains(fe[i]) && c->contains(fe[j]),
                    "no cycle through " + to_string(fe[i]) + " and " + to_string(fe[j]));
        }
    }
  o.note(std::to_string(searches) + " searches");
}

void c12(Outcome& o) {
  Timer t(o, kMaxDegenerate, "200 graphs");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto eg = random_stacked_triangulation(8 + seed % 33, seed);
    const auto r = spanning_max_2_degenerate(eg);
    bool inside = true;
    for (const Edge& e : r.subgraph.edges()) inside = inside && eg.graph().adjacent(e.u, e.v);
    o.require(r.subgraph.order() == eg.order() && inside && r.subgraph.size() == 2 * eg.order() - 3 &&
                  check_degeneracy_witness(r.subgraph, 2, r.witness),
              "seed " + std::to_string(seed));
  }
}

void c13(Outcome& o) {
  Timer t(o, kThreeTrees, "100 3-trees");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_k_tree(4 + seed % 12, 3, seed);
    const auto r = find_spanning_two_tree(g);
    o.require(r.tree && !sequence_error(*r.tree, &g) && r.tree->order() == g.order(), "seed " + std::to_string(seed));
  }
}

void c14(Outcome& o, std::size_t max_order) {
  Timer t(o, kClosure, "closure");
  std::size_t members = 0;
  for (const auto& [order, list] : handle_closure(max_order))
    for (const auto& eg : list) {
      ++members;
      o.require(is_4mp_dual(eg), "order " + std::to_string(order) + " member is not a 4MP dual");
      o.require(pp_sat(eg.graph()), "order " + std::to_string(order) + " member has no path-path partition");
    }
  o.note(std::to_string(members) + " members up to order " + std::to_string(max_order));
}

void c15(Outcome& o) {
  Timer t(o, kStructure, "pins");
  for (std::size_t k = 2; k <= 6; ++k) {
    const std::size_t b = count_bricks(g_k(k).graph());
    o.require(b == k, "g_" + std::to_string(k) + " has " + std::to_string(b) + " bricks");
  }
  o.require(count_bricks(h_22().graph()) == 3, "h_22 brick count");
  for (std::size_t n = 6; n <= 12; ++n)
    o.require(canonical_form(dual(double_wheel(n)).graph()) == canonical_form(prism(n - 2).graph()),
              "dual of double_wheel(" + std::to_string(n) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool skip_direct = false;
  std::size_t closure_order = 14;
  app.add_flag("--skip-direct", skip_direct, "skip the direct order-38 search (criterion 8)");
  app.add_option("--closure-order", closure_order, "largest order for criterion 14")->check(CLI::Range(8, 20));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"g_4 has no path-tree partition (engine and oracle)", c1},
      {"h_22 has no path-path partition (engine and oracle)", c2},
      {"h_22 has a verified path-tree partition", c3},
      {"prisms and prisms with <= 2 handles have path-path partitions", c4},
      {"every 4-handle of g_4 has no path-tree partition", c5},
      {"dual of g_4 and its face stacking", c6},
      {"every spanning 2-tree of the order-14 dual misses a face", c7},
      {"order-38 stacking has no spanning 2-tree (direct search)", c8},
      {"spanning 2-trees = 2 x Hamiltonian cycles on double wheels 6..8", c9},
      {"linear Hamiltonian cycle iff dual path-tree partition", c10},
      {"Hamiltonian cycle through any two edges of a face (4MPs <= 10)", c11},
      {"spanning maximal 2-degenerate subgraphs of 200 triangulations", c12},
      {"100 random 3-trees have spanning 2-trees", c13},
      {"handle closure members are 4MP duals with path-path partitions", [&](Outcome& o) { c14(o, closure_order); }},
      {"brick counts and double wheel duals", c15},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    if (i + 1 == 8 && skip_direct) {
      std::printf("criterion %2zu SKIP %s\n", i + 1, name.c_str());
      continue;
    }
    Outcome out;
    try {
      fn(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failures += !out.ok;
    std::printf("criterion %2zu %s %s [%s]\n", i + 1, out.ok ? "PASS" : "FAIL", name.c_str(), out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
