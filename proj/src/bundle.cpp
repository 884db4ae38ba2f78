#include "twotree/bundle.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "twotree/families.hpp"
#include "twotree/graph6.hpp"
#include "twotree/partition.hpp"
#include "twotree/spanning.hpp"

namespace twotree {

const std::string* ClaimRecord::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

const std::string& ClaimRecord::at(const std::string& key) const {
  if (const std::string* v = find(key)) return *v;
  throw Error("claim " + id + " has no field '" + key + "'");
}

const NamedGraph& Bundle::graph(const std::string& name) const {
  for (const NamedGraph& g : graphs)
    if (g.name == name) return g;
  throw Error("bundle has no graph named '" + name + "'");
}

std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string rotation_to_string(const EmbeddedGraph& eg) {
  std::string out;
  for (VertexId v = 0; v < eg.order(); ++v) {
    if (v) out += ' ';
    out += std::to_string(v) + ':';
    const auto rot = eg.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) out += (i ? "," : "") + std::to_string(rot[i]);
  }
  return out;
}

EmbeddedGraph rotation_from_string(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<VertexId>> rot;
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos || std::stoul(token.substr(0, colon)) != rot.size())
      throw Error("bad rotation token '" + token + "'");
    std::vector<VertexId> list;
    std::istringstream items(token.substr(colon + 1));
    for (std::string item; std::getline(items, item, ',');) list.push_back(static_cast<VertexId>(std::stoul(item)));
    rot.push_back(std::move(list));
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

void write_bundle(std::ostream& out, const Bundle& b) {
  out << "bundle twotree 1\n";
  for (const auto& [k, v] : b.meta) out << "meta " << k << ' ' << v << '\n';
  for (const NamedGraph& g : b.graphs) {
    out << "graph " << g.name << ' ' << g.graph6 << ' ' << fnv1a64_hex(g.graph6) << '\n';
    if (!g.rotation.empty()) out << "rotation " << g.name << ' ' << g.rotation << '\n';
  }
  for (const ClaimRecord& c : b.claims) {
    out << "claim " << c.id << '\n';
    for (const auto& [k, v] : c.fields) out << "  " << k << (v.empty() ? "" : " ") << v << '\n';
    out << "end\n";
  }
}

Bundle read_bundle(std::istream& in) {
  Bundle b;
  std::string line;
  std::size_t number = 0;
  ClaimRecord* open = nullptr;
  auto split = [](const std::string& s) {
    const auto sp = s.find(' ');
    if (sp == std::string::npos) return std::make_pair(s, std::string());
    return std::make_pair(s.substr(0, sp), s.substr(sp + 1));
  };
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (!header) {
      if (line != "bundle twotree 1") throw ParseError("not a twotree bundle", number);
      header = true;
      continue;
    }
    if (open) {
      if (line == "end") {
        open = nullptr;
        continue;
      }
      if (line.rfind("  ", 0) != 0) throw ParseError("claim field must be indented", number);
      open->fields.push_back(split(line.substr(2)));
      continue;
    }
    auto [key, rest] = split(line);
    if (key == "meta") {
      b.meta.push_back(split(rest));
    } else if (key == "graph") {
      std::istringstream fields(rest);
      NamedGraph g;
      std::string digest;
      if (!(fields >> g.name >> g.graph6 >> digest)) throw ParseError("graph line needs name, graph6 and digest", number);
      if (digest != fnv1a64_hex(g.graph6)) throw ParseError("digest mismatch for graph " + g.name, number);
      b.graphs.push_back(std::move(g));
    } else if (key == "rotation") {
      auto [name, text] = split(rest);
      auto it = std::find_if(b.graphs.begin(), b.graphs.end(), [&](const NamedGraph& g) { return g.name == name; });
      if (it == b.graphs.end()) throw ParseError("rotation for unknown graph " + name, number);
      it->rotation = text;
    } else if (key == "claim") {
      b.claims.push_back({rest, {}});
      open = &b.claims.back();
    } else {
      throw ParseError("unknown record '" + key + "'", number);
    }
  }
  if (!header) throw ParseError("empty bundle", 0);
  if (open) throw ParseError("claim " + open->id + " is not closed", number);
  return b;
}

namespace {

std::string join(const std::vector<VertexId>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

template <typename T>
std::vector<T> numbers(const std::string& text) {
  std::istringstream in(text);
  std::vector<T> out;
  for (unsigned long long x; in >> x;) out.push_back(static_cast<T>(x));
  return out;
}

std::string join_edges(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? " " : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
  return out;
}

std::vector<Edge> parse_edges(const std::string& text) {
  std::istringstream in(text);
  std::vector<Edge> out;
  for (std::string tok; in >> tok;) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw Error("bad edge token '" + tok + "'");
    out.emplace_back(static_cast<VertexId>(std::stoul(tok.substr(0, dash))),
                     static_cast<VertexId>(std::stoul(tok.substr(dash + 1))));
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Some face has none of its edges in `edges` (sorted).
bool misses_some_face(const std::vector<Face>& fs, const std::vector<Edge>& edges) {
  for (const Face& f : fs) {
    bool any = false;
    for (const Edge& e : f.edges()) any = any || std::binary_search(edges.begin(), edges.end(), e);
    if (!any) return true;
  }
  return false;
}

class Recorder {
 public:
  explicit Recorder(const CertifyOptions& o) : options_(o) {}

  void log(const std::string& msg) const {
    if (options_.log) options_.log(msg);
  }

  ClaimRecord& claim(const std::string& id, const std::string& statement, const std::string& kind,
                     const std::string& graph) {
    bundle.claims.push_back({id, {{"statement", statement}, {"kind", kind}, {"graph", graph}}});
    log("claim " + id + ": " + statement);
    return bundle.claims.back();
  }

  static void require(const ClaimRecord& c, bool ok, const std::string& detail) {
    if (!ok) throw ClaimFailure(c.id, *c.find("statement"), detail);
  }

  void add_graph(const std::string& name, const EmbeddedGraph& eg) {
    bundle.graphs.push_back({name, graph6_encode(eg.graph()), rotation_to_string(eg)});
  }

  Bundle bundle;

 private:
  const CertifyOptions& options_;
};

}  // namespace

Bundle certify_counterexample(const CertifyOptions& options) {
  Recorder rec(options);
  rec.bundle.meta = {{"command", options.command},
                     {"version", kVersion},
                     {"seed", "0"},
                     {"threads", std::to_string(options.threads)},
                     {"direct-search", yes_no(options.direct)}};

  const EmbeddedGraph g4 = g_k(4);
  rec.add_graph("g4", g4);
  {
    auto& c = rec.claim("g4-structure", "G_4 is a 4MP dual of order 24 with 4 bricks", "4mp-dual", "g4");
    const bool ok = is_4mp_dual(g4);
    const std::size_t bricks = count_bricks(g4.graph());
    c.fields.insert(c.fields.end(), {{"verdict", ok && g4.order() == 24 && bricks == 4 ? "PASS" : "FAIL"},
                                     {"mode", "direct-check"},
                                     {"order", std::to_string(g4.order())},
                                     {"bricks", std::to_string(bricks)}});
    Recorder::require(c, ok && g4.order() == 24 && bricks == 4, "structure check failed");
  }

  const PartitionSpec path_tree{Shape::Path, Shape::Tree, {}, {}};
  {
    auto& c = rec.claim("g4-no-path-tree", "G_4 has no path-tree partition", "partition", "g4");
    const PartitionResult r = find_partition(g4.graph(), path_tree, {options.threads});
    c.fields.insert(c.fields.end(), {{"left-shape", "path"},
                                     {"right-shape", "tree"},
                                     {"verdict", r.sat() ? "SAT" : "UNSAT"},
                                     {"mode", "complete-search"},
                                     {"reason", to_string(r.reason)},
                                     {"nodes", std::to_string(r.stats.nodes)},
                                     {"prunes", std::to_string(r.stats.prunes)}});
    Recorder::require(c, !r.sat(), "search found a path-tree partition");
  }
  {
    auto& c = rec.claim("g4-no-path-tree-oracle", "G_4 has no path-tree partition (all balanced bipartitions)",
                        "partition", "g4");
    const bool sat = oracle_find_partition(g4.graph(), path_tree).has_value();
    c.fields.insert(c.fields.end(), {{"left-shape", "path"},
                                     {"right-shape", "tree"},
                                     {"verdict", sat ? "SAT" : "UNSAT"},
                                     {"mode", "oracle-enumeration"},
                                     {"enumerated", "2704156"}});
    Recorder::require(c, !sat, "enumeration found a path-tree partition");
  }
  {
    auto& c = rec.claim("g4-tree-tree", "G_4 has a tree-tree partition", "partition", "g4");
    const PartitionSpec tt{Shape::Tree, Shape::Tree, {}, {}};
    const PartitionResult r = find_partition(g4.graph(), tt, {1});
    c.fields.insert(c.fields.end(), {{"left-shape", "tree"},
                                     {"right-shape", "tree"},
                                     {"verdict", r.sat() ? "SAT" : "UNSAT"},
                                     {"mode", "complete-search"}});
    Recorder::require(c, r.sat(), "no tree-tree partition");
    c.fields.insert(c.fields.end(), {{"left", join(r.certificate->left)}, {"right", join(r.certificate->right)}});
  }

  const EmbeddedGraph h = dual(g4);
  rec.add_graph("dual14", h);
  {
    auto& c = rec.claim("dual14-structure", "the dual of G_4 is maximal planar of order 14 with 36 edges and 24 faces",
                        "dual", "dual14");
    const bool mp = is_maximal_planar(h);
    const std::size_t nf = faces(h).size();
    c.fields.insert(c.fields.end(), {{"of", "g4"},
                                     {"verdict", mp && h.order() == 14 && h.size() == 36 && nf == 24 ? "PASS" : "FAIL"},
                                     {"mode", "direct-check"},
                                     {"order", std::to_string(h.order())},
                                     {"size", std::to_string(h.size())},
                                     {"faces", std::to_string(nf)},
                                     {"maximal-planar", yes_no(mp)}});
    Recorder::require(c, mp && h.order() == 14 && h.size() == 36 && nf == 24, "unexpected dual");
  }
  {
    auto& c = rec.claim("dual14-no-linear-hamiltonian-cycle", "the dual of G_4 has no linear Hamiltonian cycle",
                        "linear-hamiltonian", "dual14");
    const bool sat = has_linear_hamiltonian_cycle(h).has_value();
    c.fields.insert(c.fields.end(), {{"verdict", sat ? "SAT" : "UNSAT"}, {"mode", "complete-enumeration"}});
    Recorder::require(c, !sat, "a linear Hamiltonian cycle exists");
  }
  {
    auto& c = rec.claim("dual14-every-2-tree-misses-a-face",
                        "every spanning 2-tree of the dual of G_4 has a facial triangle with none of its edges",
                        "two-tree-enumeration", "dual14");
    const auto trees = enumerate_spanning_two_trees(h.graph());
    const std::uint64_t ham = count_hamiltonian_cycles(h.graph());
    const auto fs = faces(h);
    const bool all_miss = std::all_of(trees.begin(), trees.end(), [&](const auto& t) { return misses_some_face(fs, t); });
    c.fields.insert(c.fields.end(), {{"verdict", all_miss ? "PASS" : "FAIL"},
                                     {"mode", "complete-enumeration"},
                                     {"spanning-2-trees", std::to_string(trees.size())},
                                     {"hamiltonian-cycles", std::to_string(ham)}});
    Recorder::require(c, all_miss, "some spanning 2-tree meets every face");
  }

  const EmbeddedGraph s = stack_all_faces(h);
  rec.add_graph("stacked38", s);
  {
    auto& c = rec.claim("stacked38-structure", "stacking every face gives a maximal planar graph of order 38",
                        "stacking", "stacked38");
    const bool mp = is_maximal_planar(s);
    c.fields.insert(c.fields.end(), {{"of", "dual14"},
                                     {"verdict", mp && s.order() == 38 && s.size() == 108 ? "PASS" : "FAIL"},
                                     {"mode", "direct-check"},
                                     {"order", std::to_string(s.order())},
                                     {"size", std::to_string(s.size())},
                                     {"maximal-planar", yes_no(mp)}});
    Recorder::require(c, mp && s.order() == 38 && s.size() == 108, "unexpected stacked graph");
  }
  if (options.direct) {
    auto& c = rec.claim("stacked38-no-spanning-2-tree", "the order-38 graph has no spanning 2-tree",
                        "spanning-2-tree", "stacked38");
    SpanningSearchOptions so;
    so.resume_from = options.resume_from;
    so.progress = options.checkpoint;
    const SpanningSearchResult r = find_spanning_two_tree(s.graph(), so);
    c.fields.insert(c.fields.end(), {{"verdict", r.tree ? "SAT" : "UNSAT"},
                                     {"mode", "complete-search"},
                                     {"peeled", std::to_string(r.peeled)},
                                     {"branches", std::to_string(r.branches)},
                                     {"resumed-from", std::to_string(options.resume_from)},
                                     {"nodes", std::to_string(r.stats.nodes)},
                                     {"prunes", std::to_string(r.stats.prunes)}});
    Recorder::require(c, !r.tree, "search found a spanning 2-tree");
  }
  {
    auto& c = rec.claim("stacked38-max-2-degenerate",
                        "the order-38 graph has a spanning maximal 2-degenerate subgraph that is not a 2-tree",
                        "max-2-degenerate", "stacked38");
    const MaxDegenerateResult m = spanning_max_2_degenerate(s);
    const bool two_tree = recognize_k_tree(m.subgraph, 2).has_value();
    std::string degrees;
    for (std::size_t i = 0; i < m.witness.degree_at_deletion.size(); ++i)
      degrees += (i ? " " : "") + std::to_string(m.witness.degree_at_deletion[i]);
    c.fields.insert(c.fields.end(), {{"verdict", !two_tree && m.subgraph.size() == 73 ? "PASS" : "FAIL"},
                                     {"mode", "construction"},
                                     {"size", std::to_string(m.subgraph.size())},
                                     {"two-tree", yes_no(two_tree)},
                                     {"edges", join_edges(m.subgraph.edges())},
                                     {"deletion-order", join(m.witness.deletion_order)},
                                     {"degree-at-deletion", degrees}});
    Recorder::require(c, !two_tree && m.subgraph.size() == 73, "construction is a 2-tree or has the wrong size");
  }
  return std::move(rec.bundle);
}

std::vector<std::string> verify_bundle(const Bundle& b) {
  std::vector<std::string> problems;
  auto problem = [&](const ClaimRecord& c, const std::string& what) { problems.push_back(c.id + ": " + what); };

  auto embedding_of = [&](const std::string& name) {
    const NamedGraph& ng = b.graph(name);
    if (ng.rotation.empty()) throw Error("graph " + name + " has no rotation");
    EmbeddedGraph eg = rotation_from_string(ng.rotation);
    if (graph6_encode(eg.graph()) != ng.graph6) throw Error("rotation of " + name + " does not match its graph6");
    return eg;
  };

  for (const ClaimRecord& c : b.claims) {
    try {
      const std::string& kind = c.at("kind");
      const std::string& verdict = c.at("verdict");
      const std::string& mode = c.at("mode");
      const Graph g = graph6_decode(b.graph(c.at("graph")).graph6);
      if (verdict == "FAIL") problem(c, "recorded as failed");

      if (verdict == "UNSAT") {
        static const char* complete[] = {"complete-search", "oracle-enumeration", "complete-enumeration"};
        if (std::find(std::begin(complete), std::end(complete), mode) == std::end(complete))
          problem(c, "UNSAT record without a complete search mode");
        if (mode == "complete-search" && !c.find("nodes")) problem(c, "complete search without statistics");
        continue;
      }

      if (kind == "4mp-dual") {
        const EmbeddedGraph eg = embedding_of(c.at("graph"));
        if (!is_4mp_dual(eg)) problem(c, "not a 4MP dual");
        if (std::to_string(eg.order()) != c.at("order")) problem(c, "order mismatch");
        if (std::to_string(count_bricks(g)) != c.at("bricks")) problem(c, "brick count mismatch");
      } else if (kind == "partition") {
        if (verdict != "SAT") {
          problem(c, "unexpected verdict " + verdict);
          continue;
        }
        PartitionSpec spec{parse_shape(c.at("left-shape")), parse_shape(c.at("right-shape")), {}, {}};
        PartitionCertificate cert{numbers<VertexId>(c.at("left")), numbers<VertexId>(c.at("right")), spec.left,
                                  spec.right};
        if (!verify_certificate(g, cert, spec)) problem(c, "partition certificate does not verify");
      } else if (kind == "dual") {
        const EmbeddedGraph eg = embedding_of(c.at("graph"));
        const EmbeddedGraph expect = dual(embedding_of(c.at("of")));
        if (!(expect == eg)) problem(c, "graph is not the dual of " + c.at("of"));
        if (std::to_string(eg.order()) != c.at("order") || std::to_string(eg.size()) != c.at("size") ||
            std::to_string(faces(eg).size()) != c.at("faces"))
          problem(c, "order, size or face count mismatch");
        if (yes_no(is_maximal_planar(eg)) != c.at("maximal-planar")) problem(c, "maximal planarity mismatch");
      } else if (kind == "stacking") {
        const EmbeddedGraph eg = embedding_of(c.at("graph"));
        if (!(stack_all_faces(embedding_of(c.at("of"))) == eg)) problem(c, "graph is not the stacking of " + c.at("of"));
        if (std::to_string(eg.order()) != c.at("order") || std::to_string(eg.size()) != c.at("size"))
          problem(c, "order or size mismatch");
        if (yes_no(is_maximal_planar(eg)) != c.at("maximal-planar")) problem(c, "maximal planarity mismatch");
      } else if (kind == "two-tree-enumeration") {
        if (mode != "complete-enumeration") problem(c, "enumeration record without complete mode");
        if (std::stoull(c.at("spanning-2-trees")) != 2 * std::stoull(c.at("hamiltonian-cycles")))
          problem(c, "2-tree count is not twice the Hamiltonian cycle count");
      } else if (kind == "max-2-degenerate") {
        const std::vector<Edge> edges = parse_edges(c.at("edges"));
        for (const Edge& e : edges)
          if (e.v >= g.order() || !g.adjacent(e.u, e.v)) problem(c, "edge " + to_string(e) + " not in the graph");
        const Graph sub = Graph::from_edges(g.order(), edges);
        DegeneracyWitness w{numbers<VertexId>(c.at("deletion-order")), numbers<std::size_t>(c.at("degree-at-deletion"))};
        if (sub.size() != 2 * g.order() - 3) problem(c, "size is not 2n - 3");
        if (!check_degeneracy_witness(sub, 2, w)) problem(c, "degeneracy witness does not verify");
        if (yes_no(recognize_k_tree(sub, 2).has_value()) != c.at("two-tree")) problem(c, "2-tree recognition mismatch");
      } else if (kind == "linear-hamiltonian" || kind == "spanning-2-tree") {
        problem(c, "expected an UNSAT record");
      } else {
        problem(c, "unknown kind " + kind);
      }
    } catch (const std::exception& e) {
      problem(c, e.what());
    }
  }
  return problems;
}

}  // namespace twotree
