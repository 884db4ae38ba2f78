// twotree command-line tool. Exit codes: 0 SAT / true, 1 UNSAT / false,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twotree/bundle.hpp"
#include "twotree/families.hpp"
#include "twotree/graph6.hpp"
#include "twotree/handles.hpp"
#include "twotree/partition.hpp"
#include "twotree/spanning.hpp"

using namespace twotree;

namespace {

constexpr int kSat = 0;
constexpr int kUnsat = 1;
constexpr int kError = 2;

bool is_rot_path(const std::string& path) { return std::filesystem::path(path).extension() == ".rot"; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

EmbeddedGraph load_embedding(const std::string& path) {
  if (!is_rot_path(path)) throw Error(path + ": an embedding is needed, give a .rot file");
  auto in = open_input(path);
  return read_rot(in);
}

Graph load_graph(const std::string& path) {
  if (is_rot_path(path)) return load_embedding(path).graph();
  auto in = open_input(path);
  auto graphs = read_graph6(in);
  if (graphs.empty()) throw Error(path + ": no graph found");
  return graphs.front();
}

Edge parse_edge(const std::string& text) {
  const auto dash = text.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == text.size())
    throw Error("edge '" + text + "' must look like u-v");
  try {
    std::size_t used = 0;
    const auto u = std::stoul(text.substr(0, dash), &used);
    if (used != dash) throw std::invalid_argument(text);
    const auto v = std::stoul(text.substr(dash + 1), &used);
    if (used != text.size() - dash - 1) throw std::invalid_argument(text);
    if (u == v) throw Error("edge '" + text + "' is a loop");
    return Edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  } catch (const std::logic_error&) {
    throw Error("edge '" + text + "' must look like u-v");
  }
}

std::vector<Edge> parse_edges(const std::vector<std::string>& texts) {
  std::vector<Edge> out;
  for (const auto& t : texts) out.push_back(parse_edge(t));
  return out;
}

void print_list(std::ostream& out, const std::string& key, std::span<const VertexId> xs) {
  out << key;
  for (VertexId x : xs) out << ' ' << x;
  out << '\n';
}

void print_sequence(std::ostream& out, const KTreeSequence& seq) {
  print_list(out, "base", seq.base);
  for (const auto& step : seq.steps) {
    out << "step " << step.vertex;
    for (VertexId a : step.attach) out << ' ' << a;
    out << '\n';
  }
}

// Writes to `path`, or standard output for "" or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  fn(out);
}

struct Options {
  // gen
  std::string family;
  FamilySpec spec;
  std::string format = "g6";
  std::string output;
  std::size_t max_order = 0;
  // check / count
  std::string kind;
  std::string input;
  std::string left = "path", right = "tree";
  std::vector<std::string> internal, crossing, forced;
  std::size_t k = 2;
  unsigned threads = 1;
  // op handle
  std::vector<std::string> handle_edges;
  int face = -1;
  int four_face = -1;
  int pair = 0;
  // certify
  bool no_direct = false;
  std::string checkpoint;
};

int cmd_gen(const Options& o) {
  if (o.family == "closure") {
    if (o.max_order < 8) throw Error("gen closure needs --max-order >= 8");
    if (o.output.empty()) throw Error("gen closure needs -o <directory>");
    std::filesystem::create_directories(o.output);
    for (const auto& [order, graphs] : handle_closure(o.max_order)) {
      const auto base = std::filesystem::path(o.output) / ("closure-" + std::to_string(order));
      if (o.format == "rot") {
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          std::ofstream out(base.string() + "-" + std::to_string(i) + ".rot");
          write_rot(out, graphs[i]);
        }
      } else {
        std::ofstream out(base.string() + ".g6");
        for (const auto& eg : graphs) write_graph6(out, eg.graph());
      }
      std::cerr << "order " << order << ": " << graphs.size() << " graphs\n";
    }
    return kSat;
  }
  FamilySpec spec = o.spec;
  spec.name = o.family;
  const FamilyGraph fg = build_family(spec);
  with_output(o.output, [&](std::ostream& out) {
    if (o.format == "rot") {
      if (!fg.embedding) throw Error("family " + o.family + " has no embedding; use --format g6");
      write_rot(out, *fg.embedding);
    } else {
      write_graph6(out, fg.graph);
    }
  });
  return kSat;
}

int cmd_check(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "partition") {
    const Graph g = load_graph(o.input);
    const PartitionSpec spec{parse_shape(o.left), parse_shape(o.right), parse_edges(o.internal), parse_edges(o.crossing)};
    const PartitionResult r = find_partition(g, spec, {o.threads});
    std::cerr << "nodes " << r.stats.nodes << " prunes " << r.stats.prunes << '\n';
    if (!r.sat()) {
      std::cout << "UNSAT " << to_string(r.reason) << '\n';
      return kUnsat;
    }
    print_list(std::cout, "left", r.certificate->left);
    print_list(std::cout, "right", r.certificate->right);
    return kSat;
  }
  if (kind == "spanning-2tree") {
    const Graph g = load_graph(o.input);
    const SpanningSearchResult r = find_spanning_two_tree(g);
    std::cerr << "nodes " << r.stats.nodes << " prunes " << r.stats.prunes << " peeled " << r.peeled << '\n';
    if (!r.tree) {
      std::cout << "UNSAT\n";
      return kUnsat;
    }
    print_sequence(std::cout, *r.tree);
    return kSat;
  }
  if (kind == "ham") {
    const Graph g = load_graph(o.input);
    const auto forced = parse_edges(o.forced);
    const auto c = find_hamiltonian_cycle(g, forced);
    if (!c) {
      std::cout << "UNSAT\n";
      return kUnsat;
    }
    print_list(std::cout, "cycle", c->vertices);
    return kSat;
  }
  if (kind == "linear-ham") {
    const EmbeddedGraph eg = load_embedding(o.input);
    const auto c = has_linear_hamiltonian_cycle(eg);
    if (!c) {
      std::cout << "UNSAT\n";
      return kUnsat;
    }
    const LinearFlags flags = linear_hamiltonian_check(eg, *c);
    print_list(std::cout, "cycle", c->vertices);
    std::cout << "linear " << (flags.inside && flags.outside ? "both" : flags.inside ? "inside" : "outside") << '\n';
    return kSat;
  }
  if (kind == "ktree") {
    const auto seq = recognize_k_tree(load_graph(o.input), o.k);
    if (!seq) {
      std::cout << "no\n";
      return kUnsat;
    }
    print_sequence(std::cout, *seq);
    return kSat;
  }
  if (kind == "maxkdeg") {
    const auto w = is_maximal_k_degenerate(load_graph(o.input), o.k);
    if (!w) {
      std::cout << "no\n";
      return kUnsat;
    }
    print_list(std::cout, "deletion-order", w->deletion_order);
    std::cout << "degree-at-deletion";
    for (auto d : w->degree_at_deletion) std::cout << ' ' << d;
    std::cout << '\n';
    return kSat;
  }
  if (kind == "4mp" || kind == "4mp-dual") {
    const EmbeddedGraph eg = load_embedding(o.input);
    const bool ok = kind == "4mp" ? is_4mp(eg) : is_4mp_dual(eg);
    std::cout << (ok ? "yes" : "no") << '\n';
    return ok ? kSat : kUnsat;
  }
  throw Error("unknown check '" + kind + "'");
}

int cmd_count(const Options& o) {
  const Graph g = load_graph(o.input);
  if (o.kind == "2trees") {
    std::cout << enumerate_spanning_two_trees(g).size() << '\n';
  } else if (o.kind == "hamcycles") {
    std::cout << count_hamiltonian_cycles(g) << '\n';
  } else {
    throw Error("unknown count '" + o.kind + "' (expected 2trees or hamcycles)");
  }
  return kSat;
}

int cmd_dual(const Options& o) {
  const EmbeddedGraph d = dual(load_embedding(o.input));
  with_output(o.output, [&](std::ostream& out) { write_rot(out, d); });
  return kSat;
}

int cmd_handle(const Options& o) {
  const EmbeddedGraph eg = load_embedding(o.input);
  HandleResult r;
  if (o.four_face >= 0) {
    r = four_handle(eg, static_cast<std::size_t>(o.four_face), o.pair);
  } else {
    if (o.handle_edges.size() != 2) throw Error("op handle needs exactly two --edge options (or --four)");
    HandleSite site{parse_edge(o.handle_edges[0]), parse_edge(o.handle_edges[1]), std::nullopt};
    if (o.face >= 0) site.face = static_cast<std::size_t>(o.face);
    r = add_handle(eg, site);
  }
  with_output(o.output, [&](std::ostream& out) { write_rot(out, r.embedding); });
  std::cerr << "new vertices " << r.y << ' ' << r.z << '\n';
  return kSat;
}

int cmd_max2deg(const Options& o) {
  const MaxDegenerateResult r = spanning_max_2_degenerate(load_embedding(o.input));
  with_output(o.output, [&](std::ostream& out) {
    out << "edges";
    for (const Edge& e : r.subgraph.edges()) out << ' ' << e.u << '-' << e.v;
    out << '\n';
    print_list(out, "deletion-order", r.witness.deletion_order);
    out << "degree-at-deletion";
    for (auto d : r.witness.degree_at_deletion) out << ' ' << d;
    out << '\n';
  });
  return kSat;
}

std::size_t read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  std::string key;
  std::size_t done = 0;
  if (in && in >> key >> done && key == "branches-done") return done;
  return 0;
}

int cmd_certify(const Options& o, const std::string& command_line) {
  CertifyOptions co;
  co.command = command_line;
  co.threads = o.threads;
  co.direct = !o.no_direct;
  co.log = [](const std::string& msg) { std::cerr << msg << '\n'; };
  if (!o.checkpoint.empty()) {
    co.resume_from = read_checkpoint(o.checkpoint);
    co.checkpoint = [&](std::size_t done, std::size_t total) {
      std::ofstream out(o.checkpoint);
      out << "branches-done " << done << "\nbranches-total " << total << '\n';
    };
  }
  try {
    const Bundle b = certify_counterexample(co);
    with_output(o.output, [&](std::ostream& out) { write_bundle(out, b); });
  } catch (const ClaimFailure& e) {
    std::cerr << e.what() << '\n';
    return kUnsat;
  }
  return kSat;
}

int cmd_verify(const Options& o) {
  auto in = open_input(o.input);
  const Bundle b = read_bundle(in);
  const auto problems = verify_bundle(b);
  for (const auto& p : problems) std::cout << "FAIL " << p << '\n';
  std::cout << b.claims.size() << " claims, " << problems.size() << " problems\n";
  return problems.empty() ? kSat : kUnsat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path/tree partitions, spanning 2-trees and certificates for planar graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a graph family member (or the handle closure) as graph6 or rot");
  gen->add_option("family", o.family,
                  "k4 cn prism cube double-wheel gk h22 random-4mp random-4mp-dual stacked ktree maxkdeg closure")
      ->required();
  gen->add_option("--k", o.spec.k, "k for gk, ktree, maxkdeg");
  gen->add_option("--r", o.spec.r, "r for prism");
  gen->add_option("--n", o.spec.n, "order for cn, double-wheel and the random families");
  gen->add_option("--seed", o.spec.seed, "seed for random families");
  gen->add_option("--format", o.format, "g6 or rot")->check(CLI::IsMember({"g6", "rot"}));
  gen->add_option("--max-order", o.max_order, "closure: largest order");
  gen->add_option("-o,--output", o.output, "output file (closure: directory)");

  auto* check = app.add_subcommand("check", "Decide a property; certificate on standard output");
  check->add_option("kind", o.kind, "partition spanning-2tree ham linear-ham ktree maxkdeg 4mp 4mp-dual")->required();
  check->add_option("input", o.input, "graph file (.g6 or .rot)")->required();
  check->add_option("--left", o.left, "path or tree")->check(CLI::IsMember({"path", "tree"}));
  check->add_option("--right", o.right, "path or tree")->check(CLI::IsMember({"path", "tree"}));
  check->add_option("--require-internal", o.internal, "edge u-v with both ends on one side")
      ->allow_extra_args(false)
      ->delimiter(',');
  check->add_option("--require-crossing", o.crossing, "edge u-v with ends on different sides")
      ->allow_extra_args(false)
      ->delimiter(',');
  check->add_option("--force", o.forced, "edge u-v the Hamiltonian cycle must use")
      ->allow_extra_args(false)
      ->delimiter(',');
  check->add_option("--k", o.k, "k for ktree and maxkdeg");
  check->add_option("--threads", o.threads, "search threads")->check(CLI::Range(1u, 256u));

  auto* count = app.add_subcommand("count", "Count spanning 2-trees or Hamiltonian cycles");
  count->add_option("kind", o.kind, "2trees or hamcycles")->required();
  count->add_option("input", o.input, "graph file")->required();

  auto* dualc = app.add_subcommand("dual", "Planar dual of a .rot embedding");
  dualc->add_option("input", o.input, "rot file")->required();
  dualc->add_option("-o,--output", o.output, "output rot file");

  auto* op = app.add_subcommand("op", "Graph operations");
  op->require_subcommand(1);
  auto* handle = op->add_subcommand("handle", "Add a handle (or a 4-handle) to a cubic embedding");
  handle->add_option("input", o.input, "rot file")->required();
  handle->add_option("--edge", o.handle_edges, "edge u-v (give twice)")->allow_extra_args(false);
  handle->add_option("--face", o.face, "face index the new edge crosses");
  handle->add_option("--four", o.four_face, "4-handle on this length-4 face");
  handle->add_option("--pair", o.pair, "opposite edge pair 0 or 1 for --four")->check(CLI::Range(0, 1));
  handle->add_option("-o,--output", o.output, "output rot file");

  auto* build = app.add_subcommand("build", "Constructions");
  build->require_subcommand(1);
  auto* max2 = build->add_subcommand("max2deg", "Spanning maximal 2-degenerate subgraph of a triangulation");
  max2->add_option("input", o.input, "rot file")->required();
  max2->add_option("-o,--output", o.output, "output file");

  auto* certify = app.add_subcommand("certify", "Certification runs");
  certify->require_subcommand(1);
  auto* counter = certify->add_subcommand("counterexample", "Certify the order-38 graph without a spanning 2-tree");
  counter->add_option("-o,--output", o.output, "bundle file");
  counter->add_option("--threads", o.threads, "partition search threads")->check(CLI::Range(1u, 256u));
  counter->add_flag("--no-direct", o.no_direct, "skip the direct order-38 spanning 2-tree search");
  counter->add_option("--checkpoint", o.checkpoint, "resume file for the direct search");

  auto* verify = app.add_subcommand("verify", "Replay the certificates of a bundle");
  verify->add_option("bundle", o.input, "bundle file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  std::string command_line;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "-o" || std::string(argv[i]) == "--output" || std::string(argv[i]) == "--checkpoint") {
      ++i;
      continue;
    }
    command_line += (command_line.empty() ? "" : " ") + std::string(argv[i]);
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*check) return cmd_check(o);
    if (*count) return cmd_count(o);
    if (*dualc) return cmd_dual(o);
    if (*handle) return cmd_handle(o);
    if (*max2) return cmd_max2deg(o);
    if (*counter) return cmd_certify(o, command_line);
    if (*verify) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
