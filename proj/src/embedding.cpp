#include "twotree/embedding.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace twotree {

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

EmbeddedGraph EmbeddedGraph::from_rotation(std::vector<std::vector<VertexId>> rotation) {
  EmbeddedGraph eg;
  eg.graph_ = Graph::from_adjacency(rotation);
  eg.rotation_ = std::move(rotation);
  return eg;
}

std::size_t EmbeddedGraph::slot(VertexId v, VertexId u) const {
  const auto& list = rotation_.at(v);
  auto it = std::find(list.begin(), list.end(), u);
  if (it == list.end()) throw Error(std::to_string(u) + " is not a neighbor of " + std::to_string(v));
  return static_cast<std::size_t>(it - list.begin());
}

VertexId EmbeddedGraph::successor(VertexId v, VertexId u) const {
  const auto& list = rotation_.at(v);
  return list[(slot(v, u) + 1) % list.size()];
}

VertexId EmbeddedGraph::predecessor(VertexId v, VertexId u) const {
  const auto& list = rotation_.at(v);
  return list[(slot(v, u) + list.size() - 1) % list.size()];
}

EmbeddedGraph EmbeddedGraph::relabeled(std::span<const VertexId> perm) const {
  if (perm.size() != order()) throw Error("relabeling has wrong length");
  std::vector<std::vector<VertexId>> rot(order());
  for (VertexId v = 0; v < order(); ++v)
    for (VertexId w : rotation_[v]) rot[perm[v]].push_back(perm[w]);
  return from_rotation(std::move(rot));
}

EmbeddedGraph EmbeddedGraph::mirrored() const {
  auto rot = rotation_;
  for (auto& list : rot) std::reverse(list.begin(), list.end());
  return from_rotation(std::move(rot));
}

FaceSet::FaceSet(const EmbeddedGraph& eg) : rotation_(eg.rotations()) {
  const std::size_t n = eg.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  dart_face_.resize(n);
  for (VertexId v = 0; v < n; ++v) dart_face_[v].assign(rotation_[v].size(), kUnset);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : eg.graph().neighbors(u)) {
      if (dart_face_[u][eg.slot(u, v)] != kUnset) continue;
      Face face;
      const std::size_t id = faces_.size();
      VertexId a = u, b = v;
      while (dart_face_[a][eg.slot(a, b)] == kUnset) {
        dart_face_[a][eg.slot(a, b)] = id;
        face.vertices.push_back(a);
        VertexId c = eg.successor(b, a);
        a = b;
        b = c;
      }
      faces_.push_back(std::move(face));
    }
  }
}

std::size_t FaceSet::face_of(VertexId u, VertexId v) const {
  const auto& list = rotation_.at(u);
  auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) throw Error("no directed edge " + std::to_string(u) + "->" + std::to_string(v));
  return dart_face_[u][static_cast<std::size_t>(it - list.begin())];
}

std::vector<Face> faces(const EmbeddedGraph& eg) { return FaceSet(eg).faces(); }

bool check_genus_zero(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  if (!g.is_connected()) return false;
  const std::size_t f = g.size() == 0 ? 1 : FaceSet(eg).count();
  return static_cast<long>(g.order()) - static_cast<long>(g.size()) + static_cast<long>(f) == 2;
}

EmbeddedGraph dual(const EmbeddedGraph& eg) {
  if (!check_genus_zero(eg)) throw Error("dual requires a connected genus-zero embedding");
  const FaceSet fs(eg);
  std::vector<std::vector<VertexId>> rot(fs.count());
  for (std::size_t f = 0; f < fs.count(); ++f) {
    const Face& face = fs[f];
    for (std::size_t i = 0; i < face.length(); ++i) {
      VertexId a = face.vertices[i], b = face.vertices[(i + 1) % face.length()];
      std::size_t across = fs.face_of(b, a);
      if (across == f) throw Error("face " + std::to_string(f) + " borders itself across edge " + to_string(Edge(a, b)));
      if (std::find(rot[f].begin(), rot[f].end(), across) != rot[f].end())
        throw Error("faces " + std::to_string(f) + " and " + std::to_string(across) + " share more than one edge");
      rot[f].push_back(static_cast<VertexId>(across));
    }
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

HamiltonianDual hamiltonian_dual(const EmbeddedGraph& eg, const HamCycle& c) {
  if (!is_hamiltonian_cycle(eg.graph(), c)) throw Error("not a Hamiltonian cycle of the embedded graph");
  if (!check_genus_zero(eg)) throw Error("Hamiltonian dual requires a genus-zero embedding");
  const FaceSet fs(eg);
  const std::size_t f = fs.count();
  std::vector<int> side(f, -1);
  side[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    const Face& face = fs[x];
    for (std::size_t i = 0; i < face.length(); ++i) {
      VertexId a = face.vertices[i], b = face.vertices[(i + 1) % face.length()];
      std::size_t y = fs.face_of(b, a);
      int want = c.contains(Edge(a, b)) ? 1 - side[x] : side[x];
      if (side[y] == -1) {
        side[y] = want;
        stack.push_back(y);
      } else if (side[y] != want) {
        throw InvariantViolation("inconsistent face sides around Hamiltonian cycle");
      }
    }
  }
  // Dual graph without crossing edges.
  std::vector<Edge> dual_edges;
  for (const Edge& e : eg.graph().edges()) {
    if (c.contains(e)) continue;
    std::size_t x = fs.face_of(e.u, e.v), y = fs.face_of(e.v, e.u);
    if (x != y) dual_edges.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(y));
  }
  std::sort(dual_edges.begin(), dual_edges.end());
  dual_edges.erase(std::unique(dual_edges.begin(), dual_edges.end()), dual_edges.end());
  const Graph hd = Graph::from_edges(f, dual_edges);
  std::vector<VertexId> in, out;
  for (std::size_t x = 0; x < f; ++x) (side[x] == 0 ? in : out).push_back(static_cast<VertexId>(x));
  HamiltonianDual result;
  result.side = std::move(side);
  result.inside = induced(hd, in);
  result.outside = induced(hd, out);
  return result;
}

bool is_maximal_planar(const EmbeddedGraph& eg) {
  if (eg.order() < 3 || !check_genus_zero(eg)) return false;
  for (const Face& face : faces(eg))
    if (face.length() != 3) return false;
  return true;
}

namespace {

void insert_after(std::vector<VertexId>& list, VertexId anchor, VertexId value) {
  auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it + 1, value);
}

}  // namespace

EmbeddedGraph stack_face(const EmbeddedGraph& eg, std::size_t face) {
  const FaceSet fs(eg);
  if (face >= fs.count()) throw Error("face index out of range");
  const Face& f = fs[face];
  if (f.length() != 3) throw Error("face " + std::to_string(face) + " is not a triangle");
  auto rot = eg.rotations();
  const VertexId x = static_cast<VertexId>(eg.order());
  const VertexId a = f.vertices[0], b = f.vertices[1], c = f.vertices[2];
  insert_after(rot[b], a, x);
  insert_after(rot[c], b, x);
  insert_after(rot[a], c, x);
  rot.push_back({a, c, b});
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph stack_all_faces(const EmbeddedGraph& eg) {
  if (!is_maximal_planar(eg)) throw Error("stacking every face requires a maximal planar embedding");
  const FaceSet fs(eg);
  auto rot = eg.rotations();
  for (std::size_t i = 0; i < fs.count(); ++i) {
    const Face& f = fs[i];
    const VertexId x = static_cast<VertexId>(eg.order() + i);
    const VertexId a = f.vertices[0], b = f.vertices[1], c = f.vertices[2];
    insert_after(rot[b], a, x);
    insert_after(rot[c], b, x);
    insert_after(rot[a], c, x);
    rot.push_back({a, c, b});
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph glue_into_face(const EmbeddedGraph& host, std::size_t host_face, const EmbeddedGraph& guest,
                             std::size_t guest_face) {
  const FaceSet hf(host), gf(guest);
  if (host_face >= hf.count() || guest_face >= gf.count()) throw Error("face index out of range");
  const Face& h = hf[host_face];
  const Face& g = gf[guest_face];
  if (h.length() != 3 || g.length() != 3) throw Error("gluing needs two triangular faces");
  // Guest face (x, y, z) lands on host face (a, b, c) as x->a, y->c, z->b.
  std::vector<VertexId> map(guest.order(), 0);
  std::vector<char> on_triangle(guest.order(), 0);
  const VertexId a = h.vertices[0], b = h.vertices[1], c = h.vertices[2];
  const VertexId x = g.vertices[0], y = g.vertices[1], z = g.vertices[2];
  map[x] = a;
  map[y] = c;
  map[z] = b;
  on_triangle[x] = on_triangle[y] = on_triangle[z] = 1;
  VertexId next = static_cast<VertexId>(host.order());
  for (VertexId v = 0; v < guest.order(); ++v)
    if (!on_triangle[v]) map[v] = next++;

  auto rot = host.rotations();
  rot.resize(next);
  for (VertexId v = 0; v < guest.order(); ++v)
    if (!on_triangle[v])
      for (VertexId w : guest.rotation(v)) rot[map[v]].push_back(map[w]);

  // At a host corner the face slot follows the previous face vertex; the
  // guest corner contributes the neighbors strictly between its own face
  // neighbors.
  auto splice = [&](VertexId host_v, VertexId host_prev, VertexId guest_v, VertexId guest_first) {
    std::vector<VertexId> between;
    VertexId w = guest.successor(guest_v, guest_first);
    while (!on_triangle[w]) {
      between.push_back(map[w]);
      w = guest.successor(guest_v, w);
    }
    auto& list = rot[host_v];
    auto it = std::find(list.begin(), list.end(), host_prev);
    list.insert(it + 1, between.begin(), between.end());
  };
  // Host a: slot after c. Guest x: sequence y, ..., z (succ_x(z) = y).
  splice(a, c, x, y);
  // Host b: slot after a. Guest z: sequence x, ..., y.
  splice(b, a, z, x);
  // Host c: slot after b. Guest y: sequence z, ..., x.
  splice(c, b, y, z);
  return EmbeddedGraph::from_rotation(std::move(rot));
}

InducedEmbedding induced_embedding(const EmbeddedGraph& eg, std::span<const VertexId> vertices) {
  InducedEmbedding out;
  std::vector<std::int64_t> index(eg.order(), -1);
  for (VertexId v : vertices) {
    if (v >= eg.order()) throw Error("vertex " + std::to_string(v) + " out of range");
    if (index[v] >= 0) continue;
    index[v] = static_cast<std::int64_t>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<std::vector<VertexId>> rot(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (VertexId w : eg.rotation(out.original[i]))
      if (index[w] >= 0) rot[i].push_back(static_cast<VertexId>(index[w]));
  out.embedding = EmbeddedGraph::from_rotation(std::move(rot));
  return out;
}

bool is_4mp(const EmbeddedGraph& eg) { return is_maximal_planar(eg) && vertex_connectivity(eg.graph()) >= 4; }

bool is_4mp_dual(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  return is_cubic(g) && check_genus_zero(eg) && vertex_connectivity(g) >= 3 && !has_nontrivial_3_edge_cut(g);
}

EmbeddedGraph read_rot(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word)) continue;
    if (word != "rot") throw ParseError("rot: expected header 'rot <n>'", line_no);
    long long value = -1;
    if (!(ss >> value) || value < 0) throw ParseError("rot: bad vertex count", line_no);
    std::string rest;
    if (ss >> rest) throw ParseError("rot: trailing text after vertex count", line_no);
    n = static_cast<std::size_t>(value);
    have_header = true;
  }
  if (!have_header) throw ParseError("rot: missing header", line_no);
  std::vector<std::vector<VertexId>> rot(n);
  std::vector<char> seen(n, 0);
  std::size_t rows = 0;
  while (rows < n && std::getline(in, line)) {
    ++line_no;
    auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon == std::string::npos ? line.size() : colon));
    long long id = -1;
    std::string probe;
    if (!(head >> id)) {
      if (colon == std::string::npos && line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("rot: expected '<vertex>:'", line_no);
    }
    if (colon == std::string::npos || (head >> probe)) throw ParseError("rot: expected '<vertex>:'", line_no);
    if (id < 0 || static_cast<std::size_t>(id) >= n) throw ParseError("rot: vertex id out of range", line_no);
    if (seen[id]) throw ParseError("rot: vertex listed twice", line_no);
    seen[id] = 1;
    std::istringstream body(line.substr(colon + 1));
    std::string token;
    while (body >> token) {
      std::size_t used = 0;
      long long w = -1;
      try {
        w = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw ParseError("rot: bad neighbor '" + token + "'", line_no);
      }
      if (used != token.size() || w < 0 || static_cast<std::size_t>(w) >= n)
        throw ParseError("rot: bad neighbor '" + token + "'", line_no);
      rot[id].push_back(static_cast<VertexId>(w));
    }
    ++rows;
  }
  if (rows < n) throw ParseError("rot: expected " + std::to_string(n) + " vertex lines", line_no);
  try {
    return EmbeddedGraph::from_rotation(std::move(rot));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("rot: ") + e.what(), line_no);
  }
}

void write_rot(std::ostream& out, const EmbeddedGraph& eg) {
  out << "rot " << eg.order() << '\n';
  for (VertexId v = 0; v < eg.order(); ++v) {
    out << v << ':';
    for (VertexId w : eg.rotation(v)) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace twotree
