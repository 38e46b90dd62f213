#include "polyhedra/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyhedra/connectivity.hpp"

namespace polyhedra {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Errc::DuplicateNeighbor: return "DuplicateNeighbor";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::NotGenusZero: return "NotGenusZero";
    case Errc::NotTwoConnected: return "NotTwoConnected";
    case Errc::NotThreeConnected: return "NotThreeConnected";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::PreconditionNotTwoConnected: return "PreconditionNotTwoConnected";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NoObstructionFound: return "NoObstructionFound";
    case Errc::ClassificationFailed: return "ClassificationFailed";
    case Errc::InfeasibleSequence: return "InfeasibleSequence";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::Undecided: return "Undecided";
    case Errc::BadHeader: return "BadHeader";
    case Errc::TruncatedRecord: return "TruncatedRecord";
  }
  return "Unknown";
}

RotationSystem::RotationSystem(AdjacencyLists lists) : rot_(std::move(lists)) {
  const int p = vertex_count();
  std::vector<int> mark(p, -1);
  long degree_sum = 0;
  for (Vertex v = 0; v < p; ++v) {
    const auto& r = rot_[v];
    if (r.empty() && p >= 2) {
      throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " has no neighbours");
    }
    for (Vertex u : r) {
      if (u < 0 || u >= p) {
        throw Error(Errc::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " lists neighbour " + std::to_string(u));
      }
      if (u == v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(v));
      if (mark[u] == v) {
        throw Error(Errc::DuplicateNeighbor,
                    "vertex " + std::to_string(v) + " lists " + std::to_string(u) + " twice");
      }
      mark[u] = v;
    }
    degree_sum += static_cast<long>(r.size());
  }
  for (Vertex v = 0; v < p; ++v) {
    for (Vertex u : rot_[v]) {
      if (position(u, v) < 0) {
        throw Error(Errc::AsymmetricAdjacency,
                    std::to_string(u) + " in rotation of " + std::to_string(v) + " but not vice versa");
      }
    }
  }
  edge_count_ = static_cast<int>(degree_sum / 2);
}

int RotationSystem::position(Vertex v, Vertex u) const {
  const auto& r = rot_[v];
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == u) return static_cast<int>(k);
  }
  return -1;
}

Vertex RotationSystem::next_around(Vertex v, Vertex u) const {
  const auto& r = rot_[v];
  const int k = position(v, u);
  return r[(k + 1) % r.size()];
}

Vertex RotationSystem::prev_around(Vertex v, Vertex u) const {
  const auto& r = rot_[v];
  const int k = position(v, u);
  return r[(k + r.size() - 1) % r.size()];
}

RotationSystem RotationSystem::mirrored() const {
  RotationSystem out = *this;
  for (auto& r : out.rot_) std::reverse(r.begin(), r.end());
  return out;
}

RotationSystem RotationSystem::relabeled(const std::vector<Vertex>& perm) const {
  AdjacencyLists out(rot_.size());
  for (std::size_t v = 0; v < rot_.size(); ++v) {
    auto& dst = out[perm[v]];
    dst.reserve(rot_[v].size());
    for (Vertex u : rot_[v]) dst.push_back(perm[u]);
  }
  return RotationSystem(std::move(out));
}

RotationSystem build_rotation_system(int p, AdjacencyLists lists) {
  if (p < 1 || static_cast<int>(lists.size()) != p) {
    throw Error(Errc::VertexOutOfRange, "expected " + std::to_string(p) + " neighbour lists, got " +
                                            std::to_string(lists.size()));
  }
  return RotationSystem(std::move(lists));
}

bool Face::contains(Vertex v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

bool Face::same_vertices(const Face& other) const {
  if (boundary.size() != other.boundary.size()) return false;
  auto a = boundary;
  auto b = other.boundary;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

FaceTrace trace_face_structure(const RotationSystem& rs) {
  FaceTrace out;
  const int p = rs.vertex_count();
  out.dart_face.resize(p);
  for (Vertex v = 0; v < p; ++v) out.dart_face[v].assign(rs.degree(v), -1);

  for (Vertex v0 = 0; v0 < p; ++v0) {
    for (int k0 = 0; k0 < rs.degree(v0); ++k0) {
      if (out.dart_face[v0][k0] >= 0) continue;
      Face face;
      face.id = static_cast<int>(out.faces.size());
      Vertex v = v0;
      int k = k0;
      while (out.dart_face[v][k] < 0) {
        out.dart_face[v][k] = face.id;
        face.boundary.push_back(v);
        const Vertex w = rs.rotation(v)[k];
        const int back = rs.position(w, v);
        k = (back + 1) % rs.degree(w);
        v = w;
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<Face> trace_faces(const RotationSystem& rs) { return trace_face_structure(rs).faces; }

DegreeSequence DegreeSequence::from_degrees(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return DegreeSequence{std::move(degrees)};
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
  std::vector<int> degrees;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    int repeat = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      repeat = std::stoi(token.substr(caret + 1));
      token = token.substr(0, caret);
    }
    const int d = std::stoi(token);
    for (int r = 0; r < repeat; ++r) degrees.push_back(d);
  }
  return from_degrees(std::move(degrees));
}

int DegreeSequence::degree_sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string DegreeSequence::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries[k]);
  }
  return s;
}

DegreeSequence degree_sequence(const RotationSystem& rs) {
  std::vector<int> d(rs.vertex_count());
  for (Vertex v = 0; v < rs.vertex_count(); ++v) d[v] = rs.degree(v);
  return DegreeSequence::from_degrees(std::move(d));
}

Polyhedron::Polyhedron(RotationSystem rs, FaceTrace trace)
    : rs_(std::move(rs)), trace_(std::move(trace)), degseq_(polyhedra::degree_sequence(rs_)) {}

int Polyhedron::face_of_dart(Vertex from, Vertex to) const {
  const int k = rs_.position(from, to);
  return k < 0 ? -1 : trace_.dart_face[from][k];
}

bool Polyhedron::face_contains(int face_id, Vertex v) const {
  const auto& fs = trace_.dart_face[v];
  return std::find(fs.begin(), fs.end(), face_id) != fs.end();
}

int Polyhedron::resolve(const Face& f) const {
  const int n = f.size();
  if (n < 3) throw Error(Errc::PreconditionFailed, "face has fewer than three vertices");
  const int id = face_of_dart(f.boundary[0], f.boundary[1]);
  if (id < 0 || face(id).size() != n) {
    throw Error(Errc::PreconditionFailed, "not a face of this polyhedron");
  }
  for (int k = 0; k < n; ++k) {
    if (face_of_dart(f.boundary[k], f.boundary[(k + 1) % n]) != id) {
      throw Error(Errc::PreconditionFailed, "not a face of this polyhedron");
    }
  }
  return id;
}

Polyhedron Polyhedron::mirrored() const { return validate_polyhedron(rs_.mirrored()); }

namespace {

bool is_connected(const RotationSystem& rs) {
  const int p = rs.vertex_count();
  if (p == 0) return true;
  std::vector<char> seen(p, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : rs.rotation(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == p;
}

bool faces_are_cycles(const FaceTrace& trace, int p) {
  std::vector<int> mark(p, -1);
  for (const auto& f : trace.faces) {
    for (Vertex v : f.boundary) {
      if (mark[v] == f.id) return false;
      mark[v] = f.id;
    }
  }
  return true;
}

}  // namespace

std::optional<Errc> polyhedral_violation(const RotationSystem& rs, FaceTrace* trace_out) {
  const int p = rs.vertex_count();
  if (p < 4) return Errc::DegreeTooLow;
  for (Vertex v = 0; v < p; ++v) {
    if (rs.degree(v) < 3) return Errc::DegreeTooLow;
  }
  if (!is_connected(rs)) return Errc::NotTwoConnected;
  FaceTrace trace = trace_face_structure(rs);
  if (p - rs.edge_count() + static_cast<int>(trace.faces.size()) != 2) return Errc::NotGenusZero;
  if (!faces_are_cycles(trace, p)) return Errc::NotTwoConnected;
  if (!face_intersections_proper(rs, trace)) return Errc::NotThreeConnected;
  if (trace_out) *trace_out = std::move(trace);
  return std::nullopt;
}

Polyhedron validate_polyhedron(RotationSystem rs) {
  FaceTrace trace;
  if (const auto err = polyhedral_violation(rs, &trace)) {
    std::string what;
    switch (*err) {
      case Errc::DegreeTooLow: what = "fewer than four vertices or a vertex of degree below 3"; break;
      case Errc::NotTwoConnected: what = "graph is disconnected or has a cut vertex"; break;
      case Errc::NotGenusZero: what = "embedding is not planar (p - q + r != 2)"; break;
      default: what = "two faces meet in more than a vertex or an edge"; break;
    }
    throw Error(*err, what);
  }
  return Polyhedron(std::move(rs), std::move(trace));
}

Polyhedron dual(const Polyhedron& g) {
  AdjacencyLists lists(g.face_count());
  for (const auto& f : g.faces()) {
    const int n = f.size();
    auto& dst = lists[f.id];
    dst.reserve(n);
    for (int k = 0; k < n; ++k) {
      dst.push_back(g.face_of_dart(f.boundary[(k + 1) % n], f.boundary[k]));
    }
  }
  return validate_polyhedron(RotationSystem(std::move(lists)));
}

std::vector<int> face_neighbor_ids(const Polyhedron& g, int face_id) {
  const auto& b = g.face(face_id).boundary;
  const int n = static_cast<int>(b.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = g.face_of_dart(b[(i + 1) % n], b[i]);
  return out;
}

std::vector<Face> face_neighbors(const Polyhedron& g, const Face& f) {
  const int id = g.resolve(f);
  const auto& b = f.boundary;
  const int n = f.size();
  std::vector<Face> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(g.face(g.face_of_dart(b[(i + 1) % n], b[i])));
  (void)id;
  return out;
}

std::optional<PyramidShape> is_pyramid(const Polyhedron& g) {
  const int p = g.vertex_count();
  for (Vertex a = 0; a < p; ++a) {
    if (g.degree(a) != p - 1) continue;
    const Face* base = nullptr;
    int avoiding = 0;
    for (const auto& f : g.faces()) {
      if (!g.face_contains(f.id, a)) {
        ++avoiding;
        base = &f;
      }
    }
    if (avoiding == 1 && base->size() == p - 1) return PyramidShape{a, *base};
  }
  return std::nullopt;
}

AdjacencyLists adjacency_of(const RotationSystem& rs) { return rs.lists(); }

void insert_edge_at_corners(AdjacencyLists& rot, Vertex a, Vertex after_a, Vertex b, Vertex after_b) {
  auto insert_after = [&](Vertex v, Vertex after, Vertex w) {
    auto& r = rot[v];
    if (r.empty()) {
      r.push_back(w);
      return;
    }
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, w);
  };
  insert_after(a, after_a, b);
  insert_after(b, after_b, a);
}

void erase_edge(AdjacencyLists& rot, Vertex a, Vertex b) {
  std::erase(rot[a], b);
  std::erase(rot[b], a);
}

}  // namespace polyhedra
