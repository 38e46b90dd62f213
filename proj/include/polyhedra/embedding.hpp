#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyhedra/error.hpp"

namespace polyhedra {

using Vertex = std::int32_t;
using AdjacencyLists = std::vector<std::vector<Vertex>>;

// Combinatorial embedding: for each vertex the cyclic, clockwise list of its
// neighbours. Vertex ids are 0..p-1.
class RotationSystem {
 public:
  RotationSystem() = default;

  // Validates symmetry and simplicity; throws Error on violation.
  explicit RotationSystem(AdjacencyLists lists);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  const AdjacencyLists& lists() const { return rot_; }

  // Index of u in rotation(v), or -1.
  int position(Vertex v, Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }
  Vertex next_around(Vertex v, Vertex u) const;
  Vertex prev_around(Vertex v, Vertex u) const;

  // Every rotation reversed.
  RotationSystem mirrored() const;
  // Vertex v becomes perm[v]; rotations keep their cyclic order.
  RotationSystem relabeled(const std::vector<Vertex>& perm) const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

 private:
  AdjacencyLists rot_;
  int edge_count_ = 0;
};

RotationSystem build_rotation_system(int p, AdjacencyLists lists);

struct Face {
  int id = 0;
  std::vector<Vertex> boundary;

  int size() const { return static_cast<int>(boundary.size()); }
  bool contains(Vertex v) const;
  // Same vertex content, ignoring ids and orientation.
  bool same_vertices(const Face& other) const;
};

// Face walks plus the dart -> face map. dart_face[v][k] is the face whose
// walk uses the dart v -> rotation(v)[k].
struct FaceTrace {
  std::vector<Face> faces;
  std::vector<std::vector<int>> dart_face;
};

// Arriving at v from u, a face walk leaves along the successor of u in the
// rotation of v. Every dart lies on exactly one walk.
FaceTrace trace_face_structure(const RotationSystem& rs);
std::vector<Face> trace_faces(const RotationSystem& rs);

struct DegreeSequence {
  std::vector<int> entries;  // non-increasing

  static DegreeSequence from_degrees(std::vector<int> degrees);
  static DegreeSequence parse(const std::string& text);
  int vertex_count() const { return static_cast<int>(entries.size()); }
  int degree_sum() const;
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

DegreeSequence degree_sequence(const RotationSystem& rs);

// A validated 3-connected planar embedding with its faces cached.
class Polyhedron {
 public:
  const RotationSystem& rotation_system() const { return rs_; }
  int vertex_count() const { return rs_.vertex_count(); }
  int edge_count() const { return rs_.edge_count(); }
  int face_count() const { return static_cast<int>(trace_.faces.size()); }
  int degree(Vertex v) const { return rs_.degree(v); }
  const std::vector<Face>& faces() const { return trace_.faces; }
  const Face& face(int id) const { return trace_.faces[id]; }
  const DegreeSequence& degree_sequence() const { return degseq_; }

  // Face whose walk contains the dart from -> to; -1 if not an edge.
  int face_of_dart(Vertex from, Vertex to) const;
  // Ids of faces around v, in rotation order.
  const std::vector<int>& faces_at(Vertex v) const { return trace_.dart_face[v]; }
  bool face_contains(int face_id, Vertex v) const;
  // Resolves a face given by boundary walk to its id; throws if f is not a
  // face of this polyhedron with the same orientation.
  int resolve(const Face& f) const;

  Polyhedron mirrored() const;

  friend Polyhedron validate_polyhedron(RotationSystem rs);

 private:
  Polyhedron(RotationSystem rs, FaceTrace trace);

  RotationSystem rs_;
  FaceTrace trace_;
  DegreeSequence degseq_;
};

Polyhedron validate_polyhedron(RotationSystem rs);

// Non-throwing form of the checks behind validate_polyhedron. On success the
// face trace is handed back through `trace_out` when given.
std::optional<Errc> polyhedral_violation(const RotationSystem& rs, FaceTrace* trace_out = nullptr);

inline DegreeSequence degree_sequence(const Polyhedron& g) { return g.degree_sequence(); }

// Vertices are the faces of g; two are adjacent when the faces share an edge.
Polyhedron dual(const Polyhedron& g);

// Entry i is the face other than f containing the edge u_i u_{i+1}, where
// f.boundary = u_0 .. u_{n-1}.
std::vector<Face> face_neighbors(const Polyhedron& g, const Face& f);
std::vector<int> face_neighbor_ids(const Polyhedron& g, int face_id);

struct PyramidShape {
  Vertex apex;
  Face base;
};

// Wheel detection; K4 counts as the 3-gonal pyramid.
std::optional<PyramidShape> is_pyramid(const Polyhedron& g);

// Undirected simple graph view of a rotation system (neighbour sets unordered).
AdjacencyLists adjacency_of(const RotationSystem& rs);

// Inserts the edge a-b through a common face. `after_a` is the neighbour of a
// after which b is inserted in rotation(a) (the dart entering a's corner on
// that face); likewise for b. Empty rotations accept any placement.
void insert_edge_at_corners(AdjacencyLists& rot, Vertex a, Vertex after_a, Vertex b, Vertex after_b);
void erase_edge(AdjacencyLists& rot, Vertex a, Vertex b);

}  // namespace polyhedra
