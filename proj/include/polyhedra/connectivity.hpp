#pragma once

#include <utility>
#include <vector>

#include "polyhedra/embedding.hpp"

namespace polyhedra {

// Production 3-connectivity check on an embedding: every two distinct faces
// meet in nothing, one vertex, or the two ends of a shared edge.
// Requires a connected genus-0 embedding whose face walks are cycles.
bool face_intersections_proper(const RotationSystem& rs, const FaceTrace& trace);

// Throws PreconditionNotTwoConnected when the embedding is not a connected
// genus-0 embedding with cycle faces.
bool is_three_connected_via_faces(const RotationSystem& rs);

enum class CutKind { disconnected, connected, one_cut, two_connected, two_cut, three_connected };

const char* cut_kind_name(CutKind kind);

struct CutReport {
  CutKind kind = CutKind::connected;
  // Disconnecting vertex sets of size 1 or 2, each sorted ascending.
  std::vector<std::vector<Vertex>> witnesses;
};

// Brute force: removes every vertex subset of size < k (k in 1..3) and tests
// the rest for connectivity by traversal.
CutReport connectivity_oracle(const AdjacencyLists& graph, int k);

// All separation pairs of a 2-connected graph, lexicographic.
// Throws NotTwoConnected otherwise.
std::vector<std::pair<Vertex, Vertex>> two_cuts(const AdjacencyLists& graph);

}  // namespace polyhedra
