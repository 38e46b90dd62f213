#include "polyhedra/connectivity.hpp"

#include <algorithm>
#include <unordered_map>

namespace polyhedra {

bool face_intersections_proper(const RotationSystem& rs, const FaceTrace& trace) {
  const auto r = static_cast<std::uint64_t>(trace.faces.size());
  auto key = [r](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * r + static_cast<std::uint64_t>(b);
  };
  std::unordered_map<std::uint64_t, int> shared_vertices;
  std::unordered_map<std::uint64_t, int> shared_edges;
  const int p = rs.vertex_count();
  for (Vertex v = 0; v < p; ++v) {
    const auto& fs = trace.dart_face[v];
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        if (fs[a] == fs[b]) return false;
        ++shared_vertices[key(fs[a], fs[b])];
      }
    }
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const Vertex w = rs.rotation(v)[k];
      if (w < v) continue;
      const int other = trace.dart_face[w][rs.position(w, v)];
      if (other == fs[k]) return false;
      ++shared_edges[key(fs[k], other)];
    }
  }
  for (const auto& [pair, count] : shared_vertices) {
    if (count < 2) continue;
    if (count > 2) return false;
    const auto it = shared_edges.find(pair);
    if (it == shared_edges.end() || it->second != 1) return false;
  }
  return true;
}

bool is_three_connected_via_faces(const RotationSystem& rs) {
  const int p = rs.vertex_count();
  const FaceTrace trace = trace_face_structure(rs);
  // connectivity via a traversal of the rotation lists
  std::vector<char> seen(p, 0);
  std::vector<Vertex> stack;
  int reached = 0;
  if (p > 0) {
    stack.push_back(0);
    seen[0] = 1;
    reached = 1;
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : rs.rotation(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != p || p - rs.edge_count() + static_cast<int>(trace.faces.size()) != 2) {
    throw Error(Errc::PreconditionNotTwoConnected, "not a connected genus-0 embedding");
  }
  std::vector<int> mark(p, -1);
  for (const auto& f : trace.faces) {
    for (Vertex v : f.boundary) {
      if (mark[v] == f.id) throw Error(Errc::PreconditionNotTwoConnected, "a face walk repeats a vertex");
      mark[v] = f.id;
    }
  }
  return face_intersections_proper(rs, trace);
}

const char* cut_kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::disconnected: return "disconnected";
    case CutKind::connected: return "connected";
    case CutKind::one_cut: return "one_cut";
    case CutKind::two_connected: return "two_connected";
    case CutKind::two_cut: return "two_cut";
    case CutKind::three_connected: return "three_connected";
  }
  return "?";
}

namespace {

// Connectivity of the graph with `removed` vertices deleted. Fewer than two
// remaining vertices count as connected.
bool connected_without(const AdjacencyLists& graph, const std::vector<char>& removed, int removed_count,
                       std::vector<Vertex>& stack, std::vector<char>& seen) {
  const int p = static_cast<int>(graph.size());
  if (p - removed_count < 2) return true;
  std::fill(seen.begin(), seen.end(), 0);
  Vertex start = 0;
  while (removed[start]) ++start;
  stack.clear();
  stack.push_back(start);
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : graph[v]) {
      if (!removed[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == p - removed_count;
}

}  // namespace

CutReport connectivity_oracle(const AdjacencyLists& graph, int k) {
  const int p = static_cast<int>(graph.size());
  std::vector<char> removed(p, 0);
  std::vector<char> seen(p, 0);
  std::vector<Vertex> stack;
  CutReport report;

  if (!connected_without(graph, removed, 0, stack, seen)) {
    report.kind = CutKind::disconnected;
    return report;
  }
  report.kind = CutKind::connected;
  if (k < 2) return report;

  for (Vertex a = 0; a < p; ++a) {
    removed[a] = 1;
    if (!connected_without(graph, removed, 1, stack, seen)) report.witnesses.push_back({a});
    removed[a] = 0;
  }
  const bool has_one_cut = !report.witnesses.empty();
  report.kind = has_one_cut ? CutKind::one_cut : CutKind::two_connected;
  if (k < 3) return report;

  bool has_two_cut = false;
  for (Vertex a = 0; a < p; ++a) {
    removed[a] = 1;
    for (Vertex b = a + 1; b < p; ++b) {
      removed[b] = 1;
      if (!connected_without(graph, removed, 2, stack, seen)) {
        report.witnesses.push_back({a, b});
        has_two_cut = true;
      }
      removed[b] = 0;
    }
    removed[a] = 0;
  }
  if (!has_one_cut) report.kind = has_two_cut ? CutKind::two_cut : CutKind::three_connected;
  return report;
}

std::vector<std::pair<Vertex, Vertex>> two_cuts(const AdjacencyLists& graph) {
  const CutReport report = connectivity_oracle(graph, 3);
  if (report.kind == CutKind::disconnected || report.kind == CutKind::one_cut) {
    throw Error(Errc::NotTwoConnected, "graph has a cut vertex or is disconnected");
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& w : report.witnesses) {
    if (w.size() == 2) out.emplace_back(w[0], w[1]);
  }
  return out;
}

}  // namespace polyhedra
