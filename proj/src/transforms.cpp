#include "polyhedra/transforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyhedra/connectivity.hpp"

namespace polyhedra {

const char* transform_kind_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::T1: return "T1";
    case TransformKind::T2: return "T2";
    case TransformKind::T3: return "T3";
    case TransformKind::U2: return "U2";
    case TransformKind::U3: return "U3";
    case TransformKind::Phi: return "Phi";
    case TransformKind::Psi: return "Psi";
  }
  return "?";
}

const char* rejection_name(Rejection r) {
  switch (r) {
    case Rejection::NonSimple: return "NonSimple";
    case Rejection::NotThreeConnected: return "NotThreeConnected";
    case Rejection::NotTwoConnected: return "NotTwoConnected";
    case Rejection::PreconditionFailed: return "PreconditionFailed";
  }
  return "?";
}

std::string TransformInstance::describe() const {
  std::string s = transform_kind_name(kind);
  s += "(F=[";
  for (std::size_t k = 0; k < face.boundary.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(face.boundary[k]);
  }
  s += "]";
  for (int x : params) s += "," + std::to_string(x);
  s += ")";
  if (mirrored) s += " on mirror";
  return s;
}

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

TransformOutcome make_outcome(TransformKind kind, const Face& f, std::vector<int> params) {
  TransformOutcome out;
  out.instance.kind = kind;
  out.instance.face = f;
  out.instance.params = std::move(params);
  return out;
}

TransformOutcome reject(TransformOutcome out, Rejection why, std::string detail) {
  out.rejection = why;
  out.detail = std::move(detail);
  return out;
}

// Inserts every pending edge through a face containing both ends, trying each
// order and each pair of corners until all fit.
bool thread_additions(AdjacencyLists& lists, const std::vector<Edge>& pending) {
  if (pending.empty()) return true;
  const RotationSystem rs(lists);
  const FaceTrace trace = trace_face_structure(rs);
  for (std::size_t e = 0; e < pending.size(); ++e) {
    const auto [a, b] = pending[e];
    std::vector<Edge> rest;
    for (std::size_t o = 0; o < pending.size(); ++o) {
      if (o != e) rest.push_back(pending[o]);
    }
    for (const auto& face : trace.faces) {
      const auto& walk = face.boundary;
      const int m = static_cast<int>(walk.size());
      for (int s = 0; s < m; ++s) {
        if (walk[s] != a) continue;
        for (int t = 0; t < m; ++t) {
          if (walk[t] != b) continue;
          AdjacencyLists next = lists;
          insert_edge_at_corners(next, a, walk[mod(s - 1, m)], b, walk[mod(t - 1, m)]);
          if (thread_additions(next, rest)) {
            lists = std::move(next);
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool is_connected(const RotationSystem& rs) {
  const int p = rs.vertex_count();
  std::vector<char> seen(p, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
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
  return reached == p;
}

// Applies the signed edge edits to g, embeds the additions, and classifies the
// result. `deletions_first` is needed when an added edge only becomes
// drawable once the deleted edges have merged faces (T2).
TransformOutcome apply_edits(const Polyhedron& g, TransformOutcome out,
                             const std::vector<std::pair<Edge, int>>& signed_edits, bool deletions_first,
                             const CanonicalCode* input_code) {
  const RotationSystem& rs = g.rotation_system();
  std::map<Edge, int> net;
  for (const auto& [e, sign] : signed_edits) {
    if (e.first == e.second) return reject(std::move(out), Rejection::PreconditionFailed, "edit would add a loop");
    net[normalized(e.first, e.second)] += sign;
  }
  for (const auto& [e, count] : net) {
    if (count == 0) continue;
    if (count > 1 || count < -1) {
      return reject(std::move(out), Rejection::NonSimple, "edge edited twice in the same direction");
    }
    if (count < 0) {
      if (!rs.adjacent(e.first, e.second)) {
        return reject(std::move(out), Rejection::PreconditionFailed, "deleted edge is not in the graph");
      }
      out.deleted.push_back(e);
    } else {
      if (rs.adjacent(e.first, e.second)) {
        return reject(std::move(out), Rejection::NonSimple,
                      "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " already present");
      }
      out.added.push_back(e);
    }
  }

  auto attempt = [&](bool delete_first) -> std::optional<AdjacencyLists> {
    AdjacencyLists lists = rs.lists();
    if (delete_first) {
      for (const auto& [a, b] : out.deleted) erase_edge(lists, a, b);
      if (!thread_additions(lists, out.added)) return std::nullopt;
    } else {
      if (!thread_additions(lists, out.added)) return std::nullopt;
      for (const auto& [a, b] : out.deleted) erase_edge(lists, a, b);
    }
    return lists;
  };
  auto lists = attempt(deletions_first);
  if (!lists) lists = attempt(!deletions_first);
  if (!lists) {
    // only reachable for instances outside the configurations the transforms
    // are meant for, e.g. T3 with x_i x_j separated by the other chords
    return reject(std::move(out), Rejection::PreconditionFailed, "edits cannot be drawn inside the faces of g");
  }

  RotationSystem result(std::move(*lists));
  out.embedded = result;
  if (!is_connected(result)) {
    return reject(std::move(out), Rejection::NotTwoConnected, "output is disconnected");
  }
  const FaceTrace trace = trace_face_structure(result);
  if (result.vertex_count() - result.edge_count() + static_cast<int>(trace.faces.size()) != 2) {
    throw std::logic_error("surgery broke planarity for " + out.instance.describe());
  }
  std::vector<int> mark(result.vertex_count(), -1);
  for (const auto& f : trace.faces) {
    for (Vertex v : f.boundary) {
      if (mark[v] == f.id) return reject(std::move(out), Rejection::NotTwoConnected, "output has a cut vertex");
      mark[v] = f.id;
    }
  }
  if (!face_intersections_proper(result, trace)) {
    return reject(std::move(out), Rejection::NotThreeConnected, "output has a 2-cut");
  }
  out.result = validate_polyhedron(std::move(result));
  const CanonicalCode mine = input_code ? *input_code : canonical_code(g);
  out.is_isomorphic_to_input = canonical_code(*out.result) == mine;
  return out;
}

int face_after(const Face& face, Vertex v) {
  const auto& b = face.boundary;
  const auto it = std::find(b.begin(), b.end(), v);
  const auto k = static_cast<std::size_t>(it - b.begin());
  return b[(k + 1) % b.size()];
}

}  // namespace

TransformOutcome t1(const Polyhedron& g, const Face& f, int i, int j, const CanonicalCode* input_code) {
  g.resolve(f);
  const int n = f.size();
  auto out = make_outcome(TransformKind::T1, f, {i, j});
  if (n < 6) return reject(std::move(out), Rejection::PreconditionFailed, "face has fewer than six sides");
  if (i < 0 || j < 0 || i >= n || j >= n) {
    return reject(std::move(out), Rejection::PreconditionFailed, "index out of range");
  }
  const int gap = mod(j - i, n);
  if (gap < 3 || gap > n - 3) {
    return reject(std::move(out), Rejection::PreconditionFailed, "need 3 <= |j-i| <= n-3");
  }
  const auto& u = f.boundary;
  const Vertex ui = u[i], ui1 = u[mod(i + 1, n)], uj = u[j], uj1 = u[mod(j + 1, n)];
  return apply_edits(g, std::move(out), {{{ui, uj1}, +1}, {{uj, ui1}, +1}, {{ui, ui1}, -1}, {{uj, uj1}, -1}},
                     false, input_code);
}

TransformOutcome t2(const Polyhedron& g, const Face& f, int i, int k, int j, const CanonicalCode* input_code) {
  g.resolve(f);
  const int n = f.size();
  auto out = make_outcome(TransformKind::T2, f, {i, k, j});
  if (n < 4) return reject(std::move(out), Rejection::PreconditionFailed, "face has fewer than four sides");
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
    return reject(std::move(out), Rejection::PreconditionFailed, "index out of range");
  }
  const bool backward = k == mod(i - 1, n);
  if (!backward && k != mod(i + 1, n)) {
    return reject(std::move(out), Rejection::PreconditionFailed, "u_k must be a face neighbour of u_i");
  }
  const int kj = mod(k - j, n);
  if (kj < 2 || kj > n - 2) return reject(std::move(out), Rejection::PreconditionFailed, "need 2 <= |k-j| <= n-2");
  const auto& u = f.boundary;
  const Vertex ui = u[i], uj = u[j];
  const int d = g.degree(ui), dj = g.degree(uj);
  if (d <= dj) return reject(std::move(out), Rejection::PreconditionFailed, "need deg(u_i) > deg(u_j)");

  // w_1 = u_k, then around u_i away from f
  const auto& rot = g.rotation_system().rotation(ui);
  const int start = g.rotation_system().position(ui, u[k]);
  std::vector<Vertex> w;
  for (int t = 0; t < d; ++t) w.push_back(rot[mod(start + (backward ? -t : t), d)]);
  if (w.back() != u[backward ? mod(i + 1, n) : mod(i - 1, n)]) {
    throw std::logic_error("rotation around u_i does not end at the other face neighbour");
  }
  const int moved = d - dj;
  std::vector<std::pair<Edge, int>> edits;
  for (int m = 0; m < moved; ++m) {
    if (w[m] == uj || g.rotation_system().adjacent(uj, w[m])) {
      return reject(std::move(out), Rejection::NonSimple, "u_j already adjacent to w_" + std::to_string(m + 1));
    }
    edits.push_back({{ui, w[m]}, -1});
    edits.push_back({{uj, w[m]}, +1});
  }
  return apply_edits(g, std::move(out), edits, true, input_code);
}

TransformOutcome t3(const Polyhedron& g, const Face& f, int i, Vertex xi, int j, Vertex xj,
                    const CanonicalCode* input_code) {
  const int fid = g.resolve(f);
  const int n = f.size();
  auto out = make_outcome(TransformKind::T3, f, {i, xi, j, xj});
  auto fail = [&](const char* why) { return reject(std::move(out), Rejection::PreconditionFailed, why); };
  if (n < 4) return fail("face has fewer than four sides");
  if (i < 0 || j < 0 || i >= n || j >= n) return fail("index out of range");
  const int gap = mod(j - i, n);
  if (gap < 2 || gap > n - 2) return fail("need 2 <= |j-i| <= n-2");
  const int p = g.vertex_count();
  if (xi < 0 || xj < 0 || xi >= p || xj >= p) return fail("vertex out of range");
  const auto& u = f.boundary;
  const Face& fi = g.face(g.face_of_dart(u[mod(i + 1, n)], u[i]));
  const Face& fj = g.face(g.face_of_dart(u[mod(j + 1, n)], u[j]));
  if (!fi.contains(xi) || !fj.contains(xj)) return fail("x_i must lie on F_i and x_j on F_j");
  if (g.face_contains(fid, xi) || g.face_contains(fid, xj)) return fail("x_i, x_j must be off F");
  if (xi == xj) return fail("x_i and x_j must be distinct");
  if (g.rotation_system().adjacent(xi, xj)) return fail("x_i and x_j must not be adjacent");
  bool share = false;
  for (int h : g.faces_at(xi)) share = share || g.face_contains(h, xj);
  if (!share) return fail("x_i and x_j must share a face");

  const Vertex ui = u[i], uj = u[j];
  const Vertex a1 = face_after(fi, ui), b1 = face_after(fi, xi);
  const Vertex c1 = face_after(fj, uj), d1 = face_after(fj, xj);
  return apply_edits(g, std::move(out),
                     {{{ui, uj}, +1},
                      {{ui, a1}, -1},
                      {{a1, b1}, +1},
                      {{b1, xi}, -1},
                      {{xi, xj}, +1},
                      {{xj, d1}, -1},
                      {{d1, c1}, +1},
                      {{c1, uj}, -1}},
                     false, input_code);
}

TransformOutcome u_move(const Polyhedron& g, const Face& f, int offset, int variant,
                        const CanonicalCode* input_code) {
  g.resolve(f);
  const int n = f.size();
  auto out = make_outcome(variant == 2 ? TransformKind::U2 : TransformKind::U3, f, {offset});
  auto fail = [&](const char* why) { return reject(std::move(out), Rejection::PreconditionFailed, why); };
  if (variant != 2 && variant != 3) return fail("variant must be 2 or 3");
  if (n < 4) return fail("face has fewer than four sides");
  if (offset < 0 || offset >= n) return fail("offset out of range");
  const auto& u = f.boundary;
  const Vertex u1 = u[offset], u2 = u[mod(offset + 1, n)], u3 = u[mod(offset + 2, n)], un = u[mod(offset - 1, n)];
  const Face& f2 = g.face(g.face_of_dart(u3, u2));
  const Face& f1 = g.face(g.face_of_dart(u2, u1));
  if (f2.size() != 3) return fail("F_2 must be a triangle");
  if (g.degree(u2) != 3 || g.degree(u3) != 3) return fail("u_2 and u_3 must have degree 3");
  if (f1.size() == 3) return fail("F_1 must not be a triangle");
  const Vertex x1 = face_after(f2, u2);
  const Vertex moved = variant == 2 ? u2 : u3;
  return apply_edits(g, std::move(out),
                     {{{u1, x1}, +1}, {{x1, moved}, -1}, {{moved, un}, +1}, {{un, u1}, -1}}, false,
                     input_code);
}

namespace {

TransformOutcome half_turn(const Polyhedron& g, const Face& f, int i, int shift, TransformKind kind,
                           const CanonicalCode* input_code) {
  const int n = f.size();
  if (n < 8) {
    g.resolve(f);
    auto out = make_outcome(kind, f, {i});
    return reject(std::move(out), Rejection::PreconditionFailed, "face has fewer than eight sides");
  }
  const int j = mod(i + n / 2 - shift, n);
  TransformOutcome out = t1(g, f, i, j, input_code);
  out.instance.kind = kind;
  out.instance.params = {i, j};
  return out;
}

}  // namespace

TransformOutcome phi(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code) {
  return half_turn(g, f, i, 0, TransformKind::Phi, input_code);
}

TransformOutcome psi(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code) {
  return half_turn(g, f, i, 1, TransformKind::Psi, input_code);
}

ZetaOutcome zeta(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code) {
  const CanonicalCode code = input_code ? *input_code : canonical_code(g);
  ZetaOutcome z;
  z.outcome = phi(g, f, i, &code);
  if (z.outcome.accepted() && z.outcome.is_isomorphic_to_input) {
    z.outcome = psi(g, f, i, &code);
    z.used_psi = true;
  }
  const int n = f.size();
  z.partner = n >= 8 ? mod(i + n / 2 - (z.used_psi ? 1 : 0), n) : -1;
  return z;
}

std::vector<Face> new_faces(const Polyhedron& before, const Polyhedron& after) {
  std::vector<std::vector<Vertex>> old;
  for (const auto& f : before.faces()) {
    auto s = f.boundary;
    std::sort(s.begin(), s.end());
    old.push_back(std::move(s));
  }
  std::sort(old.begin(), old.end());
  std::vector<Face> out;
  for (const auto& f : after.faces()) {
    auto s = f.boundary;
    std::sort(s.begin(), s.end());
    if (!std::binary_search(old.begin(), old.end(), s)) out.push_back(f);
  }
  return out;
}

}  // namespace polyhedra
