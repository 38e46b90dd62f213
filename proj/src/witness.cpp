#include "polyhedra/witness.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "polyhedra/connectivity.hpp"

namespace polyhedra {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::zeta: return "zeta";
    case Stage::condition3_T3: return "condition3_T3";
    case Stage::condition4_T2: return "condition4_T2";
    case Stage::condition4_U: return "condition4_U";
    case Stage::exhaustive_fallback: return "exhaustive_fallback";
    case Stage::failed: return "failed";
  }
  return "?";
}

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

constexpr std::size_t kMaxSelections = 512;

// Face ids F_0..F_{n-1} around f.
std::vector<int> side_faces(const Polyhedron& g, const Face& f) {
  const int n = f.size();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = g.face_of_dart(f.boundary[mod(i + 1, n)], f.boundary[i]);
  return out;
}

bool share_face(const Polyhedron& g, Vertex a, Vertex b) {
  if (a == b) return true;
  for (int h : g.faces_at(a)) {
    if (g.face_contains(h, b)) return true;
  }
  return false;
}

std::vector<ZetaOutcome> all_zetas(const Polyhedron& g, const Face& f, const CanonicalCode& code) {
  std::vector<ZetaOutcome> out;
  for (int i = 0; i < f.size(); ++i) out.push_back(zeta(g, f, i, &code));
  return out;
}

// Candidate obstruction pairs per index, as (x, y) with x on F_i.
std::vector<std::vector<std::pair<Vertex, Vertex>>> obstruction_pairs(const Polyhedron& g, const Face& f,
                                                                       const std::vector<ZetaOutcome>& zetas) {
  const int n = f.size();
  const int fid = g.resolve(f);
  const auto sides = side_faces(g, f);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out(n);
  for (int i = 0; i < n; ++i) {
    const auto& z = zetas[i];
    if (z.outcome.accepted() || !z.outcome.embedded) {
      throw Error(Errc::PreconditionFailed, "zeta_" + std::to_string(i) + " does not break 3-connectivity");
    }
    const CutReport cuts = connectivity_oracle(adjacency_of(*z.outcome.embedded), 3);
    const int fi = sides[i];
    const int fj = sides[z.partner];
    auto consider = [&](Vertex x, Vertex y) {
      if (!g.face_contains(fi, x) || !g.face_contains(fj, y)) return;
      if (g.face_contains(fid, x) && g.face_contains(fid, y)) return;
      if (!share_face(g, x, y)) return;
      out[i].emplace_back(x, y);
    };
    for (const auto& w : cuts.witnesses) {
      if (w.size() == 1) {
        consider(w[0], w[0]);
      } else {
        consider(w[0], w[1]);
        consider(w[1], w[0]);
      }
    }
  }
  return out;
}

std::vector<ObstructionProfile> build_profiles(const Polyhedron& g, const Face& f,
                                               const std::vector<ZetaOutcome>& zetas) {
  const int n = f.size();
  const int fid = g.resolve(f);
  const auto pairs = obstruction_pairs(g, f, zetas);
  for (int i = 0; i < n; ++i) {
    if (pairs[i].empty()) {
      throw Error(Errc::NoObstructionFound, "no separating pair for zeta_" + std::to_string(i));
    }
  }

  std::set<std::pair<int, std::vector<Vertex>>> seen;
  std::vector<ObstructionProfile> profiles;
  for (const auto& common : g.faces()) {
    if (common.id == fid) continue;
    const int m = common.size();
    // positions on F' of the admissible x_i
    std::vector<std::vector<int>> positions(n);
    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      for (int t = 0; t < m; ++t) {
        const Vertex v = common.boundary[t];
        const bool admissible =
            std::any_of(pairs[i].begin(), pairs[i].end(), [&](const auto& xy) { return xy.first == v; });
        if (admissible) positions[i].push_back(t);
      }
      feasible = !positions[i].empty();
    }
    if (!feasible) continue;

    for (int dir : {+1, -1}) {
      std::vector<int> chosen(n);
      // x_0..x_{n-1} must wind around F' at most once, in direction dir
      auto dfs = [&](auto&& self, int i, int travelled) -> void {
        if (profiles.size() >= kMaxSelections) return;
        if (i == n) {
          const int closing = mod(dir * (chosen[0] - chosen[n - 1]), m);
          const int total = travelled + closing;
          if (total != m && total != 0) return;
          std::vector<Vertex> xs(n);
          for (int k = 0; k < n; ++k) xs[k] = common.boundary[chosen[k]];
          if (!seen.insert({common.id, xs}).second) return;
          ObstructionProfile prof;
          prof.common_face = common.id;
          for (int k = 0; k < n; ++k) {
            ObstructionEntry e;
            e.used_psi = zetas[k].used_psi;
            e.partner = zetas[k].partner;
            e.x = xs[k];
            for (const auto& [x, y] : pairs[k]) {
              if (x == xs[k]) {
                e.y = y;
                break;
              }
            }
            prof.entries.push_back(e);
          }
          profiles.push_back(std::move(prof));
          return;
        }
        for (int pos : positions[i]) {
          const int step = i == 0 ? 0 : mod(dir * (pos - chosen[i - 1]), m);
          if (travelled + step > m) continue;
          chosen[i] = pos;
          self(self, i + 1, travelled + step);
        }
      };
      dfs(dfs, 0, 0);
    }
  }
  if (profiles.empty()) {
    throw Error(Errc::NoObstructionFound, "no face carries a cyclically ordered choice of x_i");
  }
  for (auto& prof : profiles) {
    const auto c = lemma1_candidates(g, f, prof);
    if (!c.empty()) prof.classification = c.front();
  }
  return profiles;
}

// The labelling of f that a Lemma1Result describes: the polyhedron to act on
// (g or its mirror) and the face walk starting at the relabelled u_0.
struct View {
  Polyhedron graph;
  Face face;
};

View relabelled_view(const Polyhedron& g, const Face& f, int offset, bool reversed) {
  const int n = f.size();
  View view{reversed ? g.mirrored() : g, Face{}};
  for (int k = 0; k < n; ++k) {
    view.face.boundary.push_back(f.boundary[mod(reversed ? offset - k : offset + k, n)]);
  }
  view.face.id = view.graph.resolve(view.face);
  return view;
}

WitnessChecks verify(const Polyhedron& g, const CanonicalCode& code, const TransformOutcome& out) {
  WitnessChecks c;
  if (!out.accepted()) return c;
  const Polyhedron& h = *out.result;
  c.same_degree_sequence = h.degree_sequence() == g.degree_sequence();
  c.planar = h.vertex_count() - h.edge_count() + h.face_count() == 2;
  c.three_connected = is_three_connected_via_faces(h.rotation_system());
  c.non_isomorphic = canonical_code(h) != code;
  return c;
}

bool settle(WitnessReport& report, const Polyhedron& g, Stage stage, const TransformOutcome& out) {
  const WitnessChecks c = verify(g, report.input_code, out);
  if (!c.all()) return false;
  report.stage = stage;
  report.transform = out.instance;
  report.output = out.result;
  report.output_code = canonical_code(*out.result);
  report.checks = c;
  return true;
}

bool exhaustive_search(WitnessReport& report, const Polyhedron& g) {
  const CanonicalCode& code = report.input_code;
  for (bool reversed : {false, true}) {
    const Polyhedron view = reversed ? g.mirrored() : g;
    auto tag = [&](TransformOutcome out) {
      out.instance.mirrored = reversed;
      return out;
    };
    for (const auto& h : view.faces()) {
      const int n = h.size();
      const auto sides = side_faces(view, h);
      for (int i = 0; i < n; ++i) {
        if (!reversed && n >= 6) {
          for (int j = 0; j < n; ++j) {
            const int gap = mod(j - i, n);
            if (gap < 3 || gap > n - 3 || j < i) continue;
            if (settle(report, g, Stage::exhaustive_fallback, tag(t1(view, h, i, j, &code)))) return true;
          }
        }
        if (!reversed) {
          for (int k : {mod(i - 1, n), mod(i + 1, n)}) {
            for (int j = 0; j < n; ++j) {
              if (j == i || view.degree(h.boundary[j]) >= view.degree(h.boundary[i])) continue;
              const int kj = mod(k - j, n);
              if (kj < 2 || kj > n - 2) continue;
              if (settle(report, g, Stage::exhaustive_fallback, tag(t2(view, h, i, k, j, &code)))) return true;
            }
          }
        }
        for (int variant : {2, 3}) {
          if (settle(report, g, Stage::exhaustive_fallback, tag(u_move(view, h, i, variant, &code)))) return true;
        }
        for (int j = 0; j < n; ++j) {
          const int gap = mod(j - i, n);
          if (gap < 2 || gap > n - 2) continue;
          for (Vertex xi : view.face(sides[i]).boundary) {
            if (view.face_contains(h.id, xi)) continue;
            for (Vertex xj : view.face(sides[j]).boundary) {
              if (xj == xi || view.face_contains(h.id, xj)) continue;
              if (view.rotation_system().adjacent(xi, xj) || !share_face(view, xi, xj)) continue;
              if (settle(report, g, Stage::exhaustive_fallback, tag(t3(view, h, i, xi, j, xj, &code)))) {
                return true;
              }
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<Lemma1Result> lemma1_candidates(const Polyhedron& g, const Face& f, const ObstructionProfile& profile) {
  const int n = f.size();
  const int fid = g.resolve(f);
  const auto sides = side_faces(g, f);
  std::vector<Lemma1Result> distinct;
  std::vector<Lemma1Result> fan;
  if (n < 8 || static_cast<int>(profile.entries.size()) != n) return {};
  for (bool reversed : {false, true}) {
    for (int r = 0; r < n; ++r) {
      auto x = [&](int k) { return profile.entries[mod(reversed ? r - k - 1 : r + k, n)].x; };
      auto u = [&](int k) { return f.boundary[mod(reversed ? r - k : r + k, n)]; };
      auto side = [&](int k) { return sides[mod(reversed ? r - k - 1 : r + k, n)]; };

      const std::set<Vertex> four{x(0), x(2), x(4), x(6)};
      if (four.size() == 4 && !g.face_contains(fid, x(0)) && !g.face_contains(fid, x(4))) {
        distinct.push_back({Lemma1Case::distinct, r, reversed});
      }

      const Face& f1 = g.face(side(1));
      const bool triangle = f1.size() == 3 && f1.contains(u(1)) && f1.contains(u(2)) && f1.contains(x(0));
      if (triangle && g.degree(u(1)) == 3 && g.degree(u(2)) == 3 && side(0) != profile.common_face &&
          side(1) != profile.common_face && side(2) != profile.common_face &&
          (g.degree(u(0)) >= 4 || g.face(side(0)).size() != 3)) {
        fan.push_back({Lemma1Case::triangle_fan, r, reversed});
      }
    }
  }
  distinct.insert(distinct.end(), fan.begin(), fan.end());
  return distinct;
}

Lemma1Result lemma1_classify(const Polyhedron& g, const Face& f, const ObstructionProfile& profile) {
  const auto c = lemma1_candidates(g, f, profile);
  if (c.empty()) throw Error(Errc::ClassificationFailed, "profile matches neither normal form");
  return c.front();
}

std::vector<ObstructionProfile> obstruction_profile(const Polyhedron& g, const Face& f) {
  if (f.size() < 8) throw Error(Errc::PreconditionFailed, "face has fewer than eight sides");
  const CanonicalCode code = canonical_code(g);
  return build_profiles(g, f, all_zetas(g, f, code));
}

WitnessReport find_second_realization(const Polyhedron& g, const Face& f) {
  g.resolve(f);
  const int n = f.size();
  if (n < 8) throw Error(Errc::PreconditionFailed, "face has fewer than eight sides");
  if (is_pyramid(g)) throw Error(Errc::PreconditionFailed, "pyramids have a unique realisation");

  WitnessReport report;
  report.face = f;
  report.input_code = canonical_code(g);
  const CanonicalCode& code = report.input_code;

  // Stage 1
  const auto zetas = all_zetas(g, f, code);
  for (int i = 0; i < n; ++i) {
    const auto& z = zetas[i];
    if (z.outcome.accepted() && z.outcome.is_isomorphic_to_input) {
      report.diagnostics.push_back("phi_" + std::to_string(i) + " and psi_" + std::to_string(i) +
                                   " both isomorphic to the input");
    }
    report.attempts.push_back({Stage::zeta, z.outcome});
    if (settle(report, g, Stage::zeta, z.outcome)) return report;
  }

  // Stage 2
  try {
    report.profiles = build_profiles(g, f, zetas);
  } catch (const Error& e) {
    report.diagnostics.push_back(e.what());
  }
  std::set<std::string> tried;
  auto attempt = [&](Stage stage, TransformOutcome out, bool reversed) {
    out.instance.mirrored = reversed;
    if (!tried.insert(out.instance.describe()).second) return false;
    report.attempts.push_back({stage, out});
    return settle(report, g, stage, out);
  };
  bool any_classified = false;
  for (const auto& prof : report.profiles) {
    for (const auto& lab : lemma1_candidates(g, f, prof)) {
      any_classified = true;
      const View view = relabelled_view(g, f, lab.offset, lab.reversed);
      auto xr = [&](int k) { return prof.entries[mod(lab.reversed ? lab.offset - k - 1 : lab.offset + k, n)].x; };
      if (lab.which == Lemma1Case::distinct) {
        if (attempt(Stage::condition3_T3, t3(view.graph, view.face, 0, xr(0), 4, xr(4), &code), lab.reversed)) {
          return report;
        }
        continue;
      }
      if (view.graph.degree(view.face.boundary[0]) >= 4) {
        for (int j : {1, 2}) {
          if (attempt(Stage::condition4_T2, t2(view.graph, view.face, 0, n - 1, j, &code), lab.reversed)) {
            return report;
          }
        }
      }
      if (view.graph.face(view.graph.face_of_dart(view.face.boundary[1], view.face.boundary[0])).size() != 3) {
        for (int variant : {2, 3}) {
          if (attempt(Stage::condition4_U, u_move(view.graph, view.face, 0, variant, &code), lab.reversed)) {
            return report;
          }
        }
      }
    }
  }
  if (!report.profiles.empty() && !any_classified) {
    report.diagnostics.push_back("ClassificationFailed: no profile matches either normal form");
  }

  // Stage 3
  report.diagnostics.push_back("stages 1-2 produced no witness; running exhaustive fallback");
  if (exhaustive_search(report, g)) return report;
  report.stage = Stage::failed;
  report.diagnostics.push_back("no transform instance yields a second realisation");
  return report;
}

bool has_property_P(const Polyhedron& g, int face_id) {
  const auto adjacent = face_neighbor_ids(g, face_id);
  for (const auto& other : g.faces()) {
    if (other.id == face_id) continue;
    const bool meets_all = std::all_of(adjacent.begin(), adjacent.end(), [&](int a) {
      return std::any_of(other.boundary.begin(), other.boundary.end(),
                         [&](Vertex v) { return g.face_contains(a, v); });
    });
    if (meets_all) return true;
  }
  return false;
}

std::vector<std::pair<Face, Face>> property_P_faces(const Polyhedron& g) {
  std::vector<std::pair<Face, Face>> out;
  for (const auto& f : g.faces()) {
    const auto adjacent = face_neighbor_ids(g, f.id);
    for (const auto& other : g.faces()) {
      if (other.id == f.id) continue;
      const bool meets_all = std::all_of(adjacent.begin(), adjacent.end(), [&](int a) {
        return std::any_of(other.boundary.begin(), other.boundary.end(),
                           [&](Vertex v) { return g.face_contains(a, v); });
      });
      if (meets_all) {
        out.emplace_back(f, other);
        break;
      }
    }
  }
  return out;
}

}  // namespace polyhedra
