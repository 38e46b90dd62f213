#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "polyhedra/canonical.hpp"
#include "polyhedra/catalog.hpp"
#include "polyhedra/census.hpp"
#include "polyhedra/embedding.hpp"
#include "polyhedra/transforms.hpp"

using namespace polyhedra;

namespace {

std::map<int, int> face_sizes(const Polyhedron& g) {
  std::map<int, int> out;
  for (const auto& f : g.faces()) ++out[f.size()];
  return out;
}

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no Error thrown");
  return Errc::Undecided;
}

}  // namespace

TEST_CASE("build_rotation_system accepts K4 and the cube") {
  const auto k4 = build_rotation_system(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  const auto c = cube();
  CHECK(c.vertex_count() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(c.degree(v) == 3);
}

TEST_CASE("rotation system errors") {
  CHECK(error_of([] { build_rotation_system(3, {{1, 2}, {2}, {0, 1}}); }) == Errc::AsymmetricAdjacency);
  CHECK(error_of([] { build_rotation_system(2, {{1}, {}}); }) == Errc::IsolatedVertex);
  CHECK(error_of([] { build_rotation_system(3, {{1, 2}, {0, 2}, {0}}); }) == Errc::AsymmetricAdjacency);
  CHECK(error_of([] { build_rotation_system(3, {{1, 1, 2}, {0, 2}, {0, 1}}); }) == Errc::DuplicateNeighbor);
  CHECK(error_of([] { build_rotation_system(3, {{0, 1, 2}, {0, 2}, {0, 1}}); }) == Errc::SelfLoop);
  CHECK(error_of([] { build_rotation_system(2, {{5}, {0}}); }) == Errc::VertexOutOfRange);
  CHECK(error_of([] { build_rotation_system(3, {{1}, {0}}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("face tracing on small shapes") {
  CHECK(face_sizes(validate_polyhedron(tetrahedron())) == std::map<int, int>{{3, 4}});
  CHECK(face_sizes(validate_polyhedron(cube())) == std::map<int, int>{{4, 6}});
  CHECK(face_sizes(validate_polyhedron(pyramid(8))) == std::map<int, int>{{3, 8}, {8, 1}});
  CHECK(face_sizes(validate_polyhedron(prism(8))) == std::map<int, int>{{4, 8}, {8, 2}});
}

TEST_CASE("K4 face walks follow the documented orientation") {
  const auto faces = trace_faces(tetrahedron());
  // arriving at 1 from 0, the walk continues to the successor of 0 in rot(1) = {0,3,2}
  bool found = false;
  for (const auto& f : faces) {
    const auto& b = f.boundary;
    for (int k = 0; k < 3; ++k) {
      if (b[k] == 0 && b[(k + 1) % 3] == 1) {
        CHECK(b[(k + 2) % 3] == 3);
        found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("validate_polyhedron errors") {
  // K4 minus the edge 2-3
  CHECK(error_of([] { validate_polyhedron(RotationSystem({{1, 2, 3}, {0, 3, 2}, {0, 1}, {0, 1}})); }) ==
        Errc::DegreeTooLow);
  // cube with one vertex's rotation flipped: wrong genus
  auto lists = cube().lists();
  std::reverse(lists[0].begin(), lists[0].end());
  CHECK(error_of([&] { validate_polyhedron(RotationSystem(lists)); }) == Errc::NotGenusZero);
  // two pyramids glued along the base, base vertices linked to both apexes
  // but one base vertex split off: use the t1 output of the 8-pyramid instead
  const Polyhedron p8 = validate_polyhedron(pyramid(8));
  const Face& oct = *std::find_if(p8.faces().begin(), p8.faces().end(), [](const Face& f) { return f.size() == 8; });
  const auto out = t1(p8, oct, 1, 4);
  REQUIRE(out.embedded);
  CHECK(error_of([&] { validate_polyhedron(*out.embedded); }) == Errc::NotTwoConnected);
  // the cut oracle agrees: the apex alone disconnects it
  const auto g = oracle::from_lists(out.embedded->lists());
  CHECK(oracle::k_connected(g, 1));
  CHECK_FALSE(oracle::k_connected(g, 2));
}

TEST_CASE("two K4s sharing an edge: NotThreeConnected") {
  // {0,1} separates {2,3} from {4,5}
  const oracle::Graph g = oracle::from_lists(
      {{1, 2, 3, 4, 5}, {0, 2, 3, 4, 5}, {0, 1, 3}, {0, 1, 2}, {0, 1, 5}, {0, 1, 4}});
  const auto rot = oracle::embed(g);
  REQUIRE(rot);
  CHECK(error_of([&] { validate_polyhedron(RotationSystem(*rot)); }) == Errc::NotThreeConnected);
}

TEST_CASE("degree sequences") {
  CHECK(validate_polyhedron(pyramid(8)).degree_sequence() == DegreeSequence::parse("8,3^8"));
  CHECK(validate_polyhedron(cube()).degree_sequence() == DegreeSequence::parse("3^8"));
  CHECK(validate_polyhedron(prism(8)).degree_sequence().to_string() == "3,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3");
  CHECK(DegreeSequence::parse("3, 4 ,3,5").entries == std::vector<int>{5, 4, 3, 3});
}

TEST_CASE("duals") {
  CHECK(is_isomorphic(dual(validate_polyhedron(tetrahedron())), validate_polyhedron(tetrahedron())));
  const Polyhedron oc = dual(validate_polyhedron(cube()));
  CHECK(oc.degree_sequence() == DegreeSequence::parse("4^6"));
  CHECK(is_isomorphic(oc, validate_polyhedron(octahedron())));
  CHECK(is_isomorphic(dual(validate_polyhedron(pyramid(8))), validate_polyhedron(pyramid(8))));
}

TEST_CASE("dual is an involution on the census up to 8 vertices") {
  const Census c = generate_census(8);
  for (int p = 4; p <= 8; ++p) {
    for (const auto& g : c.polyhedra(p)) {
      const Polyhedron d = dual(g);
      CHECK(d.vertex_count() == g.face_count());
      CHECK(canonical_code(dual(d)) == canonical_code(g));
    }
  }
}

TEST_CASE("polyhedron invariants over the census") {
  const Census c = generate_census(8);
  for (int p = 4; p <= 8; ++p) {
    for (const auto& g : c.polyhedra(p)) {
      const int q = g.edge_count();
      CHECK(g.vertex_count() - q + g.face_count() == 2);
      int deg = 0;
      for (Vertex v = 0; v < p; ++v) deg += g.degree(v);
      CHECK(deg == 2 * q);
      int len = 0;
      std::set<std::pair<Vertex, Vertex>> darts;
      for (const auto& f : g.faces()) {
        CHECK(f.size() >= 3);
        len += f.size();
        for (int k = 0; k < f.size(); ++k) {
          CHECK(darts.insert({f.boundary[k], f.boundary[(k + 1) % f.size()]}).second);
        }
      }
      CHECK(len == 2 * q);
      CHECK(static_cast<int>(darts.size()) == 2 * q);
      CHECK(q <= 3 * p - 6);
      for (const auto& f : g.faces()) {
        const auto nb = face_neighbors(g, f);
        for (int i = 0; i < f.size(); ++i) {
          CHECK(nb[i].contains(f.boundary[i]));
          CHECK(nb[i].contains(f.boundary[(i + 1) % f.size()]));
          CHECK(nb[i].id != f.id);
        }
      }
    }
  }
}

TEST_CASE("face_neighbors examples") {
  const Polyhedron p8 = validate_polyhedron(pyramid(8));
  for (const auto& f : p8.faces()) {
    if (f.size() != 8) continue;
    const auto nb = face_neighbors(p8, f);
    REQUIRE(nb.size() == 8);
    for (int i = 0; i < 8; ++i) {
      CHECK(nb[i].size() == 3);
      CHECK(nb[i].contains(0));
    }
  }
  const Polyhedron pr = validate_polyhedron(prism(8));
  for (const auto& f : pr.faces()) {
    if (f.size() != 8) continue;
    for (const auto& n : face_neighbors(pr, f)) CHECK(n.size() == 4);
  }
  const Polyhedron cb = validate_polyhedron(cube());
  for (const auto& n : face_neighbors(cb, cb.face(0))) CHECK(n.size() == 4);
}

TEST_CASE("pyramid detection") {
  const auto p8 = is_pyramid(validate_polyhedron(pyramid(8)));
  REQUIRE(p8);
  CHECK(p8->apex == 0);
  CHECK(p8->base.size() == 8);
  CHECK_FALSE(is_pyramid(validate_polyhedron(cube())));
  CHECK(is_pyramid(validate_polyhedron(tetrahedron())));
  CHECK_FALSE(is_pyramid(validate_polyhedron(octahedron())));
}

TEST_CASE("mirror and relabel keep the polyhedron valid") {
  std::mt19937 rng(11);
  const RotationSystem base = prism(5);
  std::vector<Vertex> perm(base.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const RotationSystem r = base.relabeled(perm);
    CHECK_FALSE(polyhedral_violation(r).has_value());
    CHECK_FALSE(polyhedral_violation(r.mirrored()).has_value());
    for (Vertex v = 0; v < base.vertex_count(); ++v) CHECK(r.degree(perm[v]) == base.degree(v));
  }
}
