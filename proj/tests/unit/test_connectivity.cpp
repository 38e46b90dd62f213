#include "doctest.h"

#include <algorithm>

#include "oracle.hpp"
#include "polyhedra/catalog.hpp"
#include "polyhedra/census.hpp"
#include "polyhedra/connectivity.hpp"
#include "polyhedra/transforms.hpp"

using namespace polyhedra;

namespace {

RotationSystem embedded(const AdjacencyLists& lists) {
  const auto rot = oracle::embed(oracle::from_lists(lists));
  REQUIRE(rot);
  return RotationSystem(*rot);
}

bool disconnects(const AdjacencyLists& g, const std::vector<Vertex>& cut) {
  std::vector<char> gone(g.size(), 0);
  for (Vertex v : cut) gone[v] = 1;
  Vertex start = 0;
  while (gone[start]) ++start;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g[v]) {
      if (gone[u] || seen[u]) continue;
      seen[u] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached + cut.size() < g.size();
}

}  // namespace

TEST_CASE("face criterion examples") {
  CHECK(is_three_connected_via_faces(cube()));
  CHECK(is_three_connected_via_faces(prism(8)));
  // K_{2,3}: three quadrilaterals pairwise sharing the two opposite hubs
  const RotationSystem k23 = embedded({{2, 3, 4}, {2, 3, 4}, {0, 1}, {0, 1}, {0, 1}});
  CHECK_FALSE(is_three_connected_via_faces(k23));
}

TEST_CASE("face criterion precondition") {
  // path a-b-c: faces are not cycles
  const RotationSystem path({{1}, {0, 2}, {1}});
  CHECK_THROWS_AS(is_three_connected_via_faces(path), Error);
  try {
    is_three_connected_via_faces(path);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionNotTwoConnected);
  }
}

TEST_CASE("cut oracle examples") {
  CHECK(connectivity_oracle(tetrahedron().lists(), 3).kind == CutKind::three_connected);
  const auto path = connectivity_oracle({{1}, {0, 2}, {1}}, 2);
  CHECK(path.kind == CutKind::one_cut);
  REQUIRE(path.witnesses.size() == 1);
  CHECK(path.witnesses[0] == std::vector<Vertex>{1});
  CHECK(connectivity_oracle({{1}, {0}, {}}, 3).kind == CutKind::disconnected);
}

TEST_CASE("t1 on the 8-pyramid leaves the apex as a cut vertex") {
  const Polyhedron g = validate_polyhedron(pyramid(8));
  const Face& oct = *std::find_if(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.size() == 8; });
  const auto out = t1(g, oct, 1, 4);
  REQUIRE(out.embedded);
  const auto lists = adjacency_of(*out.embedded);
  const auto rep = connectivity_oracle(lists, 2);
  CHECK(rep.kind == CutKind::one_cut);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0] == std::vector<Vertex>{0});
  // cross-check with the test-side oracle: removing the apex disconnects
  CHECK(disconnects(lists, {0}));
  CHECK_FALSE(oracle::k_connected(oracle::from_lists(lists), 2));
}

TEST_CASE("two_cuts examples") {
  CHECK(two_cuts(cube().lists()).empty());
  const auto c4 = two_cuts({{1, 3}, {0, 2}, {1, 3}, {0, 2}});
  CHECK(c4 == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(two_cuts({{1}, {0, 2}, {1}}), Error);
}

TEST_CASE("every reported witness disconnects") {
  const Census census = generate_census(7);
  for (int p = 4; p <= 7; ++p) {
    for (const auto& g : census.graphs(p)) {
      // knock out an edge to get graphs that do have cuts
      for (Vertex v = 0; v < p; ++v) {
        auto lists = g.lists();
        const Vertex u = lists[v].front();
        erase_edge(lists, v, u);
        const auto adj = AdjacencyLists(lists);
        const auto rep = connectivity_oracle(adj, 3);
        for (const auto& w : rep.witnesses) CHECK(disconnects(adj, w));
        const bool three = rep.kind == CutKind::three_connected;
        CHECK(three == oracle::k_connected(oracle::from_lists(adj), 3));
      }
    }
  }
}

TEST_CASE("face criterion agrees with the oracle on the census and on edge-deleted graphs") {
  const Census census = generate_census(8);
  for (int p = 4; p <= 8; ++p) {
    for (const auto& g : census.graphs(p)) {
      CHECK(is_three_connected_via_faces(g));
      CHECK(connectivity_oracle(adjacency_of(g), 3).kind == CutKind::three_connected);
      for (Vertex v = 0; v < p; v += 2) {
        auto lists = g.lists();
        erase_edge(lists, v, lists[v].back());
        const RotationSystem h(lists);
        const auto rep = connectivity_oracle(adjacency_of(h), 3);
        if (rep.kind == CutKind::one_cut || rep.kind == CutKind::disconnected) {
          CHECK_THROWS_AS(is_three_connected_via_faces(h), Error);
        } else {
          CHECK(is_three_connected_via_faces(h) == (rep.kind == CutKind::three_connected));
        }
      }
    }
  }
}
