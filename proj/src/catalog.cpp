#include "polyhedra/catalog.hpp"

namespace polyhedra {

RotationSystem tetrahedron() { return pyramid(3); }

RotationSystem cube() { return prism(4); }

RotationSystem octahedron() {
  AdjacencyLists lists(6);
  lists[0] = {1, 2, 3, 4};
  lists[5] = {4, 3, 2, 1};
  for (int k = 1; k <= 4; ++k) {
    const int prev = k == 1 ? 4 : k - 1;
    const int next = k == 4 ? 1 : k + 1;
    lists[k] = {0, prev, 5, next};
  }
  return RotationSystem(std::move(lists));
}

RotationSystem pyramid(int n) {
  if (n < 3) throw Error(Errc::DegreeTooLow, "pyramid base needs at least 3 vertices");
  AdjacencyLists lists(n + 1);
  for (int k = 1; k <= n; ++k) {
    lists[0].push_back(k);
    const int prev = k == 1 ? n : k - 1;
    const int next = k == n ? 1 : k + 1;
    lists[k] = {0, prev, next};
  }
  return RotationSystem(std::move(lists));
}

RotationSystem prism(int n) {
  if (n < 3) throw Error(Errc::DegreeTooLow, "prism needs at least 3 vertices per cycle");
  AdjacencyLists lists(2 * n);
  for (int k = 0; k < n; ++k) {
    const int prev = (k + n - 1) % n;
    const int next = (k + 1) % n;
    lists[k] = {next, prev, k + n};
    lists[k + n] = {prev + n, next + n, k};
  }
  return RotationSystem(std::move(lists));
}

}  // namespace polyhedra
