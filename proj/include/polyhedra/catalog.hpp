#pragma once

#include "polyhedra/embedding.hpp"

namespace polyhedra {

// Small named polyhedra, embedded with the same clockwise convention as
// planar_code input.
RotationSystem tetrahedron();
RotationSystem cube();
RotationSystem octahedron();
// Apex 0 over the base cycle 1..n (n >= 3).
RotationSystem pyramid(int n);
// Top cycle 0..n-1 over bottom cycle n..2n-1 (n >= 3).
RotationSystem prism(int n);

}  // namespace polyhedra
