#pragma once

#include <string>
#include <vector>

#include "polyhedra/embedding.hpp"

namespace polyhedra {

struct Point {
  double x = 0;
  double y = 0;
};

// Tutte drawing: the outer face sits on a regular polygon of radius 1 and
// every other vertex is the average of its neighbours. For a polyhedron this
// is a straight-line planar drawing with convex faces.
// outer_face < 0 picks a largest face.
std::vector<Point> tutte_layout(const Polyhedron& g, int outer_face = -1);

// Standalone SVG document with 0-based vertex labels.
std::string render_svg(const Polyhedron& g, int outer_face = -1, double size = 480.0);

}  // namespace polyhedra
