#include "polyhedra/layout.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace polyhedra {

std::vector<Point> tutte_layout(const Polyhedron& g, int outer_face) {
  const auto& faces = g.faces();
  if (outer_face < 0) {
    outer_face = 0;
    for (const auto& f : faces) {
      if (f.size() > faces[outer_face].size()) outer_face = f.id;
    }
  }
  const auto& outer = faces.at(outer_face).boundary;
  const int p = g.vertex_count();
  const int m = static_cast<int>(outer.size());

  std::vector<Point> pos(p);
  std::vector<int> inner_index(p, -1);
  std::vector<bool> fixed(p, false);
  for (int k = 0; k < m; ++k) {
    const double a = 2 * std::numbers::pi * k / m;
    pos[outer[k]] = {std::cos(a), std::sin(a)};
    fixed[outer[k]] = true;
  }
  int inner = 0;
  for (Vertex v = 0; v < p; ++v) {
    if (!fixed[v]) inner_index[v] = inner++;
  }
  if (inner == 0) return pos;

  // degree * x_v - sum of free neighbours = sum of fixed neighbours
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(inner);
  Eigen::VectorXd by = Eigen::VectorXd::Zero(inner);
  for (Vertex v = 0; v < p; ++v) {
    const int r = inner_index[v];
    if (r < 0) continue;
    entries.emplace_back(r, r, static_cast<double>(g.degree(v)));
    for (Vertex u : g.rotation_system().rotation(v)) {
      if (fixed[u]) {
        bx[r] += pos[u].x;
        by[r] += pos[u].y;
      } else {
        entries.emplace_back(r, inner_index[u], -1.0);
      }
    }
  }
  Eigen::SparseMatrix<double> lap(inner, inner);
  lap.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  const Eigen::VectorXd x = solver.solve(bx);
  const Eigen::VectorXd y = solver.solve(by);
  for (Vertex v = 0; v < p; ++v) {
    if (inner_index[v] >= 0) pos[v] = {x[inner_index[v]], y[inner_index[v]]};
  }
  return pos;
}

std::string render_svg(const Polyhedron& g, int outer_face, double size) {
  const auto pos = tutte_layout(g, outer_face);
  const double margin = 24;
  const double scale = (size - 2 * margin) / 2;
  auto sx = [&](const Point& pt) { return margin + scale * (pt.x + 1); };
  auto sy = [&](const Point& pt) { return margin + scale * (1 - pt.y); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<g stroke=\"#333\" stroke-width=\"1.5\">\n";
  const auto& rs = g.rotation_system();
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    for (Vertex u : rs.rotation(v)) {
      if (u < v) continue;
      out << "<line x1=\"" << sx(pos[v]) << "\" y1=\"" << sy(pos[v]) << "\" x2=\"" << sx(pos[u]) << "\" y2=\""
          << sy(pos[u]) << "\"/>\n";
    }
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    out << "<circle cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v]) << "\" r=\"7\" fill=\"#fff\" stroke=\"#333\"/>";
    out << "<text x=\"" << sx(pos[v]) << "\" y=\"" << sy(pos[v]) + 3.5 << "\">" << v << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace polyhedra
