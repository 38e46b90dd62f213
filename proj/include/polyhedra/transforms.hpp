#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyhedra/canonical.hpp"
#include "polyhedra/embedding.hpp"

namespace polyhedra {

// Face-index conventions used throughout this header: f.boundary = u_0..u_{n-1}
// is a face walk of g, indices are taken mod n, and F_i is the face on the
// other side of the edge u_i u_{i+1} (the face holding the dart u_{i+1} -> u_i).
// Walks of F_i therefore run u_i -> ... -> u_{i+1}.

enum class TransformKind { T1, T2, T3, U2, U3, Phi, Psi };
enum class Rejection { NonSimple, NotThreeConnected, NotTwoConnected, PreconditionFailed };

const char* transform_kind_name(TransformKind kind);
const char* rejection_name(Rejection r);

using Edge = std::pair<Vertex, Vertex>;

struct TransformInstance {
  TransformKind kind = TransformKind::T1;
  Face face;
  // The instance was applied to the mirror image of the input polyhedron.
  bool mirrored = false;
  // T1: (i, j); T2: (i, k, j); T3: (i, x_i, j, x_j); U2/U3: (offset);
  // Phi/Psi: (i, j) with j the partner index chosen.
  std::vector<int> params;

  std::string describe() const;
};

struct TransformOutcome {
  TransformInstance instance;
  std::optional<Polyhedron> result;
  std::optional<Rejection> rejection;
  std::string detail;
  bool is_isomorphic_to_input = false;
  // The embedded output graph whenever the surgery was carried out, including
  // rejected outcomes that are simple but not 3-connected.
  std::optional<RotationSystem> embedded;
  std::vector<Edge> deleted;
  std::vector<Edge> added;

  bool accepted() const { return result.has_value(); }
};

// The optional `input_code` saves recomputing the input's canonical code when
// many instances are applied to one polyhedron.

// Exchanges u_i u_{i+1}, u_j u_{j+1} for u_i u_{j+1}, u_j u_{i+1}.
// Requires n >= 6 and 3 <= (j - i) mod n <= n - 3.
TransformOutcome t1(const Polyhedron& g, const Face& f, int i, int j,
                    const CanonicalCode* input_code = nullptr);

// Moves the first deg(u_i) - deg(u_j) edges around u_i, starting from u_k
// (k = i-1 or i+1) and sweeping away from f, over to u_j.
TransformOutcome t2(const Polyhedron& g, const Face& f, int i, int k, int j,
                    const CanonicalCode* input_code = nullptr);

// G + u_i u_j - u_i a1 + a1 b1 - b1 x_i + x_i x_j - x_j d1 + d1 c1 - c1 u_j, where
// a1, b1 follow u_i, x_i on the walk of F_i and c1, d1 follow u_j, x_j on F_j.
TransformOutcome t3(const Polyhedron& g, const Face& f, int i, Vertex xi, int j, Vertex xj,
                    const CanonicalCode* input_code = nullptr);

// With u_1..u_3 = u_offset..u_offset+2, u_n = u_offset-1 and F_2 the triangle
// [u_2, u_3, x_1]: variant 2 builds G + u_1x_1 - x_1u_2 + u_2u_n - u_nu_1,
// variant 3 builds G + u_1x_1 - x_1u_3 + u_3u_n - u_nu_1.
TransformOutcome u_move(const Polyhedron& g, const Face& f, int offset, int variant,
                        const CanonicalCode* input_code = nullptr);

TransformOutcome phi(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code = nullptr);
TransformOutcome psi(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code = nullptr);

struct ZetaOutcome {
  TransformOutcome outcome;
  bool used_psi = false;
  int partner = 0;  // index j paired with i
};

// phi_i unless phi_i yields a graph isomorphic to g, in which case psi_i.
ZetaOutcome zeta(const Polyhedron& g, const Face& f, int i, const CanonicalCode* input_code = nullptr);

// Faces of `after` whose vertex content is not the content of any face of `before`.
std::vector<Face> new_faces(const Polyhedron& before, const Polyhedron& after);

}  // namespace polyhedra
