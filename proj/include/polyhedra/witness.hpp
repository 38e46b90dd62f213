#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyhedra/canonical.hpp"
#include "polyhedra/embedding.hpp"
#include "polyhedra/transforms.hpp"

namespace polyhedra {

// Given a non-pyramidal polyhedron g and a face f with at least eight sides,
// find_second_realization builds a polyhedron with the same degree sequence
// that is not isomorphic to g:
//
//  1. zeta: for each i, phi_i pairs i with i + n/2 and psi_i with i + n/2 - 1
//     (both T1). phi_i and psi_i cannot both return g, so zeta_i picks the one
//     that does not; any zeta_i that stays 3-connected is a witness.
//  2. Otherwise every zeta_i image has a separating pair (x_i, y_i) with x_i on
//     F_i. All x_i sit on one face F' in cyclic order. After relabelling f,
//     either x_0, x_2, x_4, x_6 are distinct with x_0, x_4 off f (apply T3), or
//     F_1 = [u_1, u_2, x_0] is a triangle with deg(u_1) = deg(u_2) = 3 (apply
//     T2 when deg(u_0) >= 4, the U moves when F_0 is not a triangle).
//  3. A brute-force sweep over every transform instance, kept so the tool
//     stays total; reaching it is logged as a diagnostic.
//
// Every candidate is checked directly (degree multiset, planarity,
// 3-connectivity, canonical code) before it is returned.

enum class Stage { zeta, condition3_T3, condition4_T2, condition4_U, exhaustive_fallback, failed };
enum class Lemma1Case { distinct, triangle_fan };

const char* stage_name(Stage s);

struct ObstructionEntry {
  bool used_psi = false;
  int partner = 0;  // j paired with i by zeta_i
  Vertex x = 0;     // on F_i
  Vertex y = 0;     // on F_j
};

struct Lemma1Result {
  Lemma1Case which = Lemma1Case::distinct;
  int offset = 0;
  bool reversed = false;
};

struct ObstructionProfile {
  std::vector<ObstructionEntry> entries;  // indexed by i
  int common_face = -1;                   // id of F' in g
  std::optional<Lemma1Result> classification;
};

struct Attempt {
  Stage stage = Stage::zeta;
  TransformOutcome outcome;
};

struct WitnessChecks {
  bool same_degree_sequence = false;
  bool planar = false;
  bool three_connected = false;
  bool non_isomorphic = false;

  bool all() const { return same_degree_sequence && planar && three_connected && non_isomorphic; }
};

struct WitnessReport {
  CanonicalCode input_code;
  Face face;
  Stage stage = Stage::failed;
  std::optional<TransformInstance> transform;
  std::optional<Polyhedron> output;
  CanonicalCode output_code;
  WitnessChecks checks;
  std::vector<std::string> diagnostics;
  std::vector<Attempt> attempts;
  std::vector<ObstructionProfile> profiles;
};

// Throws PreconditionFailed for faces under eight sides and for pyramids.
WitnessReport find_second_realization(const Polyhedron& g, const Face& f);

// Requires every zeta_i image to fail 3-connectivity (PreconditionFailed
// otherwise); throws NoObstructionFound when no consistent selection exists.
std::vector<ObstructionProfile> obstruction_profile(const Polyhedron& g, const Face& f);

// Every relabelling (offset, orientation) under which the profile meets one of
// the two normal forms; distinct-case matches are listed first.
std::vector<Lemma1Result> lemma1_candidates(const Polyhedron& g, const Face& f, const ObstructionProfile& profile);
// First candidate; throws ClassificationFailed when there is none.
Lemma1Result lemma1_classify(const Polyhedron& g, const Face& f, const ObstructionProfile& profile);

// Faces F for which another face meets every face adjacent to F, each paired
// with one such face.
std::vector<std::pair<Face, Face>> property_P_faces(const Polyhedron& g);
bool has_property_P(const Polyhedron& g, int face_id);

}  // namespace polyhedra
