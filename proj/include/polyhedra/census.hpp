#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "polyhedra/canonical.hpp"
#include "polyhedra/embedding.hpp"

namespace polyhedra {

// Isomorph-free list of all polyhedra up to a vertex bound.
class Census {
 public:
  Census() = default;
  // Deduplicates by canonical code.
  static Census from_graphs(int max_p, const std::vector<RotationSystem>& graphs);

  int max_p() const { return max_p_; }
  std::size_t size() const { return by_code_.size(); }
  std::size_t count(int p) const;
  // Codes of p-vertex entries, ascending.
  const std::vector<CanonicalCode>& codes(int p) const;
  bool contains(const CanonicalCode& code) const { return by_code_.count(code) > 0; }
  const std::vector<CanonicalCode>& with_sequence(const DegreeSequence& sigma) const;
  const std::map<DegreeSequence, std::vector<CanonicalCode>>& by_sequence() const { return by_sequence_; }

  // Canonical embeddings of the p-vertex entries, in code order.
  std::vector<RotationSystem> graphs(int p) const;
  std::vector<Polyhedron> polyhedra(int p) const;

  void insert(const CanonicalCode& code);

  friend Census generate_census(int max_p, bool alternate_order);

 private:
  int max_p_ = 0;
  std::map<CanonicalCode, int> by_code_;  // code -> p
  std::map<int, std::vector<CanonicalCode>> by_p_;
  std::map<DegreeSequence, std::vector<CanonicalCode>> by_sequence_;
};

struct GenerationOptions {
  int max_p = 4;
  // Only polyhedra with at most this many faces are generated; <= 0 means no
  // bound. Both expansions never lose faces, so the box stays closed.
  int max_faces = 0;
  // Second traversal: depth-first closure, reversed iteration orders.
  bool alternate_order = false;
  // Abort once this many graphs are stored (0 = unlimited).
  std::size_t budget = 0;
  // Realisation mode: on the last level keep only graphs that chords can still
  // complete to this sequence, and stop after `stop_after` exact matches
  // (0 = never).
  std::optional<DegreeSequence> target;
  std::size_t stop_after = 0;
};

struct GenerationResult {
  std::vector<std::vector<CanonicalCode>> by_p;  // index p; each ascending
  bool complete = true;   // false when the budget ran out
  bool stopped = false;   // stop_after matches reached before the level closed
};

// Closure of K4 under vertex splitting and face-chord insertion, deduplicated
// by canonical code, restricted to the box in `options`.
GenerationResult expand_box(const GenerationOptions& options);

// Throws BoundTooLarge unless 4 <= max_p <= 255.
Census generate_census(int max_p, bool alternate_order);
inline Census generate_census(int max_p) { return generate_census(max_p, false); }

// All graphs obtained from g by splitting one vertex into two adjacent ones.
std::vector<RotationSystem> vertex_splits(const RotationSystem& g);
// All graphs obtained from g by drawing one chord across a face.
std::vector<RotationSystem> face_chords(const RotationSystem& g);

struct RealizationSearch {
  std::optional<std::size_t> limit;
  const Census* census = nullptr;
  std::size_t budget = 4'000'000;
};

struct RealizationResult {
  std::vector<Polyhedron> found;
  bool complete = true;  // false: budget ran out before the search closed
};

// The raw search behind the two calls below; never throws BoundExceeded.
RealizationResult search_realizations(const DegreeSequence& sigma, const RealizationSearch& search = {});

// Pairwise non-isomorphic polyhedra with degree sequence sigma (at most
// `limit`). Throws InfeasibleSequence when the necessary conditions fail and
// BoundExceeded when the budget ran out before `limit` realisations were found.
std::vector<Polyhedron> realizations_of(const DegreeSequence& sigma, const RealizationSearch& search = {});

// Throws Undecided when the search is budget-limited and found exactly one.
bool is_unigraphic(const DegreeSequence& sigma, const RealizationSearch& search = {});

}  // namespace polyhedra
