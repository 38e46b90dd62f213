#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "polyhedra/embedding.hpp"

namespace polyhedra {

// Isomorphism-class key for polyhedra. The bytes are a planar_code record
// (vertex count, then 1-based neighbour lists each closed by 0) of a
// canonically relabelled copy of the graph, so a code decodes back to a
// rotation system of the same class.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  std::span<const std::uint8_t> bytes() const {
    return {reinterpret_cast<const std::uint8_t*>(bytes_.data()), bytes_.size()};
  }
  const std::string& raw() const { return bytes_; }
  bool empty() const { return bytes_.empty(); }
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

// Minimum over every starting dart and both chiralities of the breadth-first
// encoding driven by rotation order. Complete for 3-connected planar graphs;
// for other connected embeddings it only identifies the embedding.
CanonicalCode canonical_code(const RotationSystem& rs);
CanonicalCode canonical_code(const Polyhedron& g);

// The rotation system a code encodes (vertex ids in canonical order).
RotationSystem decode_canonical(const CanonicalCode& code);

bool is_isomorphic(const Polyhedron& g, const Polyhedron& h);

Polyhedron mirror(const Polyhedron& g);

}  // namespace polyhedra

template <>
struct std::hash<polyhedra::CanonicalCode> {
  std::size_t operator()(const polyhedra::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.raw());
  }
};
