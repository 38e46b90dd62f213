#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyhedra/embedding.hpp"

namespace polyhedra {

// planar_code: the ASCII header ">>planar_code<<", then per graph one byte p
// followed, for each vertex in order, by its clockwise neighbours as 1-based
// bytes and a terminating 0. Graphs are limited to 255 vertices.

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// Decode errors (BadHeader, TruncatedRecord, VertexOutOfRange and the
// rotation-system checks) name the byte offset of the offending record.
std::vector<RotationSystem> read_planar_code(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_planar_code(const std::vector<RotationSystem>& graphs);

std::vector<RotationSystem> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<RotationSystem>& graphs);

}  // namespace polyhedra
