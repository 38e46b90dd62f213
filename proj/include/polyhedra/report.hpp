#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "polyhedra/embedding.hpp"
#include "polyhedra/witness.hpp"

namespace polyhedra {

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
// Throws std::invalid_argument on characters outside the alphabet.
std::vector<std::uint8_t> base64_decode(const std::string& text);

// One report object: input and output are base64 single-graph planar_code
// files, output is null when the stage is "failed".
nlohmann::json report_json(const RotationSystem& input, const WitnessReport& report);

// Inverse of the "input"/"output" fields.
RotationSystem graph_from_report_field(const std::string& field);

}  // namespace polyhedra
