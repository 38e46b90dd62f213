#include "polyhedra/report.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "polyhedra/planar_code.hpp"

namespace polyhedra {

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(),
                                static_cast<int>(bytes.size()));
  out.resize(n);
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) throw std::invalid_argument("base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out(3 * text.size() / 4 + 1);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw std::invalid_argument("malformed base64");
  // EVP_DecodeBlock keeps the zero bytes that padding stands for
  std::size_t pad = 0;
  if (!text.empty() && text.back() == '=') ++pad;
  if (text.size() > 1 && text[text.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  return out;
}

namespace {

std::string encode_graph(const RotationSystem& g) { return base64_encode(write_planar_code({g})); }

}  // namespace

nlohmann::json report_json(const RotationSystem& input, const WitnessReport& report) {
  nlohmann::json doc;
  doc["input"] = encode_graph(input);
  doc["stage"] = stage_name(report.stage);
  if (report.transform) {
    nlohmann::json t;
    t["kind"] = transform_kind_name(report.transform->kind);
    t["face"] = report.transform->face.boundary;
    t["params"] = report.transform->params;
    t["mirrored"] = report.transform->mirrored;
    doc["transform"] = std::move(t);
  } else {
    doc["transform"] = nullptr;
  }
  if (report.output) {
    doc["output"] = encode_graph(report.output->rotation_system());
  } else {
    doc["output"] = nullptr;
  }
  doc["checks"] = {
      {"degree_sequence", report.checks.same_degree_sequence},
      {"planar", report.checks.planar},
      {"three_connected", report.checks.three_connected},
      {"non_isomorphic", report.checks.non_isomorphic},
  };
  doc["diagnostics"] = report.diagnostics;
  return doc;
}

RotationSystem graph_from_report_field(const std::string& field) {
  const auto graphs = read_planar_code(base64_decode(field));
  if (graphs.size() != 1) {
    throw Error(Errc::TruncatedRecord, "report field holds " + std::to_string(graphs.size()) + " graphs, expected 1");
  }
  return graphs.front();
}

}  // namespace polyhedra
