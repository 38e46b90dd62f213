#include "polyhedra/planar_code.hpp"

#include <fstream>
#include <iterator>

namespace polyhedra {

std::vector<RotationSystem> read_planar_code(std::span<const std::uint8_t> bytes) {
  const std::size_t hlen = kPlanarCodeHeader.size();
  if (bytes.size() < hlen ||
      !std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin(),
                  [](char c, std::uint8_t b) { return static_cast<std::uint8_t>(c) == b; })) {
    throw Error(Errc::BadHeader, "missing >>planar_code<< header at offset 0");
  }
  std::vector<RotationSystem> out;
  std::size_t at = hlen;
  while (at < bytes.size()) {
    const std::size_t record = at;
    const int p = bytes[at++];
    if (p == 0) {
      throw Error(Errc::VertexOutOfRange,
                  "graph #" + std::to_string(out.size()) + " at offset " + std::to_string(record) +
                      ": 16-bit records are not supported");
    }
    AdjacencyLists lists(p);
    for (int v = 0; v < p; ++v) {
      while (true) {
        if (at >= bytes.size()) {
          throw Error(Errc::TruncatedRecord, "graph #" + std::to_string(out.size()) + " at offset " +
                                                 std::to_string(record) + " ends inside vertex " +
                                                 std::to_string(v + 1));
        }
        const int x = bytes[at++];
        if (x == 0) break;
        if (x > p) {
          throw Error(Errc::VertexOutOfRange, "graph #" + std::to_string(out.size()) + ", byte offset " +
                                                  std::to_string(at - 1) + ": neighbour " + std::to_string(x) +
                                                  " exceeds " + std::to_string(p));
        }
        lists[v].push_back(x - 1);
      }
    }
    try {
      out.emplace_back(std::move(lists));
    } catch (const Error& e) {
      throw Error(e.code(), "graph #" + std::to_string(out.size()) + " at offset " + std::to_string(record) +
                                ": " + e.what());
    }
  }
  return out;
}

std::vector<std::uint8_t> write_planar_code(const std::vector<RotationSystem>& graphs) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& g : graphs) {
    const int p = g.vertex_count();
    if (p < 1 || p > 255) {
      throw Error(Errc::VertexOutOfRange, "planar_code holds 1..255 vertices, got " + std::to_string(p));
    }
    out.push_back(static_cast<std::uint8_t>(p));
    for (Vertex v = 0; v < p; ++v) {
      for (Vertex u : g.rotation(v)) out.push_back(static_cast<std::uint8_t>(u + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<RotationSystem> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_planar_code(bytes);
}

void write_planar_code_file(const std::string& path, const std::vector<RotationSystem>& graphs) {
  const auto bytes = write_planar_code(graphs);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace polyhedra
