#include "polyhedra/canonical.hpp"

#include <array>

namespace polyhedra {

std::string CanonicalCode::hex() const {
  static constexpr std::array<char, 16> digits{'0', '1', '2', '3', '4', '5', '6', '7',
                                               '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

namespace {

// Breadth-first relabelling from one dart; aborts as soon as the partial
// encoding exceeds the best one found so far.
class CodeSearch {
 public:
  explicit CodeSearch(const RotationSystem& rs)
      : rs_(rs), p_(rs.vertex_count()), wide_(p_ > 255), back_(p_), label_(p_, 0), ref_(p_, 0) {
    for (Vertex v = 0; v < p_; ++v) {
      const auto& r = rs.rotation(v);
      back_[v].resize(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) back_[v][k] = rs.position(r[k], v);
    }
    order_.reserve(p_);
    current_.reserve(static_cast<std::size_t>(p_ + 2 * rs.edge_count() + 3) * (wide_ ? 2 : 1));
  }

  void run(Vertex start, int start_pos, int dir) {
    std::fill(label_.begin(), label_.end(), 0);
    current_.clear();
    cursor_ = 0;
    smaller_ = !have_best_;
    if (wide_) {
      current_.push_back('\0');
      current_.push_back(static_cast<char>(p_ >> 8));
      current_.push_back(static_cast<char>(p_ & 255));
    } else {
      current_.push_back(static_cast<char>(p_));
    }
    cursor_ = current_.size();

    order_.clear();
    order_.push_back(start);
    label_[start] = 1;
    ref_[start] = start_pos;
    int next = 2;
    for (std::size_t idx = 0; idx < order_.size(); ++idx) {
      const Vertex v = order_[idx];
      const auto& r = rs_.rotation(v);
      const int d = static_cast<int>(r.size());
      int k = ref_[v];
      for (int t = 0; t < d; ++t) {
        const Vertex w = r[k];
        if (label_[w] == 0) {
          label_[w] = next++;
          ref_[w] = back_[v][k];
          order_.push_back(w);
        }
        if (!put(static_cast<unsigned>(label_[w]))) return;
        k += dir;
        if (k == d) k = 0;
        if (k < 0) k = d - 1;
      }
      if (!put(0)) return;
    }
    if (smaller_) {
      best_ = current_;
      have_best_ = true;
    }
  }

  std::string take() { return std::move(best_); }

 private:
  bool put_byte(unsigned char b) {
    if (!smaller_) {
      const auto ref = static_cast<unsigned char>(best_[cursor_]);
      if (b > ref) return false;
      if (b < ref) smaller_ = true;
    }
    current_.push_back(static_cast<char>(b));
    ++cursor_;
    return true;
  }

  bool put(unsigned value) {
    if (wide_) return put_byte(static_cast<unsigned char>(value >> 8)) && put_byte(value & 255);
    return put_byte(static_cast<unsigned char>(value));
  }

  const RotationSystem& rs_;
  int p_;
  bool wide_;
  std::vector<std::vector<int>> back_;
  std::vector<int> label_;
  std::vector<int> ref_;
  std::vector<Vertex> order_;
  std::string current_;
  std::string best_;
  std::size_t cursor_ = 0;
  bool smaller_ = true;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const RotationSystem& rs) {
  CodeSearch search(rs);
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    for (int k = 0; k < rs.degree(v); ++k) {
      search.run(v, k, +1);
      search.run(v, k, -1);
    }
  }
  return CanonicalCode(search.take());
}

CanonicalCode canonical_code(const Polyhedron& g) { return canonical_code(g.rotation_system()); }

RotationSystem decode_canonical(const CanonicalCode& code) {
  const auto bytes = code.bytes();
  std::size_t at = 0;
  auto need = [&](std::size_t n) {
    if (at + n > bytes.size()) throw Error(Errc::TruncatedRecord, "canonical code ends early");
  };
  need(1);
  bool wide = bytes[0] == 0;
  int p = 0;
  if (wide) {
    need(3);
    p = (bytes[1] << 8) | bytes[2];
    at = 3;
  } else {
    p = bytes[0];
    at = 1;
  }
  auto read = [&]() -> int {
    if (wide) {
      need(2);
      const int value = (bytes[at] << 8) | bytes[at + 1];
      at += 2;
      return value;
    }
    need(1);
    return bytes[at++];
  };
  AdjacencyLists lists(p);
  for (int v = 0; v < p; ++v) {
    for (int x = read(); x != 0; x = read()) lists[v].push_back(x - 1);
  }
  return RotationSystem(std::move(lists));
}

bool is_isomorphic(const Polyhedron& g, const Polyhedron& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
      g.degree_sequence() != h.degree_sequence()) {
    return false;
  }
  return canonical_code(g) == canonical_code(h);
}

Polyhedron mirror(const Polyhedron& g) { return g.mirrored(); }

}  // namespace polyhedra
