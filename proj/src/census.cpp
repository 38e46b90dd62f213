#include "polyhedra/census.hpp"

#include <algorithm>
#include <unordered_set>

namespace polyhedra {

namespace {

RotationSystem tetrahedron() { return RotationSystem({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

int faces_of(const RotationSystem& rs) { return rs.edge_count() - rs.vertex_count() + 2; }

// Chords only raise degrees, so a graph can still reach sigma on its own
// level only if its sorted degrees stay below sigma's entry by entry.
bool below(const DegreeSequence& d, const DegreeSequence& sigma) {
  for (std::size_t k = 0; k < d.entries.size(); ++k) {
    if (d.entries[k] > sigma.entries[k]) return false;
  }
  return true;
}

}  // namespace

std::vector<RotationSystem> vertex_splits(const RotationSystem& g) {
  std::vector<RotationSystem> out;
  const int p = g.vertex_count();
  const Vertex y = p;
  for (Vertex v = 0; v < p; ++v) {
    const auto& rot = g.rotation(v);
    const int d = static_cast<int>(rot.size());
    const int slots = 2 * d;  // slot 2k is neighbour k, slot 2k+1 the gap after it
    for (int s1 = 0; s1 < slots; ++s1) {
      for (int s2 = s1 + 1; s2 < slots; ++s2) {
        std::vector<Vertex> x_side;
        std::vector<Vertex> y_side;
        for (int s = s1; s <= s2; ++s) {
          if (s % 2 == 0) x_side.push_back(rot[s / 2]);
        }
        for (int s = s2; s <= s1 + slots; ++s) {
          if (s % 2 == 0) y_side.push_back(rot[(s % slots) / 2]);
        }
        if (x_side.size() < 2 || y_side.size() < 2) continue;
        // a neighbour on both sides closes a triangle with the new edge
        const bool shared_start = s1 % 2 == 0;
        const bool shared_end = s2 % 2 == 0;

        AdjacencyLists lists = g.lists();
        lists.emplace_back();
        lists[v] = x_side;
        lists[v].push_back(y);
        lists[y] = y_side;
        lists[y].push_back(v);
        for (std::size_t k = shared_end ? 1 : 0; k < y_side.size(); ++k) {
          const Vertex w = y_side[k];
          if (shared_start && k + 1 == y_side.size()) continue;
          std::replace(lists[w].begin(), lists[w].end(), v, y);
        }
        if (shared_end) {
          auto& r = lists[x_side.back()];
          const auto it = std::find(r.begin(), r.end(), v);
          *it = y;
          r.insert(it + 1, v);
        }
        if (shared_start) {
          auto& r = lists[x_side.front()];
          const auto it = std::find(r.begin(), r.end(), v);
          r.insert(it + 1, y);
        }
        out.emplace_back(std::move(lists));
      }
    }
  }
  return out;
}

std::vector<RotationSystem> face_chords(const RotationSystem& g) {
  std::vector<RotationSystem> out;
  for (const auto& face : trace_faces(g)) {
    const auto& walk = face.boundary;
    const int m = static_cast<int>(walk.size());
    for (int s = 0; s < m; ++s) {
      for (int t = s + 2; t < m; ++t) {
        if (s == 0 && t == m - 1) continue;
        AdjacencyLists lists = g.lists();
        insert_edge_at_corners(lists, walk[s], walk[(s + m - 1) % m], walk[t], walk[t - 1]);
        out.emplace_back(std::move(lists));
      }
    }
  }
  return out;
}

GenerationResult expand_box(const GenerationOptions& options) {
  GenerationResult result;
  result.by_p.resize(options.max_p + 1);
  const bool bounded = options.max_faces > 0;
  std::size_t stored = 0;

  std::vector<RotationSystem> previous;
  for (int p = 4; p <= options.max_p; ++p) {
    std::unordered_set<CanonicalCode> seen;
    std::vector<RotationSystem> level;
    const bool last = p == options.max_p && options.target;
    std::size_t matches = 0;
    auto consider = [&](const RotationSystem& rs) {
      if (bounded && faces_of(rs) > options.max_faces) return;
      if (last) {
        if (rs.edge_count() * 2 > options.target->degree_sum()) return;
        if (!below(degree_sequence(rs), *options.target)) return;
      }
      if (polyhedral_violation(rs)) return;
      CanonicalCode code = canonical_code(rs);
      if (!seen.insert(code).second) return;
      level.push_back(decode_canonical(code));
      ++stored;
      if (last && degree_sequence(rs) == *options.target) ++matches;
    };
    auto over_budget = [&] {
      if (last && options.stop_after > 0 && matches >= options.stop_after) {
        result.stopped = true;
        return true;
      }
      return options.budget > 0 && stored >= options.budget;
    };

    if (p == 4) {
      consider(tetrahedron());
    } else {
      auto split_all = [&](const RotationSystem& g) {
        auto kids = vertex_splits(g);
        if (options.alternate_order) std::reverse(kids.begin(), kids.end());
        for (const auto& kid : kids) consider(kid);
      };
      if (options.alternate_order) {
        for (auto it = previous.rbegin(); it != previous.rend() && !over_budget(); ++it) split_all(*it);
      } else {
        for (std::size_t k = 0; k < previous.size() && !over_budget(); ++k) split_all(previous[k]);
      }
    }

    // close the level under chord insertion
    if (options.alternate_order) {
      std::vector<std::size_t> stack(level.size());
      for (std::size_t k = 0; k < level.size(); ++k) stack[k] = k;
      while (!stack.empty() && !over_budget()) {
        const std::size_t idx = stack.back();
        stack.pop_back();
        const std::size_t before = level.size();
        auto kids = face_chords(level[idx]);
        std::reverse(kids.begin(), kids.end());
        for (const auto& kid : kids) consider(kid);
        for (std::size_t k = before; k < level.size(); ++k) stack.push_back(k);
      }
    } else {
      for (std::size_t idx = 0; idx < level.size() && !over_budget(); ++idx) {
        const auto kids = face_chords(level[idx]);
        for (const auto& kid : kids) consider(kid);
      }
    }
    if (over_budget() && !result.stopped) result.complete = false;

    auto& codes = result.by_p[p];
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    if (!result.complete) break;
    previous = std::move(level);
  }
  return result;
}

std::size_t Census::count(int p) const {
  const auto it = by_p_.find(p);
  return it == by_p_.end() ? 0 : it->second.size();
}

const std::vector<CanonicalCode>& Census::codes(int p) const {
  static const std::vector<CanonicalCode> none;
  const auto it = by_p_.find(p);
  return it == by_p_.end() ? none : it->second;
}

const std::vector<CanonicalCode>& Census::with_sequence(const DegreeSequence& sigma) const {
  static const std::vector<CanonicalCode> none;
  const auto it = by_sequence_.find(sigma);
  return it == by_sequence_.end() ? none : it->second;
}

void Census::insert(const CanonicalCode& code) {
  if (by_code_.count(code)) return;
  const RotationSystem rs = decode_canonical(code);
  const int p = rs.vertex_count();
  max_p_ = std::max(max_p_, p);
  by_code_.emplace(code, p);
  auto& bucket = by_p_[p];
  bucket.insert(std::upper_bound(bucket.begin(), bucket.end(), code), code);
  auto& seq = by_sequence_[degree_sequence(rs)];
  seq.insert(std::upper_bound(seq.begin(), seq.end(), code), code);
}

Census Census::from_graphs(int max_p, const std::vector<RotationSystem>& graphs) {
  Census c;
  for (const auto& g : graphs) c.insert(canonical_code(g));
  c.max_p_ = std::max(c.max_p_, max_p);
  return c;
}

std::vector<RotationSystem> Census::graphs(int p) const {
  std::vector<RotationSystem> out;
  for (const auto& code : codes(p)) out.push_back(decode_canonical(code));
  return out;
}

std::vector<Polyhedron> Census::polyhedra(int p) const {
  std::vector<Polyhedron> out;
  for (const auto& code : codes(p)) out.push_back(validate_polyhedron(decode_canonical(code)));
  return out;
}

Census generate_census(int max_p, bool alternate_order) {
  if (max_p < 4 || max_p > 255) {
    throw Error(Errc::BoundTooLarge, "vertex bound must lie in 4..255, got " + std::to_string(max_p));
  }
  GenerationOptions options;
  options.max_p = max_p;
  options.alternate_order = alternate_order;
  const GenerationResult gen = expand_box(options);
  Census census;
  for (const auto& level : gen.by_p) {
    for (const auto& code : level) census.insert(code);
  }
  census.max_p_ = max_p;
  return census;
}

RealizationResult search_realizations(const DegreeSequence& sigma, const RealizationSearch& search) {
  const int p = sigma.vertex_count();
  const int sum = sigma.degree_sum();
  const bool feasible = p >= 4 && sum % 2 == 0 && sum / 2 <= 3 * p - 6 &&
                        std::all_of(sigma.entries.begin(), sigma.entries.end(), [](int d) { return d >= 3; }) &&
                        sigma.entries.front() <= p - 1;
  if (!feasible) throw Error(Errc::InfeasibleSequence, "sequence " + sigma.to_string() + " cannot be polyhedral");

  RealizationResult out;
  const std::size_t limit = search.limit.value_or(static_cast<std::size_t>(-1));
  if (search.census && p <= search.census->max_p()) {
    for (const auto& code : search.census->with_sequence(sigma)) {
      if (out.found.size() >= limit) break;
      out.found.push_back(validate_polyhedron(decode_canonical(code)));
    }
    return out;
  }
  if (p > 255) throw Error(Errc::BoundTooLarge, "sequences longer than 255 are not searched");

  GenerationOptions options;
  options.max_p = p;
  options.max_faces = sum / 2 - p + 2;
  options.budget = search.budget;
  options.target = sigma;
  if (search.limit) options.stop_after = *search.limit;
  const GenerationResult gen = expand_box(options);
  out.complete = gen.complete;
  for (const auto& code : gen.by_p[p]) {
    if (out.found.size() >= limit) break;
    RotationSystem rs = decode_canonical(code);
    if (rs.edge_count() * 2 != sum || degree_sequence(rs) != sigma) continue;
    out.found.push_back(validate_polyhedron(std::move(rs)));
  }
  return out;
}

std::vector<Polyhedron> realizations_of(const DegreeSequence& sigma, const RealizationSearch& search) {
  RealizationResult out = search_realizations(sigma, search);
  const std::size_t limit = search.limit.value_or(static_cast<std::size_t>(-1));
  if (!out.complete && out.found.size() < limit) {
    throw Error(Errc::BoundExceeded, "search budget exhausted with " + std::to_string(out.found.size()) +
                                         " realisation(s) found");
  }
  return std::move(out.found);
}

bool is_unigraphic(const DegreeSequence& sigma, const RealizationSearch& search) {
  RealizationSearch two = search;
  two.limit = 2;
  const RealizationResult out = search_realizations(sigma, two);
  if (out.found.size() >= 2) return false;
  if (out.complete) return out.found.size() == 1;
  if (out.found.size() == 1) throw Error(Errc::Undecided, "budget exhausted after one realisation");
  throw Error(Errc::BoundExceeded, "budget exhausted before any realisation was found");
}

}  // namespace polyhedra
