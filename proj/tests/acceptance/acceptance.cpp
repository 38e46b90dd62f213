// Acceptance run: one PASS/FAIL line per criterion 1-8.
//
// usage: acceptance [--expect-fail N]... [--report FILE]
// Exit status is 0 when the failing criteria are exactly the ones named with
// --expect-fail, so a known failure stays visible without hiding new ones.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "random_polyhedra.hpp"
#include "polyhedra/canonical.hpp"
#include "polyhedra/catalog.hpp"
#include "polyhedra/census.hpp"
#include "polyhedra/connectivity.hpp"
#include "polyhedra/witness.hpp"

using namespace polyhedra;

namespace {

struct Verdicts {
  std::map<int, bool> pass;
  std::ostringstream text;

  void line(int id, bool ok, const std::string& what) {
    pass[id] = ok;
    const std::string s = std::string(ok ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + what;
    std::cout << s << std::endl;
    text << s << '\n';
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Polyhedron> all_of_census(const Census& c) {
  std::vector<Polyhedron> out;
  for (int p = 4; p <= c.max_p(); ++p) {
    for (auto& g : c.polyhedra(p)) out.push_back(std::move(g));
  }
  return out;
}

// face criterion, with "not even 2-connected" read as false
bool face_verdict(const RotationSystem& rs) {
  try {
    return is_three_connected_via_faces(rs);
  } catch (const Error&) {
    return false;
  }
}

bool cut_verdict(const RotationSystem& rs) {
  return connectivity_oracle(adjacency_of(rs), 3).kind == CutKind::three_connected;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  std::string report_path = "acceptance_report.txt";
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--expect-fail" && a + 1 < argc) {
      expected_fail.insert(std::stoi(argv[++a]));
    } else if (arg == "--report" && a + 1 < argc) {
      report_path = argv[++a];
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]... [--report FILE]\n";
      return 2;
    }
  }
  Verdicts v;
  const auto t0 = std::chrono::steady_clock::now();

  const Census census = generate_census(10);
  const double gen_time = seconds_since(t0);

  // 1: every non-pyramid with an 8+-gon, every such face
  int c1_instances = 0, c1_fail = 0, c3_instances = 0, c3_counter = 0;
  std::map<Stage, int> c1_stages;
  for (int p = 4; p <= 10; ++p) {
    for (const auto& g : census.polyhedra(p)) {
      if (is_pyramid(g)) continue;
      for (const auto& f : g.faces()) {
        if (f.size() < 8) continue;
        ++c1_instances;
        const WitnessReport r = find_second_realization(g, f);
        ++c1_stages[r.stage];
        bool ok = r.stage != Stage::failed && r.output.has_value();
        if (ok) {
          const RotationSystem& out = r.output->rotation_system();
          const oracle::Graph og = checks::to_oracle(out);
          const oracle::Graph ig = checks::to_oracle(g.rotation_system());
          ok = degree_sequence(out) == g.degree_sequence() && checks::euler_ok(out) && oracle::k_connected(og, 3) &&
               canonical_code(out) != canonical_code(g) && oracle::canonical_mask(og) != oracle::canonical_mask(ig);
        }
        c1_fail += !ok;
        if (r.stage == Stage::condition3_T3 && r.output) {
          ++c3_instances;
          for (const auto& nf : new_faces(g, *r.output)) {
            for (const auto& h : r.output->faces()) {
              if (h.same_vertices(nf) && has_property_P(*r.output, h.id)) ++c3_counter;
            }
          }
        }
      }
    }
  }
  {
    std::string stages;
    for (const auto& [s, n] : c1_stages) stages += fmt(" %s=%d", stage_name(s), n);
    v.line(1, c1_instances > 0 && c1_fail == 0,
           fmt("desk-scale sweep p<=10: %d instances, %d failures;", c1_instances, c1_fail) + stages);
  }

  // 2: counts, oracle classes to p = 7, second configuration to p = 10
  {
    const std::vector<std::size_t> want{1, 2, 7, 34, 257, 2606, 32300};
    bool counts = true;
    std::string got;
    for (int p = 4; p <= 10; ++p) {
      counts = counts && census.count(p) == want[p - 4];
      got += fmt(" %zu", census.count(p));
    }
    bool oracle_ok = true;
    for (int p = 4; p <= 7; ++p) {
      std::set<CanonicalCode> from_oracle;
      for (const auto& og : oracle::polyhedral_classes(p)) {
        const auto rot = oracle::embed(og);
        if (!rot) {
          oracle_ok = false;
          continue;
        }
        from_oracle.insert(canonical_code(validate_polyhedron(build_rotation_system(p, AdjacencyLists(rot->begin(), rot->end())))));
      }
      const auto& ours = census.codes(p);
      oracle_ok = oracle_ok && from_oracle == std::set<CanonicalCode>(ours.begin(), ours.end());
    }
    const Census alt = generate_census(10, true);
    bool alt_ok = true;
    for (int p = 4; p <= 10; ++p) alt_ok = alt_ok && alt.codes(p) == census.codes(p);
    v.line(2, counts && oracle_ok && alt_ok,
           "counts p=4..10:" + got + fmt("; oracle classes p<=7 %s; second configuration p<=10 %s (generation %.1fs)",
                                         oracle_ok ? "match" : "differ", alt_ok ? "matches" : "differs", gen_time));
  }

  // 3: pyramids over 3..9-gons by census lookup
  {
    RealizationSearch lookup;
    lookup.census = &census;
    int ok = 0;
    for (int n = 3; n <= 9; ++n) {
      const DegreeSequence sigma = validate_polyhedron(pyramid(n)).degree_sequence();
      ok += is_unigraphic(sigma, lookup) ? 1 : 0;
    }
    v.line(3, ok == 7, fmt("pyramid sequences p=4..10 unigraphic: %d/7", ok));
  }

  // 4: phi_i and psi_i never both return the input
  {
    long checked = 0, violations = 0;
    auto scan = [&](const Polyhedron& g) {
      const auto code = canonical_code(g);
      for (const auto& f : g.faces()) {
        if (f.size() < 8) continue;
        for (int i = 0; i < f.size(); ++i) {
          ++checked;
          violations += phi(g, f, i, &code).is_isomorphic_to_input && psi(g, f, i, &code).is_isomorphic_to_input;
        }
      }
    };
    for (int p = 4; p <= 10; ++p) {
      for (const auto& g : census.polyhedra(p)) scan(g);
    }
    const long census_checked = checked;
    for (const auto& g : sample::grown(7, 1000)) scan(g);
    v.line(4, violations == 0 && census_checked > 0,
           fmt("(face, i) pairs: %ld on the census, %ld with the seeded sample; violations %ld", census_checked, checked,
               violations));
  }

  // 5 and 6: transform instances across the census
  long applicable = 0, accepted = 0, inv_bad = 0, t1_iso_seen = 0, t1_iso_bad = 0, t1_cut_seen = 0, t1_cut_bad = 0,
       t2_iso_seen = 0, t2_iso_bad = 0, outputs = 0, output_disagree = 0;
  {
    auto visit = [&](const Polyhedron& g, const Face& f, const TransformOutcome& o) {
      if (o.rejection == Rejection::PreconditionFailed) return;
      ++applicable;
      const auto& pa = o.instance.params;
      if (o.accepted()) {
        ++accepted;
        inv_bad += !checks::preserves_invariants(g, o);
      }
      const bool t1 = o.instance.kind == TransformKind::T1;
      if (t1 && o.accepted() && o.is_isomorphic_to_input) {
        ++t1_iso_seen;
        t1_iso_bad += !checks::t1_iso_implication(g, f, pa[0], pa[1], o);
      }
      if (t1 && !o.accepted() && o.embedded) {
        ++t1_cut_seen;
        t1_cut_bad += !checks::t1_cut_implication(g, f, pa[0], pa[1], o);
      }
      if (o.instance.kind == TransformKind::T2 && o.accepted() && o.is_isomorphic_to_input) {
        ++t2_iso_seen;
        t2_iso_bad += !checks::t2_iso_implication(g, f, pa[0], pa[1], pa[2], o);
      }
      const RotationSystem* out = o.accepted() ? &o.result->rotation_system() : o.embedded ? &*o.embedded : nullptr;
      if (out) {
        ++outputs;
        output_disagree += face_verdict(*out) != cut_verdict(*out);
      }
    };
    for (int p = 4; p <= 9; ++p) {
      for (const auto& g : census.polyhedra(p)) {
        sweep::all_instances(g, [&](const Face& f, const TransformOutcome& o) { visit(g, f, o); });
      }
    }
    // a seeded tenth of the p = 10 slice
    std::mt19937 rng(5);
    const auto ten = census.polyhedra(10);
    for (const auto& g : ten) {
      if (rng() % 10) continue;
      sweep::all_instances(g, [&](const Face& f, const TransformOutcome& o) { visit(g, f, o); });
    }
  }
  v.line(5, applicable >= 10000 && inv_bad == 0 && t1_iso_bad == 0 && t1_cut_bad == 0,
         fmt("%ld applicable instances, %ld accepted, invariant violations %ld; T1 isomorphism implication %ld/%ld "
             "counterexamples, T1 2-cut implication %ld/%ld; T2 n' implication %ld/%ld",
             applicable, accepted, inv_bad, t1_iso_bad, t1_iso_seen, t1_cut_bad, t1_cut_seen, t2_iso_bad,
             t2_iso_seen));

  {
    long graphs = 0, disagree = 0;
    for (int p = 4; p <= 10; ++p) {
      for (const auto& g : census.polyhedra(p)) {
        ++graphs;
        disagree += face_verdict(g.rotation_system()) != cut_verdict(g.rotation_system());
      }
    }
    v.line(6, disagree == 0 && output_disagree == 0,
           fmt("face criterion vs cut oracle: census %ld graphs, %ld disagreements; transform outputs %ld, %ld "
               "disagreements",
               graphs, disagree, outputs, output_disagree));
  }

  // 7: relabelling invariance and agreement with the brute-force oracle
  {
    std::mt19937 rng(2024);
    const auto every = all_of_census(census);
    long trials = 0, mismatched = 0;
    for (int s = 0; s < 50; ++s) {
      const Polyhedron& g = every[rng() % every.size()];
      const CanonicalCode want = canonical_code(g);
      for (int t = 0; t < 100; ++t) {
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        RotationSystem rs = g.rotation_system().relabeled(perm);
        if (rng() % 2) rs = rs.mirrored();
        ++trials;
        mismatched += canonical_code(rs) != want;
      }
    }
    // every p <= 7 graph in five random labellings: code classes == oracle classes
    std::map<CanonicalCode, std::set<std::uint64_t>> code_to_mask;
    std::map<std::uint64_t, std::set<CanonicalCode>> mask_to_code;
    long labelled = 0;
    for (int p = 4; p <= 7; ++p) {
      for (const auto& g : census.polyhedra(p)) {
        for (int t = 0; t < 5; ++t) {
          std::vector<Vertex> perm(p);
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin(), perm.end(), rng);
          const RotationSystem rs = g.rotation_system().relabeled(perm);
          const CanonicalCode c = canonical_code(rs);
          const std::uint64_t m = oracle::canonical_mask(checks::to_oracle(rs)) * 16 + p;
          code_to_mask[c].insert(m);
          mask_to_code[m].insert(c);
          ++labelled;
        }
      }
    }
    bool bijection = code_to_mask.size() == mask_to_code.size() && code_to_mask.size() == 44;
    for (const auto& [c, ms] : code_to_mask) bijection = bijection && ms.size() == 1;
    for (const auto& [m, cs] : mask_to_code) bijection = bijection && cs.size() == 1;
    v.line(7, mismatched == 0 && bijection,
           fmt("%ld relabelings of 50 graphs, %ld code changes; p<=7: %ld labelled graphs, %zu code classes vs %zu "
               "oracle classes, %s",
               trials, mismatched, labelled, code_to_mask.size(), mask_to_code.size(),
               bijection ? "one-to-one" : "NOT one-to-one"));
  }

  // 8: property P on new faces after the condition-(3) branch
  {
    int extra = 0, extra_counter = 0, extra_ngon = 0;
    std::map<int, int> sizes;
    for (const auto& g : sample::grown(7, 3000)) {
      const Face* best = nullptr;
      for (const auto& f : g.faces()) {
        if (!best || f.size() > best->size()) best = &f;
      }
      const WitnessReport r = find_second_realization(g, *best);
      if (r.stage != Stage::condition3_T3 || !r.output) continue;
      ++extra;
      bool hit = false;
      for (const auto& nf : new_faces(g, *r.output)) {
        for (const auto& h : r.output->faces()) {
          if (!h.same_vertices(nf) || !has_property_P(*r.output, h.id)) continue;
          hit = true;
          ++sizes[h.size()];
          extra_ngon += h.size() == best->size();
        }
      }
      extra_counter += hit;
    }
    std::string by_size;
    for (const auto& [s, n] : sizes) by_size += fmt(" %d-gon:%d", s, n);
    // the sweep alone has no condition-(3) instance, so it cannot decide this
    const bool ok = c3_instances > 0 && c3_counter == 0 && extra_counter == 0;
    v.line(8, ok,
           fmt("sweep condition-(3) instances %d, counterexamples %d; seeded sample (3000 graphs, seed 7): %d "
               "instances, %d with a new face having P (",
               c3_instances, c3_counter, extra, extra_counter) +
               by_size + fmt(" ), new faces of the original size with P: %d", extra_ngon));
  }

  std::set<int> failed;
  for (const auto& [id, ok] : v.pass) {
    if (!ok) failed.insert(id);
  }
  const std::string summary = fmt("total %.1fs; failing:", seconds_since(t0));
  std::string ids;
  for (int id : failed) ids += " " + std::to_string(id);
  std::cout << summary << (ids.empty() ? " none" : ids) << std::endl;
  v.text << summary << (ids.empty() ? " none" : ids) << '\n';
  std::ofstream(report_path) << v.text.str();
  if (failed != expected_fail) {
    std::cout << "failing criteria differ from the expected set" << std::endl;
    return 1;
  }
  return 0;
}
