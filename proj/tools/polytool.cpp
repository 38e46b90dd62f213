// polytool: command-line front end for the polyhedra library.
// Exit codes: 0 ok, 1 data error (or failed witness), 2 usage error,
// 3 "not isomorphic" from `iso`.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyhedra/canonical.hpp"
#include "polyhedra/census.hpp"
#include "polyhedra/layout.hpp"
#include "polyhedra/planar_code.hpp"
#include "polyhedra/report.hpp"
#include "polyhedra/transforms.hpp"
#include "polyhedra/witness.hpp"

using namespace polyhedra;

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<RotationSystem> load(const std::string& path) {
  try {
    return read_planar_code_file(path);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

Polyhedron as_polyhedron(const RotationSystem& rs, const std::string& path, std::size_t index) {
  try {
    return validate_polyhedron(rs);
  } catch (const Error& e) {
    throw DataError(path + ": graph #" + std::to_string(index) + ": " + e.what());
  }
}


int cmd_gen(int max_p, const std::string& out, bool alternate) {
  const Census census = generate_census(max_p, alternate);
  std::vector<RotationSystem> all;
  for (int p = 4; p <= max_p; ++p) {
    std::cout << p << ' ' << census.count(p) << '\n';
    for (auto& g : census.graphs(p)) all.push_back(std::move(g));
  }
  if (!out.empty()) write_planar_code_file(out, all);
  return 0;
}

int cmd_witness(const std::string& in, int face_min, const std::string& report_path) {
  const auto graphs = load(in);
  nlohmann::json doc = nlohmann::json::array();
  int failed = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const Polyhedron g = as_polyhedron(graphs[k], in, k);
    std::cout << "graph " << k << ": ";
    if (is_pyramid(g)) {
      std::cout << "skipped (pyramid)\n";
      continue;
    }
    const Face* best = nullptr;
    for (const auto& f : g.faces()) {
      if (f.size() >= face_min && (!best || f.size() > best->size())) best = &f;
    }
    if (!best) {
      std::cout << "skipped (no face with " << face_min << "+ sides)\n";
      continue;
    }
    const WitnessReport r = find_second_realization(g, *best);
    std::cout << stage_name(r.stage);
    if (r.transform) std::cout << ' ' << r.transform->describe();
    std::cout << '\n';
    if (r.stage == Stage::failed) ++failed;
    doc.push_back(report_json(graphs[k], r));
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw DataError("cannot write " + report_path);
    out << doc.dump(2) << '\n';
  }
  return failed ? 1 : 0;
}

int cmd_canon(const std::string& in) {
  const auto graphs = load(in);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    std::cout << canonical_code(as_polyhedron(graphs[k], in, k)).hex() << '\n';
  }
  return 0;
}

int cmd_iso(const std::vector<std::string>& files) {
  std::vector<CanonicalCode> codes;
  for (const auto& path : files) {
    const auto graphs = load(path);
    for (std::size_t k = 0; k < graphs.size(); ++k) codes.push_back(canonical_code(as_polyhedron(graphs[k], path, k)));
  }
  if (codes.size() < 2) throw DataError("iso needs at least two graphs");
  for (const auto& c : codes) {
    if (c != codes.front()) {
      std::cout << "not isomorphic\n";
      return 3;
    }
  }
  std::cout << "isomorphic\n";
  return 0;
}

int cmd_unigraphic(const std::string& text, std::size_t limit, int census_max, std::size_t budget) {
  DegreeSequence sigma;
  try {
    sigma = DegreeSequence::parse(text);
  } catch (const std::exception& e) {
    throw DataError(std::string("sequence: ") + e.what());
  }
  Census census;
  RealizationSearch search;
  search.budget = budget;
  if (census_max > 0) {
    census = generate_census(census_max);
    search.census = &census;
  }
  search.limit = std::max<std::size_t>(limit, 2);
  const RealizationResult res = search_realizations(sigma, search);
  const std::size_t n = res.found.size();
  std::cout << (n >= 2 ? "no" : !res.complete ? "undecided" : n == 1 ? "yes" : "no") << '\n';
  const auto& found = res.found;
  for (std::size_t k = 0; k < n && k < limit; ++k) std::cout << canonical_code(found[k]).hex() << '\n';
  return 0;
}

Face parse_face(const Polyhedron& g, const std::string& spec) {
  std::vector<Vertex> vs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) vs.push_back(std::stoi(item));
  if (vs.size() == 1) {
    if (vs[0] < 0 || vs[0] >= g.face_count()) throw DataError("face id " + spec + " out of range");
    return g.face(vs[0]);
  }
  Face f;
  f.boundary = vs;
  try {
    f.id = g.resolve(f);
  } catch (const Error& e) {
    throw DataError("face " + spec + ": " + e.what());
  }
  return f;
}

int cmd_transform(const std::string& in, std::size_t index, const std::string& kind, const std::string& face,
                  const std::vector<int>& params, bool mirrored, const std::string& out_path) {
  const auto graphs = load(in);
  if (index >= graphs.size()) throw DataError(in + ": no graph #" + std::to_string(index));
  Polyhedron g = as_polyhedron(graphs[index], in, index);
  if (mirrored) g = mirror(g);
  const Face f = parse_face(g, face);
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw CLI::ValidationError("--params", kind + " takes " + std::to_string(count) + " parameters");
    }
  };
  TransformOutcome o;
  if (kind == "t1") {
    need(2);
    o = t1(g, f, params[0], params[1]);
  } else if (kind == "t2") {
    need(3);
    o = t2(g, f, params[0], params[1], params[2]);
  } else if (kind == "t3") {
    need(4);
    o = t3(g, f, params[0], params[1], params[2], params[3]);
  } else {
    need(1);
    o = u_move(g, f, params[0], kind == "u2" ? 2 : 3);
  }
  o.instance.mirrored = mirrored;
  std::cout << o.instance.describe() << '\n';
  auto edges = [](const std::vector<Edge>& es) {
    std::string s;
    for (const auto& [a, b] : es) s += ' ' + std::to_string(a) + '-' + std::to_string(b);
    return s;
  };
  if (!o.deleted.empty() || !o.added.empty()) {
    std::cout << "deleted:" << edges(o.deleted) << "\nadded:" << edges(o.added) << '\n';
  }
  if (o.accepted()) {
    std::cout << "accepted" << (o.is_isomorphic_to_input ? " (isomorphic to input)" : " (not isomorphic to input)")
              << '\n';
    if (!out_path.empty()) write_planar_code_file(out_path, {o.result->rotation_system()});
  } else {
    std::cout << "rejected: " << rejection_name(*o.rejection) << " (" << o.detail << ")\n";
  }
  return 0;
}

int cmd_render(const std::string& in, const std::string& dir) {
  const auto graphs = load(in);
  std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const Polyhedron g = as_polyhedron(graphs[k], in, k);
    char name[32];
    std::snprintf(name, sizeof name, "graph_%04zu.svg", k);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << render_svg(g);
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial 3-polytopes: census, transforms and second realisations"};
  app.require_subcommand(1);

  int max_p = 0;
  std::string out;
  bool alternate = false;
  auto* gen = app.add_subcommand("gen", "generate all polyhedra up to a vertex count");
  gen->add_option("--max-vertices", max_p, "largest vertex count")->required()->check(CLI::Range(4, 255));
  gen->add_option("--out", out, "planar_code output file");
  gen->add_flag("--alternate", alternate, "use the depth-first generator configuration");

  std::string in;
  int face_min = 8;
  std::string report;
  auto* wit = app.add_subcommand("witness", "build a second realisation of each input graph");
  wit->add_option("--in", in, "planar_code input")->required();
  wit->add_option("--face-min", face_min, "smallest face size considered")->check(CLI::Range(8, 255));
  wit->add_option("--report", report, "JSON report file");

  auto* canon = app.add_subcommand("canon", "print canonical codes in hex");
  canon->add_option("--in", in, "planar_code input")->required();

  std::vector<std::string> iso_files;
  auto* iso = app.add_subcommand("iso", "exit 0 iff all graphs in the files are isomorphic");
  iso->add_option("files", iso_files, "planar_code files")->required()->expected(1, 2);

  std::string sequence;
  std::size_t limit = 2;
  int census_max = 0;
  std::size_t budget = 4'000'000;
  auto* uni = app.add_subcommand("unigraphic", "decide whether a degree sequence has one polyhedral realisation");
  uni->add_option("--sequence", sequence, "degrees, e.g. \"4,3,3,3,3\" or \"3^8\"")->required();
  uni->add_option("--limit", limit, "realisations to list")->check(CLI::PositiveNumber);
  uni->add_option("--census", census_max, "look up in a census up to this vertex count")->check(CLI::Range(4, 255));
  uni->add_option("--budget", budget, "graphs stored before the search gives up");

  std::size_t index = 0;
  std::string kind;
  std::string face;
  std::vector<int> params;
  bool mirrored = false;
  auto* tr = app.add_subcommand("transform", "apply one transform instance");
  tr->add_option("--in", in, "planar_code input")->required();
  tr->add_option("--index", index, "graph number in the input file");
  tr->add_option("--kind", kind, "t1|t2|t3|u2|u3")->required()->check(CLI::IsMember({"t1", "t2", "t3", "u2", "u3"}));
  tr->add_option("--face", face, "face id or comma-separated boundary walk")->required();
  tr->add_option("--params", params, "indices / vertices as the transform expects")->required();
  tr->add_flag("--mirror", mirrored, "work on the mirror image of the input");
  tr->add_option("--out", out, "write the accepted output as planar_code");

  std::string dir;
  auto* svg = app.add_subcommand("render-svg", "draw each graph with a Tutte layout");
  svg->add_option("--in", in, "planar_code input")->required();
  svg->add_option("--out", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(max_p, out, alternate);
    if (*wit) return cmd_witness(in, face_min, report);
    if (*canon) return cmd_canon(in);
    if (*iso) return cmd_iso(iso_files);
    if (*uni) return cmd_unigraphic(sequence, limit, census_max, budget);
    if (*tr) return cmd_transform(in, index, kind, face, params, mirrored, out);
    if (*svg) return cmd_render(in, dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "polytool: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "polytool: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
