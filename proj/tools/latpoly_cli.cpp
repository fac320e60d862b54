// latpoly_cli: command-line front end for the latpoly library.
//
// Exit codes: 0 verified, 1 invariant violation or error, 2 evidence only,
// 64 usage error.

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latpoly/latpoly.hpp"

namespace {

using namespace latpoly;

constexpr int kVerified = 0;
constexpr int kViolation = 1;
constexpr int kEvidence = 2;
constexpr int kUsage = 64;

std::string str(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

Simplex read_simplex(const std::string& path) {
  const Polytope p = read_polytope(path);
  require(p.is_simplex() && p.full_dimensional(), ErrorCode::InvalidParameters, path + ": not a full-dimensional simplex");
  return *p.as_simplex();
}

void print_matrix(const IntMatrix& m) {
  for (const auto& row : m) std::cout << "  [" << join(row, ", ") << "]\n";
}

int cmd_volume(const std::string& file, bool json) {
  const Polytope p = read_polytope(file);
  const Integer nv = normalized_volume(p);
  const Rational v = volume(p);
  if (json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["normalized_volume"] = to_json(nv);
    j["volume"] = to_json(v);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "normalized_volume: " << nv << ", volume: " << str(v) << '\n';
  }
  return kVerified;
}

int cmd_points(const std::string& file, bool json) {
  const LatticePointCensus c = enumerate_lattice_points(read_polytope(file));
  if (json) {
    std::cout << census_json(c).dump() << '\n';
  } else {
    std::cout << "interior: " << c.interior.size() << ", boundary_nonvertex: " << c.boundary_nonvertex.size()
              << ", clean: " << (c.boundary_nonvertex.empty() ? "true" : "false") << '\n';
  }
  return kVerified;
}

int cmd_lawson(const std::string& file, bool json) {
  const auto pts = read_vertex_list(file);
  const LawsonPartition lp = lawson_partition(std::span<const LatticePoint>(pts));
  const auto ts = lawson_triangulations(pts);
  if (json) {
    std::cout << lawson_json(lp, ts).dump() << '\n';
    return kVerified;
  }
  std::vector<std::string> alphas;
  for (const auto& a : lp.alphas) alphas.push_back(str(a));
  std::vector<std::size_t> sizes;
  for (const auto& t : ts) sizes.push_back(t.size());
  std::cout << "partition sizes: (" << lp.a0.size() << "," << lp.a1.size() << "," << lp.a2.size() << ")\n"
            << "A0: {" << join(lp.a0) << "}\n"
            << "A1: {" << join(lp.a1) << "}\n"
            << "A2: {" << join(lp.a2) << "}\n"
            << "alphas: " << join(alphas, " ") << '\n'
            << "triangulation sizes: " << join(sizes, " ") << '\n';
  return kVerified;
}

int cmd_canonical(const std::string& file, bool json) {
  const CanonicalForm f = canonical_form(read_simplex(file));
  if (json)
    std::cout << canonical_json(f).dump() << '\n';
  else
    std::cout << "tag: " << tag_string(f) << '\n';
  return kVerified;
}

int cmd_equiv(const std::string& a, const std::string& b, bool json) {
  const auto w = equivalence_witness(read_simplex(a), read_simplex(b));
  if (json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["equivalent"] = w.has_value();
    j["witness"] = w ? map_json(*w) : Json(nullptr);
    std::cout << j.dump() << '\n';
  } else if (w) {
    std::cout << "equivalent: true\nmatrix:\n";
    print_matrix(w->matrix());
    std::cout << "translation: [" << join(w->translation().coords(), ", ") << "]\n";
  } else {
    std::cout << "equivalent: false\n";
  }
  return w ? kVerified : kViolation;
}

int cmd_pick_check(const std::string& file, const std::string& formula, std::int64_t n, bool json) {
  const Polytope p = read_polytope(file);
  Rational f;
  if (formula == "pick")
    f = pick_volume(p);
  else if (formula == "reeve")
    f = reeve_volume(p, n);
  else if (formula == "macdonald")
    f = macdonald_volume(p);
  else
    f = kk_volume(p);
  const Rational v = volume(p);
  if (json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["formula"] = formula;
    j["formula_volume"] = to_json(f);
    j["determinant_volume"] = to_json(v);
    j["match"] = f == v;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "formula: " << formula << ", formula_volume: " << str(f) << ", determinant_volume: " << str(v)
              << ", match: " << (f == v ? "true" : "false") << '\n';
  }
  return f == v ? kVerified : kViolation;
}

int cmd_pick_inequality(const std::string& file, bool json) {
  const PickInequalityReport r = pick_inequality_check(read_polytope(file));
  if (json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["b"] = to_json(r.b);
    j["k"] = to_json(r.k);
    j["bound"] = to_json(r.bound);
    j["volume"] = to_json(r.volume);
    j["satisfied"] = r.satisfied;
    j["tight"] = r.tight;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "b: " << r.b << ", k: " << r.k << ", volume: " << str(r.volume) << ", bound: " << str(r.bound)
              << ", satisfied: " << (r.satisfied ? "true" : "false") << ", tight: " << (r.tight ? "true" : "false")
              << '\n';
  }
  return r.satisfied ? kVerified : kViolation;
}

int cmd_validate(const std::string& file, bool json) {
  const Triangulation t = parse_triangulation(read_text_file(file), file);
  const ValidationReport r = validate_triangulation(t);
  if (json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["valid"] = r.valid();
    j["full"] = r.full;
    j["cells"] = t.size();
    j["cell_volume_sum"] = to_json(r.cell_volume_sum);
    j["carrier_volume"] = to_json(r.carrier_volume);
    j["failures"] = r.failures;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "valid: " << (r.valid() ? "true" : "false") << ", full: " << (r.full ? "true" : "false")
              << ", cells: " << t.size() << '\n';
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  return r.valid() ? kVerified : kViolation;
}

void print_classes(const ClassificationReport& r) {
  std::cout << "candidates: " << r.candidates << ", survivors: " << r.survivors << ", classes: " << r.classes.size()
            << '\n';
  std::cout << "  volume  interior  members  params\n";
  for (const auto& c : r.classes) {
    std::cout << "  " << std::setw(6) << c.normalized_volume << "  " << std::setw(8) << c.interior_count << "  "
              << std::setw(7) << c.members << "  (" << join(c.params) << ")\n";
  }
}

int cmd_minimal_classify(std::size_t d, std::size_t k, unsigned jobs, bool json) {
  const MinimalClassificationReport r = verify_minimal_classification(d, k, jobs);
  if (json) {
    std::cout << minimal_classification_json(r).dump() << '\n';
  } else {
    std::cout << "d: " << d << ", k: " << k << ", minimal volume: " << d * k + 1 << '\n';
    print_classes(r.sweep);
    std::cout << "unique class equivalent to S_d(k): " << (r.unique_class && r.all_equivalent ? "true" : "false")
              << "\nverified: " << (r.verified() ? "true" : "false") << '\n';
  }
  return r.verified() ? kVerified : kViolation;
}

int cmd_search_max(std::size_t k, std::int64_t n_max, unsigned jobs, bool json, const std::string& ledger) {
  const MaxVolumeReport r = max_volume_search(k, n_max, jobs);
  if (!ledger.empty()) write_json_file(ledger, max_volume_json(r));
  if (json) {
    std::cout << max_volume_json(r).dump() << '\n';
  } else {
    print_classes(r.sweep);
    std::cout << "max volume: " << (r.max_volume ? r.max_volume->str() : "none")
              << ", conjectured: " << r.conjectured_volume << '\n'
              << "bound holds: " << (r.bound_holds ? "true" : "false")
              << ", unique maximizer T_{2k+1,4k+3,12k+8}: " << (r.maximizer_matches ? "true" : "false") << '\n';
    if (r.interior_collinear) std::cout << "maximizer interior collinear: " << *r.interior_collinear << '\n';
    if (r.line_misses_vertices) std::cout << "line misses vertices: " << *r.line_misses_vertices << '\n';
    std::cout << "ziegler bound holds: " << (r.ziegler_holds ? "true" : "false") << '\n';
  }
  if (!r.ziegler_holds) return kViolation;
  // Only k = 1 is settled; larger k is evidence for an open statement.
  const bool settled = k == 1 && n_max >= r.conjectured_volume;
  if (!settled) return kEvidence;
  return r.maximizer_matches && r.bound_holds ? kVerified : kViolation;
}

int cmd_identity_check(std::int64_t p, std::int64_t q, std::int64_t rr, bool json) {
  const DeltaIdentityReport r = delta_identity_check(p, q, rr);
  if (json) {
    std::cout << delta_json(r).dump() << '\n';
  } else {
    std::cout << "p: " << p << ", q: " << q << ", r: " << rr << '\n'
              << "sum: " << r.first_sum + r.second_sum << ", closed form: " << str(r.closed_form)
              << ", interior points: " << r.census_interior << '\n'
              << "identity: " << (r.identity_holds ? "true" : "false")
              << ", columns: " << (r.columns_match ? "true" : "false") << ", clean: " << (r.clean ? "true" : "false")
              << '\n';
  }
  return r.ok() ? kVerified : kViolation;
}

int cmd_fixtures(const std::string& dir, std::uint64_t seed, std::size_t count) {
  std::filesystem::create_directories(dir);
  for (const auto& f : fixture_suite()) write_polytope_file(dir + "/" + f.name + ".json", f.vertices);
  if (count > 0) {
    std::filesystem::create_directories(dir + "/fuzz");
    const auto corpus = fuzz_corpus(seed, count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "/fuzz/p%03zu.json", i);
      write_polytope_file(dir + name, corpus[i].vertices());
    }
  }
  std::cout << "wrote " << fixture_suite().size() << " fixtures and " << count << " corpus polytopes to " << dir
            << '\n';
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice polytope toolkit"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single JSON object");

  std::string file, file2, dir, formula = "pick", ledger;
  std::int64_t n = 2, n_max = 25, p = 2, q = 4, r = 1;
  std::size_t d = 3, k = 1, count = 200;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", file, "polytope JSON file")->required();
    s->add_flag("--json", json, "emit a single JSON object");
    return s;
  };
  auto* volume_cmd = file_cmd("volume", "normalized and Euclidean volume");
  auto* points_cmd = file_cmd("points", "lattice point census");
  auto* lawson_cmd = file_cmd("lawson", "Lawson partition and triangulations of d+2 points");
  auto* canonical_cmd = file_cmd("canonical", "canonical form tag of a simplex");
  auto* pick_cmd = file_cmd("pick-check", "volume from lattice point counts");
  pick_cmd->add_option("--formula", formula, "pick|reeve|macdonald|kk")
      ->check(CLI::IsMember({"pick", "reeve", "macdonald", "kk"}));
  pick_cmd->add_option("--n", n, "Reeve sublattice index")->check(CLI::Range(2, 1000));
  auto* ineq_cmd = file_cmd("pick-inequality", "check Vol >= (2b + 3k - 7)/6");
  auto* validate_cmd = app.add_subcommand("validate", "validate a triangulation JSON file");
  validate_cmd->add_option("file", file, "triangulation JSON file")->required();
  validate_cmd->add_flag("--json", json, "emit a single JSON object");

  auto* equiv_cmd = app.add_subcommand("equiv", "unimodular equivalence of two simplices");
  equiv_cmd->add_option("file1", file, "first simplex")->required();
  equiv_cmd->add_option("file2", file2, "second simplex")->required();
  equiv_cmd->add_flag("--json", json, "emit a single JSON object");

  auto* minimal_cmd = app.add_subcommand("minimal-classify", "classify clean k-point d-simplices of volume dk+1");
  minimal_cmd->add_option("--d", d, "dimension")->required()->check(CLI::Range(3, 5));
  minimal_cmd->add_option("--k", k, "interior points")->required()->check(CLI::Range(1, 4));
  minimal_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  minimal_cmd->add_flag("--json", json, "emit a single JSON object");

  auto* max_cmd = app.add_subcommand("search-max", "maximal volume clean k-point 3-simplices");
  max_cmd->add_option("--k", k, "interior points")->required()->check(CLI::Range(1, 100));
  max_cmd->add_option("--n-max", n_max, "largest last coordinate")->check(CLI::Range(2, 100000));
  max_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  max_cmd->add_option("--ledger", ledger, "write the JSON report to this file");
  max_cmd->add_flag("--json", json, "emit a single JSON object");

  auto* identity_cmd = app.add_subcommand("identity-check", "ceiling-sum identities of the Delta triangles");
  identity_cmd->add_option("--p", p, "p")->required()->check(CLI::PositiveNumber);
  identity_cmd->add_option("--q", q, "q")->required()->check(CLI::PositiveNumber);
  identity_cmd->add_option("--r", r, "r")->check(CLI::PositiveNumber);
  identity_cmd->add_flag("--json", json, "emit a single JSON object");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "write example polytopes and the fuzz corpus");
  fixtures_cmd->add_option("dir", dir, "output directory")->required();
  fixtures_cmd->add_option("--seed", seed, "fuzz corpus seed");
  fixtures_cmd->add_option("--count", count, "fuzz corpus size (0 for none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*volume_cmd) return cmd_volume(file, json);
    if (*points_cmd) return cmd_points(file, json);
    if (*lawson_cmd) return cmd_lawson(file, json);
    if (*canonical_cmd) return cmd_canonical(file, json);
    if (*equiv_cmd) return cmd_equiv(file, file2, json);
    if (*pick_cmd) return cmd_pick_check(file, formula, n, json);
    if (*ineq_cmd) return cmd_pick_inequality(file, json);
    if (*validate_cmd) return cmd_validate(file, json);
    if (*minimal_cmd) return cmd_minimal_classify(d, k, jobs, json);
    if (*max_cmd) return cmd_search_max(k, n_max, jobs, json, ledger);
    if (*identity_cmd) return cmd_identity_check(p, q, r, json);
    if (*fixtures_cmd) return cmd_fixtures(dir, seed, count);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
