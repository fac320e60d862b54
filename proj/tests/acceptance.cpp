// Acceptance run: one [PASS]/[FAIL] line per criterion.
//
// usage: acceptance [fixtures-dir]

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "latpoly/latpoly.hpp"
#include "oracles.hpp"
#include "random_maps.hpp"

using namespace latpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fixtures_dir;

std::vector<LatticePoint> load(const std::string& name) {
  const std::string path = fixtures_dir + "/" + name + ".json";
  if (!fixtures_dir.empty() && std::filesystem::exists(path)) return read_vertex_list(path);
  for (const auto& f : fixture_suite())
    if (f.name == name) return f.vertices;
  throw std::runtime_error("missing fixture " + name);
}

std::vector<Polytope> corpus() {
  const std::string dir = fixtures_dir + "/fuzz";
  if (!fixtures_dir.empty() && std::filesystem::is_directory(dir)) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.size() == 200) {
      std::vector<Polytope> out;
      for (const auto& f : files) out.push_back(read_polytope(f));
      return out;
    }
  }
  return fuzz_corpus(kDefaultSeed, 200);
}

Outcome c1_minimal_volume() {
  Outcome o;
  for (std::size_t d = 3; d <= 6; ++d)
    for (std::int64_t k = 1; k <= 5; ++k)
      if (make_S_d_k(d, k).normalized_volume() != Integer(d * k + 1)) {
        o.pass = false;
        o.detail += " S_" + std::to_string(d) + "(" + std::to_string(k) + ")";
      }
  if (o.pass) o.detail = "20 simplices";
  return o;
}

Outcome c2_census() {
  Outcome o;
  int n = 0;
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::int64_t k = 1; k <= 4; ++k) {
      const Simplex s = make_S_d_k(d, k);
      const LatticePointCensus c = enumerate_lattice_points(s);
      const CollinearityReport r = interior_collinearity_report(s);
      bool ok = c.boundary_nonvertex.empty() && c.interior.size() == static_cast<std::size_t>(k) && r.collinear &&
                r.evenly_spaced;
      if (k >= 2) ok = ok && r.through_vertex && s.vertex(*r.through_vertex) == LatticePoint::constant(d, -k);
      if (!ok) {
        o.pass = false;
        o.detail += " S_" + std::to_string(d) + "(" + std::to_string(k) + ")";
      }
      ++n;
    }
  if (o.pass) o.detail = std::to_string(n) + " simplices clean, collinear through -k(1,...,1), evenly spaced";
  return o;
}

Outcome c3_uniqueness() {
  Outcome o;
  std::ostringstream os;
  for (auto [d, k] : {std::pair<std::size_t, std::size_t>{3, 1}, {3, 2}, {4, 1}, {4, 2}, {3, 3}}) {
    const auto r = verify_minimal_classification(d, k);
    os << "(" << d << "," << k << "):" << r.sweep.survivors << "/" << r.sweep.candidates << " ";
    if (!r.verified()) {
      o.pass = false;
      os << "FAILED ";
    }
  }
  // raw vertex-box cross-check, independent of the normal form
  const auto raw = raw_box_classes(1, 4, -2, 5);
  const bool raw_ok = raw.classes.size() == 1 && raw.classes[0].form == canonical_form(make_S_d_k(3, 1));
  os << "raw box d=3,k=1: " << raw.classes.size() << " class";
  o.pass = o.pass && raw_ok;
  o.detail = os.str();
  return o;
}

Outcome c4_refinement_floor() {
  // Equality is the volume bound: normalized volume dk+1 exactly on the
  // minimal class. The cell count alone can sit at dk+1 on larger simplices
  // (every k = 1 simplex refines to 4 cells), and then some cell is not unit.
  Outcome o;
  std::size_t simplices = 0, orders = 0, minimal = 0, floor_nonminimal = 0;
  for (std::int64_t n = 2; n <= 12; ++n)
    for (std::int64_t a = 1; a < n; ++a)
      for (std::int64_t b = 1; b < n; ++b) {
        const Simplex s = make_T({a, b, n});
        const auto k = clean_interior_count(Polytope(s), 64);
        if (!k || *k == 0) continue;
        const RefinementFloorReport r = refinement_floor(s, 3);
        const std::size_t floor = 3 * *k + 1;
        const bool is_minimal = are_equivalent(s, make_S_d_k(3, static_cast<std::int64_t>(*k)));
        const bool at_volume_floor = s.normalized_volume() == Integer(floor);
        bool ok = r.all_full && r.all_valid && r.min_size >= floor && at_volume_floor == is_minimal;
        if (is_minimal) ok = ok && r.max_size == floor && r.all_unit_cells;
        if (!is_minimal && r.min_size == floor) {
          ok = ok && !r.all_unit_cells;
          ++floor_nonminimal;
        }
        if (!ok) {
          o.pass = false;
          o.detail += " T(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) +
                      "):" + std::to_string(r.min_size) + "/" + std::to_string(floor);
        }
        ++simplices;
        orders += r.orders;
        minimal += is_minimal;
      }
  if (o.pass)
    o.detail = std::to_string(simplices) + " clean simplices, " + std::to_string(orders) + " insertion orders, " +
               std::to_string(minimal) + " minimal at dk+1 unit cells, " + std::to_string(floor_nonminimal) +
               " larger ones reach dk+1 cells only with non-unit cells";
  return o;
}

Outcome c5_lawson() {
  Outcome o;
  auto sizes = [](const std::vector<LatticePoint>& pts) {
    std::vector<std::size_t> s;
    for (const auto& t : lawson_triangulations(pts)) {
      if (!validate_triangulation(t).valid()) s.push_back(0);
      s.push_back(t.size());
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto bp = sizes(load("bipyramid")), py = sizes(load("pyramid"));
  o.pass = bp == std::vector<std::size_t>{2, 3} && py == std::vector<std::size_t>{2, 2};
  o.detail = "bipyramid {" + std::to_string(bp.size() > 0 ? bp[0] : 0) + "," +
             std::to_string(bp.size() > 1 ? bp[1] : 0) + "}, pyramid {" + std::to_string(py.size() > 0 ? py[0] : 0) +
             "," + std::to_string(py.size() > 1 ? py[1] : 0) + "}";
  return o;
}

Outcome c6_explicit_map() {
  Outcome o;
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::int64_t k = 1; k <= 3; ++k) {
      const UnimodularMap m = minimal_simplex_map(d, k);
      const Simplex s = make_S_d_k(d, k);
      std::vector<std::int64_t> apex(d, static_cast<std::int64_t>(d) * k);
      apex[d - 1] += 1;
      std::vector<LatticePoint> expected;
      for (std::size_t i = 0; i + 1 < d; ++i) expected.push_back(LatticePoint::unit(d, i));
      expected.emplace_back(apex);
      expected.push_back(LatticePoint::origin(d));
      if (apply(m, s).vertices() != expected) {
        o.pass = false;
        o.detail += " d=" + std::to_string(d) + ",k=" + std::to_string(k);
      }
    }
  if (o.pass) o.detail = "9 maps vertex-for-vertex";
  return o;
}

Outcome c7_pick_formulas() {
  Outcome o;
  std::vector<Polytope> ps = corpus();
  for (const char* name : {"cube", "square", "cross2", "cross3", "t_1_1_1", "t_3_7_20", "s3k1", "s3k2", "s3k3",
                           "s4k1", "delta_2_4"})
    ps.emplace_back(load(name));
  for (int n = 1; n <= 10; ++n) ps.emplace_back(load("reeve" + std::to_string(n)));
  std::size_t evaluations = 0;
  for (const auto& p : ps) {
    const Rational v = volume(p);
    std::vector<std::pair<const char*, Rational>> got;
    if (p.ambient_dim() == 2) got.emplace_back("pick", pick_volume(p));
    if (p.ambient_dim() == 3) {
      got.emplace_back("reeve2", reeve_volume(p, 2));
      got.emplace_back("reeve3", reeve_volume(p, 3));
    }
    got.emplace_back("macdonald", macdonald_volume(p));
    got.emplace_back("kk", kk_volume(p));
    for (const auto& [name, f] : got) {
      ++evaluations;
      if (f != v) {
        o.pass = false;
        o.detail += std::string(" ") + name + " on " + polytope_json(p).dump();
      }
    }
  }
  if (o.pass) o.detail = std::to_string(ps.size()) + " polytopes, " + std::to_string(evaluations) + " evaluations";
  return o;
}

Outcome c8_pick_inequality() {
  Outcome o;
  std::size_t tested = 0;
  for (const auto& p : corpus()) {
    if (p.ambient_dim() != 3 || enumerate_lattice_points(p).interior.empty()) continue;
    ++tested;
    if (!pick_inequality_check(p).satisfied) {
      o.pass = false;
      o.detail += " violated on " + polytope_json(p).dump();
    }
  }
  for (std::int64_t k = 1; k <= 3; ++k)
    if (!pick_inequality_check(Polytope(load("s3k" + std::to_string(k)))).tight) {
      o.pass = false;
      o.detail += " not tight on S_3(" + std::to_string(k) + ")";
    }
  if (o.pass) o.detail = std::to_string(tested) + " corpus 3-polytopes with k >= 1; tight on S_3(1..3)";
  return o;
}

Outcome c9_delta_identities() {
  Outcome o;
  std::size_t pairs = 0, triples = 0;
  for (std::int64_t p = 1; p <= 30; ++p)
    for (std::int64_t q = 1; q <= 30; ++q) {
      if (std::gcd(q + 1, p) != 1) continue;
      ++pairs;
      if (!delta_identity_check(p, q).ok()) {
        o.pass = false;
        o.detail += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
  for (std::int64_t p = 1; p <= 12; ++p)
    for (std::int64_t q = 1; q <= 12; ++q)
      for (std::int64_t r = 1; r <= 12; ++r) {
        if (std::gcd(q + 1, p) != 1 || std::gcd(q, r) != 1) continue;
        ++triples;
        if (!delta_identity_check(p, q, r).ok()) {
          o.pass = false;
          o.detail += " (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
        }
      }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples";
  return o;
}

Outcome c10_counterexample() {
  Outcome o;
  std::size_t witnesses = 0;
  for (std::int64_t p = 2; p <= 6; ++p)
    for (std::int64_t q = p; q <= 30; ++q) {
      if (std::gcd(q + 1, p) != 1) continue;
      const auto t = noncollinear_interior_triple(make_delta_pq(p, q));
      if (!t || affine_hull_dim(std::vector<LatticePoint>(t->begin(), t->end())) != 2) {
        o.pass = false;
        o.detail += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
        continue;
      }
      ++witnesses;
    }
  if (o.pass) o.detail = std::to_string(witnesses) + " triangles with p in [2,6], q in [p,30]";
  return o;
}

Outcome c11_conjecture_k1() {
  Outcome o;
  const MaxVolumeReport r = max_volume_search(1, 25);
  o.pass = r.max_volume && *r.max_volume == 20 && r.maximizers.size() == 1 && r.maximizer_matches && r.bound_holds;
  o.detail = "max normalized volume " + (r.max_volume ? r.max_volume->str() : std::string("none")) + ", " +
             std::to_string(r.maximizers.size()) + " maximizer class, " + std::to_string(r.sweep.classes.size()) +
             " classes";
  return o;
}

Outcome c12_canonical_soundness() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t maps = 0;
  for (const auto& f : fixture_suite()) {
    const Polytope p(load(f.name));
    if (!p.is_simplex() || !p.full_dimensional()) continue;
    const Simplex s = *p.as_simplex();
    const auto tag = canonical_form(s).tag;
    for (int t = 0; t < 100; ++t, ++maps)
      if (canonical_form(apply(random_unimodular(s.dim(), rng), s)).tag != tag) {
        o.pass = false;
        o.detail += " " + f.name;
        break;
      }
  }
  // every clean 3-simplex of normalized volume <= 8 is some T_{a,b,n}
  std::vector<Simplex> clean{make_T({1, 1, 1})};
  for (std::int64_t n = 2; n <= 8; ++n)
    for (std::int64_t a = 1; a < n; ++a)
      for (std::int64_t b = 1; b < n; ++b) {
        const Simplex s = make_T({a, b, n});
        if (is_clean(s)) clean.push_back(s);
      }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < clean.size(); ++i)
    for (std::size_t j = i; j < clean.size(); ++j, ++pairs)
      if (are_equivalent(clean[i], clean[j]) != oracle::equivalent(clean[i].vertices(), clean[j].vertices())) {
        o.pass = false;
        o.detail += " pair " + std::to_string(i) + "," + std::to_string(j);
      }
  if (o.pass)
    o.detail = std::to_string(maps) + " random maps, " + std::to_string(clean.size()) + " clean simplices, " +
               std::to_string(pairs) + " oracle pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) fixtures_dir = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 minimal-volume formula", c1_minimal_volume},
      {"2 cleanliness and census of S_d(k)", c2_census},
      {"3 uniqueness of the minimal class", c3_uniqueness},
      {"4 refinement floor", c4_refinement_floor},
      {"5 Lawson examples", c5_lawson},
      {"6 explicit map", c6_explicit_map},
      {"7 Pick-type formulas", c7_pick_formulas},
      {"8 Pick inequality", c8_pick_inequality},
      {"9 Delta identities", c9_delta_identities},
      {"10 counterexample witness", c10_counterexample},
      {"11 maximal volume at k=1", c11_conjecture_k1},
      {"12 canonical-form soundness", c12_canonical_soundness},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << t.str() << "s): " << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
