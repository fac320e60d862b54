#pragma once

// Exhaustive sweeps over clean k-point simplices: T-family enumeration with
// canonical deduplication, the minimal-volume classification, the maximal
// volume search, Delta_{p,q} identities and a brute-force triangulation
// counter for small point sets.

#include <algorithm>
#include <array>
#include <functional>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/triangulation.hpp"
#include "latpoly/unimodular.hpp"

namespace latpoly {

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

/// Candidate cap per sweep; LATPOLY_CELL_BUDGET overrides the default.
inline std::size_t cell_budget() {
  if (const char* env = std::getenv("LATPOLY_CELL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCellBudget;
}

inline void check_budget(const Integer& candidates) {
  if (candidates > cell_budget())
    fail(ErrorCode::SpaceTooLarge, "sweep of " + candidates.str() + " candidates exceeds the budget of " +
                                       std::to_string(cell_budget()));
}

struct ClassEntry {
  CanonicalForm form;
  Simplex representative;
  std::vector<std::int64_t> params;  // lexicographically first parameter tuple in the class
  Integer normalized_volume;
  std::size_t interior_count = 0;
  std::size_t members = 0;
};

/// Classes sorted by (normalized volume, canonical tag).
struct ClassificationReport {
  std::size_t candidates = 0;
  std::size_t survivors = 0;
  std::vector<ClassEntry> classes;

  std::optional<Integer> min_volume() const {
    if (classes.empty()) return std::nullopt;
    return classes.front().normalized_volume;
  }
  std::optional<Integer> max_volume() const {
    if (classes.empty()) return std::nullopt;
    return classes.back().normalized_volume;
  }
};

namespace detail {

struct Survivor {
  std::size_t interior = 0;
  CanonicalForm form;
};

// Runs `test` over candidates with `jobs` workers and merges in candidate
// order, so the report does not depend on scheduling.
template <typename Make>
ClassificationReport classify_candidates(const std::vector<std::vector<std::int64_t>>& candidates, std::size_t k,
                                         unsigned jobs, Make&& make) {
  std::vector<std::optional<Survivor>> results(candidates.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < candidates.size(); i += stride) {
      const Simplex s = make(candidates[i]);
      auto count = clean_interior_count(Polytope(s), k);
      if (!count || *count != k) continue;
      results[i] = Survivor{*count, canonical_form(s)};
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }

  ClassificationReport report;
  report.candidates = candidates.size();
  std::map<std::vector<Integer>, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!results[i]) continue;
    ++report.survivors;
    auto it = index.find(results[i]->form.tag);
    if (it == index.end()) {
      const Simplex s = make(candidates[i]);
      index.emplace(results[i]->form.tag, report.classes.size());
      report.classes.push_back(
          ClassEntry{results[i]->form, s, candidates[i], s.normalized_volume(), results[i]->interior, 1});
    } else {
      ClassEntry& e = report.classes[it->second];
      ++e.members;
      if (candidates[i] < e.params) {
        e.params = candidates[i];
        e.representative = make(candidates[i]);
      }
    }
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
    if (a.normalized_volume != b.normalized_volume) return a.normalized_volume < b.normalized_volume;
    return a.form.tag < b.form.tag;
  });
  return report;
}

// All tuples (a_1, ..., a_{d-1}, n) with 0 < a_i < n, n in [n_min, n_max].
inline std::vector<std::vector<std::int64_t>> t_family(std::size_t d, std::int64_t n_min, std::int64_t n_max) {
  Integer total = 0;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 2); n <= n_max; ++n)
    total += boost::multiprecision::pow(Integer(n - 1), static_cast<unsigned>(d - 1));
  check_budget(total);
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 2); n <= n_max; ++n) {
    std::vector<std::int64_t> a(d, 1);
    a[d - 1] = n;
    while (true) {
      out.push_back(a);
      std::size_t i = d - 1;
      while (i > 0) {
        --i;
        if (a[i] < n - 1) {
          ++a[i];
          break;
        }
        a[i] = 1;
        if (i == 0) goto next_n;
      }
      if (d == 1) break;
    }
  next_n:;
  }
  return out;
}

}  // namespace detail

/// Sweep of T_{a_1,...,a_{d-1},n} with 0 < a_i < n over an n range.
struct SearchSpace {
  std::size_t d = 3;
  std::size_t k = 1;
  std::int64_t n_min = 1;
  std::int64_t n_max = 1;
};

inline ClassificationReport enumerate_clean_k_point(const SearchSpace& space, unsigned jobs = 1) {
  require(space.d >= 2 && space.n_min <= space.n_max, ErrorCode::InvalidParameters, "empty search space");
  auto candidates = detail::t_family(space.d, space.n_min, space.n_max);
  return detail::classify_candidates(candidates, space.k, jobs,
                                     [](const std::vector<std::int64_t>& a) { return make_T(a); });
}

struct MinimalClassificationReport {
  std::size_t d = 0;
  std::size_t k = 0;
  ClassificationReport sweep;
  bool all_equivalent = false;  // every class equivalent to S_d(k)
  bool unique_class = false;
  bool reference_clean = false;
  bool reference_count = false;
  bool reference_collinear = false;
  bool reference_through_vertex = false;
  bool reference_evenly_spaced = false;

  bool verified() const {
    return all_equivalent && unique_class && reference_clean && reference_count && reference_collinear &&
           reference_through_vertex && reference_evenly_spaced;
  }
};

/// Sweeps T_{a_1,...,a_{d-1},dk+1} and checks that the clean k-point
/// survivors form the single class of S_d(k).
inline MinimalClassificationReport verify_minimal_classification(std::size_t d, std::size_t k, unsigned jobs = 1) {
  require(d >= 3 && d <= 5 && k >= 1 && k <= 4, ErrorCode::InvalidParameters, "needs d in [3,5] and k in [1,4]");
  MinimalClassificationReport r;
  r.d = d;
  r.k = k;
  const auto n = static_cast<std::int64_t>(d * k + 1);
  r.sweep = enumerate_clean_k_point({d, k, n, n}, jobs);
  const Simplex reference = make_S_d_k(d, static_cast<std::int64_t>(k));
  const CanonicalForm ref_form = canonical_form(reference);
  r.unique_class = r.sweep.classes.size() == 1;
  r.all_equivalent = !r.sweep.classes.empty() && std::all_of(r.sweep.classes.begin(), r.sweep.classes.end(),
                                                             [&](const ClassEntry& e) { return e.form == ref_form; });
  const LatticePointCensus census = enumerate_lattice_points(reference);
  r.reference_clean = census.boundary_nonvertex.empty();
  r.reference_count = census.interior.size() == k;
  if (r.reference_clean && !census.interior.empty()) {
    const CollinearityReport c = interior_collinearity_report(reference);
    r.reference_collinear = c.collinear;
    r.reference_evenly_spaced = c.evenly_spaced;
    // k = 1 has no line; the single point is trivially on a line through any vertex.
    r.reference_through_vertex = k == 1 || (c.through_vertex && *c.through_vertex == d);
  }
  return r;
}

/// Raw enumeration of 3-simplices conv(0, p, q, r) with p < q < r taken
/// from the lattice points of [lo, hi]^3 lexicographically above the
/// origin, keeping normalized volume `volume` and exactly k interior points,
/// all clean. Independent of the T normal form.
inline ClassificationReport raw_box_classes(std::size_t k, std::int64_t volume, std::int64_t lo, std::int64_t hi,
                                            unsigned jobs = 1) {
  std::vector<LatticePoint> pts;
  for (std::int64_t x = lo; x <= hi; ++x)
    for (std::int64_t y = lo; y <= hi; ++y)
      for (std::int64_t z = lo; z <= hi; ++z) {
        LatticePoint p({x, y, z});
        if (p > LatticePoint::origin(3)) pts.push_back(std::move(p));
      }
  const std::size_t m = pts.size();
  check_budget(binomial(static_cast<unsigned>(m), 3));
  std::vector<std::vector<std::int64_t>> candidates;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& a = pts[i];
      const auto& b = pts[j];
      // cross product a x b, then dot with c
      const std::int64_t c0 = a[1] * b[2] - a[2] * b[1], c1 = a[2] * b[0] - a[0] * b[2], c2 = a[0] * b[1] - a[1] * b[0];
      for (std::size_t l = j + 1; l < m; ++l) {
        const auto& c = pts[l];
        const std::int64_t det = c0 * c[0] + c1 * c[1] + c2 * c[2];
        if (det != volume && det != -volume) continue;
        // A clean simplex has primitive edges.
        auto primitive = [](std::int64_t x, std::int64_t y, std::int64_t z) {
          return std::gcd(std::gcd(x, y), z) == 1;
        };
        if (!primitive(a[0], a[1], a[2]) || !primitive(b[0], b[1], b[2]) || !primitive(c[0], c[1], c[2]) ||
            !primitive(b[0] - a[0], b[1] - a[1], b[2] - a[2]) || !primitive(c[0] - a[0], c[1] - a[1], c[2] - a[2]) ||
            !primitive(c[0] - b[0], c[1] - b[1], c[2] - b[2]))
          continue;
        candidates.push_back({a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]});
      }
    }
  auto make = [](const std::vector<std::int64_t>& v) {
    return Simplex({LatticePoint::origin(3), LatticePoint({v[0], v[1], v[2]}), LatticePoint({v[3], v[4], v[5]}),
                    LatticePoint({v[6], v[7], v[8]})});
  };
  ClassificationReport r = detail::classify_candidates(candidates, k, jobs, make);
  r.candidates = static_cast<std::size_t>(binomial(static_cast<unsigned>(m), 3));
  return r;
}

/// Vol <= k [7(k+1)]^(d 2^(d+1)), compared as d! Vol <= d! k [7(k+1)]^(d 2^(d+1)).
inline bool ziegler_bound_check(const Integer& normalized_volume, std::size_t d, std::size_t k) {
  require(k >= 1, ErrorCode::NoInteriorPoints, "the bound needs k >= 1");
  const unsigned exponent = static_cast<unsigned>(d) * (1u << (d + 1));
  const Integer bound = factorial(static_cast<unsigned>(d)) * k *
                        boost::multiprecision::pow(Integer(7 * (k + 1)), exponent);
  return normalized_volume <= bound;
}

inline bool ziegler_bound_check(const Polytope& p) {
  const LatticePointCensus c = enumerate_lattice_points(p);
  return ziegler_bound_check(normalized_volume(p), p.ambient_dim(), c.interior.size());
}

struct MaxVolumeReport {
  std::size_t k = 0;
  std::int64_t n_max = 0;
  ClassificationReport sweep;
  Integer conjectured_volume = 0;  // 12k + 8
  std::optional<Integer> max_volume;
  std::vector<std::size_t> maximizers;  // indices into sweep.classes
  bool bound_holds = false;             // no survivor above 12k + 8
  bool maximizer_matches = false;       // unique maximizer of volume 12k+8 equivalent to T_{2k+1,4k+3,12k+8}
  std::optional<bool> interior_collinear;
  std::optional<bool> line_misses_vertices;  // reported for k >= 2
  bool ziegler_holds = false;
};

inline MaxVolumeReport max_volume_search(std::size_t k, std::int64_t n_max, unsigned jobs = 1) {
  require(k >= 1 && n_max >= 2, ErrorCode::InvalidParameters, "needs k >= 1 and n_max >= 2");
  MaxVolumeReport r;
  r.k = k;
  r.n_max = n_max;
  r.sweep = enumerate_clean_k_point({3, k, 2, n_max}, jobs);
  const auto ki = static_cast<std::int64_t>(k);
  r.conjectured_volume = 12 * ki + 8;
  r.max_volume = r.sweep.max_volume();
  r.bound_holds = !r.max_volume || *r.max_volume <= r.conjectured_volume;
  r.ziegler_holds = true;
  for (const auto& c : r.sweep.classes)
    if (!ziegler_bound_check(c.normalized_volume, 3, k)) r.ziegler_holds = false;
  if (!r.max_volume) return r;
  for (std::size_t i = 0; i < r.sweep.classes.size(); ++i)
    if (r.sweep.classes[i].normalized_volume == *r.max_volume) r.maximizers.push_back(i);
  const ClassEntry& top = r.sweep.classes[r.maximizers.front()];
  if (r.maximizers.size() == 1 && *r.max_volume == r.conjectured_volume)
    r.maximizer_matches = top.form == canonical_form(make_T({2 * ki + 1, 4 * ki + 3, 12 * ki + 8}));
  const CollinearityReport c = interior_collinearity_report(top.representative);
  r.interior_collinear = c.collinear;
  if (k >= 2 && c.collinear) r.line_misses_vertices = !c.through_vertex.has_value();
  return r;
}

struct DeltaIdentityReport {
  std::int64_t p = 0, q = 0, r = 1;
  Integer first_sum = 0;   // sum_{i=0}^{p-1} ceil(q - i(q+1)/p)
  Integer second_sum = 0;  // sum_{i=1}^{r-1} ceil(iq/r)
  Rational closed_form;    // (q(p+r) + r - 1) / 2
  std::size_t census_interior = 0;
  bool identity_holds = false;
  bool columns_match = false;
  bool clean = false;

  bool ok() const { return identity_holds && columns_match && clean; }
};

/// Evaluates both ceiling sums against the closed form and cross-checks each
/// term against the interior points of Delta on one vertical line: column
/// x = i (0 <= i < p) carries the i-th term of the first sum and column
/// x = -(r - i) the i-th term of the second.
inline DeltaIdentityReport delta_identity_check(std::int64_t p, std::int64_t q, std::int64_t r = 1) {
  require(p >= 1 && q >= 1 && r >= 1, ErrorCode::InvalidParameters, "p, q, r must be positive");
  if (std::gcd(q + 1, p) != 1) fail(ErrorCode::GcdViolation, "gcd(q+1, p) must be 1");
  if (std::gcd(q, r) != 1) fail(ErrorCode::GcdViolation, "gcd(q, r) must be 1");
  DeltaIdentityReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  std::vector<Integer> first, second;
  for (std::int64_t i = 0; i < p; ++i) first.push_back(ceil_of(Rational(q) - Rational(i * (q + 1), p)));
  for (std::int64_t i = 1; i < r; ++i) second.push_back(ceil_of(Rational(i * q, r)));
  rep.first_sum = std::accumulate(first.begin(), first.end(), Integer(0));
  rep.second_sum = std::accumulate(second.begin(), second.end(), Integer(0));
  rep.closed_form = Rational(q * (p + r) + (r - 1), 2);
  rep.identity_holds = Rational(rep.first_sum + rep.second_sum) == rep.closed_form;

  const LatticePointCensus census = enumerate_lattice_points(make_delta_pq(p, q, r));
  rep.clean = census.boundary_nonvertex.empty();
  rep.census_interior = census.interior.size();
  std::map<std::int64_t, Integer> column;
  for (const auto& w : census.interior) column[w[0]] += 1;
  auto at = [&](std::int64_t x) { return column.count(x) ? column[x] : Integer(0); };
  rep.columns_match = Integer(rep.census_interior) == rep.first_sum + rep.second_sum;
  for (std::int64_t i = 0; i < p; ++i)
    if (at(i) != first[static_cast<std::size_t>(i)]) rep.columns_match = false;
  for (std::int64_t i = 1; i < r; ++i)
    if (at(-(r - i)) != second[static_cast<std::size_t>(i - 1)]) rep.columns_match = false;
  return rep;
}

/// Three non-collinear interior lattice points of Delta_{p,q,r}, if any.
inline std::optional<std::array<LatticePoint, 3>> noncollinear_interior_triple(const Simplex& s) {
  const auto pts = enumerate_lattice_points(s).interior;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t l = j + 1; l < pts.size(); ++l)
        if (affine_hull_dim(std::vector<LatticePoint>{pts[i], pts[j], pts[l]}) == 2)
          return std::array<LatticePoint, 3>{pts[i], pts[j], pts[l]};
  return std::nullopt;
}

/// Brute-force count of the triangulations of the lattice points of a clean
/// 3-simplex with at most 9 lattice points. No cell may contain another
/// point, so every triangulation counted is full. Cells are grown across
/// unmatched interior facets from the cell on a fixed carrier facet, so each
/// triangulation is generated once.
inline std::size_t count_triangulations(const Simplex& s) {
  require(s.dim() == 3, ErrorCode::WrongDimension, "the counter is three-dimensional");
  const LatticePointCensus census = enumerate_lattice_points(s);
  require(census.boundary_nonvertex.empty(), ErrorCode::NotClean, "the counter needs a clean simplex");
  std::vector<LatticePoint> pts = s.vertices();
  pts.insert(pts.end(), census.interior.begin(), census.interior.end());
  require(pts.size() <= 9, ErrorCode::SpaceTooLarge, "the counter is limited to 9 points");
  const std::size_t n = pts.size();
  const Integer target = s.normalized_volume();

  // Candidate cells: nondegenerate and containing no other point.
  struct Candidate {
    Cell cell;
    Simplex simplex;
  };
  std::vector<Candidate> cands;
  detail::for_each_subset(n, 4, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> vs;
    for (auto i : idx) vs.push_back(pts[i]);
    if (affine_hull_dim(vs) != 3) return;
    Simplex sx(vs);
    for (std::size_t o = 0; o < n; ++o) {
      if (std::find(idx.begin(), idx.end(), o) != idx.end()) continue;
      if (classify_point(sx, pts[o]).kind != PointClassification::Kind::Exterior) return;
    }
    cands.push_back({idx, std::move(sx)});
  });
  std::vector<std::vector<LatticePoint>> cand_points;
  for (const auto& c : cands) cand_points.push_back(c.simplex.vertices());
  auto on_boundary = [&](const Cell& f) {
    for (std::size_t i = 0; i < 4; ++i) {
      bool all = true;
      for (auto k : f)
        if (s.form_value(i, pts[k]) != 0) all = false;
      if (all) return true;
    }
    return false;
  };

  std::size_t count = 0;
  std::vector<std::size_t> chosen;
  Integer vol = 0;
  std::function<void()> dfs = [&]() {
    // First facet of a chosen cell that is interior and not yet matched.
    std::map<Cell, std::size_t> uses;
    for (auto c : chosen)
      for (std::size_t drop = 0; drop < 4; ++drop) {
        Cell f;
        for (std::size_t t = 0; t < 4; ++t)
          if (t != drop) f.push_back(cands[c].cell[t]);
        ++uses[f];
      }
    std::optional<Cell> open;
    for (const auto& [f, u] : uses)
      if (u == 1 && !on_boundary(f)) {
        open = f;
        break;
      }
    if (!open) {
      if (vol == target) ++count;
      return;
    }
    for (std::size_t c = 0; c < cands.size(); ++c) {
      if (!std::includes(cands[c].cell.begin(), cands[c].cell.end(), open->begin(), open->end())) continue;
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      if (vol + cands[c].simplex.normalized_volume() > target) continue;
      bool disjoint = true;
      for (auto o : chosen)
        if (!interiors_disjoint(cand_points[c], cand_points[o])) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      chosen.push_back(c);
      vol += cands[c].simplex.normalized_volume();
      dfs();
      vol -= cands[c].simplex.normalized_volume();
      chosen.pop_back();
    }
  };
  // Every triangulation has exactly one cell on the carrier facet {1, 2, 3}.
  const Cell start{1, 2, 3};
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (!std::includes(cands[c].cell.begin(), cands[c].cell.end(), start.begin(), start.end())) continue;
    chosen = {c};
    vol = cands[c].simplex.normalized_volume();
    dfs();
  }
  return count;
}

struct RefinementFloorReport {
  std::size_t k = 0;
  std::size_t orders = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  bool all_full = true;
  bool all_valid = true;
  bool all_unit_cells = true;  // every cell of every final triangulation has volume 1
};

/// Runs the refinement sequence of a clean simplex for every insertion
/// order of its interior points (k! orders, k <= max_k) or only the
/// lexicographic order otherwise.
inline RefinementFloorReport refinement_floor(const Simplex& s, std::size_t max_k = 3) {
  const LatticePointCensus census = enumerate_lattice_points(s);
  require(census.boundary_nonvertex.empty(), ErrorCode::NotClean, "refinement needs a clean simplex");
  RefinementFloorReport r;
  r.k = census.interior.size();
  std::vector<LatticePoint> order = census.interior;
  bool first = true;
  do {
    auto [t, trace] = refinement_sequence(s, order);
    const ValidationReport v = validate_triangulation(t);
    r.all_full = r.all_full && v.full;
    r.all_valid = r.all_valid && v.valid();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.cell_simplex(i)->normalized_volume() != 1) r.all_unit_cells = false;
    r.min_size = first ? t.size() : std::min(r.min_size, t.size());
    r.max_size = first ? t.size() : std::max(r.max_size, t.size());
    first = false;
    ++r.orders;
  } while (r.k <= max_k && std::next_permutation(order.begin(), order.end()));
  return r;
}

}  // namespace latpoly
