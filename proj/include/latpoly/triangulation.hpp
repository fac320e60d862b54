#pragma once

// Lattice triangulations: validation, basic triangulations about an interior
// point, single-point refinement and refinement sequences.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/placing.hpp"

namespace latpoly {

/// A set of d-simplices over a shared point table, triangulating `carrier`.
///
/// Cells are stored as sorted index lists and kept in sorted order; the
/// vertex set is the union of all cell vertices.
class Triangulation {
 public:
  Triangulation(Polytope carrier, std::vector<LatticePoint> points, std::vector<Cell> cells)
      : carrier_(std::move(carrier)), points_(std::move(points)), cells_(std::move(cells)) {
    const std::size_t d = carrier_.ambient_dim();
    for (auto& c : cells_) {
      require(c.size() == d + 1, ErrorCode::InvalidParameters, "cell must have d+1 vertices");
      for (auto i : c) require(i < points_.size(), ErrorCode::InvalidParameters, "cell index out of range");
      std::sort(c.begin(), c.end());
    }
    std::sort(cells_.begin(), cells_.end());
    for (const auto& p : points_) require(p.dim() == d, ErrorCode::DimensionMismatch, "point dimension");
    simplices_.reserve(cells_.size());
    for (const auto& c : cells_) {
      std::vector<LatticePoint> vs;
      for (auto i : c) vs.push_back(points_[i]);
      try {
        simplices_.emplace_back(Simplex(std::move(vs)));
      } catch (const Error&) {
        simplices_.emplace_back(std::nullopt);
      }
    }
  }

  const Polytope& carrier() const noexcept { return carrier_; }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::size_t dim() const noexcept { return carrier_.ambient_dim(); }

  /// nullopt for a degenerate cell.
  const std::optional<Simplex>& cell_simplex(std::size_t i) const { return simplices_.at(i); }

  std::vector<LatticePoint> vertex_set() const {
    std::set<LatticePoint> used;
    for (const auto& c : cells_)
      for (auto i : c) used.insert(points_[i]);
    return {used.begin(), used.end()};
  }

  std::optional<std::size_t> index_of(const LatticePoint& p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    if (it == points_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

 private:
  Polytope carrier_;
  std::vector<LatticePoint> points_;
  std::vector<Cell> cells_;
  std::vector<std::optional<Simplex>> simplices_;
};

/// Per-condition outcome of checking a triangulation.
struct ValidationReport {
  bool vertices_in_point_set = true;  // (a) V(P) ⊆ points ⊆ P ∩ Z^d
  bool nondegenerate = true;
  bool disjoint_interiors = true;     // (b)
  bool facet_matching = true;         // (c)
  bool no_extra_points = true;        // (d)
  bool covers = true;                 // (e) every point used, volumes add up
  bool full = false;                  // vertex set is all of P ∩ Z^d
  Integer cell_volume_sum = 0;
  Integer carrier_volume = 0;
  std::vector<std::string> failures;

  bool valid() const {
    return vertices_in_point_set && nondegenerate && disjoint_interiors && facet_matching && no_extra_points && covers;
  }
};

namespace detail {

inline Integer dot(const BigRow& n, const LatticePoint& p) {
  Integer v = 0;
  for (std::size_t i = 0; i < n.size(); ++i) v += n[i] * p[i];
  return v;
}

inline bool separates(const BigRow& n, const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  if (std::all_of(n.begin(), n.end(), [](const Integer& c) { return c == 0; })) return false;
  Integer amin = dot(n, a[0]), amax = amin, bmin = dot(n, b[0]), bmax = bmin;
  for (const auto& p : a) {
    Integer v = dot(n, p);
    amin = std::min(amin, v);
    amax = std::max(amax, v);
  }
  for (const auto& p : b) {
    Integer v = dot(n, p);
    bmin = std::min(bmin, v);
    bmax = std::max(bmax, v);
  }
  return amax <= bmin || bmax <= amin;
}

// Normal orthogonal to d-1 direction vectors in R^d (zero when dependent).
inline BigRow orthogonal_normal(const std::vector<LatticePoint>& dirs) {
  const std::size_t d = dirs[0].dim();
  BigRow normal(d);
  for (std::size_t r = 0; r < d; ++r) {
    IntMatrix minor;
    for (const auto& row : dirs) {
      IntRow m;
      for (std::size_t c = 0; c < d; ++c)
        if (c != r) m.push_back(row[c]);
      minor.push_back(std::move(m));
    }
    Integer det = determinant(minor);
    normal[r] = (r % 2 == 0) ? det : Integer(-det);
  }
  return normal;
}

}  // namespace detail

/// Exact test that two full-dimensional simplices have disjoint interiors.
///
/// Interiors are disjoint iff a weakly separating hyperplane exists, and one
/// can be taken among the facet normals of the Minkowski difference, each
/// orthogonal to d-1 independent edges drawn from the two simplices.
inline bool interiors_disjoint(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  const std::size_t d = a[0].dim();
  for (const auto* s : {&a, &b}) {
    bool found = false;
    detail::for_each_subset(s->size(), d, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      std::vector<LatticePoint> dirs;
      for (std::size_t i = 1; i < idx.size(); ++i) dirs.push_back((*s)[idx[i]] - (*s)[idx[0]]);
      if (dirs.empty()) return;
      if (detail::separates(detail::orthogonal_normal(dirs), a, b)) found = true;
    });
    if (found) return true;
  }
  if (d == 1) return false;
  std::vector<LatticePoint> edges;
  for (const auto* s : {&a, &b})
    for (std::size_t i = 0; i < s->size(); ++i)
      for (std::size_t j = i + 1; j < s->size(); ++j) edges.push_back((*s)[j] - (*s)[i]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  bool found = false;
  detail::for_each_subset(edges.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    std::vector<LatticePoint> dirs;
    for (auto i : idx) dirs.push_back(edges[i]);
    if (detail::separates(detail::orthogonal_normal(dirs), a, b)) found = true;
  });
  return found;
}

inline ValidationReport validate_triangulation(const Triangulation& t) {
  ValidationReport r;
  const Polytope& carrier = t.carrier();
  const auto& pts = t.points();
  const std::size_t d = t.dim();

  for (const auto& p : pts) {
    if (!carrier.contains(p)) {
      r.vertices_in_point_set = false;
      r.failures.push_back("(a) point " + p.str() + " lies outside the carrier");
    }
  }
  for (const auto& v : carrier.vertices()) {
    if (!t.index_of(v)) {
      r.vertices_in_point_set = false;
      r.failures.push_back("(a) carrier vertex " + v.str() + " is not in the point set");
    }
  }

  std::vector<std::vector<LatticePoint>> cell_points;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<LatticePoint> vs;
    for (auto j : t.cells()[i]) vs.push_back(pts[j]);
    cell_points.push_back(std::move(vs));
    if (!t.cell_simplex(i)) {
      r.nondegenerate = false;
      r.failures.push_back("degenerate cell #" + std::to_string(i));
    }
  }
  if (!r.nondegenerate) {
    r.disjoint_interiors = r.facet_matching = r.no_extra_points = r.covers = false;
    return r;
  }

  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!interiors_disjoint(cell_points[i], cell_points[j])) {
        r.disjoint_interiors = false;
        r.failures.push_back("(b) cells #" + std::to_string(i) + " and #" + std::to_string(j) + " overlap");
      }

  // (c) facet matching: boundary facets lie in a carrier facet, all others
  // are shared by exactly two cells lying on opposite sides.
  std::map<Cell, std::vector<std::pair<std::size_t, std::size_t>>> facet_owners;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cell& c = t.cells()[i];
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      Cell f;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != drop) f.push_back(c[k]);
      facet_owners[f].emplace_back(i, drop);
    }
  }
  for (const auto& [f, owners] : facet_owners) {
    bool on_boundary = std::any_of(carrier.facets().begin(), carrier.facets().end(), [&](const Halfspace& h) {
      return std::all_of(f.begin(), f.end(), [&](std::size_t k) { return h.slack(pts[k]) == 0; });
    });
    if (on_boundary && owners.size() == 1) continue;
    bool ok = owners.size() == 2 && !on_boundary;
    if (ok) {
      // opposite vertices must lie strictly on opposite sides of the facet
      const auto& [c1, d1] = owners[0];
      const auto& [c2, d2] = owners[1];
      const Simplex& s1 = *t.cell_simplex(c1);
      Integer side = s1.form_value(d1, pts[t.cells()[c2][d2]]);
      ok = side < 0;
    }
    if (!ok) {
      r.facet_matching = false;
      std::string desc;
      for (auto k : f) desc += pts[k].str();
      r.failures.push_back("(c) facet " + desc + " is used by " + std::to_string(owners.size()) +
                           (on_boundary ? " cells on the boundary" : " cells"));
    }
  }

  for (std::size_t i = 0; i < t.size(); ++i) {
    const Simplex& s = *t.cell_simplex(i);
    const Cell& c = t.cells()[i];
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (std::binary_search(c.begin(), c.end(), k)) continue;
      bool inside = true;
      for (std::size_t f = 0; f <= d && inside; ++f)
        if (s.form_value(f, pts[k]) < 0) inside = false;
      if (inside) {
        r.no_extra_points = false;
        r.failures.push_back("(d) cell #" + std::to_string(i) + " contains point " + pts[k].str());
      }
    }
  }

  std::vector<bool> used(pts.size(), false);
  for (const auto& c : t.cells())
    for (auto k : c) used[k] = true;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (!used[k]) {
      r.covers = false;
      r.failures.push_back("(e) point " + pts[k].str() + " is not a vertex of any cell");
    }
  for (std::size_t i = 0; i < t.size(); ++i) r.cell_volume_sum += t.cell_simplex(i)->normalized_volume();
  r.carrier_volume = normalized_volume(carrier);
  if (r.cell_volume_sum != r.carrier_volume) {
    r.covers = false;
    r.failures.push_back("(e) cell volumes sum to " + r.cell_volume_sum.str() + ", carrier has " +
                         r.carrier_volume.str());
  }

  LatticePointCensus census = enumerate_lattice_points(carrier);
  std::vector<LatticePoint> all = census.interior;
  all.insert(all.end(), census.boundary_nonvertex.begin(), census.boundary_nonvertex.end());
  all.insert(all.end(), carrier.vertices().begin(), carrier.vertices().end());
  std::sort(all.begin(), all.end());
  r.full = (all == t.vertex_set());
  return r;
}

/// Facet triangulations of p using only its vertices, as (d-1)-simplices
/// indexed into p.vertices().
inline std::vector<Cell> boundary_triangulation(const Polytope& p) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "boundary of a lower-dimensional polytope");
  std::vector<Cell> out;
  for (const auto& h : facet_inequalities(p)) {
    std::vector<LatticePoint> fpts;
    for (auto i : h.incident) fpts.push_back(p.vertices()[i]);
    for (const auto& c : placing_triangulation(fpts)) {
      Cell mapped;
      for (auto i : c) mapped.push_back(h.incident[i]);
      std::sort(mapped.begin(), mapped.end());
      out.push_back(std::move(mapped));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cones the vertex-only facet triangulations of p over an interior point.
inline Triangulation basic_triangulation(const Polytope& p, const LatticePoint& w) {
  require(w.dim() == p.ambient_dim(), ErrorCode::DimensionMismatch, "point dimension");
  require(p.full_dimensional() && p.in_interior(w), ErrorCode::NotInterior,
          w.str() + " is not an interior point of the polytope");
  std::vector<LatticePoint> points = p.vertices();
  points.push_back(w);
  const std::size_t apex = points.size() - 1;
  std::vector<Cell> cells = boundary_triangulation(p);
  for (auto& c : cells) c.push_back(apex);
  return Triangulation(p, std::move(points), std::move(cells));
}

inline Triangulation basic_triangulation(const Simplex& s, const LatticePoint& w) {
  return basic_triangulation(Polytope(s), w);
}

/// The minimal face carrying a point in its relative interior.
struct Location {
  std::vector<std::size_t> cells;  // indices of every cell containing the point
  std::size_t dimension = 0;       // j
  std::vector<std::size_t> face;   // point indices spanning the face
};

inline Location locate(const Triangulation& t, const LatticePoint& w) {
  require(w.dim() == t.dim(), ErrorCode::DimensionMismatch, "point dimension");
  if (t.index_of(w)) fail(ErrorCode::AlreadyVertex, w.str() + " is already a vertex");
  Location loc;
  std::optional<std::vector<LatticePoint>> face_points;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = t.cell_simplex(i);
    require(s.has_value(), ErrorCode::InvariantViolation, "degenerate cell");
    std::vector<std::size_t> support;
    bool inside = true;
    for (std::size_t f = 0; f <= t.dim() && inside; ++f) {
      Integer v = s->form_value(f, w);
      if (v < 0) inside = false;
      else if (v > 0) support.push_back(t.cells()[i][f]);
    }
    if (!inside) continue;
    std::vector<LatticePoint> fp;
    for (auto k : support) fp.push_back(t.points()[k]);
    std::sort(fp.begin(), fp.end());
    if (face_points && *face_points != fp)
      fail(ErrorCode::InvariantViolation, "point " + w.str() + " lies in two different minimal faces");
    if (!face_points) {
      face_points = fp;
      loc.face = support;
    }
    loc.cells.push_back(i);
  }
  if (loc.cells.empty()) fail(ErrorCode::OutsideCarrier, w.str() + " is not covered by any cell");
  std::sort(loc.face.begin(), loc.face.end());
  loc.dimension = loc.face.size() - 1;
  return loc;
}

/// Inserts w: every cell containing the carrier face S of w is split into the
/// cells obtained by swapping one vertex of S for w.
inline Triangulation refine(const Triangulation& t, const LatticePoint& w) {
  Location loc = locate(t, w);
  std::vector<LatticePoint> points = t.points();
  points.push_back(w);
  const std::size_t wi = points.size() - 1;
  std::vector<Cell> cells;
  std::size_t next = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cell& c = t.cells()[i];
    if (next < loc.cells.size() && loc.cells[next] == i) {
      ++next;
      for (auto v : loc.face) {
        Cell n;
        for (auto k : c)
          if (k != v) n.push_back(k);
        n.push_back(wi);
        cells.push_back(std::move(n));
      }
    } else {
      cells.push_back(c);
    }
  }
  return Triangulation(t.carrier(), std::move(points), std::move(cells));
}

struct RefinementStage {
  LatticePoint inserted;
  std::size_t size = 0;            // |T_i| after the insertion
  std::size_t face_dimension = 0;  // j of the inserted point
  std::size_t incident_cells = 0;  // cells that were split
};

struct RefinementTrace {
  std::size_t initial_size = 1;
  std::vector<RefinementStage> stages;
};

inline Triangulation trivial_triangulation(const Simplex& s) {
  std::vector<LatticePoint> pts = s.vertices();
  Cell c(pts.size());
  std::iota(c.begin(), c.end(), 0);
  return Triangulation(Polytope(s), std::move(pts), {c});
}

/// Refines {s} by every interior lattice point of a clean simplex. The
/// default order is lexicographic; a supplied order must be a permutation of
/// the interior points.
inline std::pair<Triangulation, RefinementTrace> refinement_sequence(
    const Simplex& s, std::optional<std::vector<LatticePoint>> order = std::nullopt) {
  LatticePointCensus census = enumerate_lattice_points(s);
  require(census.boundary_nonvertex.empty(), ErrorCode::NotClean, "refinement sequences need a clean simplex");
  std::vector<LatticePoint> seq = order.value_or(census.interior);
  {
    std::vector<LatticePoint> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == census.interior, ErrorCode::InvalidParameters,
            "insertion order must be a permutation of the interior points");
  }
  Triangulation t = trivial_triangulation(s);
  RefinementTrace trace;
  for (const auto& w : seq) {
    Location loc = locate(t, w);
    t = refine(t, w);
    trace.stages.push_back({w, t.size(), loc.dimension, loc.cells.size()});
  }
  return {std::move(t), std::move(trace)};
}

/// Number of cells containing the given face (as a set of points).
inline std::size_t incident_cells(const Triangulation& t, const std::vector<LatticePoint>& face) {
  std::vector<std::size_t> idx;
  for (const auto& p : face) {
    auto i = t.index_of(p);
    if (!i) fail(ErrorCode::FaceNotFound, p.str() + " is not a vertex of the triangulation");
    idx.push_back(*i);
  }
  std::size_t count = 0;
  for (const auto& c : t.cells())
    if (std::all_of(idx.begin(), idx.end(), [&](std::size_t k) { return std::binary_search(c.begin(), c.end(), k); }))
      ++count;
  if (count == 0) fail(ErrorCode::FaceNotFound, "no cell contains the face");
  return count;
}

/// Explicit full triangulation of a clean simplex whose interior points are
/// v + i(w_1 - v), i = 1..k, for a vertex v: cells S_{i,j} swap v_j and v for
/// the consecutive pair w_{i-1}, w_i (w_0 = v), plus the cell spanned by the
/// facet opposite v and w_k. It has exactly dk+1 cells.
inline Triangulation canonical_minimal_triangulation(const Simplex& s) {
  CollinearityReport report;
  try {
    report = interior_collinearity_report(s);
  } catch (const Error& e) {
    fail(ErrorCode::HypothesisFailed, e.what());
  }
  const std::size_t d = s.dim();
  const std::size_t k = report.interior.size();
  std::size_t apex = d;
  if (k >= 2) {
    if (!report.collinear || !report.through_vertex || !report.evenly_spaced)
      fail(ErrorCode::HypothesisFailed, "interior points are not evenly spaced on a line through a vertex");
    apex = *report.through_vertex;
  }
  const LatticePoint& v = s.vertex(apex);
  std::vector<LatticePoint> interior = report.interior;
  auto dist2 = [&](const LatticePoint& p) {
    Integer r = 0;
    for (std::size_t i = 0; i < d; ++i) r += Integer(p[i] - v[i]) * (p[i] - v[i]);
    return r;
  };
  std::sort(interior.begin(), interior.end(), [&](const auto& a, const auto& b) { return dist2(a) < dist2(b); });
  const LatticePoint step = interior[0] - v;
  for (std::size_t i = 0; i < k; ++i)
    if (interior[i] != v + static_cast<std::int64_t>(i + 1) * step)
      fail(ErrorCode::HypothesisFailed, "interior points are not v + i(w_1 - v)");

  std::vector<LatticePoint> points = s.vertices();
  points.insert(points.end(), interior.begin(), interior.end());
  auto w = [&](std::size_t i) { return i == 0 ? apex : d + i; };
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j <= d; ++j)
    if (j != apex) others.push_back(j);
  std::vector<Cell> cells;
  for (std::size_t i = 1; i <= k; ++i) {
    for (auto j : others) {
      Cell c;
      for (auto o : others)
        if (o != j) c.push_back(o);
      c.push_back(w(i));
      c.push_back(w(i - 1));
      cells.push_back(std::move(c));
    }
  }
  Cell last = others;
  last.push_back(w(k));
  cells.push_back(std::move(last));
  return Triangulation(Polytope(s), std::move(points), std::move(cells));
}

}  // namespace latpoly
