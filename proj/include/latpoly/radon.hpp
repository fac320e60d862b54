#pragma once

// Configurations of d+2 points: affine dependence, Lawson partitions and the
// at most two triangulations they determine, bipyramids inside simplices, and
// planar lattice quadrilaterals.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/placing.hpp"
#include "latpoly/triangulation.hpp"

namespace latpoly {

/// Unique affine dependence of d+2 spanning points: sum c_i = 0 and
/// sum c_i v_i = 0. The first nonzero coefficient is positive and the
/// positive coefficients sum to one.
inline RationalVector affine_dependence(std::span<const RationalPoint> points) {
  require(!points.empty(), ErrorCode::WrongCount, "no points");
  const std::size_t d = points[0].size();
  require(points.size() == d + 2, ErrorCode::WrongCount,
          "expected " + std::to_string(d + 2) + " points, got " + std::to_string(points.size()));
  for (const auto& p : points) require(p.size() == d, ErrorCode::DimensionMismatch, "point dimension");
  require(affine_hull_dim(points) == d, ErrorCode::NotSpanning, "points lie in a hyperplane");

  // Kernel of the (d+1) x (d+2) matrix with columns [v_i, 1]: signed maximal minors.
  RationalVector c(d + 2);
  for (std::size_t i = 0; i < d + 2; ++i) {
    RationalMatrix m(d + 1);
    for (std::size_t r = 0; r <= d; ++r)
      for (std::size_t j = 0; j < d + 2; ++j)
        if (j != i) m[r].push_back(r < d ? points[j][r] : Rational(1));
    c[i] = determinant(std::move(m));
    if (i % 2 == 1) c[i] = -c[i];
  }
  auto first = std::find_if(c.begin(), c.end(), [](const Rational& v) { return v != 0; });
  if (*first < 0)
    for (auto& v : c) v = -v;
  Rational pos = 0;
  for (const auto& v : c)
    if (v > 0) pos += v;
  for (auto& v : c) v /= pos;
  return c;
}

inline RationalVector affine_dependence(std::span<const LatticePoint> points) {
  std::vector<RationalPoint> q;
  for (const auto& p : points) q.push_back(to_rational(p));
  return affine_dependence(std::span<const RationalPoint>(q));
}

/// Sets A0 (zero coefficient), A1 and A2 (the two sign classes, A1 the
/// smaller) and the nonnegative weights alpha, which sum to one on A1 and
/// on A2.
struct LawsonPartition {
  std::vector<std::size_t> a0, a1, a2;
  RationalVector alphas;
};

inline LawsonPartition lawson_partition(std::span<const RationalPoint> points) {
  const RationalVector c = affine_dependence(points);
  std::vector<std::size_t> pos, neg;
  LawsonPartition lp;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) pos.push_back(i);
    else if (c[i] < 0) neg.push_back(i);
    else lp.a0.push_back(i);
    lp.alphas.push_back(abs(c[i]));
  }
  // Smaller side first; equal sizes fall back to the lexicographically smaller set.
  if (neg.size() < pos.size() || (neg.size() == pos.size() && neg < pos)) std::swap(pos, neg);
  lp.a1 = std::move(pos);
  lp.a2 = std::move(neg);
  require(lp.a0.size() + lp.a1.size() + lp.a2.size() == c.size(), ErrorCode::InvariantViolation,
          "partition sizes");
  require(!lp.a1.empty() && lp.a2.size() >= 2 && lp.a2.size() >= lp.a1.size(), ErrorCode::InvariantViolation,
          "partition size constraints");
  return lp;
}

inline LawsonPartition lawson_partition(std::span<const LatticePoint> points) {
  std::vector<RationalPoint> q;
  for (const auto& p : points) q.push_back(to_rational(p));
  return lawson_partition(std::span<const RationalPoint>(q));
}

/// Common point of conv(A1) and conv(A2).
inline RationalPoint radon_point(const LawsonPartition& lp, std::span<const RationalPoint> points) {
  RationalPoint x(points[0].size(), Rational(0));
  for (auto i : lp.a1)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += lp.alphas[i] * points[i][j];
  return x;
}

inline RationalPoint radon_point(const LawsonPartition& lp, std::span<const LatticePoint> points) {
  std::vector<RationalPoint> q;
  for (const auto& p : points) q.push_back(to_rational(p));
  return radon_point(lp, std::span<const RationalPoint>(q));
}

/// Cells {T_i : i in A_j} for each side with |A_j| > 1, where T_i omits point i.
inline std::vector<std::vector<Cell>> lawson_cells(const LawsonPartition& lp) {
  const std::size_t n = lp.a0.size() + lp.a1.size() + lp.a2.size();
  std::vector<std::vector<Cell>> out;
  for (const auto* side : {&lp.a1, &lp.a2}) {
    if (side->size() <= 1) continue;
    std::vector<Cell> cells;
    for (auto omit : *side) {
      Cell c;
      for (std::size_t i = 0; i < n; ++i)
        if (i != omit) c.push_back(i);
      cells.push_back(std::move(c));
    }
    out.push_back(std::move(cells));
  }
  return out;
}

/// The triangulations of conv(points) with vertices among the points.
inline std::vector<Triangulation> lawson_triangulations(std::span<const LatticePoint> points) {
  LawsonPartition lp = lawson_partition(points);
  std::vector<LatticePoint> pts(points.begin(), points.end());
  Polytope carrier = Polytope::hull(pts);
  std::vector<Triangulation> out;
  for (auto& cells : lawson_cells(lp)) out.emplace_back(carrier, pts, std::move(cells));
  return out;
}

/// Sign pattern of an exterior point's barycentric coordinates. With exactly
/// one negative coordinate and z zeros, conv(S, x) contains a (d-z)-bipyramid.
struct BipyramidReport {
  bool is_bipyramid = false;
  std::size_t j = 0;  // meaningful only when is_bipyramid
  std::optional<std::size_t> negative_index;
  std::vector<std::size_t> zero_indices;
  RationalVector coeffs;
};

inline BipyramidReport bipyramid_report(const RationalVector& coeffs) {
  BipyramidReport r;
  r.coeffs = coeffs;
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) {
      ++negatives;
      r.negative_index = i;
    } else if (coeffs[i] == 0) {
      r.zero_indices.push_back(i);
    }
  }
  require(negatives > 0, ErrorCode::NotExterior, "point lies in the simplex");
  if (negatives > 1) {
    r.negative_index.reset();
    return r;
  }
  r.is_bipyramid = true;
  r.j = coeffs.size() - 1 - r.zero_indices.size();
  return r;
}

inline BipyramidReport bipyramid_type(const Simplex& s, const LatticePoint& x) {
  return bipyramid_report(barycentric(s, x).coeffs);
}

inline BipyramidReport bipyramid_type(std::span<const RationalPoint> simplex, const RationalPoint& x) {
  return bipyramid_report(barycentric(simplex, x).coeffs);
}

/// Outcome of the bipyramid construction for interior points w1, w2 of a
/// clean simplex T with vertices v_0..v_d.
///
/// alpha holds the coefficients of w2 = alpha[0] w1 + sum alpha[1+i] v_i.
/// For kind Collinear, w1, w2 and v_n are collinear and only alpha[0] and
/// alpha[1+n] are nonzero. For kind Bipyramid, w2 lies in the interior of
/// conv(F_n, w1), alpha[0] > 0, alpha[1+n] < 0, alpha[1+m] = 0 and the rest
/// are nonnegative; report describes conv(T_m, w2) with T_m = conv(F_m, w1).
struct BipyramidWitness {
  enum class Kind { Collinear, Bipyramid };
  Kind kind = Kind::Bipyramid;
  std::size_t n = 0;
  std::size_t m = 0;
  RationalVector alpha;
  RationalPoint x;      // L ∩ F_n, the non-lattice point of the construction
  Rational mu;          // x = mu w1 + (1 - mu) v_n
  BipyramidReport report;
};

namespace detail {

inline std::vector<LatticePoint> cone_cell(const Simplex& t, std::size_t omit, const LatticePoint& apex) {
  std::vector<LatticePoint> vs;
  for (std::size_t i = 0; i < t.vertices().size(); ++i)
    if (i != omit) vs.push_back(t.vertex(i));
  vs.push_back(apex);
  return vs;
}

}  // namespace detail

inline BipyramidWitness find_bipyramid(const Simplex& t, const LatticePoint& w1, const LatticePoint& w2) {
  const std::size_t d = t.dim();
  require(w1.dim() == d && w2.dim() == d, ErrorCode::DimensionMismatch, "point dimension");
  require(w1 != w2, ErrorCode::InvalidParameters, "w1 and w2 must differ");
  require(is_clean(t), ErrorCode::NotClean, "simplex is not clean");
  for (const auto* w : {&w1, &w2})
    require(classify_point(t, *w).kind == PointClassification::Kind::Interior, ErrorCode::NotInterior,
            w->str() + " is not an interior point");

  BipyramidWitness out;
  out.alpha.assign(d + 2, Rational(0));

  for (std::size_t v = 0; v <= d; ++v) {
    if (!detail::parallel(w2 - t.vertex(v), w1 - t.vertex(v))) continue;
    // w2 = a w1 + (1 - a) v along the shared line
    const LatticePoint u = w1 - t.vertex(v), r = w2 - t.vertex(v);
    std::size_t axis = 0;
    while (u[axis] == 0) ++axis;
    const Rational a(r[axis], u[axis]);
    out.kind = BipyramidWitness::Kind::Collinear;
    out.n = v;
    out.alpha[0] = a;
    out.alpha[1 + v] = 1 - a;
    return out;
  }

  // The cell conv(F_n, w1) of the basic triangulation holding w2 in its interior.
  std::optional<std::size_t> n;
  for (std::size_t i = 0; i <= d && !n; ++i) {
    Simplex cell(detail::cone_cell(t, i, w1));
    if (classify_point(cell, w2).kind == PointClassification::Kind::Interior) n = i;
  }
  if (!n) fail(ErrorCode::NotInCellInterior, w2.str() + " lies on a face of the basic triangulation about " + w1.str());
  out.n = *n;

  // x = L ∩ F_n where L is the line through v_n and w1.
  const Rational lambda_w1 = barycentric(t, w1).coeffs[*n];
  out.mu = 1 / (1 - lambda_w1);
  const RationalPoint w1q = to_rational(w1), vnq = to_rational(t.vertex(*n)), w2q = to_rational(w2);
  out.x.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.x[j] = out.mu * w1q[j] + (1 - out.mu) * vnq[j];

  // Lawson triangulation of V(T_n) ∪ {x}: A0 = {w1}, A1 = {x}, A2 = V(F_n).
  std::vector<RationalPoint> config;
  std::vector<std::size_t> label;  // 0 = w1, 1 + i = v_i, d + 2 = x
  for (std::size_t i = 0; i <= d; ++i)
    if (i != *n) {
      config.push_back(to_rational(t.vertex(i)));
      label.push_back(1 + i);
    }
  config.push_back(w1q);
  label.push_back(0);
  config.push_back(out.x);
  label.push_back(d + 2);
  const LawsonPartition lp = lawson_partition(std::span<const RationalPoint>(config));
  require(lp.a0.size() == 1 && label[lp.a0[0]] == 0 && lp.a1.size() == 1 && label[lp.a1[0]] == d + 2,
          ErrorCode::InvariantViolation, "unexpected partition of V(T_n) with x");
  const auto triangulations = lawson_cells(lp);
  require(triangulations.size() == 1, ErrorCode::InvariantViolation, "expected a single triangulation");

  for (const auto& cell : triangulations[0]) {
    std::vector<RationalPoint> vs;
    for (auto i : cell) vs.push_back(config[i]);
    RationalVector gamma = barycentric(std::span<const RationalPoint>(vs), w2q).coeffs;
    if (std::any_of(gamma.begin(), gamma.end(), [](const Rational& g) { return g < 0; })) continue;
    // The omitted configuration point is some v_m.
    std::size_t omitted = 0;
    while (std::binary_search(cell.begin(), cell.end(), omitted)) ++omitted;
    out.m = label[omitted] - 1;
    for (std::size_t c = 0; c < cell.size(); ++c) {
      const std::size_t l = label[cell[c]];
      if (l == d + 2) {
        out.alpha[0] += out.mu * gamma[c];
        out.alpha[1 + *n] += (1 - out.mu) * gamma[c];
      } else {
        out.alpha[l] += gamma[c];
      }
    }
    break;
  }

  // Coefficients relative to T_m = conv(F_m, w1), in its vertex order.
  RationalVector coeffs;
  for (std::size_t i = 0; i <= d; ++i)
    if (i != out.m) coeffs.push_back(out.alpha[1 + i]);
  coeffs.push_back(out.alpha[0]);
  const Simplex cell_m(detail::cone_cell(t, out.m, w1));
  require(barycentric(cell_m, w2).coeffs == coeffs, ErrorCode::InvariantViolation,
          "constructed coefficients disagree with the barycentric coordinates");
  out.report = bipyramid_type(cell_m, w2);
  return out;
}

/// Planar quadrilateral analysis of four lattice points.
struct QuadReport {
  bool planar = false;
  bool convex_quad = false;
  bool has_parallel_opposite_edges = false;
  std::vector<std::size_t> cycle;  // cyclic vertex order of the convex quadrilateral
  std::optional<LatticePoint> interior_lattice_point;
  std::vector<std::size_t> containing_triangle;
};

namespace detail {

inline Integer cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b,
                      const std::vector<std::size_t>& c) {
  return Integer(a[c[0]] - o[c[0]]) * (b[c[1]] - o[c[1]]) - Integer(a[c[1]] - o[c[1]]) * (b[c[0]] - o[c[0]]);
}

// Strict interior of a planar triangle, in projected coordinates.
inline bool in_open_triangle(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                             const LatticePoint& x, const std::vector<std::size_t>& coords) {
  const int s = cross2(a, b, c, coords).sign();
  return s != 0 && cross2(a, b, x, coords).sign() == s && cross2(b, c, x, coords).sign() == s &&
         cross2(c, a, x, coords).sign() == s;
}

}  // namespace detail

inline QuadReport quad_checks(const LatticePoint& w1, const LatticePoint& w2, const LatticePoint& v,
                              const LatticePoint& v2) {
  const std::vector<LatticePoint> q{w1, w2, v, v2};
  QuadReport r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      require(q[i] != q[j], ErrorCode::InvalidParameters, "quadrilateral points must be distinct");
  r.planar = affine_hull_dim(q) == 2;
  if (!r.planar) return r;
  std::vector<std::size_t> basis;
  for (std::size_t skip = 0; skip < 4 && basis.empty(); ++skip) {
    std::vector<LatticePoint> tri;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) {
        tri.push_back(q[i]);
        idx.push_back(i);
      }
    if (affine_hull_dim(tri) == 2) basis = idx;
  }
  const auto coords = detail::injective_projection(q, basis);

  // Convex position: no three collinear and none inside the triangle of the others.
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> o;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) o.push_back(j);
    if (detail::cross2(q[o[0]], q[o[1]], q[o[2]], coords) == 0) return r;
    if (detail::in_open_triangle(q[o[0]], q[o[1]], q[o[2]], q[i], coords)) return r;
  }
  r.convex_quad = true;
  // The diagonals are the pairing whose segments cross.
  for (auto [a, b, c, dd] : {std::array<std::size_t, 4>{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}) {
    const int s1 = detail::cross2(q[a], q[b], q[c], coords).sign();
    const int s2 = detail::cross2(q[a], q[b], q[dd], coords).sign();
    const int s3 = detail::cross2(q[c], q[dd], q[a], coords).sign();
    const int s4 = detail::cross2(q[c], q[dd], q[b], coords).sign();
    if (s1 * s2 < 0 && s3 * s4 < 0) r.cycle = {a, c, b, dd};
  }
  require(r.cycle.size() == 4, ErrorCode::InvariantViolation, "convex quadrilateral without crossing diagonals");
  const auto& cy = r.cycle;
  auto edge = [&](std::size_t i) { return q[cy[(i + 1) % 4]] - q[cy[i]]; };
  r.has_parallel_opposite_edges = detail::parallel(edge(0), edge(2)) || detail::parallel(edge(1), edge(3));
  if (r.has_parallel_opposite_edges) return r;

  // Among the corner triangles (cy[i-1], cy[i], cy[i+1]) take one of least area;
  // w = v1 + (v3 - v2) then lies inside conv(v1, v3, v4).
  Integer best = -1;
  for (std::size_t i = 0; i < 4; ++i) {
    Integer area = abs(detail::cross2(q[cy[(i + 3) % 4]], q[cy[i]], q[cy[(i + 1) % 4]], coords));
    if (best < 0 || area < best) best = area;
  }
  for (std::size_t i = 0; i < 4 && !r.interior_lattice_point; ++i) {
    const std::size_t v1 = cy[(i + 3) % 4], vm = cy[i], v3 = cy[(i + 1) % 4], v4 = cy[(i + 2) % 4];
    if (abs(detail::cross2(q[v1], q[vm], q[v3], coords)) != best) continue;
    const LatticePoint w = q[v1] + (q[v3] - q[vm]);
    if (detail::in_open_triangle(q[v1], q[v3], q[v4], w, coords)) {
      r.interior_lattice_point = w;
      r.containing_triangle = {v1, v3, v4};
      std::sort(r.containing_triangle.begin(), r.containing_triangle.end());
    }
  }
  require(r.interior_lattice_point.has_value(), ErrorCode::InvariantViolation,
          "no interior lattice point found in a quadrilateral without parallel edges");
  return r;
}

}  // namespace latpoly
