#pragma once

// Lattice points, simplices and polytopes with exact barycentric
// classification and bounding-box lattice point census.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "latpoly/error.hpp"
#include "latpoly/integer.hpp"

namespace latpoly {

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static LatticePoint origin(std::size_t d) { return LatticePoint(std::vector<std::int64_t>(d, 0)); }
  static LatticePoint unit(std::size_t d, std::size_t i) {
    auto p = origin(d);
    p.coords_.at(i) = 1;
    return p;
  }
  static LatticePoint constant(std::size_t d, std::int64_t value) {
    return LatticePoint(std::vector<std::int64_t>(d, value));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  auto operator<=>(const LatticePoint&) const = default;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "point addition");
    std::vector<std::int64_t> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::add(a[i], b[i]);
    return LatticePoint(std::move(r));
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "point subtraction");
    std::vector<std::int64_t> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::sub(a[i], b[i]);
    return LatticePoint(std::move(r));
  }
  friend LatticePoint operator*(std::int64_t s, const LatticePoint& a) {
    std::vector<std::int64_t> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked::mul(s, a[i]);
    return LatticePoint(std::move(r));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<std::int64_t> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << p.str(); }

using RationalPoint = RationalVector;

inline RationalPoint to_rational(const LatticePoint& p) {
  RationalPoint r;
  r.reserve(p.dim());
  for (auto c : p.coords()) r.emplace_back(c);
  return r;
}

/// Dimension of the smallest flat containing the points (0 for one point).
inline std::size_t affine_hull_dim(std::span<const LatticePoint> points) {
  require(!points.empty(), ErrorCode::InvalidParameters, "affine hull of no points");
  IntMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back((points[i] - points[0]).coords());
  return diffs.empty() ? 0 : rank(diffs);
}

inline std::size_t affine_hull_dim(std::span<const RationalPoint> points) {
  require(!points.empty(), ErrorCode::InvalidParameters, "affine hull of no points");
  RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector row(points[0].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  return diffs.empty() ? 0 : rank(std::move(diffs));
}

/// Coefficients sum to exactly one.
struct BarycentricCoords {
  RationalVector coeffs;
};

struct PointClassification {
  enum class Kind { Interior, Boundary, Exterior, Vertex };
  Kind kind = Kind::Exterior;
  // Indices whose coordinate is zero; the carrier face is spanned by the rest.
  std::vector<std::size_t> zero_indices;
  std::size_t vertex_index = 0;
};

/// Affine form c.x + c0, stored as [c_0 .. c_{d-1}, c0].
using AffineForm = BigRow;

/// Lattice d-simplex with cached normalized volume and barycentric forms.
///
/// For every vertex i, forms()[i] evaluated at [x, 1] equals
/// lambda_i(x) * normalized_volume(), so the forms are nonnegative exactly on
/// the simplex and their common denominator is the normalized volume.
class Simplex {
 public:
  explicit Simplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    require(!vertices_.empty(), ErrorCode::DimensionMismatch, "simplex without vertices");
    const std::size_t d = vertices_[0].dim();
    require(d >= 1, ErrorCode::DimensionMismatch, "dimension must be at least 1");
    require(vertices_.size() == d + 1, ErrorCode::DimensionMismatch,
            "a d-simplex needs d+1 vertices, got " + std::to_string(vertices_.size()) + " in dimension " +
                std::to_string(d));
    for (const auto& v : vertices_) require(v.dim() == d, ErrorCode::DimensionMismatch, "vertex dimension");

    IntMatrix homogeneous(d + 1, IntRow(d + 1, 1));
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j) homogeneous[i][j] = vertices_[i][j];
    Integer det = determinant(homogeneous);
    if (det == 0) fail(ErrorCode::DegenerateSimplex, "vertices are affinely dependent");
    const int sgn = det.sign();
    volume_ = abs(det);

    // forms_[i][r] = sgn * adj(M)[r][i] = sgn * (-1)^(r+i) * minor(M; row i, col r)
    forms_.assign(d + 1, AffineForm(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t r = 0; r <= d; ++r) {
        IntMatrix minor;
        minor.reserve(d);
        for (std::size_t a = 0; a <= d; ++a) {
          if (a == i) continue;
          IntRow row;
          row.reserve(d);
          for (std::size_t b = 0; b <= d; ++b)
            if (b != r) row.push_back(homogeneous[a][b]);
          minor.push_back(std::move(row));
        }
        Integer cof = determinant(minor);
        if ((r + i) % 2 == 1) cof = -cof;
        forms_[i][r] = sgn > 0 ? cof : Integer(-cof);
      }
    }
  }

  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_.at(i); }
  const Integer& normalized_volume() const noexcept { return volume_; }
  const std::vector<AffineForm>& forms() const noexcept { return forms_; }

  /// Numerator of lambda_i(x) over the common denominator normalized_volume().
  Integer form_value(std::size_t i, const LatticePoint& x) const {
    const auto& f = forms_[i];
    Integer v = f.back();
    for (std::size_t r = 0; r < x.dim(); ++r) v += f[r] * x[r];
    return v;
  }

 private:
  std::vector<LatticePoint> vertices_;
  Integer volume_;
  std::vector<AffineForm> forms_;
};

/// d! * Vol(s); degenerate input is rejected when the simplex is built.
inline Integer normalized_volume(const Simplex& s) { return s.normalized_volume(); }

/// Checked variant over a raw vertex list: DegenerateSimplex on zero volume.
inline Integer normalized_volume(std::span<const LatticePoint> vertices) {
  return Simplex(std::vector<LatticePoint>(vertices.begin(), vertices.end())).normalized_volume();
}

inline BarycentricCoords barycentric(const Simplex& s, const LatticePoint& x) {
  require(x.dim() == s.dim(), ErrorCode::DimensionMismatch, "point dimension");
  BarycentricCoords b;
  b.coeffs.reserve(s.dim() + 1);
  for (std::size_t i = 0; i <= s.dim(); ++i) b.coeffs.emplace_back(s.form_value(i, x), s.normalized_volume());
  return b;
}

/// Barycentric coordinates with respect to a simplex given by rational
/// vertices; solves the homogeneous row-vector system directly.
inline BarycentricCoords barycentric(std::span<const RationalPoint> vertices, const RationalPoint& x) {
  const std::size_t d = x.size();
  require(vertices.size() == d + 1, ErrorCode::DimensionMismatch, "rational simplex vertex count");
  // lambda * [v_i, 1] = [x, 1]  <=>  [v_i, 1]^T lambda^T = [x, 1]^T
  RationalMatrix a(d + 1, RationalVector(d + 1));
  for (std::size_t i = 0; i <= d; ++i) {
    require(vertices[i].size() == d, ErrorCode::DimensionMismatch, "rational vertex dimension");
    for (std::size_t j = 0; j < d; ++j) a[j][i] = vertices[i][j];
    a[d][i] = 1;
  }
  RationalVector rhs(x);
  rhs.emplace_back(1);
  return BarycentricCoords{solve(std::move(a), std::move(rhs))};
}

inline PointClassification classify_coords(const RationalVector& coeffs) {
  PointClassification c;
  bool negative = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) negative = true;
    if (coeffs[i] == 0) c.zero_indices.push_back(i);
  }
  if (negative) {
    c.kind = PointClassification::Kind::Exterior;
  } else if (c.zero_indices.empty()) {
    c.kind = PointClassification::Kind::Interior;
  } else if (c.zero_indices.size() + 1 == coeffs.size()) {
    c.kind = PointClassification::Kind::Vertex;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) c.vertex_index = i;
  } else {
    c.kind = PointClassification::Kind::Boundary;
  }
  return c;
}

inline PointClassification classify_point(const Simplex& s, const LatticePoint& x) {
  return classify_coords(barycentric(s, x).coeffs);
}

/// normal . x <= offset; `incident` lists the vertex indices on the facet.
struct Halfspace {
  IntRow normal;
  std::int64_t offset = 0;
  std::vector<std::size_t> incident;

  bool contains(const LatticePoint& x) const { return slack(x) >= 0; }
  Integer slack(const LatticePoint& x) const {
    Integer v = offset;
    for (std::size_t i = 0; i < normal.size(); ++i) v -= Integer(normal[i]) * x[i];
    return v;
  }
};

namespace detail {

inline IntRow primitive(const BigRow& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, abs(c));
  IntRow r;
  r.reserve(v.size());
  for (const auto& c : v) r.push_back(checked::narrow(g == 0 ? c : c / g));
  return r;
}

// Normal of the hyperplane through d points in R^d (zero if dependent).
inline BigRow hyperplane_normal(std::span<const LatticePoint> pts) {
  const std::size_t d = pts[0].dim();
  IntMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back((pts[i] - pts[0]).coords());
  BigRow normal(d);
  for (std::size_t r = 0; r < d; ++r) {
    IntMatrix minor;
    for (const auto& row : diffs) {
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

inline Integer dot(const IntRow& a, const LatticePoint& p) {
  Integer v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += Integer(a[i]) * p[i];
  return v;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::as_const(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Brute-force facet enumeration over d-subsets of the points.
inline std::vector<Halfspace> brute_force_facets(std::span<const LatticePoint> pts) {
  const std::size_t d = pts[0].dim();
  std::vector<Halfspace> facets;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> sub;
    for (auto i : idx) sub.push_back(pts[i]);
    BigRow n = hyperplane_normal(sub);
    if (std::all_of(n.begin(), n.end(), [](const Integer& c) { return c == 0; })) return;
    IntRow normal = primitive(n);
    Integer offset = dot(normal, pts[idx[0]]);
    bool below = false, above = false;
    for (const auto& p : pts) {
      Integer v = dot(normal, p);
      if (v < offset) below = true;
      if (v > offset) above = true;
    }
    if (below && above) return;
    if (above) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    std::int64_t off = checked::narrow(offset);
    for (const auto& f : facets)
      if (f.normal == normal && f.offset == off) return;
    Halfspace h{normal, off, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(normal, pts[i]) == offset) h.incident.push_back(i);
    facets.push_back(std::move(h));
  });
  std::sort(facets.begin(), facets.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return facets;
}

}  // namespace detail

/// Maximum dimension for brute-force facet enumeration of non-simplices.
inline constexpr std::size_t kMaxHullDim = 4;

/// Lattice polytope given by its vertex list (exactly the extreme points).
///
/// Full-dimensional polytopes carry their facet description. Simplices of
/// any dimension are accepted; other polytopes need dim <= kMaxHullDim.
class Polytope {
 public:
  explicit Polytope(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    require(!vertices_.empty(), ErrorCode::DimensionMismatch, "polytope without vertices");
    const std::size_t d = vertices_[0].dim();
    for (const auto& v : vertices_) require(v.dim() == d, ErrorCode::DimensionMismatch, "vertex dimension");
    sorted_ = vertices_;
    std::sort(sorted_.begin(), sorted_.end());
    require(std::adjacent_find(sorted_.begin(), sorted_.end()) == sorted_.end(), ErrorCode::InvalidParameters,
            "duplicate vertex");
    dim_ = affine_hull_dim(vertices_);
    if (dim_ < d) {
      require(vertices_.size() == dim_ + 1, ErrorCode::DimensionMismatch,
              "lower-dimensional polytopes are only supported as simplices");
      return;
    }
    if (vertices_.size() == d + 1) {
      simplex_.emplace(vertices_);
      for (std::size_t i = 0; i <= d; ++i) {
        // lambda_i >= 0  <=>  (-c) . x <= c0 with c the form coefficients
        const auto& form = simplex_->forms()[i];
        BigRow scaled(form.begin(), form.end());
        IntRow prim = detail::primitive(scaled);
        Halfspace h;
        h.normal.assign(prim.begin(), prim.end() - 1);
        for (auto& c : h.normal) c = -c;
        h.offset = prim.back();
        for (std::size_t j = 0; j <= d; ++j)
          if (j != i) h.incident.push_back(j);
        facets_.push_back(std::move(h));
      }
      return;
    }
    if (d > kMaxHullDim) fail(ErrorCode::DimensionTooLarge, "facet enumeration limited to dimension 4");
    facets_ = detail::brute_force_facets(vertices_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      IntMatrix normals;
      for (const auto& f : facets_)
        if (std::find(f.incident.begin(), f.incident.end(), i) != f.incident.end()) normals.push_back(f.normal);
      require(rank(normals) == d, ErrorCode::NotConvex,
              "listed point " + vertices_[i].str() + " is not a vertex of the convex hull");
    }
  }

  explicit Polytope(const Simplex& s) : Polytope(s.vertices()) {}

  /// Convex hull of arbitrary points; keeps exactly the extreme points, sorted.
  static Polytope hull(std::vector<LatticePoint> points) {
    require(!points.empty(), ErrorCode::InvalidParameters, "hull of no points");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t d = points[0].dim();
    const std::size_t hd = affine_hull_dim(points);
    require(hd == d, ErrorCode::DimensionMismatch, "hull is not full-dimensional");
    if (points.size() == d + 1) return Polytope(std::move(points));
    if (d > kMaxHullDim) fail(ErrorCode::DimensionTooLarge, "hull limited to dimension 4");
    auto facets = detail::brute_force_facets(points);
    std::vector<LatticePoint> extreme;
    for (std::size_t i = 0; i < points.size(); ++i) {
      IntMatrix normals;
      for (const auto& f : facets)
        if (std::find(f.incident.begin(), f.incident.end(), i) != f.incident.end()) normals.push_back(f.normal);
      if (!normals.empty() && rank(normals) == d) extreme.push_back(points[i]);
    }
    return Polytope(std::move(extreme));
  }

  std::size_t ambient_dim() const noexcept { return vertices_[0].dim(); }
  std::size_t dim() const noexcept { return dim_; }
  bool full_dimensional() const noexcept { return dim_ == ambient_dim(); }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  bool is_simplex() const noexcept { return vertices_.size() == dim_ + 1; }
  const std::optional<Simplex>& as_simplex() const noexcept { return simplex_; }
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }

  bool has_vertex(const LatticePoint& p) const { return std::binary_search(sorted_.begin(), sorted_.end(), p); }
  std::optional<std::size_t> vertex_index(const LatticePoint& p) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool contains(const LatticePoint& x) const {
    require(full_dimensional(), ErrorCode::DimensionMismatch, "membership needs a full-dimensional polytope");
    return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.contains(x); });
  }
  bool in_interior(const LatticePoint& x) const {
    require(full_dimensional(), ErrorCode::DimensionMismatch, "membership needs a full-dimensional polytope");
    return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.slack(x) > 0; });
  }

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<LatticePoint> sorted_;
  std::size_t dim_ = 0;
  std::optional<Simplex> simplex_;
  std::vector<Halfspace> facets_;
};

/// Facet description; normals are primitive integer vectors.
inline std::vector<Halfspace> facet_inequalities(const Polytope& p) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "facets of a lower-dimensional polytope");
  return p.facets();
}

struct LatticePointCensus {
  std::vector<LatticePoint> interior;
  std::vector<LatticePoint> boundary_nonvertex;
  std::size_t vertex_count = 0;

  std::size_t total() const { return interior.size() + boundary_nonvertex.size() + vertex_count; }
};

namespace detail {

// Scans the integer points of a box satisfying every form >= 0. The callback
// receives the point and the form values and returns false to stop early.
template <typename T, typename Visit>
bool scan_region(const std::vector<std::vector<T>>& forms, const IntRow& lo, const IntRow& hi, Visit&& visit) {
  const std::size_t d = lo.size();
  const std::size_t m = forms.size();
  std::vector<std::int64_t> x(lo);
  std::vector<T> base(m), values(m);
  if (d == 0) return true;
  const std::size_t last = d - 1;
  while (true) {
    // Values at t = 0 on the innermost axis, then the feasible interval.
    std::int64_t tmin = lo[last], tmax = hi[last];
    bool empty = false;
    for (std::size_t f = 0; f < m && !empty; ++f) {
      T v = forms[f][d];
      for (std::size_t r = 0; r < last; ++r) v += forms[f][r] * T(x[r]);
      base[f] = v;
      const T& c = forms[f][last];
      if (c == 0) {
        if (v < 0) empty = true;
      } else if (c > 0) {
        // v + c t >= 0  <=>  t >= ceil(-v / c)
        T q = -v / c;
        if ((-v) % c != 0 && -v > 0) q += 1;
        if (q > T(tmin)) {
          if (q > T(tmax)) empty = true;
          else tmin = static_cast<std::int64_t>(q);
        }
      } else {
        // v + c t >= 0  <=>  t <= floor(v / -c)
        T nc = -c;
        T q = v / nc;
        if (v % nc != 0 && v < 0) q -= 1;
        if (q < T(tmin)) empty = true;
        else if (q < T(tmax)) tmax = static_cast<std::int64_t>(q);
      }
    }
    if (!empty) {
      for (std::int64_t t = tmin; t <= tmax; ++t) {
        x[last] = t;
        for (std::size_t f = 0; f < m; ++f) values[f] = base[f] + forms[f][last] * T(t);
        if (!visit(std::as_const(x), std::as_const(values))) return false;
      }
    }
    // Odometer over the outer axes.
    std::size_t axis = last;
    while (axis > 0) {
      --axis;
      if (x[axis] < hi[axis]) {
        ++x[axis];
        break;
      }
      x[axis] = lo[axis];
      if (axis == 0) return true;
    }
    if (last == 0) return true;
  }
}

struct Region {
  std::vector<AffineForm> forms;
  IntRow lo, hi;
};

inline Region region_of(const Polytope& p) {
  Region r;
  const std::size_t d = p.ambient_dim();
  r.lo.assign(d, 0);
  r.hi.assign(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    r.lo[j] = r.hi[j] = p.vertices()[0][j];
    for (const auto& v : p.vertices()) {
      r.lo[j] = std::min(r.lo[j], v[j]);
      r.hi[j] = std::max(r.hi[j], v[j]);
    }
  }
  if (p.as_simplex()) {
    r.forms = p.as_simplex()->forms();
  } else {
    for (const auto& h : p.facets()) {
      AffineForm f(d + 1);
      for (std::size_t j = 0; j < d; ++j) f[j] = -Integer(h.normal[j]);
      f[d] = h.offset;
      r.forms.push_back(std::move(f));
    }
  }
  return r;
}

// Runs scan_region in int64 when a magnitude bound proves every evaluation
// fits, and in cpp_int otherwise.
template <typename Visit>
void scan_polytope(const Polytope& p, Visit&& visit) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "lattice points of a lower-dimensional polytope");
  Region r = region_of(p);
  const std::size_t d = r.lo.size();
  Integer worst = 0;
  for (const auto& f : r.forms) {
    Integer s = abs(f[d]);
    for (std::size_t j = 0; j < d; ++j)
      s += abs(f[j]) * Integer(std::max(abs(Integer(r.lo[j])), abs(Integer(r.hi[j]))));
    worst = std::max(worst, s);
  }
  if (worst < (Integer(1) << 61)) {
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& f : r.forms) {
      std::vector<std::int64_t> row;
      for (const auto& c : f) row.push_back(static_cast<std::int64_t>(c));
      small.push_back(std::move(row));
    }
    scan_region(small, r.lo, r.hi, visit);
  } else {
    scan_region(r.forms, r.lo, r.hi, visit);
  }
}

}  // namespace detail

/// Exact partition of p ∩ Z^d by bounding-box scan against the facet forms.
inline LatticePointCensus enumerate_lattice_points(const Polytope& p) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "census needs a full-dimensional polytope");
  LatticePointCensus census;
  detail::scan_polytope(p, [&](const std::vector<std::int64_t>& x, const auto& values) {
    bool zero = false;
    for (const auto& v : values)
      if (v == 0) zero = true;
    if (!zero) {
      census.interior.emplace_back(x);
    } else {
      LatticePoint pt(x);
      if (p.has_vertex(pt)) ++census.vertex_count;
      else census.boundary_nonvertex.push_back(std::move(pt));
    }
    return true;
  });
  return census;
}

inline LatticePointCensus enumerate_lattice_points(const Simplex& s) { return enumerate_lattice_points(Polytope(s)); }

/// Interior count of a clean simplex, or nullopt when the simplex is not
/// clean or has more than `limit` interior points (the scan stops early).
inline std::optional<std::size_t> clean_interior_count(const Polytope& p, std::size_t limit) {
  std::size_t interior = 0;
  bool ok = true;
  detail::scan_polytope(p, [&](const std::vector<std::int64_t>& x, const auto& values) {
    std::size_t zeros = 0;
    for (const auto& v : values)
      if (v == 0) ++zeros;
    if (zeros == 0) {
      if (++interior > limit) ok = false;
    } else if (!p.has_vertex(LatticePoint(x))) {
      ok = false;
    }
    return ok;
  });
  if (!ok) return std::nullopt;
  return interior;
}

inline bool is_clean(const Polytope& p) { return enumerate_lattice_points(p).boundary_nonvertex.empty(); }
inline bool is_clean(const Simplex& s) { return is_clean(Polytope(s)); }

struct CollinearityReport {
  bool collinear = true;
  std::optional<std::size_t> through_vertex;
  bool evenly_spaced = true;
  std::vector<LatticePoint> interior;
};

namespace detail {

inline bool parallel(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (Integer(a[i]) * b[j] != Integer(a[j]) * b[i]) return false;
  return true;
}

inline LatticePoint primitive_direction(const LatticePoint& u) {
  std::int64_t g = 0;
  for (auto c : u.coords()) g = std::gcd(g, c < 0 ? -c : c);
  std::vector<std::int64_t> r(u.coords());
  for (auto& c : r) c /= g;
  return LatticePoint(std::move(r));
}

}  // namespace detail

/// Line structure of the interior lattice points of a clean simplex.
///
/// With a single interior point the line is undefined: the report is
/// collinear and evenly spaced with no distinguished vertex.
inline CollinearityReport interior_collinearity_report(const Simplex& s) {
  LatticePointCensus census = enumerate_lattice_points(s);
  require(census.boundary_nonvertex.empty(), ErrorCode::NotClean, "simplex has non-vertex boundary lattice points");
  require(!census.interior.empty(), ErrorCode::NoInteriorPoints, "simplex has no interior lattice points");
  CollinearityReport report;
  report.interior = census.interior;
  const auto& pts = census.interior;
  if (pts.size() == 1) return report;

  const LatticePoint dir = detail::primitive_direction(pts[1] - pts[0]);
  for (const auto& w : pts)
    if (!detail::parallel(w - pts[0], dir)) report.collinear = false;
  if (!report.collinear) {
    report.evenly_spaced = false;
    return report;
  }
  for (std::size_t i = 0; i < s.vertices().size(); ++i)
    if (detail::parallel(s.vertex(i) - pts[0], dir)) report.through_vertex = i;

  // Integer positions along the primitive direction.
  std::vector<std::int64_t> t;
  std::size_t axis = 0;
  while (dir[axis] == 0) ++axis;
  for (const auto& w : pts) t.push_back((w[axis] - pts[0][axis]) / dir[axis]);
  std::sort(t.begin(), t.end());
  for (std::size_t i = 2; i < t.size(); ++i)
    if (t[i] - t[i - 1] != t[1] - t[0]) report.evenly_spaced = false;
  return report;
}

}  // namespace latpoly
