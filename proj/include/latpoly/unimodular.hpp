#pragma once

// Affine unimodular maps v -> v M + u (row vectors), the reflection/shear
// normal form of T-simplices, a complete canonical form for lattice
// simplices, and constructors for the named simplex families.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// f(v) = v * matrix + translation with |det(matrix)| = 1.
class UnimodularMap {
 public:
  UnimodularMap(IntMatrix matrix, LatticePoint translation)
      : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    const std::size_t d = translation_.dim();
    require(matrix_.size() == d, ErrorCode::DimensionMismatch, "matrix size");
    for (const auto& row : matrix_) require(row.size() == d, ErrorCode::DimensionMismatch, "matrix must be square");
    require(abs(determinant(matrix_)) == 1, ErrorCode::NotUnimodular, "matrix determinant is not +-1");
  }

  static UnimodularMap identity(std::size_t d) {
    IntMatrix m(d, IntRow(d, 0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return UnimodularMap(std::move(m), LatticePoint::origin(d));
  }
  static UnimodularMap translation(const LatticePoint& u) {
    UnimodularMap t = identity(u.dim());
    t.translation_ = u;
    return t;
  }
  static UnimodularMap linear(IntMatrix m) {
    const std::size_t d = m.size();
    return UnimodularMap(std::move(m), LatticePoint::origin(d));
  }

  std::size_t dim() const noexcept { return translation_.dim(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const LatticePoint& translation() const noexcept { return translation_; }

  LatticePoint operator()(const LatticePoint& v) const {
    require(v.dim() == dim(), ErrorCode::DimensionMismatch, "point dimension");
    std::vector<std::int64_t> out(translation_.coords());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) out[j] = checked::add(out[j], checked::mul(v[i], matrix_[i][j]));
    return LatticePoint(std::move(out));
  }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  IntMatrix matrix_;
  LatticePoint translation_;
};

inline LatticePoint apply(const UnimodularMap& f, const LatticePoint& v) { return f(v); }

inline std::vector<LatticePoint> apply_all(const UnimodularMap& f, const std::vector<LatticePoint>& vs) {
  std::vector<LatticePoint> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(f(v));
  return out;
}

inline Simplex apply(const UnimodularMap& f, const Simplex& s) { return Simplex(apply_all(f, s.vertices())); }
inline Polytope apply(const UnimodularMap& f, const Polytope& p) { return Polytope(apply_all(f, p.vertices())); }

namespace detail {

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
  IntMatrix c(n, IntRow(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] = checked::add(c[i][j], checked::mul(a[i][k], b[k][j]));
  return c;
}

inline BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), inner = b.size();
  BigMatrix c(n, BigRow(m, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline BigMatrix widen(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(v);
  return out;
}

inline IntMatrix narrow(const BigMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) out[i].push_back(checked::narrow(v));
  return out;
}

inline BigMatrix big_identity(std::size_t d) {
  BigMatrix m(d, BigRow(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

// Inverse of a unimodular integer matrix via the adjugate.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t d = m.size();
  const Integer det = determinant(m);
  require(abs(det) == 1, ErrorCode::NotUnimodular, "matrix is not unimodular");
  IntMatrix inv(d, IntRow(d, 0));
  if (d == 1) {
    inv[0][0] = m[0][0];
    return inv;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == j) continue;
        IntRow row;
        for (std::size_t c = 0; c < d; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Integer cof = determinant(minor) * det;
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = checked::narrow(cof);
    }
  return inv;
}

}  // namespace detail

/// compose(f, g)(v) = f(g(v)).
inline UnimodularMap compose(const UnimodularMap& f, const UnimodularMap& g) {
  require(f.dim() == g.dim(), ErrorCode::DimensionMismatch, "map dimensions differ");
  return UnimodularMap(detail::multiply(g.matrix(), f.matrix()), f(g.translation()));
}

inline UnimodularMap inverse(const UnimodularMap& f) {
  IntMatrix inv = detail::unimodular_inverse(f.matrix());
  IntMatrix u{f.translation().coords()};
  IntRow t = detail::multiply(u, inv)[0];
  for (auto& c : t) c = checked::sub(0, c);
  return UnimodularMap(std::move(inv), LatticePoint(std::move(t)));
}

/// Column-operation Hermite form: A U = H with U unimodular, H lower
/// triangular in its first rank(A) columns with positive pivots and every
/// entry left of a pivot reduced into [0, pivot). Rows of A must be
/// linearly independent.
struct ColumnHermite {
  BigMatrix h;
  BigMatrix u;
};

inline ColumnHermite column_hermite(BigMatrix a) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  BigMatrix u = detail::big_identity(cols);
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    // column dst += f * column src
    for (auto& row : a) row[dst] += f * row[src];
    for (auto& row : u) row[dst] += f * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto col_neg = [&](std::size_t x) {
    for (auto& row : a) row[x] = -row[x];
    for (auto& row : u) row[x] = -row[x];
  };
  for (std::size_t i = 0; i < rows; ++i) {
    require(i < cols, ErrorCode::InvariantViolation, "more rows than columns");
    // Euclid across columns i.. until only column i is nonzero in row i.
    while (true) {
      std::size_t piv = cols;
      for (std::size_t j = i; j < cols; ++j)
        if (a[i][j] != 0 && (piv == cols || abs(a[i][j]) < abs(a[i][piv]))) piv = j;
      require(piv < cols, ErrorCode::InvariantViolation, "dependent rows in Hermite reduction");
      if (piv != i) col_swap(i, piv);
      bool done = true;
      for (std::size_t j = i + 1; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        col_op(j, i, -floor_div(a[i][j], a[i][i]));
        if (a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[i][i] < 0) col_neg(i);
    for (std::size_t j = 0; j < i; ++j) col_op(j, i, -floor_div(a[i][j], a[i][i]));
  }
  return {std::move(a), std::move(u)};
}

/// Tag and witness data of the canonical form. For the chosen vertex order
/// perm with base vertex b = v[perm[0]], the edge matrix E (rows
/// v[perm[i]] - b) satisfies E * transform = H, where tag flattens H.
struct CanonicalForm {
  std::vector<Integer> tag;
  std::vector<std::size_t> perm;
  BigMatrix transform;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.tag == b.tag; }
};

/// Complete invariant: any affine unimodular equivalence sends vertices to
/// vertices, so it carries some ordered edge matrix of one simplex to an
/// ordered edge matrix of the other by right multiplication with a
/// unimodular matrix; the column Hermite form is unique on each such orbit,
/// and the minimum over all (d+1)! orders is therefore shared.
inline CanonicalForm canonical_form(const Simplex& s) {
  const std::size_t d = s.dim();
  std::vector<std::size_t> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalForm> best;
  do {
    BigMatrix e(d);
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j) e[i - 1].emplace_back(Integer(s.vertex(perm[i])[j]) - s.vertex(perm[0])[j]);
    ColumnHermite ch = column_hermite(std::move(e));
    std::vector<Integer> tag;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= i; ++j) tag.push_back(ch.h[i][j]);
    if (!best || tag < best->tag) best = CanonicalForm{std::move(tag), perm, std::move(ch.u)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

/// A verified map f with f(s1) = s2 (as vertex sets), if one exists.
inline std::optional<UnimodularMap> equivalence_witness(const Simplex& s1, const Simplex& s2) {
  require(s1.dim() == s2.dim(), ErrorCode::DimensionMismatch, "simplices of different dimension");
  if (s1.normalized_volume() != s2.normalized_volume()) return std::nullopt;
  const CanonicalForm c1 = canonical_form(s1), c2 = canonical_form(s2);
  if (c1.tag != c2.tag) return std::nullopt;
  // E1 U1 = H = E2 U2  =>  E1 (U1 U2^-1) = E2
  const IntMatrix u2inv = detail::unimodular_inverse(detail::narrow(c2.transform));
  const IntMatrix m = detail::narrow(detail::multiply(c1.transform, detail::widen(u2inv)));
  const LatticePoint& b1 = s1.vertex(c1.perm[0]);
  const LatticePoint& b2 = s2.vertex(c2.perm[0]);
  const UnimodularMap linear = UnimodularMap::linear(m);
  IntRow shift = linear(b1).coords();
  for (std::size_t j = 0; j < shift.size(); ++j) shift[j] = checked::sub(b2[j], shift[j]);
  UnimodularMap f(m, LatticePoint(std::move(shift)));

  std::vector<LatticePoint> image = apply_all(f, s1.vertices()), target = s2.vertices();
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  require(image == target, ErrorCode::InvariantViolation, "canonical-form witness failed verification");
  return f;
}

inline bool are_equivalent(const Simplex& s1, const Simplex& s2) { return equivalence_witness(s1, s2).has_value(); }

/// Maps a normalized-volume-1 simplex onto T_{1,...,1}: vertex 0 goes to the
/// origin, vertices 1..d-1 to e_1..e_{d-1} and vertex d to (1,...,1).
inline UnimodularMap to_unit_form(const Simplex& s) {
  require(s.normalized_volume() == 1, ErrorCode::NotUnimodularSimplex, "normalized volume is not 1");
  const std::size_t d = s.dim();
  IntMatrix a;
  for (std::size_t i = 1; i <= d; ++i) a.push_back((s.vertex(i) - s.vertex(0)).coords());
  // f(v) = (v - v_0) A^-1 sends v_i to e_i; g fixes e_1..e_{d-1} and sends e_d to (1,...,1).
  IntMatrix g(d, IntRow(d, 0));
  for (std::size_t i = 0; i < d; ++i) g[i][i] = 1;
  for (std::size_t j = 0; j < d; ++j) g[d - 1][j] = 1;
  const UnimodularMap f = compose(UnimodularMap::linear(detail::unimodular_inverse(a)),
                                  UnimodularMap::translation(LatticePoint::origin(d) - s.vertex(0)));
  return compose(UnimodularMap::linear(std::move(g)), f);
}

/// Apex coordinates (a_1, ..., a_d) of conv(0, e_1, ..., e_{d-1}, a).
struct NormalFormSimplex {
  std::vector<std::int64_t> a;
};

/// Sends `base` to the origin and the frame vertices to e_1..e_{d-1}, then
/// reflects and shears so the remaining vertex lands on a with
/// a_d = normalized volume and 0 < a_i <= a_d.
inline std::pair<NormalFormSimplex, UnimodularMap> reduce_to_normal_form(const Simplex& s, std::size_t base,
                                                                          const std::vector<std::size_t>& frame) {
  const std::size_t d = s.dim();
  require(base <= d && frame.size() == d - 1, ErrorCode::InvalidParameters, "frame needs d-1 vertex indices");
  std::vector<bool> seen(d + 1, false);
  seen[base] = true;
  for (auto f : frame) {
    require(f <= d && !seen[f], ErrorCode::InvalidParameters, "frame indices must be distinct vertices");
    seen[f] = true;
  }
  const std::size_t apex = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());

  // Unimodular C with F C = [I | 0], where F has the frame edges as rows.
  BigMatrix fm;
  for (auto f : frame) {
    BigRow row;
    for (std::size_t j = 0; j < d; ++j) row.emplace_back(Integer(s.vertex(f)[j]) - s.vertex(base)[j]);
    fm.push_back(std::move(row));
  }
  BigMatrix c = detail::big_identity(d);
  if (d > 1) {
    ColumnHermite ch = column_hermite(fm);
    for (std::size_t i = 0; i + 1 < d; ++i)
      if (ch.h[i][i] != 1)
        fail(ErrorCode::NoLatticeBasisExtension, "frame edges do not extend to a lattice basis");
    // Unit pivots leave nothing to reduce: H = [I | 0].
    c = std::move(ch.u);
  }
  UnimodularMap f = compose(UnimodularMap::linear(detail::narrow(c)),
                            UnimodularMap::translation(LatticePoint::origin(d) - s.vertex(base)));
  LatticePoint a = f(s.vertex(apex));
  if (a[d - 1] < 0) {
    IntMatrix reflect(d, IntRow(d, 0));
    for (std::size_t i = 0; i < d; ++i) reflect[i][i] = 1;
    reflect[d - 1][d - 1] = -1;
    f = compose(UnimodularMap::linear(std::move(reflect)), f);
    a = f(s.vertex(apex));
  }
  const std::int64_t ad = a[d - 1];
  IntMatrix shear(d, IntRow(d, 0));
  for (std::size_t i = 0; i < d; ++i) shear[i][i] = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::int64_t b = -floor_div(a[i], ad);
    if (checked::add(a[i], checked::mul(b, ad)) == 0) b = checked::add(b, 1);
    shear[d - 1][i] = b;
  }
  f = compose(UnimodularMap::linear(std::move(shear)), f);
  NormalFormSimplex nf{f(s.vertex(apex)).coords()};

  require(Integer(nf.a[d - 1]) == s.normalized_volume(), ErrorCode::InvariantViolation, "a_d differs from the volume");
  require(f(s.vertex(base)) == LatticePoint::origin(d), ErrorCode::InvariantViolation, "base not sent to origin");
  for (std::size_t i = 0; i + 1 < d; ++i) {
    require(f(s.vertex(frame[i])) == LatticePoint::unit(d, i), ErrorCode::InvariantViolation, "frame not sent to e_i");
    require(nf.a[i] > 0 && nf.a[i] <= nf.a[d - 1], ErrorCode::InvariantViolation, "a_i out of range");
  }
  return {std::move(nf), std::move(f)};
}

/// conv(e_1, ..., e_d, -k(1,...,1)).
inline Simplex make_S_d_k(std::size_t d, std::int64_t k) {
  require(d >= 2 && k >= 0, ErrorCode::InvalidParameters, "S_d(k) needs d >= 2 and k >= 0");
  std::vector<LatticePoint> vs;
  for (std::size_t i = 0; i < d; ++i) vs.push_back(LatticePoint::unit(d, i));
  vs.push_back(LatticePoint::constant(d, checked::sub(0, k)));
  return Simplex(std::move(vs));
}

/// conv(0, e_1, ..., e_{d-1}, a).
inline Simplex make_T(const std::vector<std::int64_t>& a) {
  const std::size_t d = a.size();
  require(d >= 1 && a.back() != 0, ErrorCode::InvalidParameters, "T needs a nonzero last coordinate");
  std::vector<LatticePoint> vs{LatticePoint::origin(d)};
  for (std::size_t i = 0; i + 1 < d; ++i) vs.push_back(LatticePoint::unit(d, i));
  vs.emplace_back(a);
  return Simplex(std::move(vs));
}

inline Simplex make_T_abn(std::int64_t a, std::int64_t b, std::int64_t n) {
  require(0 < a && a < n && 0 < b && b < n, ErrorCode::InvalidParameters, "T_{a,b,n} needs 0 < a, b < n");
  return make_T({a, b, n});
}

/// conv(0, e_1, e_2, (1,1,n)).
inline Simplex make_reeve(std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidParameters, "Reeve tetrahedron needs n >= 1");
  return Simplex({LatticePoint({0, 0, 0}), LatticePoint({1, 0, 0}), LatticePoint({0, 1, 0}), LatticePoint({1, 1, n})});
}

/// conv((-r, 0), (0, q), (p, -1)).
inline Simplex make_delta_pq(std::int64_t p, std::int64_t q, std::int64_t r = 1) {
  require(p >= 1 && q >= 1 && r >= 1, ErrorCode::InvalidParameters, "Delta needs p, q, r >= 1");
  return Simplex({LatticePoint({-r, 0}), LatticePoint({0, q}), LatticePoint({p, -1})});
}

/// The composite v -> (v + (k,...,k)) M sending S_d(k) onto
/// T_{dk,...,dk,dk+1}: -k(1,...,1) -> 0, e_i -> e_i (i < d), e_d -> apex.
inline UnimodularMap minimal_simplex_map(std::size_t d, std::int64_t k) {
  require(d >= 2 && k >= 0, ErrorCode::InvalidParameters, "needs d >= 2 and k >= 0");
  const std::int64_t dm1k = checked::mul(static_cast<std::int64_t>(d - 1), k);
  IntMatrix m(d, IntRow(d, -k));
  for (std::size_t i = 0; i + 1 < d; ++i) m[i][i] = 1 - k;
  for (std::size_t j = 0; j < d; ++j) m[d - 1][j] = dm1k;
  m[d - 1][d - 1] = dm1k + 1;
  return compose(UnimodularMap::linear(std::move(m)), UnimodularMap::translation(LatticePoint::constant(d, k)));
}

}  // namespace latpoly
