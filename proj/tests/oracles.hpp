#pragma once

// Slow, independent reference implementations used to check the library.
// They share only the LatticePoint and Rational types with it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <numeric>
#include <vector>

#include "latpoly/lattice.hpp"

namespace oracle {

using latpoly::Integer;
using latpoly::LatticePoint;
using latpoly::Rational;
using RMatrix = std::vector<std::vector<Rational>>;

/// Gaussian elimination over the rationals.
inline Rational det(RMatrix m) {
  const std::size_t n = m.size();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return result;
}

/// Inverse by Gauss-Jordan; the matrix must be nonsingular.
inline RMatrix inverse(RMatrix m) {
  const std::size_t n = m.size();
  RMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  RMatrix r(a.size(), std::vector<Rational>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

/// Rows v_i - v_0 for i = 1..d.
inline RMatrix edge_matrix(const std::vector<LatticePoint>& vs) {
  RMatrix m;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < vs[0].dim(); ++j) row.emplace_back(vs[i][j] - vs[0][j]);
    m.push_back(std::move(row));
  }
  return m;
}

inline Integer normalized_volume(const std::vector<LatticePoint>& vs) {
  Rational d = det(edge_matrix(vs));
  if (d < 0) d = -d;
  return boost::multiprecision::numerator(d);
}

/// Barycentric coordinates by Cramer's rule on the homogeneous system.
inline std::vector<Rational> barycentric(const std::vector<LatticePoint>& vs, const LatticePoint& x) {
  const std::size_t n = vs.size();
  auto system = [&](std::optional<std::size_t> replace) {
    RMatrix m(n, std::vector<Rational>(n));
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t r = 0; r + 1 < n; ++r) m[r][col] = Rational(replace == col ? x[r] : vs[col][r]);
      m[n - 1][col] = 1;
    }
    return m;
  };
  const Rational d = det(system(std::nullopt));
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(det(system(i)) / d);
  return out;
}

struct Census {
  std::size_t interior = 0;
  std::size_t boundary_nonvertex = 0;
  std::vector<LatticePoint> interior_points;
};

/// Supporting hyperplanes spanned by d-subsets of the vertices; their
/// intersection is the hull of a full-dimensional point set.
inline std::vector<std::vector<Rational>> supporting_planes(const std::vector<LatticePoint>& vs) {
  const std::size_t d = vs[0].dim();
  std::vector<std::vector<Rational>> planes;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      // normal n with n.(v_i - v_0) = 0: cofactor expansion of the edge rows
      RMatrix rows;
      for (std::size_t i = 1; i < d; ++i) {
        std::vector<Rational> r;
        for (std::size_t j = 0; j < d; ++j) r.emplace_back(vs[idx[i]][j] - vs[idx[0]][j]);
        rows.push_back(std::move(r));
      }
      std::vector<Rational> n(d);
      for (std::size_t j = 0; j < d; ++j) {
        RMatrix minor;
        for (const auto& r : rows) {
          std::vector<Rational> m;
          for (std::size_t c = 0; c < d; ++c)
            if (c != j) m.push_back(r[c]);
          minor.push_back(std::move(m));
        }
        n[j] = (j % 2 ? -1 : 1) * (d == 1 ? Rational(1) : det(minor));
      }
      if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return x == 0; })) return;
      Rational c = 0;
      for (std::size_t j = 0; j < d; ++j) c += n[j] * vs[idx[0]][j];
      int sign = 0;
      for (const auto& v : vs) {
        Rational s = -c;
        for (std::size_t j = 0; j < d; ++j) s += n[j] * v[j];
        const int sg = s > 0 ? 1 : (s < 0 ? -1 : 0);
        if (sg == 0) continue;
        if (sign == 0) sign = sg;
        if (sg != sign) return;
      }
      // store as n.x - c >= 0 on the polytope
      std::vector<Rational> plane = n;
      plane.push_back(-c);
      if (sign < 0)
        for (auto& x : plane) x = -x;
      // scale so the first nonzero entry is +-1; facets with more than d
      // vertices are met once per d-subset
      const Rational lead = *std::find_if(plane.begin(), plane.end(), [](const Rational& x) { return x != 0; });
      for (auto& x : plane) x /= lead < 0 ? -lead : lead;
      if (std::find(planes.begin(), planes.end(), plane) == planes.end()) planes.push_back(std::move(plane));
      return;
    }
    for (std::size_t i = start; i < vs.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return planes;
}

/// Brute-force census over the bounding box of a full-dimensional hull.
inline Census census(const std::vector<LatticePoint>& vs) {
  const std::size_t d = vs[0].dim();
  const auto planes = supporting_planes(vs);
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = vs[0][j];
    for (const auto& v : vs) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  Census c;
  std::vector<std::int64_t> x = lo;
  while (true) {
    bool inside = true, boundary = false;
    for (const auto& p : planes) {
      Rational s = p[d];
      for (std::size_t j = 0; j < d; ++j) s += p[j] * x[j];
      if (s < 0) inside = false;
      if (s == 0) boundary = true;
    }
    if (inside) {
      LatticePoint pt(x);
      if (!boundary) {
        ++c.interior;
        c.interior_points.push_back(pt);
      } else if (std::find(vs.begin(), vs.end(), pt) == vs.end()) {
        ++c.boundary_nonvertex;
      }
    }
    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) x[j] = lo[j], ++j;
    if (j == d) break;
    ++x[j];
  }
  return c;
}

/// Unimodular equivalence by trying every vertex bijection: with edge
/// matrices E1, E2 (rows from the first vertex) the linear part must be
/// M = E1^-1 E2, integral with determinant +-1.
inline bool equivalent(const std::vector<LatticePoint>& a, std::vector<LatticePoint> b) {
  if (a.size() != b.size() || normalized_volume(a) != normalized_volume(b)) return false;
  const RMatrix e1inv = inverse(edge_matrix(a));
  std::sort(b.begin(), b.end());
  do {
    const RMatrix m = multiply(e1inv, edge_matrix(b));
    bool integral = true;
    for (const auto& row : m)
      for (const auto& x : row)
        if (boost::multiprecision::denominator(x) != 1) integral = false;
    if (!integral) continue;
    const Rational dt = det(m);
    if (dt == 1 || dt == -1) return true;
  } while (std::next_permutation(b.begin(), b.end()));
  return false;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace oracle

namespace oracle {

/// Euclidean volume of a full-dimensional hull in dimension 2 or 3: sum over
/// facets of the cone from the first vertex, each facet fan-triangulated in
/// angular order.
inline Rational hull_volume(const std::vector<LatticePoint>& vs) {
  const std::size_t d = vs[0].dim();
  const LatticePoint& o = vs[0];
  Rational total = 0;
  for (const auto& plane : supporting_planes(vs)) {
    std::vector<LatticePoint> on;
    for (const auto& v : vs) {
      Rational s = plane[d];
      for (std::size_t j = 0; j < d; ++j) s += plane[j] * v[j];
      if (s == 0) on.push_back(v);
    }
    if (on.size() < d) continue;
    if (d == 2) {
      std::sort(on.begin(), on.end());
      Rational a = det(edge_matrix({o, on.front(), on.back()}));
      total += (a < 0 ? -a : a) / 2;
      continue;
    }
    // order the facet vertices by angle in a projection that keeps the facet flat
    std::size_t drop = 0;
    for (std::size_t j = 0; j < 3; ++j)
      if (abs(plane[j]) > abs(plane[drop])) drop = j;
    const std::size_t u = drop == 0 ? 1 : 0, w = drop == 2 ? 1 : 2;
    double cu = 0, cw = 0;
    for (const auto& p : on) cu += double(p[u]), cw += double(p[w]);
    cu /= double(on.size());
    cw /= double(on.size());
    std::sort(on.begin(), on.end(), [&](const LatticePoint& a, const LatticePoint& b) {
      return std::atan2(double(a[w]) - cw, double(a[u]) - cu) < std::atan2(double(b[w]) - cw, double(b[u]) - cu);
    });
    for (std::size_t i = 1; i + 1 < on.size(); ++i) {
      Rational a = det(edge_matrix({o, on[0], on[i], on[i + 1]}));
      total += (a < 0 ? -a : a) / 6;
    }
  }
  return total;
}

}  // namespace oracle
