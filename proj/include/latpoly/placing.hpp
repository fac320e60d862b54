#pragma once

// Placing (lexicographic insertion) triangulation of a finite point set and
// the polytope volume it induces.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

using Cell = std::vector<std::size_t>;

namespace detail {

// Coordinate subset on which the affine hull of `basis` projects injectively.
inline std::vector<std::size_t> injective_projection(std::span<const LatticePoint> pts,
                                                     const std::vector<std::size_t>& basis) {
  const std::size_t m = basis.size() - 1;
  const std::size_t dim = pts[basis[0]].dim();
  std::vector<std::size_t> chosen;
  for_each_subset(dim, m, [&](const std::vector<std::size_t>& coords) {
    if (!chosen.empty() || m == 0) return;
    IntMatrix sub;
    for (std::size_t i = 1; i <= m; ++i) {
      IntRow row;
      for (auto c : coords) row.push_back(pts[basis[i]][c] - pts[basis[0]][c]);
      sub.push_back(std::move(row));
    }
    if (determinant(sub) != 0) chosen = coords;
  });
  return chosen;
}

inline int projected_orientation(std::span<const LatticePoint> pts, const std::vector<std::size_t>& coords,
                                 const std::vector<std::size_t>& facet, std::size_t apex) {
  IntMatrix rows;
  const auto& base = pts[facet[0]];
  auto push = [&](const LatticePoint& p) {
    IntRow row;
    for (auto c : coords) row.push_back(checked::sub(p[c], base[c]));
    rows.push_back(std::move(row));
  };
  for (std::size_t i = 1; i < facet.size(); ++i) push(pts[facet[i]]);
  push(pts[apex]);
  return determinant(rows).sign();
}

}  // namespace detail

/// Placing triangulation: points are inserted in lexicographic order and each
/// new point is coned over the boundary facets it sees. Every point is used,
/// since the lexicographic maximum of a set is always one of its vertices.
/// Cells are sorted index lists of size m+1 where m is the affine dimension.
inline std::vector<Cell> placing_triangulation(std::span<const LatticePoint> points) {
  require(!points.empty(), ErrorCode::InvalidParameters, "placing triangulation of no points");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    require(points[order[i]] != points[order[i - 1]], ErrorCode::InvalidParameters, "duplicate point");

  std::vector<Cell> cells{{order[0]}};
  std::vector<std::size_t> basis{order[0]};
  std::vector<std::size_t> coords;

  for (std::size_t step = 1; step < order.size(); ++step) {
    const std::size_t p = order[step];
    std::vector<LatticePoint> probe;
    for (auto b : basis) probe.push_back(points[b]);
    probe.push_back(points[p]);
    if (affine_hull_dim(probe) == basis.size()) {
      for (auto& c : cells) c.push_back(p);
      basis.push_back(p);
      coords = detail::injective_projection(points, basis);
      continue;
    }
    struct FacetUse {
      std::size_t count = 0;
      std::size_t opposite = 0;
    };
    std::map<Cell, FacetUse> facets;
    for (const auto& c : cells) {
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        Cell f;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (i != drop) f.push_back(c[i]);
        std::sort(f.begin(), f.end());
        auto& use = facets[f];
        ++use.count;
        use.opposite = c[drop];
      }
    }
    std::vector<Cell> added;
    for (const auto& [f, use] : facets) {
      if (use.count != 1) continue;
      const int side_p = detail::projected_orientation(points, coords, f, p);
      const int side_q = detail::projected_orientation(points, coords, f, use.opposite);
      if (side_p != 0 && side_p == -side_q) {
        Cell c = f;
        c.push_back(p);
        added.push_back(std::move(c));
      }
    }
    require(!added.empty(), ErrorCode::InvariantViolation, "placed point sees no boundary facet");
    for (auto& c : added) cells.push_back(std::move(c));
  }
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// d! * Vol(p), summed over a placing triangulation of the vertices.
inline Integer normalized_volume(const Polytope& p) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "volume of a lower-dimensional polytope");
  if (p.as_simplex()) return p.as_simplex()->normalized_volume();
  Integer total = 0;
  for (const auto& c : placing_triangulation(p.vertices())) {
    std::vector<LatticePoint> vs;
    for (auto i : c) vs.push_back(p.vertices()[i]);
    total += Simplex(std::move(vs)).normalized_volume();
  }
  return total;
}

/// Euclidean volume.
inline Rational volume(const Polytope& p) {
  return Rational(normalized_volume(p), factorial(static_cast<unsigned>(p.ambient_dim())));
}

}  // namespace latpoly
