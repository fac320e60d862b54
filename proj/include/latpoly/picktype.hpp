#pragma once

// Volume from lattice-point counts: Pick in the plane, Reeve's sublattice
// formula in dimension 3, the Macdonald and Kolodzieczyk generalizations, and
// the Pick-type lower bound for 3-polytopes.

#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/placing.hpp"

namespace latpoly {

/// Boundary and interior counts of the sublattice (1/n)Z^d in P, obtained
/// from the integer points of the dilate nP.
struct SublatticeCounts {
  std::int64_t n = 1;
  Integer b = 0;
  Integer k = 0;
};

/// chi(P) = 1 and chi(boundary) = 1 + (-1)^(d-1) for convex d-polytopes.
struct EulerData {
  int chi_p = 1;
  int chi_boundary = 0;
};

inline EulerData convex_euler_data(std::size_t d) { return {1, d % 2 == 1 ? 2 : 0}; }

inline Polytope dilate(const Polytope& p, std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidParameters, "dilation factor must be positive");
  std::vector<LatticePoint> vs;
  for (const auto& v : p.vertices()) vs.push_back(n * v);
  return Polytope(std::move(vs));
}

inline SublatticeCounts sublattice_counts(const Polytope& p, std::int64_t n) {
  require(p.full_dimensional(), ErrorCode::DimensionMismatch, "counts need a full-dimensional polytope");
  LatticePointCensus c = enumerate_lattice_points(dilate(p, n));
  return {n, Integer(c.boundary_nonvertex.size() + c.vertex_count), Integer(c.interior.size())};
}

/// Vol = k + b/2 - 1.
inline Rational pick_volume(const Polytope& p) {
  require(p.ambient_dim() == 2, ErrorCode::WrongDimension, "Pick's formula is planar");
  SublatticeCounts c = sublattice_counts(p, 1);
  return Rational(c.k) + Rational(c.b, 2) - 1;
}

/// 2n(n^2 - 1) Vol = b_n - n b_1 + 2(k_n - n k_1) + (n - 1)(2 chi(P) - chi(boundary)).
inline Rational reeve_volume(const Polytope& p, std::int64_t n) {
  require(p.ambient_dim() == 3, ErrorCode::WrongDimension, "Reeve's formula is three-dimensional");
  require(n >= 2, ErrorCode::InvalidParameters, "Reeve's formula needs n >= 2");
  const SublatticeCounts c1 = sublattice_counts(p, 1), cn = sublattice_counts(p, n);
  const EulerData e = convex_euler_data(3);
  const Integer rhs = cn.b - n * c1.b + 2 * (cn.k - n * c1.k) + Integer(n - 1) * (2 * e.chi_p - e.chi_boundary);
  return Rational(rhs, Integer(2) * n * (n * n - 1));
}

/// (d-1) d! Vol = sum_{i=1}^{d-1} (-1)^(i-1) C(d-1, i-1) (b_{d-i} + 2 k_{d-i})
///                + (-1)^(d-1) (2 chi(P) - chi(boundary)).
inline Rational macdonald_volume(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  require(d >= 2, ErrorCode::WrongDimension, "Macdonald's formula needs d >= 2");
  const EulerData e = convex_euler_data(d);
  Integer sum = 0;
  for (std::size_t i = 1; i < d; ++i) {
    const SublatticeCounts c = sublattice_counts(p, static_cast<std::int64_t>(d - i));
    Integer term = binomial(static_cast<unsigned>(d - 1), static_cast<unsigned>(i - 1)) * (c.b + 2 * c.k);
    sum += (i % 2 == 1) ? term : Integer(-term);
  }
  const Integer euler = 2 * e.chi_p - e.chi_boundary;
  sum += (d % 2 == 1) ? euler : Integer(-euler);
  return Rational(sum, Integer(d - 1) * factorial(static_cast<unsigned>(d)));
}

/// d! Vol = sum_{i=0}^{d-1} (-1)^i C(d, i) k_{d-i} + (-1)^d (chi(P) - chi(boundary)).
inline Rational kk_volume(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  require(d >= 2, ErrorCode::WrongDimension, "the interior-count formula needs d >= 2");
  const EulerData e = convex_euler_data(d);
  Integer sum = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const SublatticeCounts c = sublattice_counts(p, static_cast<std::int64_t>(d - i));
    Integer term = binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)) * c.k;
    sum += (i % 2 == 0) ? term : Integer(-term);
  }
  const Integer euler = e.chi_p - e.chi_boundary;
  sum += (d % 2 == 0) ? euler : Integer(-euler);
  return Rational(sum, factorial(static_cast<unsigned>(d)));
}

struct PickInequalityReport {
  Integer b = 0;
  Integer k = 0;
  Rational bound;
  Rational volume;
  bool satisfied = false;
  bool tight = false;
};

/// Vol >= (2b + 3k - 7) / 6 for convex lattice 3-polytopes with k >= 1.
inline PickInequalityReport pick_inequality_check(const Polytope& p) {
  require(p.ambient_dim() == 3, ErrorCode::WrongDimension, "the inequality is three-dimensional");
  const SublatticeCounts c = sublattice_counts(p, 1);
  require(c.k >= 1, ErrorCode::NoInteriorPoints, "the inequality needs an interior lattice point");
  PickInequalityReport r;
  r.b = c.b;
  r.k = c.k;
  r.bound = Rational(2 * c.b + 3 * c.k - 7, 6);
  r.volume = volume(p);
  r.satisfied = r.volume >= r.bound;
  r.tight = r.volume == r.bound;
  return r;
}

}  // namespace latpoly
