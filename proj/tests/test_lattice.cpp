#include <gtest/gtest.h>

#include <random>

#include "latpoly/corpus.hpp"
#include "latpoly/placing.hpp"
#include "oracles.hpp"

using namespace latpoly;

TEST(Simplex, MinimalVolumeIsDkPlusOne) {
  for (std::size_t d = 3; d <= 6; ++d)
    for (std::int64_t k = 1; k <= 5; ++k)
      EXPECT_EQ(make_S_d_k(d, k).normalized_volume(), Integer(d * k + 1)) << d << " " << k;
}

TEST(Simplex, DegenerateRejected) {
  EXPECT_THROW(Simplex({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0, 1}}), Error);
  EXPECT_THROW(Simplex({{0, 0}, {1, 0}}), Error);
}

TEST(Simplex, VolumeAgreesWithOracle) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 200) {
    const std::size_t d = 2 + rng() % 3;
    std::vector<LatticePoint> vs;
    for (std::size_t i = 0; i <= d; ++i) {
      std::vector<std::int64_t> c(d);
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 13) - 6;
      vs.emplace_back(std::move(c));
    }
    if (oracle::normalized_volume(vs) == 0) continue;
    EXPECT_EQ(Simplex(vs).normalized_volume(), oracle::normalized_volume(vs));
    ++checked;
  }
}

TEST(Barycentric, MatchesCramerAndSumsToOne) {
  const Simplex s = make_T({3, 7, 20});
  for (std::int64_t x = -2; x <= 4; ++x)
    for (std::int64_t y = -1; y <= 8; y += 3)
      for (std::int64_t z = -1; z <= 21; z += 4) {
        const LatticePoint p{x, y, z};
        const auto b = barycentric(s, p).coeffs;
        EXPECT_EQ(b, oracle::barycentric(s.vertices(), p));
        Rational sum = 0;
        for (const auto& c : b) sum += c;
        EXPECT_EQ(sum, 1);
      }
}

TEST(Classify, VertexBoundaryInteriorExterior) {
  const Simplex s = make_S_d_k(3, 2);
  using K = PointClassification::Kind;
  EXPECT_EQ(classify_point(s, {0, 0, 1}).kind, K::Vertex);
  EXPECT_EQ(classify_point(s, {0, 0, 0}).kind, K::Interior);
  EXPECT_EQ(classify_point(s, {-1, -1, -1}).kind, K::Interior);
  EXPECT_EQ(classify_point(s, {1, 1, 1}).kind, K::Exterior);
  const Simplex t = make_T({1, 1, 2});
  EXPECT_EQ(classify_point(t, {1, 1, 1}).kind, K::Exterior);
  const Simplex square_half({{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(classify_point(square_half, {1, 0}).kind, K::Boundary);
  EXPECT_EQ(classify_point(square_half, {1, 0}).zero_indices, std::vector<std::size_t>{2});
}

TEST(Polytope, FacetsOfStandardShapes) {
  for (const auto& f : fixture_suite()) {
    const Polytope p(f.vertices);
    if (f.name == "cube") { EXPECT_EQ(p.facets().size(), 6u); }
    if (f.name == "cross3") { EXPECT_EQ(p.facets().size(), 8u); }
    if (f.name == "square") { EXPECT_EQ(p.facets().size(), 4u); }
  }
}

TEST(Polytope, NonVertexInputRejectedButHullAccepts) {
  std::vector<LatticePoint> pts{{0, 0}, {2, 0}, {0, 2}, {1, 0}};
  EXPECT_THROW(Polytope{pts}, Error);
  EXPECT_EQ(Polytope::hull(pts).vertices().size(), 3u);
}

TEST(Census, AgreesWithOracleOnCorpus) {
  for (const auto& p : fuzz_corpus(kDefaultSeed, 200)) {
    const auto c = enumerate_lattice_points(p);
    const auto o = oracle::census(p.vertices());
    EXPECT_EQ(c.interior.size(), o.interior);
    EXPECT_EQ(c.boundary_nonvertex.size(), o.boundary_nonvertex);
    EXPECT_EQ(c.vertex_count, p.vertices().size());
  }
}

TEST(Census, AgreesWithOracleOnFixtures) {
  for (const auto& f : fixture_suite()) {
    if (f.vertices.front().dim() > 4) continue;
    const auto c = enumerate_lattice_points(Polytope(f.vertices));
    const auto o = oracle::census(f.vertices);
    EXPECT_EQ(c.interior.size(), o.interior) << f.name;
    EXPECT_EQ(c.boundary_nonvertex.size(), o.boundary_nonvertex) << f.name;
  }
}

TEST(Census, MinimalSimplicesAreCleanWithKPoints) {
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::int64_t k = 1; k <= 4; ++k) {
      const Simplex s = make_S_d_k(d, k);
      const auto c = enumerate_lattice_points(s);
      EXPECT_TRUE(c.boundary_nonvertex.empty());
      EXPECT_EQ(c.interior.size(), static_cast<std::size_t>(k));
      const auto r = interior_collinearity_report(s);
      EXPECT_TRUE(r.collinear);
      EXPECT_TRUE(r.evenly_spaced);
      if (k >= 2) {
        ASSERT_TRUE(r.through_vertex.has_value());
        EXPECT_EQ(s.vertex(*r.through_vertex), LatticePoint::constant(d, -k));
      }
    }
}

TEST(Census, ReeveTetrahedraAreEmpty) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto c = enumerate_lattice_points(make_reeve(n));
    EXPECT_EQ(c.interior.size(), 0u);
    EXPECT_EQ(c.boundary_nonvertex.size(), 0u);
    EXPECT_EQ(make_reeve(n).normalized_volume(), n);
  }
}

TEST(Census, CleanInteriorCountStopsAtLimit) {
  const Polytope s(make_S_d_k(3, 4));
  EXPECT_EQ(clean_interior_count(s, 4), std::optional<std::size_t>(4));
  EXPECT_EQ(clean_interior_count(s, 3), std::nullopt);
  EXPECT_EQ(clean_interior_count(Polytope(make_T({2, 2, 4})), 10), std::nullopt);  // edge (2,2,4) is not primitive
}

TEST(Collinearity, DeltaTrianglesAreNotCollinear) {
  const auto r = interior_collinearity_report(make_delta_pq(2, 4));
  EXPECT_FALSE(r.collinear);
  EXPECT_THROW(interior_collinearity_report(make_reeve(3)), Error);
}

TEST(Volume, PolytopeVolumeByPlacing) {
  for (const auto& f : fixture_suite()) {
    const Polytope p(f.vertices);
    if (f.name == "cube") { EXPECT_EQ(volume(p), 1); }
    if (f.name == "cross3") { EXPECT_EQ(normalized_volume(p), 8); }
    if (f.name == "s3k2") { EXPECT_EQ(volume(p), Rational(7, 6)); }
    if (p.is_simplex()) { EXPECT_EQ(normalized_volume(p), p.as_simplex()->normalized_volume()); }
  }
}
