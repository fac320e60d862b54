#include <gtest/gtest.h>

#include "latpoly/corpus.hpp"
#include "latpoly/picktype.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

std::vector<Polytope> fixture_polytopes(std::size_t max_dim) {
  std::vector<Polytope> out;
  for (const auto& f : fixture_suite()) {
    if (f.name == "bipyramid" || f.name == "pyramid") continue;
    if (f.vertices.front().dim() <= max_dim) out.emplace_back(f.vertices);
  }
  return out;
}

}  // namespace

TEST(HullVolumeOracle, AgreesWithPlacingVolume) {
  for (const auto& p : fuzz_corpus()) EXPECT_EQ(volume(p), oracle::hull_volume(p.vertices()));
  for (const auto& p : fixture_polytopes(3)) EXPECT_EQ(volume(p), oracle::hull_volume(p.vertices()));
}

TEST(SublatticeCounts, UnitCubeDilates) {
  std::vector<LatticePoint> cube;
  for (std::int64_t x = 0; x < 2; ++x)
    for (std::int64_t y = 0; y < 2; ++y)
      for (std::int64_t z = 0; z < 2; ++z) cube.push_back({x, y, z});
  const Polytope c(cube);
  const auto c2 = sublattice_counts(c, 2);
  EXPECT_EQ(c2.b, 26);
  EXPECT_EQ(c2.k, 1);
  const auto c3 = sublattice_counts(c, 3);
  EXPECT_EQ(c3.b, 64 - 8);
  EXPECT_EQ(c3.k, 8);
}

TEST(EulerData, ConvexPolytopes) {
  EXPECT_EQ(convex_euler_data(2).chi_boundary, 0);
  EXPECT_EQ(convex_euler_data(3).chi_boundary, 2);
  EXPECT_EQ(convex_euler_data(3).chi_p, 1);
}

TEST(Pick, PolygonsOfCorpus) {
  for (const auto& p : fuzz_corpus())
    if (p.ambient_dim() == 2) { EXPECT_EQ(pick_volume(p), oracle::hull_volume(p.vertices())); }
  EXPECT_EQ(pick_volume(Polytope(make_delta_pq(2, 4))), Rational(13, 2));
  EXPECT_THROW(pick_volume(Polytope(make_reeve(2))), Error);
}

TEST(Reeve, CorpusAndFixtures) {
  std::vector<Polytope> ps = fixture_polytopes(3);
  for (const auto& p : fuzz_corpus()) ps.push_back(p);
  for (const auto& p : ps) {
    if (p.ambient_dim() != 3) continue;
    const Rational v = oracle::hull_volume(p.vertices());
    EXPECT_EQ(reeve_volume(p, 2), v);
    EXPECT_EQ(reeve_volume(p, 3), v);
  }
  EXPECT_THROW(reeve_volume(Polytope(make_reeve(2)), 1), Error);
}

TEST(Reeve, TetrahedraWithoutInteriorPoints) {
  // b and k do not see the height: only the sublattice term does
  for (std::int64_t n = 1; n <= 10; ++n) {
    const Polytope r(make_reeve(n));
    const auto c = sublattice_counts(r, 1);
    EXPECT_EQ(c.b, 4);
    EXPECT_EQ(c.k, 0);
    EXPECT_EQ(reeve_volume(r, 2), Rational(n, 6));
  }
}

TEST(Macdonald, AllDimensions) {
  std::vector<Polytope> ps = fixture_polytopes(4);
  for (const auto& p : fuzz_corpus()) ps.push_back(p);
  for (const auto& p : ps) EXPECT_EQ(macdonald_volume(p), volume(p));
}

TEST(InteriorCountFormula, AllDimensions) {
  std::vector<Polytope> ps = fixture_polytopes(4);
  for (const auto& p : fuzz_corpus()) ps.push_back(p);
  for (const auto& p : ps) EXPECT_EQ(kk_volume(p), volume(p));
}

TEST(PickInequality, HoldsOnCorpus) {
  std::size_t tested = 0;
  for (const auto& p : fuzz_corpus()) {
    if (p.ambient_dim() != 3) continue;
    if (oracle::census(p.vertices()).interior == 0) {
      EXPECT_THROW(pick_inequality_check(p), Error);
      continue;
    }
    const auto r = pick_inequality_check(p);
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.volume, oracle::hull_volume(p.vertices()));
    ++tested;
  }
  EXPECT_GT(tested, 20u);
}

TEST(PickInequality, TightOnMinimalSimplices) {
  for (std::int64_t k = 1; k <= 3; ++k) {
    const auto r = pick_inequality_check(Polytope(make_S_d_k(3, k)));
    EXPECT_EQ(r.b, 4);
    EXPECT_EQ(r.k, k);
    EXPECT_TRUE(r.tight);
  }
  EXPECT_FALSE(pick_inequality_check(Polytope(make_T({3, 7, 20}))).tight);
}
