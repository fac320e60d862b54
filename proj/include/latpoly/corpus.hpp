#pragma once

// Named example polytopes and a seeded random corpus of lattice polygons
// and 3-polytopes.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"
#include "latpoly/unimodular.hpp"

namespace latpoly {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Fixture {
  std::string name;
  std::vector<LatticePoint> vertices;
};

inline std::vector<Fixture> fixture_suite() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, std::vector<LatticePoint> vs) { out.push_back({std::move(name), std::move(vs)}); };
  for (std::size_t d = 3; d <= 5; ++d)
    for (std::int64_t k = 1; k <= 3; ++k)
      add("s" + std::to_string(d) + "k" + std::to_string(k), make_S_d_k(d, k).vertices());
  add("t_3_7_20", make_T({3, 7, 20}).vertices());
  add("t_5_11_32", make_T({5, 11, 32}).vertices());
  add("t_1_1_1", make_T({1, 1, 1}).vertices());
  for (std::int64_t n = 1; n <= 10; ++n) add("reeve" + std::to_string(n), make_reeve(n).vertices());
  add("delta_2_4", make_delta_pq(2, 4).vertices());
  add("delta_3_4", make_delta_pq(3, 4).vertices());
  add("delta_4_6", make_delta_pq(4, 6).vertices());
  add("delta_3_4_3", make_delta_pq(3, 4, 3).vertices());
  add("square", {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  add("cross2", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  std::vector<LatticePoint> cube;
  for (std::int64_t x = 0; x < 2; ++x)
    for (std::int64_t y = 0; y < 2; ++y)
      for (std::int64_t z = 0; z < 2; ++z) cube.push_back({x, y, z});
  add("cube", cube);
  add("cross3", {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  add("bipyramid", {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, -1}});
  add("pyramid", {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}});
  return out;
}

/// count/2 polygons from [-3,3]^2 and count - count/2 polytopes from
/// [-2,2]^3, each the hull of 3..9 uniform random points. Degenerate draws
/// are redrawn, so the corpus depends only on seed and count.
inline std::vector<Polytope> fuzz_corpus(std::uint64_t seed = kDefaultSeed, std::size_t count = 200) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<Polytope> out;
  while (out.size() < count) {
    const std::size_t d = out.size() < count / 2 ? 2 : 3;
    const std::int64_t r = d == 2 ? 3 : 2;
    const auto n = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(d) + 1, 9));
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> c(d);
      for (auto& x : c) x = uniform(-r, r);
      pts.emplace_back(std::move(c));
    }
    if (affine_hull_dim(pts) != d) continue;
    out.push_back(Polytope::hull(std::move(pts)));
  }
  return out;
}

}  // namespace latpoly
