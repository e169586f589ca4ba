#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toric/poset.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

}  // namespace

TEST(Intersect, TwoPointsOfFourLines) {
  ToricArrangement a = four_lines();
  const std::size_t idx[] = {2, 3};
  IntersectionResult r = intersect_hypersurfaces(a, idx);
  EXPECT_FALSE(r.empty);
  ASSERT_EQ(r.count, 2u);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].witness, rationals({{0, 1}, {0, 1}}));
  EXPECT_EQ(r.components[1].witness, rationals({{1, 2}, {1, 2}}));
  EXPECT_EQ(r.components[0].dimension(), 0u);
}

TEST(Intersect, EmptyAndInconsistent) {
  const TorsionValue b[] = {TorsionValue(0, 1), TorsionValue(1, 2)};
  IntersectionResult r = intersect_system(IntMatrix{{1, 0}, {1, 0}}, b);
  EXPECT_TRUE(r.empty);
  EXPECT_EQ(r.count, 0u);
  EXPECT_TRUE(r.components.empty());
  const TorsionValue b1[] = {TorsionValue(0, 1)};
  EXPECT_THROW(intersect_system(IntMatrix{{1, 0}, {0, 1}}, b1), std::invalid_argument);
}

TEST(Intersect, CubicPairGivesThreePoints) {
  const std::size_t idx[] = {0, 1};
  IntersectionResult r = intersect_hypersurfaces(cubic_pair(), idx);
  EXPECT_EQ(r.count, 3u);
}

TEST(Intersect, CountIsProductOfDivisorsAndWitnessesSolve) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t l = 1 + rng() % 3, n = 1 + rng() % 3;
    IntMatrix a = random_matrix(rng, n, l, -3, 3);
    std::vector<TorsionValue> b;
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(static_cast<long>(rng() % 6), 6);
    IntersectionResult r = intersect_system(a, b);
    if (r.empty) continue;
    Integer prod = 1;
    for (const auto& d : lattice::snf(a).divisors()) prod *= d;
    ASSERT_EQ(r.count, prod) << a.str();
    ASSERT_EQ(Integer(static_cast<unsigned long>(r.components.size())), r.count);
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const auto& c = r.components[k];
      ASSERT_EQ(c.codimension(), lattice::rank(a));
      for (std::size_t i = 0; i < n; ++i)
        ASSERT_EQ(TorsionValue(lattice::dot(a.row(i), c.witness)), b[i]);
      for (std::size_t j = 0; j < k; ++j) ASSERT_FALSE(c == r.components[j]);
    }
  }
}

TEST(Component, ContainmentAndHypersurfaces) {
  ToricArrangement a = four_lines();
  Component curve = make_component(IntMatrix{{1, 1}}, rationals({{1, 2}, {1, 2}}));
  Component point = make_component(IntMatrix{{1, 1}, {1, -1}}, rationals({{1, 2}, {1, 2}}));
  EXPECT_TRUE(contained_in(point, curve));
  EXPECT_FALSE(contained_in(curve, point));
  EXPECT_TRUE(contained_in(point, Component::torus(2)));
  EXPECT_TRUE(hypersurface_contains(a[2], point));
  EXPECT_TRUE(hypersurface_contains(a[3], point));
  EXPECT_FALSE(hypersurface_contains(a[0], point));
  EXPECT_TRUE(cut(point, a[2]).empty());
  EXPECT_EQ(cut(curve, a[3]).size(), 2u);
}

TEST(Poset, FourLines) {
  IntersectionPoset p = build_poset(four_lines());
  EXPECT_EQ(p.size(), 7u);
  EXPECT_EQ(p.layer_sizes(), (std::vector<std::size_t>{1, 4, 2}));
  EXPECT_EQ(p.covers().size(), 10u);
}

TEST(Poset, SmallFixtures) {
  EXPECT_EQ(build_poset(cubic_pair()).layer_sizes(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(build_poset(braid(2)).size(), 2u);
  EXPECT_EQ(build_poset(ToricArrangement(3)).size(), 1u);
}

TEST(Poset, OrderIsStrictAndCoversAreRankOne) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    ToricArrangement a = random_arrangement(rng, 2 + rng() % 2, 2 + rng() % 3, 2, 2);
    IntersectionPoset p = build_poset(a);
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
      ASSERT_FALSE(p.less(x, x));
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y)) {
          ASSERT_FALSE(p.less(y, x));
          ASSERT_GT(p[x].codimension(), p[y].codimension());
          for (std::size_t z = 0; z < n; ++z)
            if (p.less(y, z)) ASSERT_TRUE(p.less(x, z));
        }
      }
      // Every proper component lies in some hypersurface of the arrangement.
      if (p[x].codimension() > 0) {
        bool inside = false;
        for (const auto& h : a.hypersurfaces()) inside = inside || hypersurface_contains(h, p[x]);
        ASSERT_TRUE(inside);
      }
    }
    for (auto [lo, hi] : p.covers()) ASSERT_EQ(p[lo].codimension(), p[hi].codimension() + 1);
    ASSERT_EQ(p.find(p[n - 1]), n - 1);
  }
}

TEST(Poset, SerialAndParallelKernelsAgree) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    ToricArrangement a = random_arrangement(rng, 2 + rng() % 2, 2 + rng() % 4, 2, 3);
    std::vector<Component> layer{Component::torus(a.dimension())};
    for (int depth = 0; depth < 2; ++depth) {
      auto s = kernels::expand_layer_serial(a, layer);
      auto o = kernels::expand_layer_omp(a, layer);
      ASSERT_EQ(s, o);
      layer = s;
    }
    ASSERT_EQ(kernels::all_intersections_connected_serial(a),
              kernels::all_intersections_connected_omp(a));
    auto ps = build_poset(a, Execution::serial), pp = build_poset(a, Execution::parallel);
    ASSERT_EQ(ps.components(), pp.components());
  }
}

TEST(Unimodular, KnownCases) {
  EXPECT_TRUE(is_unimodular(braid(3)));
  EXPECT_TRUE(is_unimodular(braid(4)));
  EXPECT_FALSE(is_unimodular(four_lines()));
  EXPECT_FALSE(is_unimodular(cubic_pair()));
  EXPECT_TRUE(is_unimodular(weyl(WeylFamily::A, 3)));
  // Rank 2 inside a 3-torus: the plain l x l minor test would be vacuous.
  ToricArrangement low = parse_arrangement("torus 3\nhyp 1 1 0 @ 0/1\nhyp 1 -1 0 @ 0/1\n");
  EXPECT_FALSE(is_unimodular(low));
  EXPECT_FALSE(is_unimodular_by_minors(low));
}

TEST(Unimodular, SweepAgreesWithMinors) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    ToricArrangement a = random_arrangement(rng, 1 + rng() % 3, 1 + rng() % 4, 2, 3);
    // is_unimodular throws UnimodularityMismatch on disagreement.
    bool s = is_unimodular(a, Execution::serial);
    ASSERT_EQ(s, is_unimodular(a, Execution::parallel));
    ASSERT_EQ(s, is_unimodular_by_minors(a));
  }
}
