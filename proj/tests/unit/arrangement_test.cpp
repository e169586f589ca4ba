#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "toric/arrangement.hpp"
#include "toric/poset.hpp"

using namespace toric;
using namespace toric::testing;

TEST(TorsionValue, ReducesModOne) {
  EXPECT_EQ(TorsionValue(5, 3), TorsionValue(2, 3));
  EXPECT_EQ(TorsionValue(-1, 2), TorsionValue(1, 2));
  EXPECT_EQ(-TorsionValue(1, 3), TorsionValue(2, 3));
  EXPECT_EQ(TorsionValue(1, 2) + TorsionValue(1, 2), TorsionValue(0, 1));
  EXPECT_EQ(TorsionValue(1, 3) - TorsionValue(2, 3), TorsionValue(2, 3));
  EXPECT_EQ(TorsionValue(2, 4).str(), "1/2");
  EXPECT_THROW(TorsionValue(1, 0), std::invalid_argument);
}

TEST(Hypersurface, SignNormalization) {
  Hypersurface h = make_hypersurface({-1, 2}, TorsionValue(1, 3));
  EXPECT_EQ(h.chi, (IntVector{1, -2}));
  EXPECT_EQ(h.c, TorsionValue(2, 3));
  EXPECT_THROW(make_hypersurface({2, 4}, TorsionValue(0, 1)), std::invalid_argument);
  EXPECT_THROW(make_hypersurface({0, 0}, TorsionValue(0, 1)), std::invalid_argument);
}

TEST(Arrangement, ParseAndRoundTrip) {
  ToricArrangement a = four_lines();
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.exponent_matrix(), (IntMatrix{{1, 0}, {0, 1}, {1, 1}, {1, -1}}));
  EXPECT_EQ(parse_arrangement(serialize_arrangement(a)), a);

  ToricArrangement b = parse_arrangement("# comment\n\ntorus 3   # header\nhyp -1 0 0 @ 1/4\n");
  EXPECT_EQ(b[0].chi, (IntVector{1, 0, 0}));
  EXPECT_EQ(b[0].c, TorsionValue(3, 4));
  EXPECT_EQ(serialize_arrangement(b), "torus 3\nhyp 1 0 0 @ 3/4\n");
}

TEST(Arrangement, EmptyTorus) {
  ToricArrangement a = parse_arrangement("torus 3\n");
  EXPECT_EQ(a.dimension(), 3u);
  EXPECT_TRUE(a.empty());
}

namespace {

ArrangementError parse_error(const std::string& text) {
  try {
    parse_arrangement(text);
  } catch (const ArrangementError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ArrangementError(ArrangementErrorCode::malformed, 0, "");
}

}  // namespace

TEST(Arrangement, ParseErrorsCarryLineNumbers) {
  auto e = parse_error("torus 2\nhyp 2 0 @ 0/1\n");
  EXPECT_EQ(e.code(), ArrangementErrorCode::non_primitive);
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("torus 2\n# x\nhyp 1 0 0 @ 0/1\n");
  EXPECT_EQ(e.code(), ArrangementErrorCode::dimension_mismatch);
  EXPECT_EQ(e.line(), 3u);

  e = parse_error("torus 2\nhyp 1 0 @ 0/1\nhyp -1 0 @ 0/1\n");
  EXPECT_EQ(e.code(), ArrangementErrorCode::duplicate);
  EXPECT_EQ(e.line(), 3u);

  EXPECT_EQ(parse_error("hyp 1 0 @ 0/1\n").code(), ArrangementErrorCode::malformed);
  EXPECT_EQ(parse_error("").code(), ArrangementErrorCode::malformed);
  EXPECT_EQ(parse_error("torus 2\nhyp 1 0 @ 3/2\n").line(), 2u);
  EXPECT_EQ(parse_error("torus 2\nhyp 1 0 @ 1/0\n").code(), ArrangementErrorCode::malformed);
  EXPECT_EQ(parse_error("torus 2\nhyp 1 x @ 0/1\n").code(), ArrangementErrorCode::malformed);
  EXPECT_EQ(parse_error("torus 2\nhyp 1 0 0/1\n").code(), ArrangementErrorCode::malformed);
  EXPECT_NE(std::string(parse_error("torus 2\nhyp 2 0 @ 0/1\n").what()).find("line 2"),
            std::string::npos);
}

TEST(Arrangement, SubsetKeepsOrder) {
  const std::size_t idx[] = {3, 1};
  ToricArrangement s = four_lines().subset(idx);
  EXPECT_EQ(s.exponent_matrix(), (IntMatrix{{1, -1}, {0, 1}}));
}

TEST(Families, Braid) {
  ToricArrangement b = braid(3);
  EXPECT_EQ(b.dimension(), 3u);
  EXPECT_EQ(b.exponent_matrix(), (IntMatrix{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
  EXPECT_THROW(braid(1), std::invalid_argument);
}

TEST(Families, WeylRootCounts) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(weyl(WeylFamily::A, n).size(), n * (n + 1) / 2);
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(weyl(WeylFamily::B, n).size(), n * n);
    EXPECT_EQ(weyl(WeylFamily::C, n).size(), n * n);
  }
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(weyl(WeylFamily::D, n).size(), n * (n - 1));
  EXPECT_EQ(weyl(WeylFamily::G2, 2).size(), 6u);
  EXPECT_THROW(weyl(WeylFamily::D, 2), std::invalid_argument);
  EXPECT_THROW(weyl(WeylFamily::B, 1), std::invalid_argument);
  EXPECT_THROW(weyl(WeylFamily::G2, 3), std::invalid_argument);
  EXPECT_THROW(weyl(WeylFamily::A, 0), std::invalid_argument);
}

TEST(Families, WeylRootsExplicit) {
  EXPECT_EQ(positive_roots(WeylFamily::A, 2), (std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(positive_roots(WeylFamily::B, 2),
            (std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(positive_roots(WeylFamily::C, 2),
            (std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
  auto g2 = positive_roots(WeylFamily::G2, 2);
  EXPECT_EQ(g2.back(), (IntVector{3, 2}));
  // Highest root of D4 is a1 + 2a2 + a3 + a4.
  EXPECT_EQ(positive_roots(WeylFamily::D, 4).back(), (IntVector{1, 2, 1, 1}));
}

TEST(Families, WeylSimpleOnly) {
  ToricArrangement a = weyl(WeylFamily::B, 3, true);
  EXPECT_EQ(a.exponent_matrix(), IntMatrix::identity(3));
}

TEST(Families, ParseFamily) {
  EXPECT_EQ(parse_weyl_family("G2"), WeylFamily::G2);
  EXPECT_EQ(parse_weyl_family("D"), WeylFamily::D);
  EXPECT_THROW(parse_weyl_family("E"), std::invalid_argument);
}

TEST(Restriction, FourLinesLastStep) {
  ToricArrangement a = four_lines();
  const std::size_t prefix[] = {0, 1, 2};
  RestrictedArrangement r = restrict_to(a, 3, prefix);
  EXPECT_EQ(r.ambient.dimension(), 1u);
  // K_4 meets the others in (1,1) and (-1,-1).
  ASSERT_EQ(r.ambient.size(), 2u);
  std::set<std::string> values{r.ambient[0].c.str(), r.ambient[1].c.str()};
  EXPECT_EQ(values, (std::set<std::string>{"0/1", "1/2"}));
  std::size_t origins = 0;
  for (const auto& o : r.origins) origins += o.size();
  EXPECT_EQ(origins, 4u);  // (1,1) from all three, (-1,-1) from K_3 only
  EXPECT_EQ(abs(lattice::determinant(r.basis)), 1);
}

TEST(Restriction, CountMatchesPairwiseComponents) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t l = 1 + rng() % 3, n = 2 + rng() % 4;
    ToricArrangement a = random_arrangement(rng, l, n, 2, 3);
    if (a.size() < 2) continue;
    std::vector<std::size_t> prefix;
    for (std::size_t r = 1; r < a.size(); ++r) prefix.push_back(r);
    RestrictedArrangement res = restrict_to(a, 0, prefix);
    std::vector<Component> seen;
    for (std::size_t r : prefix) {
      const std::size_t idx[] = {r, 0};
      for (const auto& c : intersect_hypersurfaces(a, idx).components)
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    }
    ASSERT_EQ(res.ambient.size(), seen.size()) << serialize_arrangement(a);
    ASSERT_EQ(res.ambient.dimension(), l - 1);
  }
}
