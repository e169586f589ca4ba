#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toric/cohomology.hpp"
#include "toric/forms.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

// The six printed 2-forms for four lines; generators x1 x2 p1 p2 p3 p4 -> 0..5.
std::vector<Eigen::VectorXcd> printed_relations(const ToricArrangement& a) {
  using T = std::vector<std::tuple<double, std::size_t, std::size_t>>;
  return {
      relation_from_terms(a, T{{1, 0, 2}}),
      relation_from_terms(a, T{{1, 1, 3}}),
      relation_from_terms(a, T{{1, 0, 4}, {1, 1, 4}}),
      relation_from_terms(a, T{{1, 0, 5}, {-1, 1, 5}}),
      relation_from_terms(a, T{{1, 2, 3}, {-1, 2, 4}, {1, 3, 4}, {-1, 1, 4}}),
      relation_from_terms(a, T{{1, 2, 5}, {-1, 2, 4}, {1, 3, 4}, {-1, 1, 4}, {-1, 3, 5}, {-1, 1, 2}}),
  };
}

}  // namespace

TEST(Forms, MonomialIndexing) {
  for (std::size_t g = 0; g < 8; ++g) {
    auto pairs = wedge_monomials(g);
    ASSERT_EQ(pairs.size(), g * (g == 0 ? 0 : g - 1) / 2);
    for (std::size_t m = 0; m < pairs.size(); ++m)
      ASSERT_EQ(monomial_index(pairs[m].first, pairs[m].second, g), m);
  }
  EXPECT_THROW(monomial_index(2, 1, 4), std::invalid_argument);
  auto gens = generators(four_lines());
  ASSERT_EQ(gens.size(), 6u);
  EXPECT_EQ(gens[0].name(), "x1");
  EXPECT_EQ(gens[5].name(), "p4");
}

TEST(Forms, SamplePointsAreDeterministicAndInComplement) {
  ToricArrangement a = four_lines();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (std::size_t k = 0; k < 20; ++k) {
      Point z = sample_point(a, seed, k);
      ASSERT_EQ(z, sample_point(a, seed, k));
      for (auto x : z) {
        ASSERT_GE(std::abs(x), 0.5 - 1e-12);
        ASSERT_LE(std::abs(x), 2.0 + 1e-12);
      }
      for (const auto& h : a.hypersurfaces())
        ASSERT_GE(std::abs(character_value(h, z) - root_of_unity(h.c)), kSampleClearance);
    }
  }
  EXPECT_EQ(sample_point(a, 7), sample_point(a, 7, 0));
  EXPECT_NE(sample_point(a, 7, 0), sample_point(a, 7, 1));
}

TEST(Forms, WedgeIsAlternating) {
  Eigen::VectorXcd u(3), v(3);
  u << 1.0, 2.0, Complex(0, 1);
  v << -1.0, 0.5, 3.0;
  EXPECT_LT((wedge(u, v) + wedge(v, u)).norm(), 1e-15);
  EXPECT_LT(wedge(u, u).norm(), 1e-15);
}

TEST(Forms, CharacterFormIsLogDerivative) {
  ToricArrangement a = parse_arrangement("torus 2\nhyp 2 -3 @ 1/3\n");
  Point z = sample_point(a, 3);
  // Finite-difference check of d(chi - c)/(chi - c) along each coordinate.
  Eigen::VectorXcd psi = eval_generator(a, FormGenerator::psi(0), z);
  const Complex c = root_of_unity(a[0].c);
  for (std::size_t k = 0; k < 2; ++k) {
    const double h = 1e-6;
    Point zp = z, zm = z;
    zp[k] += h;
    zm[k] -= h;
    Complex deriv = (character_value(a[0], zp) - character_value(a[0], zm)) / (2 * h);
    Complex expected = deriv / (character_value(a[0], z) - c);
    EXPECT_LT(std::abs(psi[static_cast<Eigen::Index>(k)] - expected), 1e-6 * std::abs(expected) + 1e-9);
  }
}

TEST(Forms, SerialAndParallelMatricesAgree) {
  ToricArrangement a = four_lines();
  auto s = kernels::evaluation_matrix_serial(a, 60, 9);
  auto o = kernels::evaluation_matrix_omp(a, 60, 9);
  EXPECT_EQ(s, o);
  EXPECT_EQ(s.rows(), 60);
  EXPECT_EQ(s.cols(), 15);
  for (Eigen::Index r = 0; r < s.rows(); ++r) ASSERT_NEAR(s.row(r).norm(), 1.0, 1e-12);
}

TEST(Relations, FourLinesNullity) {
  ToricArrangement a = four_lines();
  RelationBasis rb = degree2_relations(a, default_sample_count(a), kDefaultRelationTolerance, 0);
  EXPECT_EQ(rb.nullity(), 6u);
  EXPECT_EQ(rb.rank(), 9u);
  EXPECT_GT(rb.gap, 1e3);
  EXPECT_EQ(static_cast<std::int64_t>(rb.rank()), dcp_poincare(a).coefficient(2));
}

TEST(Relations, PrintedRelationsSpanTheNullSpace) {
  ToricArrangement a = four_lines();
  RelationBasis rb = degree2_relations(a, default_sample_count(a), kDefaultRelationTolerance, 0);
  auto printed = printed_relations(a);
  Eigen::MatrixXcd p(6, 15);
  for (std::size_t k = 0; k < printed.size(); ++k) {
    EXPECT_TRUE(verify_relation(a, printed[k], 50, 1e-9, 1)) << "relation " << k;
    p.row(static_cast<Eigen::Index>(k)) = printed[k].transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p);
  EXPECT_GT(svd.singularValues().minCoeff(), 1e-6);  // independent
  // Each printed relation lies in the computed null space.
  Eigen::MatrixXcd q = rb.relations.transpose();  // columns orthonormal
  for (const auto& r : printed) {
    Eigen::VectorXcd proj = q * (q.adjoint() * r);
    EXPECT_LT((r - proj).norm(), 1e-8 * r.norm());
  }
}

TEST(Relations, NonRelationFailsVerification) {
  ToricArrangement a = four_lines();
  using T = std::vector<std::tuple<double, std::size_t, std::size_t>>;
  EXPECT_FALSE(verify_relation(a, relation_from_terms(a, T{{1, 0, 1}}), 10, 1e-9, 0));
  EXPECT_FALSE(verify_relation(a, relation_from_terms(a, T{{1, 2, 3}}), 10, 1e-9, 0));
}

TEST(Relations, StableAcrossTolerances) {
  ToricArrangement a = four_lines();
  for (double tol : {1e-10, 1e-9, 1e-8, 1e-7, 1e-6})
    EXPECT_EQ(degree2_relations(a, 60, tol, 0).nullity(), 6u) << tol;
}

TEST(Relations, SeedDeterminism) {
  ToricArrangement a = four_lines();
  auto r1 = degree2_relations(a, 60, 1e-8, 42, Execution::parallel);
  auto r2 = degree2_relations(a, 60, 1e-8, 42, Execution::serial);
  EXPECT_EQ(r1.relations, r2.relations);
  EXPECT_EQ(r1.singular_values, r2.singular_values);
  for (std::uint64_t seed : {1, 2, 3}) EXPECT_EQ(degree2_relations(a, 60, 1e-8, seed).nullity(), 6u);
}

TEST(Relations, SmallCases) {
  EXPECT_EQ(degree2_relations(ToricArrangement(2), 3, 1e-8, 0).nullity(), 0u);
  ToricArrangement b2 = braid(2);
  EXPECT_EQ(degree2_relations(b2, default_sample_count(b2), 1e-8, 0).nullity(), 1u);
  // On a circle every 2-form vanishes.
  ToricArrangement one = parse_arrangement("torus 1\nhyp 1 @ 1/2\n");
  RelationBasis rb = degree2_relations(one, 3, 1e-8, 0);
  EXPECT_EQ(rb.nullity(), 1u);
  EXPECT_EQ(rb.rank(), 0u);
  EXPECT_THROW(degree2_relations(four_lines(), 44, 1e-8, 0), std::invalid_argument);
  EXPECT_THROW(degree2_relations(four_lines(), 60, 0.0, 0), std::invalid_argument);
}

TEST(Relations, RankMatchesBettiOnDrExamples) {
  for (const auto& a : {braid(3), weyl(WeylFamily::A, 2), weyl(WeylFamily::B, 2)}) {
    RelationBasis rb = degree2_relations(a, default_sample_count(a), 1e-8, 0);
    EXPECT_EQ(static_cast<std::int64_t>(rb.rank()), dcp_poincare(a).coefficient(2))
        << serialize_arrangement(a);
  }
}

TEST(Relations, ProductsMissPartOfH2WithoutDrOrdering) {
  // xi_1 psi_1 vanishes identically, so at most 5 of 6 monomials survive
  // while the second Betti number is 6.
  ToricArrangement a = cubic_pair();
  RelationBasis rb = degree2_relations(a, default_sample_count(a), 1e-8, 0);
  EXPECT_LT(static_cast<std::int64_t>(rb.rank()), dcp_poincare(a).coefficient(2));
}
