#include <gtest/gtest.h>

#include <algorithm>

#include "fecheck/matrix_rank.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/structure.hpp"
#include "support.hpp"

namespace fecheck {
namespace {

using test::am;
using test::fe;

const std::vector<FieldElem> grid4 = test::elems({"t", "t+1", "t^2", "2"});

Kernel outer(const AdditiveMap& a, const AdditiveMap& b) {
  return [a, b](const FieldElem& x, const FieldElem& y) { return a(x) * b(y); };
}

TEST(MatrixRank, SmallExamples) {
  EXPECT_EQ(rank_over_field({}), 0u);
  EXPECT_EQ(rank_over_field({{FieldElem(), FieldElem()}}), 0u);
  EXPECT_EQ(rank_over_field({{FieldElem(1)}, {fe("t")}}), 1u);
  EXPECT_EQ(rank_over_rationals({{FieldElem(1)}, {fe("t")}}), 2u);
  EXPECT_EQ(rank_over_rationals({{fe("1/t")}, {fe("2/t")}}), 1u);
  EXPECT_EQ(rank_rational({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), 1u);
  EXPECT_EQ(rank_over_field({{fe("t"), fe("1/t")}, {fe("t^2"), FieldElem(1)}}), 1u);
}

TEST(MatrixRank, MatchesGaussJordanOracle) {
  test::Gen g(40);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 5)), cols = static_cast<std::size_t>(g.integer(1, 5));
    const std::size_t inner = static_cast<std::size_t>(g.integer(1, 4));
    // rows x inner times inner x cols, so the rank is usually below full.
    FieldMatrix l(rows, std::vector<FieldElem>(inner)), r(inner, std::vector<FieldElem>(cols));
    for (auto& row : l) for (auto& v : row) v = g.integer(0, 2) == 0 ? FieldElem() : g.elem();
    for (auto& row : r) for (auto& v : row) v = g.elem();
    FieldMatrix m(rows, std::vector<FieldElem>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m[i][j] += l[i][k] * r[k][j];
    EXPECT_EQ(rank_over_field(m), test::gauss_jordan_rank(m));
  }
}

TEST(KernelRank, Examples) {
  EXPECT_EQ(kernel_rank(product_kernel(am("der(1)")), grid4, grid4), 2u);
  EXPECT_EQ(kernel_rank(outer(am("der(1)"), am("sub(t^2)")), grid4, grid4), 1u);
  Kernel zero = [](const FieldElem&, const FieldElem&) { return FieldElem(); };
  EXPECT_EQ(kernel_rank(zero, grid4, grid4), 0u);
  EXPECT_THROW((void)kernel_rank(zero, {}, grid4), std::invalid_argument);
  const KernelGrid grid = evaluate_grid(product_kernel(am("id")), grid4, {fe("t")});
  ASSERT_EQ(grid.values.size(), 4u);
  ASSERT_EQ(grid.values[0].size(), 1u);
  EXPECT_EQ(grid.values[2][0], fe("t^3"));
}

TEST(CertifyIndependent, Examples) {
  const std::vector<AdditiveMap> ders{am("der(1)"), am("der(t)")};
  const auto xs = test::elems({"t", "t^3"});
  EXPECT_TRUE(certify_independent(ders, xs).passed());
  // Over Q(t) the two derivations are proportional.
  EXPECT_EQ(certify_independent(ders, xs, Scalars::field).outcome, Outcome::fail);
  EXPECT_EQ(certify_independent({am("id"), am("id")}, grid4).outcome, Outcome::fail);
  EXPECT_TRUE(certify_independent({am("sub(t^2)"), am("sub(t^3)")}, test::elems({"t", "t+1", "t^2"})).passed());
  EXPECT_TRUE(certify_independent({am("sub(t^2)"), am("sub(t^3)")}, grid4, Scalars::field).passed());
  EXPECT_EQ(certify_independent({}, grid4).outcome, Outcome::precondition_failed);
  EXPECT_EQ(certify_independent(ders, {fe("t")}).outcome, Outcome::precondition_failed);
}

TEST(HodDegree, Examples) {
  const auto samples = test::elems({"t", "t+1", "t^2", "2"});
  EXPECT_EQ(hod_degree(am("der(1)"), 4, samples).degree, 1u);
  EXPECT_EQ(hod_degree(am("comp(der(1), der(1))"), 4, samples).degree, 2u);
  HodReport three = hod_degree(am("comp(der(1), der(t), der(t^2+1))"), 4, samples);
  EXPECT_EQ(three.degree, 3u);
  EXPECT_TRUE(three.verdict.passed());
  EXPECT_EQ(three.seed, 7u);
  EXPECT_EQ(three.increments.size(), 6u);
  HodReport id = hod_degree(am("id"), 4, samples);
  EXPECT_EQ(id.verdict.outcome, Outcome::precondition_failed);
  EXPECT_FALSE(id.degree.has_value());
  // Not detected within the bound.
  HodReport capped = hod_degree(am("comp(der(1), der(1), der(1))"), 2, samples);
  EXPECT_FALSE(capped.degree.has_value());
  EXPECT_FALSE(capped.verdict.passed());
}

TEST(HodDegree, SeedChangesPoolNotAnswer) {
  const auto samples = test::elems({"t", "1/t", "3/7"});
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    HodReport r = hod_degree(am("comp(der(1), der(1))"), 3, samples, seed);
    EXPECT_EQ(r.seed, seed);
    EXPECT_EQ(r.degree, 2u) << "seed " << seed << " " << r.verdict.note;
  }
  EXPECT_NE(hod_degree(am("der(1)"), 2, samples, 1).increments, hod_degree(am("der(1)"), 2, samples, 2).increments);
}

TEST(PullbackDecomposable, Examples) {
  const auto xs = test::elems({"t", "t+1", "t^2", "2", "1/t"});
  DecomposabilityReport d = pullback_decomposable(am("der(1)"), 2, xs, xs);
  EXPECT_TRUE(d.verdict.passed());
  EXPECT_EQ(d.max_rank, 2u);
  DecomposabilityReport dd = pullback_decomposable(am("comp(der(1), der(1))"), 2, xs, xs);
  EXPECT_TRUE(dd.verdict.passed());
  EXPECT_EQ(dd.max_rank, 3u);
  for (unsigned k : {2u, 3u, 4u}) {
    DecomposabilityReport s = pullback_decomposable(am("sub(t^2)"), k, xs, xs);
    EXPECT_EQ(s.max_rank, 1u);
    for (std::size_t r : s.ranks) EXPECT_EQ(r, 1u);
  }
  // Rank 3 saturates a 3x3 grid: no bounded-rank evidence there.
  const auto small = test::elems({"t", "t+1", "t^2"});
  EXPECT_EQ(pullback_decomposable(am("comp(der(1), der(1))"), 2, small, small).verdict.outcome, Outcome::fail);
  EXPECT_THROW((void)pullback_decomposable(am("id"), 2, {}, xs), std::invalid_argument);
}

TEST(StructureProperty, RankMonotoneInGrid) {
  test::Gen g(41);
  for (int rep = 0; rep < 10; ++rep) {
    const AdditiveMap a = g.map(1);
    std::vector<FieldElem> xs = g.nonzero(2), ys = g.nonzero(2);
    std::size_t last = kernel_rank(product_kernel(a), xs, ys);
    for (int grow = 0; grow < 3; ++grow) {
      xs.push_back(g.nonzero());
      ys.push_back(g.nonzero());
      const std::size_t now = kernel_rank(product_kernel(a), xs, ys);
      EXPECT_GE(now, last) << a.to_string();
      last = now;
    }
  }
}

TEST(StructureProperty, LeibnizRankBound) {
  test::Gen g(42);
  for (int rep = 0; rep < 15; ++rep) {
    const std::vector<FieldElem> xs = g.nonzero(5), ys = g.nonzero(5);
    EXPECT_LE(kernel_rank(product_kernel(AdditiveMap::derivation(g.nonzero())), xs, ys), 2u);
    EXPECT_LE(kernel_rank(product_kernel(AdditiveMap::substitution(g.nonconstant_poly())), xs, ys), 1u);
  }
}

TEST(StructureProperty, HodSubadditiveUnderComposition) {
  const auto samples = test::elems({"t", "t+1", "1/t"});
  const std::vector<AdditiveMap> ds{am("der(1)"), am("der(t)"), am("comp(der(1), der(t^2))")};
  for (const AdditiveMap& a : ds) {
    for (const AdditiveMap& b : ds) {
      auto da = hod_degree(a, 4, samples).degree, db = hod_degree(b, 4, samples).degree;
      auto dab = hod_degree(AdditiveMap::compose({a, b}), 4, samples).degree;
      ASSERT_TRUE(da && db);
      if (dab) {
        EXPECT_LE(*dab, *da + *db);
      }
    }
  }
}

TEST(StructureProperty, IndependencePermutationInvariant) {
  test::Gen g(43);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<AdditiveMap> maps = g.maps(3);
    std::vector<FieldElem> xs = g.nonzero(4);
    const Outcome base = certify_independent(maps, xs).outcome;
    std::reverse(maps.begin(), maps.end());
    std::rotate(xs.begin(), xs.begin() + 1, xs.end());
    EXPECT_EQ(certify_independent(maps, xs).outcome, base);
  }
}

}  // namespace
}  // namespace fecheck
