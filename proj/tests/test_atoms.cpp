#include <gtest/gtest.h>

#include "fecheck/atoms.hpp"
#include "fecheck/errors.hpp"
#include "fecheck/sampling.hpp"
#include "support.hpp"

namespace fecheck {
namespace {

using test::am;
using test::fe;

std::vector<SamplePair> random_pairs(std::uint64_t seed, std::size_t n) {
  test::Gen g(seed);
  std::vector<SamplePair> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(g.elem(), g.elem());
  return out;
}

TEST(AdditiveMap, EvalExamples) {
  EXPECT_EQ(am("der(1)")(fe("t^3")), fe("3*t^2"));
  EXPECT_EQ(am("comp(der(1), der(1))")(fe("t^3")), fe("6*t"));
  EXPECT_EQ(am("sub(t^2)")(fe("(t+1)/t")), fe("(t^2+1)/t^2"));
  EXPECT_EQ(am("id")(fe("t/7")), fe("t/7"));
  EXPECT_EQ(am("lin(t*der(1) + 2*id)")(fe("t^2")), fe("4*t^2"));
}

TEST(AdditiveMap, ComposeIsLeftToRight) {
  // der then sub: t^2 -> 2t -> 2t^2. sub then der: t^2 -> t^4 -> 4t^3.
  EXPECT_EQ(am("comp(der(1), sub(t^2))")(fe("t^2")), fe("2*t^2"));
  EXPECT_EQ(am("comp(sub(t^2), der(1))")(fe("t^2")), fe("4*t^3"));
}

TEST(AdditiveMap, ConstructorGuards) {
  EXPECT_THROW((void)AdditiveMap::substitution(FieldElem(3)), std::invalid_argument);
  EXPECT_THROW((void)AdditiveMap::compose({}), std::invalid_argument);
  EXPECT_EQ(AdditiveMap::power(am("der(1)"), 2), am("comp(der(1), der(1))"));
}

TEST(AdditiveMap, SubstitutionAtConstantPole) {
  // sub(t+1) sends 1/t to 1/(t+1); a constant input of a non-polynomial map stays defined.
  EXPECT_EQ(am("sub(t+1)")(fe("1/t")), fe("1/(t+1)"));
  EXPECT_EQ(am("sub(t+1)")(FieldElem(5)), FieldElem(5));
}

TEST(CheckAdditive, Examples) {
  auto pairs = random_pairs(1, 10);
  EXPECT_TRUE(check_additive(am("id"), pairs).passed());
  EXPECT_TRUE(check_additive(am("der(t)"), pairs).passed());
  FieldFn square = [](const FieldElem& x) { return x * x; };
  Verdict v = check_additive(square, pairs);
  EXPECT_EQ(v.outcome, Outcome::fail);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->inputs.size(), 2u);
  EXPECT_NE(v.witness->lhs, v.witness->rhs);
}

TEST(CheckLeibniz, Examples) {
  EXPECT_TRUE(check_leibniz(am("der(t^2+1)"), random_pairs(2, 10)).passed());
  const std::vector<SamplePair> tt{{fe("t"), fe("t")}};
  Verdict sub = check_leibniz(am("sub(t^2)"), tt);
  EXPECT_EQ(sub.outcome, Outcome::fail);
  ASSERT_TRUE(sub.witness);
  EXPECT_EQ(sub.witness->lhs, "t^4");
  EXPECT_EQ(sub.witness->rhs, "2*t^3");
  Verdict dd = check_leibniz(am("comp(der(1), der(1))"), tt);
  EXPECT_EQ(dd.outcome, Outcome::fail);
  ASSERT_TRUE(dd.witness);
  EXPECT_EQ(dd.witness->lhs, "2");
  EXPECT_EQ(dd.witness->rhs, "0");
}

TEST(CheckHomomorphism, Examples) {
  auto pairs = random_pairs(3, 10);
  EXPECT_TRUE(check_homomorphism(am("sub(t^3-t)"), pairs).passed());
  EXPECT_TRUE(check_homomorphism(am("sub(1/(t+2))"), pairs).passed());
  EXPECT_TRUE(check_homomorphism(am("id"), pairs).passed());
  Verdict v = check_homomorphism(am("der(1)"), {{fe("t"), fe("t")}});
  EXPECT_EQ(v.outcome, Outcome::fail);
  EXPECT_EQ(v.witness->lhs, "2*t");
  EXPECT_EQ(v.witness->rhs, "1");
}

TEST(Checks, EmptySamplesRejected) {
  const std::vector<SamplePair> none;
  EXPECT_THROW((void)check_additive(am("id"), none), std::invalid_argument);
  EXPECT_THROW((void)check_leibniz(am("der(1)"), none), std::invalid_argument);
  EXPECT_THROW((void)check_homomorphism(am("id"), none), std::invalid_argument);
}

TEST(SamplePairs, ConsecutiveAndDiagonal) {
  auto s = test::elems({"t", "2", "1/t"});
  auto pairs = sample_pairs(s);
  EXPECT_EQ(pairs.size(), 6u);  // cyclic, so three consecutive pairs
  EXPECT_EQ(pairs.front(), SamplePair(s[0], s[1]));
}

TEST(AdditiveMapProperty, EveryRandomMapIsAdditive) {
  test::Gen g(10);
  auto pairs = sample_pairs(structured_samples());
  for (int i = 0; i < 40; ++i) {
    AdditiveMap m = g.map(2);
    EXPECT_TRUE(check_additive(m, pairs).passed()) << m.to_string();
  }
}

TEST(AdditiveMapProperty, RationalHomogeneity) {
  test::Gen g(11);
  for (int i = 0; i < 60; ++i) {
    AdditiveMap m = g.map(1);
    FieldElem x = g.elem(), q(g.rational());
    EXPECT_EQ(m(q * x), q * m(x)) << m.to_string();
  }
}

TEST(AdditiveMapProperty, DerivationsLeibnizExactly) {
  test::Gen g(12);
  for (int i = 0; i < 30; ++i) {
    AdditiveMap d = AdditiveMap::derivation(g.elem());
    EXPECT_TRUE(check_leibniz(d, random_pairs(100 + i, 5)).passed());
  }
}

TEST(AdditiveMapProperty, ComposedDerivationsKillConstants) {
  test::Gen g(13);
  for (unsigned k = 1; k <= 4; ++k) {
    std::vector<AdditiveMap> ds;
    for (unsigned i = 0; i < k; ++i) ds.push_back(AdditiveMap::derivation(g.nonzero()));
    AdditiveMap c = AdditiveMap::compose(ds);
    for (int j = 0; j < 5; ++j) EXPECT_EQ(c(FieldElem(g.rational())), FieldElem());
  }
}

TEST(AdditiveMapProperty, SubstitutionsCompose) {
  // Compose[sub(r1), sub(r2)] sends x to x(r1)(r2) = x(r1(r2)).
  test::Gen g(14);
  for (int i = 0; i < 30; ++i) {
    FieldElem r1 = g.nonconstant_poly(), r2 = g.nonconstant_poly();
    AdditiveMap chained = AdditiveMap::compose({AdditiveMap::substitution(r1), AdditiveMap::substitution(r2)});
    AdditiveMap direct = AdditiveMap::substitution(compose(r1, r2));
    FieldElem x = g.elem();
    EXPECT_EQ(chained(x), direct(x));
  }
}

TEST(AdditiveMapProperty, PrintParseRoundTrip) {
  test::Gen g(15);
  for (int i = 0; i < 40; ++i) {
    AdditiveMap m = g.map(2);
    EXPECT_EQ(am(m.to_string()), m) << m.to_string();
  }
}

}  // namespace
}  // namespace fecheck
