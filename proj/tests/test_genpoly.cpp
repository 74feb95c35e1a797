#include <gtest/gtest.h>

#include "fecheck/errors.hpp"
#include "fecheck/genpoly.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/sampling.hpp"
#include "support.hpp"

namespace fecheck {
namespace {

using test::am;
using test::fe;
using test::sf;
using test::uf;

const SymForm dsq_form = sf("prod(der(1), der(1))");
const UnaryFn dsq = trace(dsq_form);

ClassicalPoly cp(std::initializer_list<const char*> coeffs) {
  std::vector<FieldElem> v;
  for (const char* c : coeffs) v.push_back(fe(c));
  return ClassicalPoly(v);
}

const std::vector<FieldElem> few = test::elems({"t", "t+1", "1/t", "2/3", "(t^2+1)/(2*t-3)"});

TEST(ClassicalPoly, EvalExamples) {
  EXPECT_EQ(poly_eval(cp({"0", "1", "1"}), fe("t")), fe("t^2+t"));
  EXPECT_EQ(poly_eval(cp({"1"}), fe("1/(t+3)")), FieldElem(1));
  EXPECT_EQ(poly_eval(cp({"2", "t", "1"}), fe("t")), fe("2*t^2+2"));
  EXPECT_TRUE(cp({"1", "0", "0"}).degree() == Degree(0));
  EXPECT_TRUE(ClassicalPoly().degree().is_minus_infinity());
}

TEST(ClassicalPoly, DerivativeExamples) {
  for (unsigned k = 1; k <= 5; ++k)
    EXPECT_EQ(poly_derivative(ClassicalPoly::monomial(k)), ClassicalPoly::monomial(k - 1, FieldElem(static_cast<long>(k))));
  EXPECT_TRUE(poly_derivative(cp({"7/2"})).is_zero());
  EXPECT_EQ(poly_derivative(cp({"0", "2", "0", "1"})), cp({"2", "0", "3"}));
}

TEST(ComposeFn, Examples) {
  EXPECT_EQ(compose_fn(uf("der(1)"), ClassicalPoly::monomial(2))(fe("t")), fe("2*t"));
  EXPECT_EQ(compose_fn(dsq, cp({"0", "1", "1"}))(fe("t")), fe("(2*t+1)^2"));
  const UnaryFn same = compose_fn(dsq, ClassicalPoly::monomial(1));
  for (const FieldElem& x : structured_samples()) EXPECT_EQ(same(x), dsq(x));
}

TEST(HomogeneousComponents, QuadraticTraceOfQuadratic) {
  HomogeneousComponents split(compose_fn(dsq, cp({"0", "1", "1"})), 4);
  const auto c = split(fe("t"));
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[4], fe("4*t^2"));
  EXPECT_EQ(c[3], fe("4*t"));
  EXPECT_EQ(c[2], FieldElem(1));
  EXPECT_EQ(c[1], FieldElem());
  EXPECT_EQ(c[0], FieldElem());
  EXPECT_EQ(split.component(3)(fe("t")), fe("4*t"));
  EXPECT_EQ(split.nodes(), (std::vector<Rat>{1, 2, 3, 4, 5}));
}

TEST(HomogeneousComponents, HomogeneousAndConstantInputs) {
  const UnaryFn cubic = trace(sf("prod(der(1), sub(t^2), id)"));
  const auto parts = homogeneous_components(cubic, 4);
  const auto consts = homogeneous_components(UnaryFn::constant(fe("t-4")), 3);
  for (const FieldElem& x : structured_samples()) {
    for (unsigned l = 0; l <= 4; ++l) EXPECT_EQ(parts[l](x), l == 3 ? cubic(x) : FieldElem());
    for (unsigned l = 0; l <= 3; ++l) EXPECT_EQ(consts[l](x), l == 0 ? fe("t-4") : FieldElem());
  }
}

TEST(HomogeneousComponents, NodeErrors) {
  EXPECT_THROW(HomogeneousComponents(dsq, 2, {1, 2, 2}), SingularSystem);
  EXPECT_THROW(HomogeneousComponents(dsq, 2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(HomogeneousComponents(dsq, 2, {1, 2}), std::invalid_argument);
}

TEST(MonomialDegree, VerdictExamples) {
  EXPECT_TRUE(is_generalized_monomial_of_degree(uf("der(t)"), 1, few).passed());
  const UnaryFn cubed = compose_fn(dsq, ClassicalPoly::monomial(3));
  EXPECT_TRUE(is_generalized_monomial_of_degree(cubed, 6, few).passed());
  Verdict v = is_generalized_monomial_of_degree(uf("der(t)"), 2, few);
  EXPECT_EQ(v.outcome, Outcome::fail);
  EXPECT_TRUE(v.witness.has_value());
  EXPECT_THROW((void)is_generalized_monomial_of_degree(dsq, 2, {}), std::invalid_argument);
}

TEST(MonomialDegree, SearchExamples) {
  EXPECT_EQ(monomial_degree(uf("der(1)"), 4, few), 1u);
  EXPECT_EQ(monomial_degree(dsq, 4, few), 2u);
  EXPECT_EQ(monomial_degree(UnaryFn::constant(FieldElem(5)), 4, few), 0u);
  EXPECT_EQ(monomial_degree(dsq, 1, few), std::nullopt);
  // A sum of degrees 1 and 2 is not a monomial of any degree.
  EXPECT_EQ(monomial_degree(uf("der(1) + trace(prod(der(1), der(1)))"), 3, few), std::nullopt);
}

// f(x^k) has degree n*k for f a trace of degree n.
TEST(GenpolyProperty, DegreeMultipliesUnderPowers) {
  const std::vector<std::pair<UnaryFn, unsigned>> traces{{trace(sf("pull(der(1), 1)")), 1}, {dsq, 2}};
  const auto samples = test::elems({"t", "t+1", "1/t", "2/3"});
  for (const auto& [f, n] : traces) {
    for (unsigned k = 1; k <= 3; ++k) {
      EXPECT_EQ(monomial_degree(compose_fn(f, ClassicalPoly::monomial(k)), n * k + 1, samples), n * k)
          << "n=" << n << " k=" << k;
    }
  }
}

struct ComponentFixture {
  UnaryFn g;
  unsigned bound;
};

std::vector<ComponentFixture> component_fixtures() {
  return {
      {compose_fn(dsq, cp({"0", "1", "1"})), 4},
      {compose_fn(trace(sf("pull(der(t), 2)")), cp({"1", "-2", "0", "1"})), 6},
      {compose_fn(uf("sub(t^2)"), cp({"t", "1/2", "1"})), 2},
      {compose_fn(trace(sf("prod(id, sub(t+1))")), cp({"3", "t"})), 2},
  };
}

TEST(GenpolyProperty, ComponentsSumToFunction) {
  for (const auto& [g, bound] : component_fixtures()) {
    HomogeneousComponents split(g, bound);
    for (const FieldElem& x : structured_samples()) {
      FieldElem total;
      for (const FieldElem& c : split(x)) total += c;
      EXPECT_EQ(total, g(x));
    }
  }
}

TEST(GenpolyProperty, ComponentsAreHomogeneous) {
  test::Gen gen(30);
  for (const auto& [g, bound] : component_fixtures()) {
    HomogeneousComponents split(g, bound);
    for (const FieldElem& x : test::elems({"t", "1/(t+1)", "t^2-2"})) {
      const auto base = split(x);
      for (int rep = 0; rep < 5; ++rep) {
        const FieldElem q(gen.nonzero_rational());
        const auto scaled = split(q * x);
        for (unsigned l = 0; l <= bound; ++l) EXPECT_EQ(scaled[l], pow(q, l) * base[l]);
      }
    }
  }
}

TEST(GenpolyProperty, NodeSetsAgree) {
  for (const auto& [g, bound] : component_fixtures()) {
    std::vector<Rat> neg, frac;
    for (unsigned i = 1; i <= bound + 1; ++i) {
      neg.push_back(Rat(-static_cast<long>(i)));
      frac.push_back(make_rat(1, static_cast<long>(i) + 1));
    }
    HomogeneousComponents a(g, bound), b(g, bound, neg), c(g, bound, frac);
    for (const FieldElem& x : structured_samples()) {
      EXPECT_EQ(a(x), b(x));
      EXPECT_EQ(a(x), c(x));
    }
  }
}

// Top component of f(P(x)) for monic P of degree k is F(x^k, ..., x^k).
TEST(GenpolyProperty, TopComponentOfComposition) {
  const std::vector<SymForm> forms{sf("pull(der(1), 1)"), dsq_form, sf("prod(der(t), sub(t+1))")};
  const std::vector<ClassicalPoly> polys{cp({"1", "t", "1"}), cp({"0", "-1", "0", "1"})};
  for (const SymForm& f : forms) {
    for (const ClassicalPoly& p : polys) {
      const unsigned k = static_cast<unsigned>(p.degree().value());
      const unsigned top = f.arity() * k;
      const auto comp = homogeneous_components(compose_fn(trace(f), p), top);
      const UnaryFn diag = UnaryFn::diagonal(f, std::vector<unsigned>(f.arity(), k));
      for (const FieldElem& x : structured_samples()) EXPECT_EQ(comp[top](x), diag(x));
    }
  }
}

// Quadratic F and P = x^2 + a1 x + a0 split into five pieces.
TEST(GenpolyProperty, QuadraticExpansionDegreewise) {
  const std::vector<SymForm> forms{dsq_form, sf("prod(der(1), sub(t^2))"), sf("pull(der(t), 2)")};
  const FieldElem a1 = fe("t-1"), a0 = fe("2/t");
  const ClassicalPoly p(std::vector<FieldElem>{a0, a1, FieldElem(1)});
  for (const SymForm& f : forms) {
    const auto comp = homogeneous_components(compose_fn(trace(f), p), 4);
    auto F = [&](const FieldElem& u, const FieldElem& v) { return f(std::vector<FieldElem>{u, v}); };
    for (const FieldElem& x : structured_samples()) {
      const FieldElem sq = x * x, lin = a1 * x;
      EXPECT_EQ(comp[4](x), F(sq, sq));
      EXPECT_EQ(comp[3](x), FieldElem(2) * F(sq, lin));
      EXPECT_EQ(comp[2](x), FieldElem(2) * F(sq, a0) + F(lin, lin));
      EXPECT_EQ(comp[1](x), FieldElem(2) * F(lin, a0));
      EXPECT_EQ(comp[0](x), F(a0, a0));
    }
  }
}

}  // namespace
}  // namespace fecheck
