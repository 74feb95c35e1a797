#include <gtest/gtest.h>

#include "fecheck/errors.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/sampling.hpp"
#include "support.hpp"

namespace fecheck {
namespace {

using test::am;
using test::fe;
using test::sf;
using test::uf;

FieldElem at(const SymForm& f, std::vector<FieldElem> args) { return f(args); }

const UnaryFn dsq = trace(sf("prod(der(1), der(1))"));

TEST(EvalForm, Examples) {
  EXPECT_EQ(at(sf("pull(der(1), 2)"), {fe("t"), fe("t^2")}), fe("3*t^2"));
  EXPECT_EQ(at(sf("prod(der(1), der(1))"), {fe("t"), fe("t^2")}), fe("2*t"));
  for (const SymForm& f : test::polarization_fixtures()) {
    std::vector<FieldElem> args(f.arity(), fe("t+1"));
    args.back() = FieldElem();
    EXPECT_EQ(f(args), FieldElem()) << f.to_string();
  }
}

TEST(EvalForm, ArityMismatch) {
  EXPECT_THROW((void)at(sf("pull(der(1), 2)"), {fe("t")}), ArityError);
  EXPECT_THROW((void)SymForm::sum(2, {{FieldElem(1), sf("pull(id, 3)")}}), ArityError);
  EXPECT_THROW((void)SymForm::power_blocks(sf("pull(id, 2)"), {1}), ArityError);
}

TEST(Trace, Examples) {
  EXPECT_EQ(dsq(fe("t^2")), fe("4*t^2"));
  UnaryFn zero = trace(SymForm::sum(2, {}));
  EXPECT_EQ(zero(fe("t")), FieldElem());
  EXPECT_EQ(zero(fe("1/t")), FieldElem());
  EXPECT_EQ(trace(sf("pull(id, 3)"))(fe("t")), fe("t^3"));
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(UnaryFn::constant(fe("t/3")), {fe("t^2")})(fe("t+5")), FieldElem());
  const AdditiveMap a = am("lin(t*der(1) + sub(t^3))");
  const FieldElem y = fe("1/(t+1)");
  for (const FieldElem& x : structured_samples()) EXPECT_EQ(delta(UnaryFn::atom(a), {y})(x), a(y));
  const UnaryFn d2 = delta(dsq, {fe("t"), fe("t^2")});
  for (const FieldElem& x : structured_samples()) EXPECT_EQ(d2(x), fe("4*t"));
}

TEST(DeltaMult, Examples) {
  const AdditiveMap d = am("der(1)");
  const UnaryFn g = UnaryFn::quotient(UnaryFn::atom(d), UnaryFn::arg_power(1));
  const FieldElem y = fe("t^2+1");
  for (const FieldElem& x : structured_samples()) {
    EXPECT_EQ(delta_mult(g, {y})(x), d(y) / y);
    EXPECT_EQ(delta_mult(UnaryFn::constant(FieldElem(5)), {y})(x), FieldElem());
    EXPECT_EQ(delta_mult(dsq, {FieldElem(1)})(x), FieldElem());
  }
  EXPECT_THROW((void)delta_mult(g, {y})(FieldElem()), EvaluationError);
}

TEST(Polarize, SquareOfDerivation) {
  auto [form, report] = polarize(dsq, 2, structured_samples());
  EXPECT_TRUE(report.consistent);
  EXPECT_GT(report.tuples_checked, 0u);
  std::vector<FieldElem> ys{fe("t"), fe("t^2")};
  EXPECT_EQ(form(ys), fe("2*t"));
}

TEST(Polarize, AdditiveReturnsItself) {
  const UnaryFn f = uf("der(t^2)");
  auto [form, report] = polarize(f, 1, structured_samples());
  EXPECT_TRUE(report.consistent);
  for (const FieldElem& y : structured_samples()) {
    std::vector<FieldElem> ys{y};
    EXPECT_EQ(form(ys), f(y));
  }
}

TEST(Polarize, AboveDegreeIsZero) {
  auto [form, report] = polarize(dsq, 3, structured_samples());
  EXPECT_TRUE(report.consistent);
  for (const auto& ys : sample_tuples(structured_samples(), 3)) EXPECT_EQ(form(ys), FieldElem());
}

TEST(Polarize, WrongDegreeIsInconsistent) {
  auto [form, report] = polarize(dsq, 1, structured_samples());
  EXPECT_FALSE(report.consistent);
  EXPECT_TRUE(report.witness.has_value());
  EXPECT_THROW((void)polarize(dsq, 2, {}), std::invalid_argument);
  std::vector<FieldElem> one{fe("t")};
  EXPECT_THROW((void)form(std::span<const FieldElem>(one.data(), 0)), ArityError);
}

TEST(SymmetrizePowers, Examples) {
  const SymForm d2 = sf("prod(der(1), der(1))");
  const SymForm same = symmetrize_powers(d2, {1, 1});
  EXPECT_EQ(same.arity(), 2u);
  const SymForm single = symmetrize_powers(sf("pull(der(1), 1)"), {2});
  const SymForm mixed = symmetrize_powers(sf("prod(der(1), id)"), {2, 1});
  EXPECT_EQ(mixed.arity(), 3u);
  for (const FieldElem& x : structured_samples()) {
    EXPECT_EQ(trace(same)(x), dsq(x));
    EXPECT_EQ(trace(single)(x), am("der(1)")(x * x));
    EXPECT_EQ(at(single, {x, fe("t+2")}), am("der(1)")(x * fe("t+2")));
  }
  EXPECT_EQ(trace(mixed)(fe("t")), fe("3/2*t^2"));
}

TEST(ZeroTraceZeroForm, Examples) {
  const SymForm d2 = sf("prod(der(1), der(1))");
  const SymForm cancelled = SymForm::sum(2, {{FieldElem(1), d2}, {FieldElem(-1), d2}});
  EXPECT_TRUE(check_mainfact(cancelled, structured_samples()).passed());
  EXPECT_TRUE(check_mainfact(SymForm::sum(3, {{FieldElem(), sf("pull(der(1), 3)")}}), structured_samples()).passed());
  EXPECT_EQ(check_mainfact(d2, structured_samples()).outcome, Outcome::precondition_failed);
  EXPECT_THROW((void)check_mainfact(d2, {}), std::invalid_argument);
}

// Delta^n trace(A) = n! A(ys) and Delta^(n+1) trace(A) = 0, at several base points.
TEST(MultiaddProperty, PolarizationRoundTrip) {
  const auto bases = test::elems({"t", "1/t", "3/7"});
  test::Gen g(20);
  for (const SymForm& a : test::polarization_fixtures()) {
    const unsigned n = a.arity();
    const UnaryFn tr = trace(a);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<FieldElem> ys = g.nonzero(n);
      const FieldElem expect = test::factorial_elem(n) * a(ys);
      std::vector<FieldElem> more = ys;
      more.push_back(g.nonzero());
      const FieldElem x = bases[rep % bases.size()];
      EXPECT_EQ(delta(tr, ys)(x), expect) << a.to_string();
      EXPECT_EQ(delta(tr, more)(x), FieldElem()) << a.to_string();
      if (rep == 0) {
        EXPECT_EQ(test::naive_difference(tr, ys, x), expect);
      }
    }
  }
}

TEST(MultiaddProperty, EqualIncrements) {
  test::Gen g(21);
  for (const SymForm& a : test::polarization_fixtures()) {
    const unsigned n = a.arity();
    for (int rep = 0; rep < 5; ++rep) {
      const FieldElem y = g.nonzero(), x = g.elem();
      EXPECT_EQ(delta(trace(a), std::vector<FieldElem>(n, y))(x), test::factorial_elem(n) * trace(a)(y));
    }
  }
}

TEST(MultiaddProperty, PermutationInvarianceAndSlotAdditivity) {
  const auto samples = test::elems({"t", "t+1", "1/t", "2/3", "t^2-1"});
  for (const SymForm& a : test::polarization_fixtures()) {
    EXPECT_TRUE(check_permutation_invariance(a, samples).passed()) << a.to_string();
    EXPECT_TRUE(check_slot_additivity(a, samples).passed()) << a.to_string();
  }
  test::Gen g(22);
  for (int rep = 0; rep < 10; ++rep) {
    SymForm random = SymForm::atom_product({g.map(1), g.map(1), g.map(0)});
    EXPECT_TRUE(check_permutation_invariance(random, samples).passed()) << random.to_string();
    EXPECT_TRUE(check_slot_additivity(random, samples).passed()) << random.to_string();
  }
}

TEST(MultiaddProperty, AtomProductMatchesPermutationSum) {
  test::Gen g(23);
  for (unsigned k = 1; k <= 4; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<AdditiveMap> maps;
      for (unsigned i = 0; i < k; ++i) maps.push_back(g.map(1));
      std::vector<FieldElem> args = g.nonzero(k);
      EXPECT_EQ(SymForm::atom_product(maps)(args), test::naive_atom_product(maps, args));
    }
  }
}

TEST(MultiaddProperty, PowerBlocksMatchesPermutationAverage) {
  const std::vector<std::pair<SymForm, std::vector<std::vector<unsigned>>>> cases{
      {sf("pull(der(1), 1)"), {{1}, {3}, {5}}},
      {sf("prod(der(1), sub(t+1))"), {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {2, 3}}},
      {sf("prod(der(1), id, sub(t^2))"), {{1, 1, 1}, {2, 1, 1}, {1, 0, 2}, {2, 2, 1}}},
  };
  test::Gen g(24);
  for (const auto& [inner, list] : cases) {
    for (const auto& alphas : list) {
      const SymForm f = symmetrize_powers(inner, alphas);
      std::vector<FieldElem> args = g.nonzero(f.arity());
      EXPECT_EQ(f(args), test::naive_power_blocks(inner, alphas, args)) << f.to_string();
    }
  }
}

TEST(MultiaddProperty, SymmetrizedTraceIsDiagonal) {
  test::Gen g(25);
  const std::vector<std::pair<SymForm, std::vector<std::vector<unsigned>>>> cases{
      {sf("pull(der(1), 1)"), {{1}, {4}, {6}}},
      {sf("prod(der(1), der(1))"), {{1, 1}, {2, 1}, {3, 3}, {1, 4}}},
      {sf("pull(sub(t^2), 2)"), {{2, 2}, {0, 3}}},
      {sf("prod(der(1), sub(t+1), id)"), {{1, 1, 1}, {2, 2, 2}, {1, 2, 3}}},
  };
  for (const auto& [inner, list] : cases) {
    for (const auto& alphas : list) {
      const UnaryFn tr = trace(symmetrize_powers(inner, alphas));
      const UnaryFn diag = UnaryFn::diagonal(inner, alphas);
      for (int rep = 0; rep < 20; ++rep) {
        const FieldElem x = g.elem();
        std::vector<FieldElem> powers;
        for (unsigned a : alphas) powers.push_back(pow(x, a));
        EXPECT_EQ(tr(x), inner(powers));
        EXPECT_EQ(diag(x), inner(powers));
      }
    }
  }
}

TEST(MultiaddProperty, TraceIsRationallyHomogeneous) {
  test::Gen g(26);
  for (const SymForm& a : test::polarization_fixtures()) {
    for (int rep = 0; rep < 5; ++rep) {
      const FieldElem x = g.elem(), q(g.rational());
      EXPECT_EQ(trace(a)(q * x), pow(q, a.arity()) * trace(a)(x));
    }
  }
}

TEST(MultiaddProperty, DifferenceOrderIrrelevant) {
  test::Gen g(27);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<FieldElem> ys = g.nonzero(3);
    std::vector<FieldElem> rev(ys.rbegin(), ys.rend());
    const FieldElem x = g.elem();
    EXPECT_EQ(delta(dsq, ys)(x), delta(dsq, rev)(x));
    EXPECT_EQ(delta_mult(dsq, ys)(fe("t")), delta_mult(dsq, rev)(fe("t")));
  }
}

TEST(MultiaddProperty, FormPrintParseRoundTrip) {
  for (const SymForm& a : test::polarization_fixtures()) EXPECT_EQ(sf(a.to_string()), a);
  const SymForm blocks = symmetrize_powers(sf("prod(der(1), id)"), {2, 1});
  EXPECT_EQ(sf(blocks.to_string()), blocks);
}

}  // namespace
}  // namespace fecheck
