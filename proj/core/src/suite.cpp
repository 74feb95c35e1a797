#include "fecheck/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fecheck/feq.hpp"
#include "fecheck/genpoly.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/structure.hpp"

namespace fecheck {

namespace {

FieldElem rat(long p, long q = 1) { return FieldElem(make_rat(p, q)); }
FieldElem poly(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return FieldElem(Poly(std::move(c)));
}

Verdict expect_equal(const std::string& what, const std::string& actual, const std::string& wanted) {
  if (actual == wanted) return Verdict::pass(1, what);
  return Verdict::fail(Witness{{}, actual, wanted}, what);
}

Verdict vanishing_trace(const SymForm& form, const UnaryFn& expected_trace, const std::vector<FieldElem>& samples) {
  return verify_identity(Scenario{"trace", trace(form), expected_trace, samples, Outcome::pass});
}

std::string degree_text(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : "absent"; }

}  // namespace

std::vector<SuiteCase> builtin_cases(const SuiteOptions& options) {
  const auto samples = mixed_samples(options.seed, options.samples);
  // Cheaper set for high-order differences.
  const std::vector<FieldElem> small(samples.begin(), samples.begin() + 6);
  const UnaryFn zero = UnaryFn::constant(FieldElem());
  const UnaryFn x = UnaryFn::arg_power(1);

  const AdditiveMap id = AdditiveMap::identity();
  const AdditiveMap d1 = AdditiveMap::derivation(FieldElem(1));
  const AdditiveMap dt = AdditiveMap::derivation(FieldElem::t());
  const AdditiveMap sq = AdditiveMap::substitution(poly({0, 0, 1}));
  const AdditiveMap shift = AdditiveMap::substitution(poly({1, 1}));

  std::vector<SuiteCase> cases;
  auto add = [&cases](std::string name, Outcome expected, std::function<Verdict()> run) {
    cases.push_back(SuiteCase{std::move(name), expected, std::move(run)});
  };
  const Outcome pass = Outcome::pass;
  const Outcome fail = Outcome::fail;

  // Worked examples.
  add("homomorphism_sum_k1_n2", pass, [=] { return verify_identity(example1_scenario({sq}, {{rat(1)}}, 2, samples)); });
  for (unsigned n = 1; n <= 3; ++n) {
    add("homomorphism_sum_k2_n" + std::to_string(n), pass, [=] {
      return verify_identity(example1_scenario({id, shift}, {{rat(1), rat(1)}, {rat(0), rat(1)}}, n, samples));
    });
  }
  add("derivation_sum_k1_n2", pass, [=] { return verify_identity(example2_scenario({d1}, {{rat(1)}}, 2, samples)); });
  for (unsigned n = 1; n <= 3; ++n) {
    add("derivation_sum_k2_n" + std::to_string(n), pass, [=] {
      return verify_identity(example2_scenario({d1, dt}, {{rat(0), rat(1)}, {rat(1), rat(0)}}, n, samples));
    });
  }
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned n = 1; n <= 2; ++n) {
      const std::string tag = "_k" + std::to_string(k) + "_n" + std::to_string(n);
      add("iterated_derivation_d1" + tag, pass, [=] { return verify_identity(example3_scenario(d1, k, n, samples)); });
      add("iterated_derivation_dt" + tag, pass, [=] { return verify_identity(example3_scenario(dt, k, n, samples)); });
    }
  }

  // Commuting with rational polynomials, and the chain rule for derivations.
  const ClassicalPoly cubic({FieldElem(1), FieldElem(2), FieldElem(0), FieldElem(1)});
  add("commute_substitution", pass,
      [=] { return verify_identity(prop_scenarios(sq, cubic, samples, pass, fail).first); });
  add("commute_shift", pass, [=] { return verify_identity(prop_scenarios(shift, cubic, samples, pass, fail).first); });
  add("commute_derivation_square", fail, [=] {
    return verify_identity(prop_scenarios(d1, ClassicalPoly::monomial(2, 1), samples, fail, pass).first);
  });
  for (unsigned k = 2; k <= 4; ++k) {
    add("chain_rule_x" + std::to_string(k), pass, [=] {
      return verify_identity(prop_scenarios(dt, ClassicalPoly::monomial(k, 1), samples, fail, pass).second);
    });
  }

  // Power equation f(x^n) = a(x)^(2n).
  const PowerFixture power = power_converse_fixture();
  const AdditiveMap power_a =
      options.corrupt_fixture ? AdditiveMap::lincomb({{rat(5, 4), sq}}) : power.a;
  const SymForm e_kernel = build_E_kernel(power.form, power_a, power.n);
  add("power_converse", pass, [=] {
    return verify_identity(power_equation_scenario("power_converse", power.form, power_a, power.n, samples, pass));
  });
  add("power_kernel_trace_vanishes", pass, [=] { return vanishing_trace(e_kernel, zero, samples); });
  add("power_kernel_symmetric", pass, [=] { return check_permutation_invariance(e_kernel, small); });
  add("power_kernel_additive", pass, [=] { return check_slot_additivity(e_kernel, small); });
  add("power_kernel_unique", pass, [=] { return check_mainfact(e_kernel, small); });
  add("power_derivation_negative", fail, [=] {
    return verify_identity(
        power_equation_scenario("power_derivation_negative", SymForm::atom_product({d1, d1}), d1, 2, samples, fail));
  });
  add("power_equal_power_n1", pass, [=] {
    const SymForm k = build_E_kernel(SymForm::atom_product({dt, dt}), dt, 1);
    return vanishing_trace(k, zero, samples);
  });

  // Product equation f(x^2) = a1(x)^2 a2(x)^2.
  const ProductFixture product = product_converse_fixture();
  add("product_converse", pass, [=] {
    return verify_identity(
        product_equation_scenario("product_converse", product.form, product.a1, product.a2, samples, pass));
  });
  add("product_kernel_trace_identity", pass, [=] {
    const SymForm phi = build_Phi_kernel(product.form, product.a1, product.a2);
    const UnaryFn expected = UnaryFn::sum(
        {UnaryFn::diagonal(product.form, {2, 2}),
         UnaryFn::scaled(FieldElem(-1), UnaryFn::product({UnaryFn::power(UnaryFn::atom(product.a1), 2),
                                                          UnaryFn::power(UnaryFn::atom(product.a2), 2)}))});
    return vanishing_trace(phi, expected, samples);
  });
  add("product_kernel_vanishes", pass, [=] {
    return vanishing_trace(build_Phi_kernel(product.form, product.a1, product.a2), zero, samples);
  });
  add("product_kernel_unique", pass,
      [=] { return check_mainfact(build_Phi_kernel(product.form, product.a1, product.a2), small); });
  add("product_degenerate_equal_maps", pass,
      [=] { return vanishing_trace(build_Phi_kernel(SymForm::atom_product({sq, sq}), sq, sq), zero, samples); });
  add("product_perturbed_a2", fail, [=] {
    const AdditiveMap bent = AdditiveMap::lincomb({{rat(1), product.a2}, {rat(1), d1}});
    return verify_identity(product_equation_scenario("product_perturbed_a2", product.form, product.a1, bent, samples, fail));
  });
  add("product_derivation_a2", fail, [=] {
    return verify_identity(product_equation_scenario("product_derivation_a2", product.form, product.a1, d1, samples, fail));
  });
  add("product_normalization_unsquared", fail, [=] {
    // f(1) = a1(1) a2(1) = 6 without the square does not solve the equation.
    const SymForm f = SymForm::sum(2, {{rat(6), SymForm::atom_product({id, shift})}});
    const AdditiveMap a1 = AdditiveMap::lincomb({{rat(2), id}});
    const AdditiveMap a2 = AdditiveMap::lincomb({{rat(3), shift}});
    return verify_identity(product_equation_scenario("product_normalization_unsquared", f, a1, a2, samples, fail));
  });

  // Polarization and degree.
  add("polarization_square_of_derivation", pass, [=] {
    const SymForm form = SymForm::atom_product({d1, d1});
    const auto pol = polarize(trace(form), 2, small);
    if (!pol.report.consistent) return Verdict::fail(*pol.report.witness, "base point dependence");
    const std::vector<FieldElem> ys{FieldElem::t(), poly({0, 0, 1})};
    return expect_equal("polarized value at (t, t^2)", pol.form(ys).to_string(), "2*t");
  });
  add("degree_trace_at_square", pass, [=] {
    const UnaryFn f = UnaryFn::composed(trace(SymForm::atom_product({d1, sq})), ClassicalPoly::monomial(2, 1));
    return expect_equal("monomial degree", degree_text(monomial_degree(f, 6, small)), "4");
  });

  // Homogeneous components of f(x^2 + x), f = d(x)^2.
  add("components_quadratic_trace", pass, [=] {
    const ClassicalPoly p({FieldElem(0), FieldElem(1), FieldElem(1)});
    const UnaryFn g = compose_fn(trace(SymForm::atom_product({d1, d1})), p);
    const auto parts = HomogeneousComponents(g, 4)(FieldElem::t());
    std::string text;
    for (const auto& c : parts) text += c.to_string() + ";";
    return expect_equal("components at t", text, "0;0;1;4*t;4*t^2;");
  });

  // Higher-order derivations.
  const std::vector<FieldElem> units(samples.begin(), samples.begin() + 4);
  add("hod_derivation", pass, [=] {
    return expect_equal("order", degree_text(hod_degree(d1, 4, units, options.seed).degree), "1");
  });
  add("hod_second_order", pass, [=] {
    return expect_equal("order", degree_text(hod_degree(AdditiveMap::compose({d1, d1}), 4, units, options.seed).degree),
                        "2");
  });
  add("hod_third_order", pass, [=] {
    const AdditiveMap d3 = AdditiveMap::compose({d1, dt, d1});
    return expect_equal("order", degree_text(hod_degree(d3, 4, units, options.seed).degree), "3");
  });
  add("hod_identity_rejected", Outcome::precondition_failed,
      [=] { return hod_degree(id, 4, units, options.seed).verdict; });

  // Ranks.
  const std::vector<FieldElem> grid{FieldElem::t(), poly({1, 1}), poly({0, 0, 1}), FieldElem(2)};
  add("rank_derivation_kernel", pass, [=] {
    return expect_equal("rank", std::to_string(kernel_rank(product_kernel(d1), grid, grid)), "2");
  });
  add("rank_homomorphism_kernel", pass, [=] {
    return expect_equal("rank", std::to_string(kernel_rank(product_kernel(sq), grid, grid)), "1");
  });
  add("independent_derivations", pass, [=] { return certify_independent({d1, dt}, grid); });
  add("independent_substitutions", pass, [=] {
    return certify_independent({sq, AdditiveMap::substitution(poly({0, 0, 0, 1}))},
                               {FieldElem::t(), poly({1, 1}), poly({0, 0, 1})});
  });
  add("dependent_repeated_map", fail, [=] { return certify_independent({id, id}, grid); });
  return cases;
}

std::vector<SuiteResult> run_cases(std::vector<SuiteCase> cases, unsigned threads) {
  if (cases.empty()) throw std::invalid_argument("suite has no cases");
  std::set<std::string> names;
  for (const auto& c : cases) {
    if (!names.insert(c.name).second) throw std::invalid_argument("duplicate suite case " + c.name);
  }
  std::vector<SuiteResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      results[i].name = cases[i].name;
      results[i].expected = cases[i].expected;
      try {
        results[i].verdict = cases[i].run();
      } catch (const std::exception& e) {
        results[i].verdict = Verdict::fail(Witness{{}, "error", e.what()}, "exception");
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cases.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  std::sort(results.begin(), results.end(), [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return results;
}

std::vector<SuiteResult> paper_suite(const SuiteOptions& options) { return run_cases(builtin_cases(options)); }

std::size_t mismatches(const std::vector<SuiteResult>& results) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const SuiteResult& r) { return !r.matched(); }));
}

}  // namespace fecheck
