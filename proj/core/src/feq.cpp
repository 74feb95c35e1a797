#include "fecheck/feq.hpp"

#include <functional>
#include <stdexcept>
#include <variant>

#include "fecheck/errors.hpp"
#include "fecheck/structure.hpp"

namespace fecheck {

Verdict verify_identity(const Scenario& s) {
  if (s.samples.empty()) throw std::invalid_argument("scenario '" + s.name + "' has no samples");
  std::size_t checked = 0;
  for (const auto& x : s.samples) {
    try {
      FieldElem lhs = s.lhs(x);
      FieldElem rhs = s.rhs(x);
      ++checked;
      if (auto w = compare({x}, lhs, rhs)) return Verdict::fail(std::move(*w), s.name);
    } catch (const EvaluationError& e) {
      return Verdict::fail(Witness{{x}, "error", e.what()}, "evaluation failed");
    }
  }
  return Verdict::pass(checked, s.name);
}

namespace {

void check_square(const Matrix& lambdas, std::size_t k) {
  if (lambdas.size() != k) throw std::invalid_argument("coefficient matrix must be k x k");
  for (const auto& row : lambdas) {
    if (row.size() != k) throw std::invalid_argument("coefficient matrix must be k x k");
  }
}

template <class... Alts>
void require_kind(const std::vector<AdditiveMap>& maps, const char* what) {
  for (const auto& m : maps) {
    if (!(std::holds_alternative<Alts>(m.node()) || ...)) throw std::invalid_argument(std::string("expected ") + what);
  }
}

void require_independent(const std::vector<AdditiveMap>& maps, const std::vector<FieldElem>& samples) {
  if (!certify_independent(maps, samples).passed()) throw std::invalid_argument("maps are not independent");
}

UnaryFn quadratic_trace_at_power(const std::vector<AdditiveMap>& maps, const Matrix& lambdas, unsigned n) {
  std::vector<std::pair<FieldElem, SymForm>> terms;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      if (!lambdas[i][j].is_zero()) terms.emplace_back(lambdas[i][j], SymForm::atom_product({maps[i], maps[j]}));
    }
  }
  return UnaryFn::composed(UnaryFn::trace(SymForm::sum(2, std::move(terms))), ClassicalPoly::monomial(n, 1));
}

std::string index_name(const char* prefix, std::size_t k, unsigned n) {
  return std::string(prefix) + "_k" + std::to_string(k) + "_n" + std::to_string(n);
}

}  // namespace

Scenario example1_scenario(const std::vector<AdditiveMap>& phis, const Matrix& lambdas, unsigned n,
                           std::vector<FieldElem> samples) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  check_square(lambdas, phis.size());
  require_kind<atom::Substitution, atom::Identity>(phis, "substitutions");
  require_independent(phis, samples);
  std::vector<UnaryFn> terms;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = 0; j < phis.size(); ++j) {
      if (lambdas[i][j].is_zero()) continue;
      terms.push_back(UnaryFn::scaled(
          lambdas[i][j], UnaryFn::product({UnaryFn::power(UnaryFn::atom(phis[i]), n),
                                           UnaryFn::power(UnaryFn::atom(phis[j]), n)})));
    }
  }
  return Scenario{index_name("example1", phis.size(), n), quadratic_trace_at_power(phis, lambdas, n),
                  UnaryFn::sum(std::move(terms)), std::move(samples), Outcome::pass};
}

Scenario example2_scenario(const std::vector<AdditiveMap>& ds, const Matrix& lambdas, unsigned n,
                           std::vector<FieldElem> samples) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  check_square(lambdas, ds.size());
  require_kind<atom::Derivation>(ds, "derivations");
  require_independent(ds, samples);
  std::vector<UnaryFn> terms;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ds.size(); ++j) {
      if (lambdas[i][j].is_zero()) continue;
      terms.push_back(UnaryFn::scaled(
          lambdas[i][j] * FieldElem(n * n),
          UnaryFn::product({UnaryFn::arg_power(2 * static_cast<long>(n) - 2), UnaryFn::atom(ds[i]),
                            UnaryFn::atom(ds[j])})));
    }
  }
  return Scenario{index_name("example2", ds.size(), n), quadratic_trace_at_power(ds, lambdas, n),
                  UnaryFn::sum(std::move(terms)), std::move(samples), Outcome::pass};
}

Scenario example3_scenario(const AdditiveMap& d, unsigned k, unsigned n, std::vector<FieldElem> samples) {
  if (k == 0 || n == 0) throw std::invalid_argument("k and n must be positive");
  require_kind<atom::Derivation>({d}, "a derivation");
  const unsigned parts = 2 * n;
  // d^0 is the identity, written as the argument itself.
  std::vector<UnaryFn> powers;
  powers.push_back(UnaryFn::arg_power(1));
  for (unsigned l = 1; l <= k; ++l) powers.push_back(UnaryFn::atom(AdditiveMap::power(d, l)));

  std::vector<UnaryFn> terms;
  std::vector<unsigned> ls(parts, 0);
  std::function<void(unsigned, unsigned)> walk = [&](unsigned slot, unsigned left) {
    if (slot + 1 == parts) {
      ls[slot] = left;
      std::vector<UnaryFn> factors;
      for (unsigned l : ls) factors.push_back(powers[l]);
      terms.push_back(UnaryFn::scaled(FieldElem(multinomial(k, ls.data(), ls.size())),
                                      UnaryFn::product(std::move(factors))));
      return;
    }
    for (unsigned l = 0; l <= left; ++l) {
      ls[slot] = l;
      walk(slot + 1, left - l);
    }
  };
  walk(0, k);

  UnaryFn lhs = UnaryFn::composed(UnaryFn::trace(SymForm::pullback(AdditiveMap::power(d, k), 2)),
                                  ClassicalPoly::monomial(n, 1));
  return Scenario{"example3_k" + std::to_string(k) + "_n" + std::to_string(n), std::move(lhs),
                  UnaryFn::sum(std::move(terms)), std::move(samples), Outcome::pass};
}

std::pair<Scenario, Scenario> prop_scenarios(const AdditiveMap& a, const ClassicalPoly& p,
                                             std::vector<FieldElem> samples, Outcome expected_i,
                                             Outcome expected_ii) {
  if (p.degree() < Degree(2)) throw std::invalid_argument("P must have degree at least 2");
  if (!p.has_rational_coefficients()) throw std::invalid_argument("P must have rational coefficients");
  const UnaryFn x = UnaryFn::arg_power(1);
  const UnaryFn am = UnaryFn::atom(a);
  UnaryFn lhs = UnaryFn::composed(am, p);
  Scenario first{"commute", lhs, UnaryFn::poly_of(p, am), samples, expected_i};
  Scenario second{"chain_rule", lhs, UnaryFn::product({UnaryFn::poly_of(poly_derivative(p), x), am}),
                  std::move(samples), expected_ii};
  return {std::move(first), std::move(second)};
}

SymForm build_E_kernel(const SymForm& f, const AdditiveMap& a, unsigned n) {
  if (f.arity() != 2) throw ArityError("E kernel needs a form of arity 2");
  if (n == 0) throw std::invalid_argument("n must be positive");
  return SymForm::sum(2 * n, {{FieldElem(1), SymForm::power_blocks(f, {n, n})},
                              {FieldElem(-1), SymForm::atom_product(std::vector<AdditiveMap>(2 * n, a))}});
}

SymForm build_Phi_kernel(const SymForm& f, const AdditiveMap& a1, const AdditiveMap& a2) {
  if (f.arity() != 2) throw ArityError("Phi kernel needs a form of arity 2");
  return SymForm::sum(4, {{FieldElem(1), SymForm::power_blocks(f, {2, 2})},
                          {FieldElem(-1), SymForm::atom_product({a1, a1, a2, a2})}});
}

Scenario power_equation_scenario(std::string name, const SymForm& f, const AdditiveMap& a, unsigned n,
                                 std::vector<FieldElem> samples, Outcome expected) {
  UnaryFn lhs = UnaryFn::composed(UnaryFn::trace(f), ClassicalPoly::monomial(n, 1));
  UnaryFn rhs = UnaryFn::power(UnaryFn::atom(a), 2 * static_cast<long>(n));
  return Scenario{std::move(name), std::move(lhs), std::move(rhs), std::move(samples), expected};
}

Scenario product_equation_scenario(std::string name, const SymForm& f, const AdditiveMap& a1,
                                   const AdditiveMap& a2, std::vector<FieldElem> samples, Outcome expected) {
  UnaryFn lhs = UnaryFn::composed(UnaryFn::trace(f), ClassicalPoly::monomial(2, 1));
  UnaryFn rhs = UnaryFn::product({UnaryFn::power(UnaryFn::atom(a1), 2), UnaryFn::power(UnaryFn::atom(a2), 2)});
  return Scenario{std::move(name), std::move(lhs), std::move(rhs), std::move(samples), expected};
}

PowerFixture power_converse_fixture() {
  const AdditiveMap phi = AdditiveMap::substitution(FieldElem(Poly::monomial(Rat(1), 2)));
  const FieldElem alpha(make_rat(3, 2));
  SymForm f = SymForm::sum(2, {{pow(alpha, 4), SymForm::atom_product({phi, phi})}});
  return PowerFixture{std::move(f), AdditiveMap::lincomb({{alpha, phi}}), 2};
}

ProductFixture product_converse_fixture() {
  const AdditiveMap phi1 = AdditiveMap::identity();
  const AdditiveMap phi2 = AdditiveMap::substitution(FieldElem::t() + FieldElem(1));
  return ProductFixture{SymForm::atom_product({phi1, phi2}), AdditiveMap::lincomb({{FieldElem(2), phi1}}),
                        AdditiveMap::lincomb({{FieldElem(make_rat(1, 2)), phi2}})};
}

}  // namespace fecheck
