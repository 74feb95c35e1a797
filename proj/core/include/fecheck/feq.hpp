#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/classical_poly.hpp"
#include "fecheck/sym_form.hpp"
#include "fecheck/unary_fn.hpp"
#include "fecheck/verdict.hpp"

namespace fecheck {

/// One functional-equation instance: lhs(x) = rhs(x) at every sample.
struct Scenario {
  std::string name;
  UnaryFn lhs;
  UnaryFn rhs;
  std::vector<FieldElem> samples;
  Outcome expected = Outcome::pass;
};

/// PASS iff both sides agree exactly at every sample. An evaluation error at
/// a sample is a FAIL whose witness carries the error text.
Verdict verify_identity(const Scenario& s);

using Matrix = std::vector<std::vector<FieldElem>>;

/// f(x^n) against sum_ij lambda_ij phi_i(x)^n phi_j(x)^n, f the trace of
/// sum_ij lambda_ij prod(phi_i, phi_j). The phis must be substitutions (or id) and
/// independent over Q on the samples.
Scenario example1_scenario(const std::vector<AdditiveMap>& phis, const Matrix& lambdas, unsigned n,
                           std::vector<FieldElem> samples);

/// Same shape for derivations, rhs sum_ij lambda_ij n^2 x^(2n-2) d_i(x) d_j(x).
Scenario example2_scenario(const std::vector<AdditiveMap>& ds, const Matrix& lambdas, unsigned n,
                           std::vector<FieldElem> samples);

/// d^k(x^(2n)) against the multinomial expansion over all compositions
/// l_1 + ... + l_2n = k of prod_i d^(l_i)(x).
Scenario example3_scenario(const AdditiveMap& d, unsigned k, unsigned n, std::vector<FieldElem> samples);

/// (i) a(P(x)) vs P(a(x)) and (ii) a(P(x)) vs P'(x) a(x). P needs rational
/// coefficients and degree >= 2.
std::pair<Scenario, Scenario> prop_scenarios(const AdditiveMap& a, const ClassicalPoly& p,
                                             std::vector<FieldElem> samples, Outcome expected_i,
                                             Outcome expected_ii);

/// Arity 2n form with trace f(x^n) - a(x)^(2n), f the trace of F.
SymForm build_E_kernel(const SymForm& f, const AdditiveMap& a, unsigned n);

/// Arity 4 form with trace F(x^2, x^2) - a1(x)^2 a2(x)^2:
/// [F(x1x4,x2x3) + F(x1x3,x2x4) + F(x1x2,x3x4)]/3 minus the average of the
/// six products placing a1 on two slots and a2 on the other two.
SymForm build_Phi_kernel(const SymForm& f, const AdditiveMap& a1, const AdditiveMap& a2);

/// f(x^n) = a(x)^(2n) as a Scenario, f the trace of F.
Scenario power_equation_scenario(std::string name, const SymForm& f, const AdditiveMap& a, unsigned n,
                                 std::vector<FieldElem> samples, Outcome expected);

/// f(x^2) = a1(x)^2 a2(x)^2 as a Scenario.
Scenario product_equation_scenario(std::string name, const SymForm& f, const AdditiveMap& a1,
                                   const AdditiveMap& a2, std::vector<FieldElem> samples, Outcome expected);

/// Solution families used by the converse checks.
struct PowerFixture {
  SymForm form;
  AdditiveMap a;
  unsigned n;
};
/// phi = sub(t^2), alpha = 3/2, n = 2: F = alpha^4 prod(phi, phi), a = alpha phi.
PowerFixture power_converse_fixture();

struct ProductFixture {
  SymForm form;
  AdditiveMap a1;
  AdditiveMap a2;
};
/// phi1 = id, phi2 = sub(t+1), a1 = 2 phi1, a2 = phi2 / 2, F = prod(phi1, phi2),
/// so that f(1) = a1(1) a2(1) = 1.
ProductFixture product_converse_fixture();

}  // namespace fecheck
