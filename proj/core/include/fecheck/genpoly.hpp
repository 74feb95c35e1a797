#pragma once

#include <optional>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/classical_poly.hpp"
#include "fecheck/unary_fn.hpp"
#include "fecheck/verdict.hpp"

namespace fecheck {

/// x -> f(P(x)).
UnaryFn compose_fn(const UnaryFn& f, const ClassicalPoly& p);

/// Splits g into pieces homogeneous under rational scaling, assuming
/// q -> g(q x) is a polynomial of degree <= N in q. Per point x this solves
/// the Vandermonde system g(r_i x) = sum_l r_i^l c_l(x) at the nodes r_i.
class HomogeneousComponents {
 public:
  /// Nodes default to 1, 2, ..., N+1. Throws SingularSystem on repeated
  /// nodes and std::invalid_argument on a zero node or a count other than N+1.
  HomogeneousComponents(UnaryFn g, unsigned degree_bound, std::vector<Rat> nodes = {});

  unsigned degree_bound() const noexcept { return bound_; }
  const std::vector<Rat>& nodes() const noexcept { return nodes_; }

  /// c_0(x), ..., c_N(x).
  std::vector<FieldElem> operator()(const FieldElem& x) const;
  /// Evaluator for the degree-l piece alone.
  FieldFn component(unsigned l) const;

 private:
  UnaryFn g_;
  unsigned bound_;
  std::vector<Rat> nodes_;
  std::vector<std::vector<Rat>> inverse_;  // inverse Vandermonde, row l gives c_l
};

/// The N+1 component evaluators of g.
std::vector<FieldFn> homogeneous_components(const UnaryFn& g, unsigned degree_bound, std::vector<Rat> nodes = {});

/// PASS iff at every base sample (a) n+1 differences of f vanish and (b) n
/// equal differences give n! f(y). Increments are taken cyclically from the
/// samples, starting after the base point.
Verdict is_generalized_monomial_of_degree(const UnaryFn& f, unsigned n, const std::vector<FieldElem>& samples);

/// Least n <= nmax accepted by is_generalized_monomial_of_degree.
std::optional<unsigned> monomial_degree(const UnaryFn& f, unsigned nmax, const std::vector<FieldElem>& samples);

}  // namespace fecheck
