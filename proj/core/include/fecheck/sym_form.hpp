#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/field_elem.hpp"

namespace fecheck {

/// Symmetric k-additive form F^k -> F, described as an immutable AST and
/// evaluated exactly. Every constructor below yields a symmetric,
/// multi-additive function.
class SymForm {
 public:
  struct Node;

  /// A(x1..xk) = a(x1 * ... * xk).
  static SymForm pullback(AdditiveMap a, unsigned arity);
  /// A(x1..xk) = (1/k!) sum over S_k of prod_i a_i(x_sigma(i)).
  static SymForm atom_product(std::vector<AdditiveMap> maps);
  /// Arity sum(alphas); trace(x) = inner(x^alpha_1, ..., x^alpha_n).
  static SymForm power_blocks(SymForm inner, std::vector<unsigned> alphas);
  /// sum_i c_i F_i, every F_i of the given arity. An empty list is the zero form.
  static SymForm sum(unsigned arity, std::vector<std::pair<FieldElem, SymForm>> terms);

  unsigned arity() const noexcept;
  const Node& node() const noexcept { return *node_; }

  /// Throws ArityError when args.size() != arity().
  FieldElem operator()(std::span<const FieldElem> args) const;

  std::string to_string() const;

  friend bool operator==(const SymForm& a, const SymForm& b);

 private:
  explicit SymForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace form {

struct PullbackProduct {
  AdditiveMap map;
  friend bool operator==(const PullbackProduct&, const PullbackProduct&) = default;
};

struct AtomProduct {
  std::vector<AdditiveMap> maps;
  friend bool operator==(const AtomProduct&, const AtomProduct&) = default;
};

struct PowerBlocks {
  SymForm inner;
  std::vector<unsigned> alphas;
  friend bool operator==(const PowerBlocks&, const PowerBlocks&) = default;
};

struct Term {
  FieldElem coeff;
  SymForm form;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Sum {
  std::vector<Term> terms;
  friend bool operator==(const Sum&, const Sum&) = default;
};

}  // namespace form

struct SymForm::Node {
  unsigned arity;
  std::variant<form::PullbackProduct, form::AtomProduct, form::PowerBlocks, form::Sum> body;
  friend bool operator==(const Node&, const Node&) = default;
};

FieldElem eval_form(const SymForm& a, std::span<const FieldElem> args);

}  // namespace fecheck
