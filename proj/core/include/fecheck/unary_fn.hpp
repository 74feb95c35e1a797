#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fecheck/atoms.hpp"
#include "fecheck/classical_poly.hpp"
#include "fecheck/field_elem.hpp"
#include "fecheck/sym_form.hpp"

namespace fecheck {

/// Evaluable one-variable function F -> F built from traces, atoms, classical
/// polynomials and arithmetic. Immutable; copies share nodes.
class UnaryFn {
 public:
  struct Node;

  static UnaryFn trace(SymForm form);
  static UnaryFn atom(AdditiveMap map);
  /// x -> P(inner(x)).
  static UnaryFn poly_of(ClassicalPoly poly, UnaryFn inner);
  /// An empty product is the constant 1, a single factor is returned as is.
  static UnaryFn product(std::vector<UnaryFn> factors);
  static UnaryFn power(UnaryFn base, long exponent);
  static UnaryFn scaled(FieldElem coeff, UnaryFn inner);
  /// An empty sum is the constant 0, a single term is returned as is.
  static UnaryFn sum(std::vector<UnaryFn> terms);
  static UnaryFn quotient(UnaryFn num, UnaryFn den);
  static UnaryFn constant(FieldElem value);
  /// x -> x^k.
  static UnaryFn arg_power(long exponent);
  /// x -> outer(P(x)).
  static UnaryFn composed(UnaryFn outer, ClassicalPoly poly);
  /// x -> F(x^e1, ..., x^en).
  static UnaryFn diagonal(SymForm form, std::vector<unsigned> exponents);
  /// Iterated additive difference Delta_{y1..ym} inner.
  static UnaryFn difference(UnaryFn inner, std::vector<FieldElem> increments);
  /// Iterated multiplicative difference, x -> inner(x y) - inner(x) per step.
  static UnaryFn mult_difference(UnaryFn inner, std::vector<FieldElem> increments);

  const Node& node() const noexcept { return *node_; }

  /// Throws EvaluationError (e.g. DivisionByZero) where undefined.
  FieldElem operator()(const FieldElem& x) const;

  std::string to_string() const;

  friend bool operator==(const UnaryFn& a, const UnaryFn& b);

 private:
  explicit UnaryFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace fn {

struct Trace {
  SymForm form;
  friend bool operator==(const Trace&, const Trace&) = default;
};
struct Atom {
  AdditiveMap map;
  friend bool operator==(const Atom&, const Atom&) = default;
};
struct PolyOf {
  ClassicalPoly poly;
  UnaryFn inner;
  friend bool operator==(const PolyOf&, const PolyOf&) = default;
};
struct Product {
  std::vector<UnaryFn> factors;
  friend bool operator==(const Product&, const Product&) = default;
};
struct Power {
  UnaryFn base;
  long exponent;
  friend bool operator==(const Power&, const Power&) = default;
};
struct Scaled {
  FieldElem coeff;
  UnaryFn inner;
  friend bool operator==(const Scaled&, const Scaled&) = default;
};
struct Sum {
  std::vector<UnaryFn> terms;
  friend bool operator==(const Sum&, const Sum&) = default;
};
struct Quotient {
  UnaryFn num;
  UnaryFn den;
  friend bool operator==(const Quotient&, const Quotient&) = default;
};
struct Const {
  FieldElem value;
  friend bool operator==(const Const&, const Const&) = default;
};
struct ArgPower {
  long exponent;
  friend bool operator==(const ArgPower&, const ArgPower&) = default;
};
struct Composed {
  UnaryFn outer;
  ClassicalPoly poly;
  friend bool operator==(const Composed&, const Composed&) = default;
};
struct Diagonal {
  SymForm form;
  std::vector<unsigned> exponents;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};
struct Difference {
  UnaryFn inner;
  std::vector<FieldElem> increments;
  friend bool operator==(const Difference&, const Difference&) = default;
};
struct MultDifference {
  UnaryFn inner;
  std::vector<FieldElem> increments;
  friend bool operator==(const MultDifference&, const MultDifference&) = default;
};

}  // namespace fn

struct UnaryFn::Node {
  std::variant<fn::Trace, fn::Atom, fn::PolyOf, fn::Product, fn::Power, fn::Scaled, fn::Sum, fn::Quotient, fn::Const,
               fn::ArgPower, fn::Composed, fn::Diagonal, fn::Difference, fn::MultDifference>
      body;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Structural conversion of a polynomial-in-x expression (x^k, constants,
/// sums, products, scalings, nonnegative powers) to a ClassicalPoly.
std::optional<ClassicalPoly> as_classical_poly(const UnaryFn& f);

}  // namespace fecheck
