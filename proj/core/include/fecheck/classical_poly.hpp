#pragma once

#include <string>
#include <vector>

#include "fecheck/field_elem.hpp"
#include "fecheck/poly.hpp"

namespace fecheck {

/// Classical polynomial P(x) = sum_l alpha_l x^l with coefficients in the
/// field, lowest degree first, no trailing zeros.
class ClassicalPoly {
 public:
  ClassicalPoly() = default;
  explicit ClassicalPoly(std::vector<FieldElem> coefficients);

  /// x^k.
  static ClassicalPoly monomial(unsigned k, FieldElem c = FieldElem(1));

  const std::vector<FieldElem>& coefficients() const noexcept { return coeffs_; }
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool has_rational_coefficients() const;

  FieldElem operator()(const FieldElem& x) const;

  /// `poly[a0, a1, ..., ak]`.
  std::string to_string() const;

  friend bool operator==(const ClassicalPoly&, const ClassicalPoly&) = default;

 private:
  std::vector<FieldElem> coeffs_;
};

/// Horner evaluation.
FieldElem poly_eval(const ClassicalPoly& p, const FieldElem& x);

/// Formal derivative.
ClassicalPoly poly_derivative(const ClassicalPoly& p);

}  // namespace fecheck
