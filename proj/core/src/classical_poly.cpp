#include "fecheck/classical_poly.hpp"

#include <utility>

namespace fecheck {

ClassicalPoly::ClassicalPoly(std::vector<FieldElem> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ClassicalPoly ClassicalPoly::monomial(unsigned k, FieldElem c) {
  std::vector<FieldElem> v(k + 1);
  v[k] = std::move(c);
  return ClassicalPoly(std::move(v));
}

Degree ClassicalPoly::degree() const noexcept {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(coeffs_.size() - 1);
}

bool ClassicalPoly::has_rational_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

FieldElem ClassicalPoly::operator()(const FieldElem& x) const {
  FieldElem acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ClassicalPoly::to_string() const {
  std::string out = "poly[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + "]";
}

FieldElem poly_eval(const ClassicalPoly& p, const FieldElem& x) { return p(x); }

ClassicalPoly poly_derivative(const ClassicalPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<FieldElem> d;
  d.reserve(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
  return ClassicalPoly(std::move(d));
}

}  // namespace fecheck
