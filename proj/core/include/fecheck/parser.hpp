#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "fecheck/atoms.hpp"
#include "fecheck/classical_poly.hpp"
#include "fecheck/field_elem.hpp"
#include "fecheck/sym_form.hpp"
#include "fecheck/unary_fn.hpp"

namespace fecheck {

using Expression = std::variant<FieldElem, AdditiveMap, SymForm, ClassicalPoly, UnaryFn>;

/// Names introduced by `let` in scenario files.
using Bindings = std::map<std::string, Expression, std::less<>>;

/// Parses one expression. Errors (syntax, arity, unknown names, bad operand
/// kinds) are raised as ParseError with a 1-based position; `first_line` and
/// `first_column` locate the text inside a larger file.
///
///   atoms      id  der(u)  sub(r)  comp(m1, m2)  lin(c1*m1 + m2)
///   forms      pull(a, k)  prod(a1, .., ak)  blocks(F; 2, 1)  sum(c*F + G)  zero(k)
///   functions  x  x^k  trace(F)  at(f, P)  polyof(P, f)  diag(F; e1, ..)
///              delta(f; y1, ..)  mdelta(f; y1, ..)  and + - * / ^
///   other      poly[a0, a1, ..]  rank(K, [xs], [ys])  hod(D, nmax)
/// Literals are integers and `t`; `-` binds tighter than `*`, `^` tighter than `-`.
Expression parse_expression(std::string_view src, const Bindings& bindings = {}, std::size_t first_line = 1,
                            std::size_t first_column = 1);

FieldElem parse_field_elem(std::string_view src);
AdditiveMap parse_map(std::string_view src);
SymForm parse_form(std::string_view src);
ClassicalPoly parse_poly(std::string_view src);

/// Reads an expression as a one-variable function: constants, maps and
/// classical polynomials are lifted; forms are rejected.
UnaryFn parse_function(std::string_view src, const Bindings& bindings = {}, std::size_t first_line = 1,
                       std::size_t first_column = 1);

/// Lifts a parsed expression to a function (ParseError for a form).
UnaryFn as_function(const Expression& e);

std::string print(const Expression& e);

}  // namespace fecheck
