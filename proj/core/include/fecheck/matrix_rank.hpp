#pragma once

#include <cstddef>
#include <vector>

#include "fecheck/field_elem.hpp"

namespace fecheck {

using FieldMatrix = std::vector<std::vector<FieldElem>>;

/// Rank over Q(t). Each row is cleared of denominators, then fraction-free
/// (Bareiss) elimination runs over Q[t] with exact polynomial division.
std::size_t rank_over_field(const FieldMatrix& m);

/// Rank of the rows as vectors over the rational constants: after a common
/// denominator every entry is expanded into its t-coefficients.
std::size_t rank_over_rationals(const FieldMatrix& m);

/// Rank of a matrix of rationals by Gauss-Jordan elimination.
std::size_t rank_rational(std::vector<std::vector<Rat>> m);

}  // namespace fecheck
