#pragma once

#include <gmpxx.h>

#include <string>

namespace fecheck {

/// Exact rational number. GMP keeps it reduced with a positive denominator.
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);

bool is_integer(const Rat& q);

/// `n` or `n/d`.
std::string to_string(const Rat& q);

/// n! as a rational, n small.
Rat factorial(unsigned n);

/// k! / (l_1! ... l_m!) for l summing to k.
Rat multinomial(unsigned k, const unsigned* parts, std::size_t count);

}  // namespace fecheck
