#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fecheck/field_elem.hpp"

namespace fecheck {

/// Ten fixed elements of varied shape: polynomials, reciprocals, rational
/// constants and proper fractions. All nonzero.
std::vector<FieldElem> structured_samples();

/// Draws rational functions with numerator and denominator degree <= 3 and
/// integer coefficients in [-9, 9]. Only the raw engine output is used, so
/// the stream is identical across standard libraries.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : engine_(seed) {}

  FieldElem next();
  FieldElem next_nonzero();
  std::vector<FieldElem> take(std::size_t count, bool nonzero = true);

 private:
  long coefficient();
  Poly polynomial();
  std::mt19937_64 engine_;
};

std::vector<FieldElem> random_samples(std::uint64_t seed, std::size_t count);

/// structured_samples() followed by `count` seeded random ones.
std::vector<FieldElem> mixed_samples(std::uint64_t seed, std::size_t count);

}  // namespace fecheck
