#include "fecheck/sampling.hpp"

namespace fecheck {

namespace {

FieldElem ratfn(std::initializer_list<long> num, std::initializer_list<long> den) {
  std::vector<Rat> n, d;
  for (long c : num) n.emplace_back(c);
  for (long c : den) d.emplace_back(c);
  return FieldElem(Poly(std::move(n)), Poly(std::move(d)));
}

}  // namespace

std::vector<FieldElem> structured_samples() {
  return {
      FieldElem::t(),
      ratfn({1, 1}, {1}),                   // t+1
      ratfn({0, 0, 1}, {1}),                // t^2
      FieldElem(2),
      ratfn({1}, {0, 1}),                   // 1/t
      ratfn({1, 0, 1}, {-3, 2}),            // (t^2+1)/(2t-3)
      FieldElem(make_rat(3, 7)),
      ratfn({0, -1, 0, 1}, {1}),            // t^3-t
      ratfn({1}, {1, 1}),                   // 1/(t+1)
      ratfn({-1, 2}, {1, 0, 1}),            // (2t-1)/(t^2+1)
  };
}

long SampleGenerator::coefficient() { return static_cast<long>(engine_() % 19) - 9; }

Poly SampleGenerator::polynomial() {
  const std::size_t degree = engine_() % 4;
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i <= degree; ++i) coeffs.emplace_back(coefficient());
  return Poly(std::move(coeffs));
}

FieldElem SampleGenerator::next() {
  Poly num = polynomial();
  Poly den = polynomial();
  while (den.is_zero()) den = polynomial();
  return FieldElem(std::move(num), std::move(den));
}

FieldElem SampleGenerator::next_nonzero() {
  FieldElem x = next();
  while (x.is_zero()) x = next();
  return x;
}

std::vector<FieldElem> SampleGenerator::take(std::size_t count, bool nonzero) {
  std::vector<FieldElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(nonzero ? next_nonzero() : next());
  return out;
}

std::vector<FieldElem> random_samples(std::uint64_t seed, std::size_t count) {
  return SampleGenerator(seed).take(count);
}

std::vector<FieldElem> mixed_samples(std::uint64_t seed, std::size_t count) {
  auto out = structured_samples();
  auto extra = random_samples(seed, count);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace fecheck
