#include <benchmark/benchmark.h>

#include "fecheck/genpoly.hpp"
#include "fecheck/matrix_rank.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/parser.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/structure.hpp"

namespace {

using namespace fecheck;

void field_add_mul(benchmark::State& state) {
  const auto xs = random_samples(1, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const FieldElem& a = xs[i % xs.size()];
    const FieldElem& b = xs[(i + 1) % xs.size()];
    benchmark::DoNotOptimize(a * b + b);
    ++i;
  }
}
BENCHMARK(field_add_mul);

void poly_gcd(benchmark::State& state) {
  const auto xs = random_samples(2, 2 * state.range(0));
  Poly a = Poly::constant(1), b = Poly::constant(1), common = Poly::constant(1);
  for (long i = 0; i < state.range(0); ++i) {
    common *= xs[static_cast<std::size_t>(i)].num() + Poly::t();
    a *= xs[static_cast<std::size_t>(state.range(0) + i)].num() + Poly::constant(1);
    b *= xs[static_cast<std::size_t>(i)].den() + Poly::constant(2);
  }
  a *= common;
  b *= common;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(poly_gcd)->Arg(2)->Arg(4)->Arg(8);

void atom_product_eval(benchmark::State& state) {
  std::vector<AdditiveMap> maps;
  for (long i = 0; i < state.range(0); ++i) maps.push_back(i % 2 ? parse_map("sub(t+1)") : parse_map("der(1)"));
  const SymForm f = SymForm::atom_product(maps);
  const auto args = random_samples(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f(args));
}
BENCHMARK(atom_product_eval)->DenseRange(2, 6, 2);

void power_blocks_eval(benchmark::State& state) {
  const SymForm f = symmetrize_powers(parse_form("prod(der(1), id)"), {static_cast<unsigned>(state.range(0)), 2});
  const auto args = random_samples(4, f.arity());
  for (auto _ : state) benchmark::DoNotOptimize(f(args));
}
BENCHMARK(power_blocks_eval)->DenseRange(1, 4);

void polarization_difference(benchmark::State& state) {
  const UnaryFn tr = trace(parse_form("prod(der(1), der(1), sub(t+1))"));
  const auto ys = random_samples(5, static_cast<std::size_t>(state.range(0)));
  const FieldElem x = FieldElem::t();
  for (auto _ : state) benchmark::DoNotOptimize(delta(tr, ys)(x));
}
BENCHMARK(polarization_difference)->DenseRange(3, 5);

void kernel_rank_grid(benchmark::State& state) {
  const auto xs = random_samples(6, static_cast<std::size_t>(state.range(0)));
  const Kernel k = product_kernel(parse_map("comp(der(1), der(1))"));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_rank(k, xs, xs));
}
BENCHMARK(kernel_rank_grid)->Arg(4)->Arg(8);

void degree_search(benchmark::State& state) {
  const UnaryFn f = compose_fn(trace(parse_form("prod(der(1), der(1))")), ClassicalPoly::monomial(2));
  const auto samples = structured_samples();
  for (auto _ : state) benchmark::DoNotOptimize(monomial_degree(f, 5, samples));
}
BENCHMARK(degree_search)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
