#include "fecheck/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "fecheck/errors.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/unary_fn.hpp"

namespace fecheck {

KernelGrid evaluate_grid(const Kernel& k, std::vector<FieldElem> xs, std::vector<FieldElem> ys) {
  if (xs.empty() || ys.empty()) throw std::invalid_argument("kernel grid must be nonempty");
  KernelGrid grid{std::move(xs), std::move(ys), {}};
  grid.values.reserve(grid.xs.size());
  for (const auto& x : grid.xs) {
    std::vector<FieldElem> row;
    row.reserve(grid.ys.size());
    for (const auto& y : grid.ys) row.push_back(k(x, y));
    grid.values.push_back(std::move(row));
  }
  return grid;
}

std::size_t kernel_rank(const Kernel& k, const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  return rank_over_field(evaluate_grid(k, xs, ys).values);
}

Kernel product_kernel(const AdditiveMap& a) {
  return [a](const FieldElem& x, const FieldElem& y) { return a(x * y); };
}

Verdict certify_independent(const std::vector<AdditiveMap>& maps, const std::vector<FieldElem>& xs,
                            Scalars scalars) {
  if (maps.empty()) return Verdict::precondition("no maps given");
  if (xs.size() < maps.size()) {
    return Verdict::precondition("need at least " + std::to_string(maps.size()) + " points, got " +
                                 std::to_string(xs.size()));
  }
  FieldMatrix values;
  for (const auto& m : maps) {
    std::vector<FieldElem> row;
    for (const auto& x : xs) row.push_back(m(x));
    values.push_back(std::move(row));
  }
  const std::size_t rank = scalars == Scalars::field ? rank_over_field(values) : rank_over_rationals(values);
  const std::string over = scalars == Scalars::field ? " over Q(t)" : " over Q";
  if (rank == maps.size()) return Verdict::pass(maps.size() * xs.size(), "full rank" + over);
  return Verdict::fail(Witness{xs, "rank " + std::to_string(rank), "rank " + std::to_string(maps.size())},
                       "dependent" + over);
}

HodReport hod_degree(const AdditiveMap& d, unsigned nmax, const std::vector<FieldElem>& samples, std::uint64_t seed,
                     std::size_t pool_size) {
  HodReport report{std::nullopt, Verdict::pass(0), seed, {}};
  // Constants lie in the kernel of every derivation, so they would hide the order.
  SampleGenerator draw(seed);
  while (report.increments.size() < pool_size) {
    FieldElem y = draw.next_nonzero();
    if (!y.is_constant()) report.increments.push_back(std::move(y));
  }
  if (samples.empty()) throw std::invalid_argument("hod_degree: empty sample set");
  if (report.increments.empty()) throw std::invalid_argument("hod_degree: empty increment pool");
  for (const auto& x : samples) {
    if (x.is_zero()) throw std::invalid_argument("hod_degree: samples must be nonzero");
  }
  const FieldElem at_one = d(FieldElem(1));
  if (!at_one.is_zero()) {
    report.verdict = Verdict::precondition("D(1) = " + at_one.to_string() + " is nonzero");
    return report;
  }
  const UnaryFn g = UnaryFn::quotient(UnaryFn::atom(d), UnaryFn::arg_power(1));
  const auto& pool = report.increments;
  std::size_t checked = 0;
  for (unsigned n = 0; n <= nmax; ++n) {
    bool vanishes = true;
    for (std::size_t i = 0; i < samples.size() && vanishes; ++i) {
      std::vector<FieldElem> ys;
      for (unsigned j = 0; j <= n; ++j) ys.push_back(pool[(i + j) % pool.size()]);
      ++checked;
      if (!UnaryFn::mult_difference(g, std::move(ys))(samples[i]).is_zero()) vanishes = false;
    }
    if (vanishes) {
      report.degree = n;
      report.verdict = Verdict::pass(checked, "order " + std::to_string(n + 1) + " differences of D/id vanish");
      return report;
    }
  }
  report.verdict = Verdict::fail(Witness{samples, "nonzero", "0"},
                                 "no order up to " + std::to_string(nmax) + " found");
  return report;
}

DecomposabilityReport pullback_decomposable(const AdditiveMap& a, unsigned k, const std::vector<FieldElem>& xs,
                                            const std::vector<FieldElem>& ys) {
  if (k < 2) throw std::invalid_argument("pullback_decomposable: k must be at least 2");
  if (xs.empty() || ys.empty()) throw std::invalid_argument("pullback_decomposable: empty grid");
  std::vector<FieldElem> pool = xs;
  pool.insert(pool.end(), ys.begin(), ys.end());
  for (const auto& p : pool) {
    if (p.is_zero()) throw std::invalid_argument("pullback_decomposable: grid elements must be nonzero");
  }
  std::vector<FieldElem> tails;
  if (k == 2) {
    tails.emplace_back(1);
  } else {
    const std::size_t count = std::min<std::size_t>(3, pool.size());
    for (std::size_t s = 0; s < count; ++s) {
      FieldElem m(1);
      for (unsigned j = 0; j + 2 < k; ++j) m *= pool[(s + j) % pool.size()];
      tails.push_back(std::move(m));
    }
  }
  DecomposabilityReport report{Verdict::pass(0), 0, {}};
  for (const auto& m : tails) {
    Kernel slice = [&a, m](const FieldElem& x, const FieldElem& y) { return a(x * y * m); };
    const std::size_t r = kernel_rank(slice, xs, ys);
    report.ranks.push_back(r);
    report.max_rank = std::max(report.max_rank, r);
  }
  const std::size_t full = std::min(xs.size(), ys.size());
  const std::size_t cells = tails.size() * xs.size() * ys.size();
  if (report.max_rank < full) {
    report.verdict = Verdict::pass(cells, "max rank " + std::to_string(report.max_rank) + " on a " +
                                              std::to_string(xs.size()) + "x" + std::to_string(ys.size()) + " grid");
  } else {
    report.verdict = Verdict::fail(Witness{xs, "rank " + std::to_string(report.max_rank), "< " + std::to_string(full)},
                                   "no finite-rank evidence: the grid is saturated");
  }
  return report;
}

}  // namespace fecheck
