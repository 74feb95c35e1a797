#include "fecheck/multiadd.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fecheck/errors.hpp"

namespace fecheck {

UnaryFn trace(const SymForm& a) { return UnaryFn::trace(a); }

UnaryFn delta(const UnaryFn& f, std::vector<FieldElem> ys) { return UnaryFn::difference(f, std::move(ys)); }

UnaryFn delta_mult(const UnaryFn& g, std::vector<FieldElem> ys) {
  return UnaryFn::mult_difference(g, std::move(ys));
}

SymForm symmetrize_powers(const SymForm& f, std::vector<unsigned> alphas) {
  return SymForm::power_blocks(f, std::move(alphas));
}

PolarizedForm::PolarizedForm(UnaryFn f, unsigned degree, FieldElem base)
    : f_(std::move(f)), degree_(degree), base_(std::move(base)), scale_(inv(FieldElem(factorial(degree)))) {}

FieldElem PolarizedForm::operator()(std::span<const FieldElem> ys) const { return at_base(base_, ys); }

FieldElem PolarizedForm::at_base(const FieldElem& base, std::span<const FieldElem> ys) const {
  if (ys.size() != degree_) {
    throw ArityError("polarized form of arity " + std::to_string(degree_) + " applied to " +
                     std::to_string(ys.size()) + " arguments");
  }
  return scale_ * delta(f_, std::vector<FieldElem>(ys.begin(), ys.end()))(base);
}

std::vector<std::vector<FieldElem>> sample_tuples(const std::vector<FieldElem>& samples, unsigned k) {
  std::vector<std::vector<FieldElem>> out;
  if (samples.empty() || k == 0) return out;
  const std::size_t n = samples.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<FieldElem> tuple;
    tuple.reserve(k);
    for (unsigned j = 0; j < k; ++j) tuple.push_back(samples[(start + j) % n]);
    out.push_back(std::move(tuple));
  }
  if (k >= 2) {
    std::vector<FieldElem> repeated(k, samples[0]);
    repeated[k - 1] = samples[n > 1 ? 1 : 0];
    out.push_back(std::move(repeated));
  }
  return out;
}

Polarization polarize(const UnaryFn& f, unsigned n, const std::vector<FieldElem>& probes) {
  if (probes.empty()) throw std::invalid_argument("polarize: no probes");
  if (n == 0) throw std::invalid_argument("polarize: degree must be positive");
  Polarization out{PolarizedForm(f, n, probes.front()), {}};
  out.report.probes = probes.size();
  // Increments start one past the base so x0 is not reused as y1.
  std::vector<FieldElem> rotated(probes.begin() + 1, probes.end());
  rotated.push_back(probes.front());
  for (const auto& ys : sample_tuples(rotated, n)) {
    const FieldElem reference = out.form(ys);
    ++out.report.tuples_checked;
    for (std::size_t p = 1; p < probes.size(); ++p) {
      FieldElem value = out.form.at_base(probes[p], ys);
      if (value != reference) {
        std::vector<FieldElem> inputs = ys;
        inputs.push_back(probes[p]);
        out.report.consistent = false;
        out.report.witness = Witness{std::move(inputs), reference.to_string(), value.to_string()};
        return out;
      }
    }
  }
  return out;
}

Verdict check_mainfact(const SymForm& a, const std::vector<FieldElem>& samples) {
  if (samples.empty()) throw std::invalid_argument("check_mainfact: empty sample set");
  const UnaryFn tr = trace(a);
  for (const auto& x : samples) {
    FieldElem v = tr(x);
    if (!v.is_zero()) {
      return Verdict::precondition("trace is nonzero at " + x.to_string() + " (value " + v.to_string() +
                                   "); uniqueness check skipped");
    }
  }
  std::size_t checked = 0;
  for (const auto& tuple : sample_tuples(samples, a.arity())) {
    FieldElem v = a(tuple);
    ++checked;
    if (!v.is_zero()) return Verdict::fail(Witness{tuple, v.to_string(), "0"}, "form nonzero although trace vanishes");
  }
  return Verdict::pass(checked, "trace vanishes on samples and so does the form");
}

Verdict check_permutation_invariance(const SymForm& a, const std::vector<FieldElem>& samples) {
  if (samples.empty()) throw std::invalid_argument("check_permutation_invariance: empty sample set");
  const unsigned k = a.arity();
  std::size_t checked = 0;
  for (const auto& tuple : sample_tuples(samples, k)) {
    const FieldElem reference = a(tuple);
    auto check = [&](const std::vector<FieldElem>& permuted) -> std::optional<Verdict> {
      ++checked;
      FieldElem v = a(permuted);
      if (v != reference) return Verdict::fail(Witness{permuted, v.to_string(), reference.to_string()}, "symmetry");
      return std::nullopt;
    };
    if (k <= 4) {
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<FieldElem> permuted;
        for (std::size_t i : perm) permuted.push_back(tuple[i]);
        if (auto bad = check(permuted)) return *bad;
      }
    } else {
      for (unsigned i = 0; i + 1 < k; ++i) {
        std::vector<FieldElem> permuted = tuple;
        std::swap(permuted[i], permuted[i + 1]);
        if (auto bad = check(permuted)) return *bad;
      }
    }
  }
  return Verdict::pass(checked, "symmetry");
}

Verdict check_slot_additivity(const SymForm& a, const std::vector<FieldElem>& samples) {
  if (samples.empty()) throw std::invalid_argument("check_slot_additivity: empty sample set");
  const unsigned k = a.arity();
  const std::size_t n = samples.size();
  std::size_t checked = 0;
  const auto tuples = sample_tuples(samples, k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& tuple = tuples[t];
    const FieldElem& extra = samples[(t + k) % n];
    for (unsigned slot = 0; slot < k; ++slot) {
      std::vector<FieldElem> joined = tuple;
      std::vector<FieldElem> alone = tuple;
      joined[slot] = tuple[slot] + extra;
      alone[slot] = extra;
      FieldElem lhs = a(joined);
      FieldElem rhs = a(tuple) + a(alone);
      ++checked;
      if (lhs != rhs) {
        return Verdict::fail(Witness{tuple, lhs.to_string(), rhs.to_string()},
                             "additivity in slot " + std::to_string(slot + 1));
      }
    }
  }
  return Verdict::pass(checked, "slot additivity");
}

}  // namespace fecheck
