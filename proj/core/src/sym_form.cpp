#include "fecheck/sym_form.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "fecheck/errors.hpp"

namespace fecheck {

namespace {

constexpr unsigned kMaxAtomProductArity = 20;

}  // namespace

SymForm SymForm::pullback(AdditiveMap a, unsigned arity) {
  if (arity == 0) throw ArityError("pull(a, k) needs k >= 1");
  return SymForm(std::make_shared<const Node>(Node{arity, form::PullbackProduct{std::move(a)}}));
}

SymForm SymForm::atom_product(std::vector<AdditiveMap> maps) {
  if (maps.empty()) throw ArityError("prod() needs at least one map");
  if (maps.size() > kMaxAtomProductArity) throw ArityError("prod() arity above supported maximum");
  auto k = static_cast<unsigned>(maps.size());
  return SymForm(std::make_shared<const Node>(Node{k, form::AtomProduct{std::move(maps)}}));
}

SymForm SymForm::power_blocks(SymForm inner, std::vector<unsigned> alphas) {
  if (alphas.size() != inner.arity()) {
    throw ArityError("blocks(F; ...) needs " + std::to_string(inner.arity()) + " exponents, got " +
                     std::to_string(alphas.size()));
  }
  unsigned total = std::accumulate(alphas.begin(), alphas.end(), 0U);
  if (total == 0) throw ArityError("blocks(F; ...) exponents must sum to at least 1");
  return SymForm(std::make_shared<const Node>(Node{total, form::PowerBlocks{std::move(inner), std::move(alphas)}}));
}

SymForm SymForm::sum(unsigned arity, std::vector<std::pair<FieldElem, SymForm>> terms) {
  if (arity == 0) throw ArityError("forms have arity >= 1");
  form::Sum s;
  for (auto& [c, f] : terms) {
    if (f.arity() != arity) {
      throw ArityError("sum of forms with arities " + std::to_string(arity) + " and " + std::to_string(f.arity()));
    }
    s.terms.push_back(form::Term{std::move(c), std::move(f)});
  }
  return SymForm(std::make_shared<const Node>(Node{arity, std::move(s)}));
}

unsigned SymForm::arity() const noexcept { return node_->arity; }

bool operator==(const SymForm& a, const SymForm& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

namespace {

FieldElem product(std::span<const FieldElem> xs) {
  FieldElem p(1);
  for (const auto& x : xs) p *= x;
  return p;
}

// (1/k!) * permanent of [maps[i](args[j])], via the subset recursion
// dp[S] = sum over ways to give maps 0..|S|-1 the columns in S.
FieldElem symmetrized_product(const std::vector<AdditiveMap>& maps, std::span<const FieldElem> args) {
  const std::size_t k = maps.size();
  // Columns with equal arguments share evaluations.
  std::vector<std::size_t> column_of(k);
  std::vector<std::size_t> distinct;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t found = distinct.size();
    for (std::size_t u = 0; u < distinct.size(); ++u) {
      if (args[distinct[u]] == args[j]) {
        found = u;
        break;
      }
    }
    if (found == distinct.size()) distinct.push_back(j);
    column_of[j] = found;
  }
  std::vector<std::vector<FieldElem>> values(k, std::vector<FieldElem>(distinct.size()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t u = 0; u < distinct.size(); ++u) values[i][u] = maps[i](args[distinct[u]]);
  }
  if (distinct.size() == 1) {
    FieldElem p(1);
    for (std::size_t i = 0; i < k; ++i) p *= values[i][0];
    return p;
  }
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<FieldElem> dp(std::size_t{full} + 1);
  std::vector<bool> reached(std::size_t{full} + 1, false);
  dp[0] = FieldElem(1);
  reached[0] = true;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!reached[mask] || dp[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (mask & bit) continue;
      const FieldElem& v = values[row][column_of[j]];
      if (v.is_zero()) continue;
      dp[mask | bit] += dp[mask] * v;
      reached[mask | bit] = true;
    }
  }
  return dp[full] / FieldElem(factorial(static_cast<unsigned>(k)));
}

// Average of inner(block products) over the ordered partitions of the N
// slots into consecutive blocks of sizes alphas. Each ordered partition
// stands for prod(alpha_i!) permutations of S_N, so the average equals the
// (1/N!) sum over all of S_N.
class BlockEnumerator {
 public:
  BlockEnumerator(const SymForm& inner, std::span<const unsigned> alphas, std::span<const FieldElem> args)
      : inner_(inner), alphas_(alphas), args_(args), used_(args.size(), false), blocks_(alphas.size()) {}

  FieldElem run() {
    count_ = 0;
    total_ = FieldElem();
    fill_block(0, 0, FieldElem(1), 0);
    return total_ / FieldElem(Rat(static_cast<long>(count_)));
  }

 private:
  // Chooses the members of block b in increasing slot order.
  void fill_block(std::size_t b, unsigned taken, FieldElem acc, std::size_t start) {
    if (b == alphas_.size()) {
      total_ += inner_(blocks_);
      ++count_;
      return;
    }
    if (taken == alphas_[b]) {
      blocks_[b] = std::move(acc);
      fill_block(b + 1, 0, FieldElem(1), 0);
      return;
    }
    for (std::size_t j = start; j < args_.size(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      fill_block(b, taken + 1, acc * args_[j], j + 1);
      used_[j] = false;
    }
  }

  const SymForm& inner_;
  std::span<const unsigned> alphas_;
  std::span<const FieldElem> args_;
  std::vector<bool> used_;
  std::vector<FieldElem> blocks_;
  FieldElem total_;
  unsigned long count_ = 0;
};

struct FormEvaluator {
  std::span<const FieldElem> args;

  FieldElem operator()(const form::PullbackProduct& p) const { return p.map(product(args)); }
  FieldElem operator()(const form::AtomProduct& p) const { return symmetrized_product(p.maps, args); }
  FieldElem operator()(const form::PowerBlocks& p) const { return BlockEnumerator(p.inner, p.alphas, args).run(); }
  FieldElem operator()(const form::Sum& s) const {
    FieldElem acc;
    for (const auto& term : s.terms) {
      if (term.coeff.is_zero()) continue;
      acc += term.coeff * term.form(args);
    }
    return acc;
  }
};

std::string join_maps(const std::vector<AdditiveMap>& maps) {
  std::string out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (i != 0) out += ", ";
    out += maps[i].to_string();
  }
  return out;
}

struct FormPrinter {
  unsigned arity;

  std::string operator()(const form::PullbackProduct& p) const {
    return "pull(" + p.map.to_string() + ", " + std::to_string(arity) + ")";
  }
  std::string operator()(const form::AtomProduct& p) const { return "prod(" + join_maps(p.maps) + ")"; }
  std::string operator()(const form::PowerBlocks& p) const {
    std::string out = "blocks(" + p.inner.to_string() + ";";
    for (std::size_t i = 0; i < p.alphas.size(); ++i) out += (i == 0 ? " " : ", ") + std::to_string(p.alphas[i]);
    return out + ")";
  }
  std::string operator()(const form::Sum& s) const {
    if (s.terms.empty()) return "zero(" + std::to_string(arity) + ")";
    std::string out = "sum(";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (i != 0) out += " + ";
      if (!s.terms[i].coeff.is_one()) out += to_operand_string(s.terms[i].coeff) + "*";
      out += s.terms[i].form.to_string();
    }
    return out + ")";
  }
};

}  // namespace

FieldElem SymForm::operator()(std::span<const FieldElem> args) const {
  if (args.size() != arity()) {
    throw ArityError("form of arity " + std::to_string(arity()) + " applied to " + std::to_string(args.size()) +
                     " arguments");
  }
  return std::visit(FormEvaluator{args}, node_->body);
}

FieldElem eval_form(const SymForm& a, std::span<const FieldElem> args) { return a(args); }

std::string SymForm::to_string() const { return std::visit(FormPrinter{arity()}, node_->body); }

}  // namespace fecheck
