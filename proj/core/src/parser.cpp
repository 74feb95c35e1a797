#include "fecheck/parser.hpp"

#include <exception>
#include <optional>
#include <utility>
#include <vector>

#include "fecheck/errors.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/structure.hpp"
#include "lexer.hpp"

namespace fecheck {

namespace {

using detail::Token;
using detail::TokenKind;

struct MapTerms {
  std::vector<std::pair<FieldElem, AdditiveMap>> terms;
};
struct FormTerms {
  unsigned arity;
  std::vector<std::pair<FieldElem, SymForm>> terms;
};
struct List {
  std::vector<FieldElem> items;
};

struct Value {
  std::variant<FieldElem, AdditiveMap, MapTerms, SymForm, FormTerms, ClassicalPoly, UnaryFn, List> v;
  // Set while a +/- or * chain is being built without parentheses, so the
  // chain collects into one Sum or Product node.
  bool open_sum = false;
  bool open_product = false;
};

template <class T>
const T* get(const Value& v) {
  return std::get_if<T>(&v.v);
}

bool is_mapish(const Value& v) { return get<AdditiveMap>(v) || get<MapTerms>(v); }
bool is_formish(const Value& v) { return get<SymForm>(v) || get<FormTerms>(v); }

MapTerms map_terms(const Value& v) {
  if (const auto* m = get<AdditiveMap>(v)) return MapTerms{{{FieldElem(1), *m}}};
  return *get<MapTerms>(v);
}

FormTerms form_terms(const Value& v) {
  if (const auto* f = get<SymForm>(v)) return FormTerms{f->arity(), {{FieldElem(1), *f}}};
  return *get<FormTerms>(v);
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Bindings& bindings) : tokens_(std::move(tokens)), bindings_(bindings) {}

  Value parse_all() {
    Value v = expression();
    if (peek().kind != TokenKind::end) fail_at(peek(), "unexpected " + detail::describe(peek().kind));
    return v;
  }

  [[noreturn]] static void fail_at(const Token& tok, const std::string& message) {
    throw ParseError(message, tok.line, tok.column);
  }

  // Conversions between operand kinds, reported at `where`.
  static UnaryFn to_fn(const Value& v, const Token& where) {
    if (const auto* c = get<FieldElem>(v)) return UnaryFn::constant(*c);
    if (const auto* m = get<AdditiveMap>(v)) return UnaryFn::atom(*m);
    if (const auto* ts = get<MapTerms>(v)) {
      std::vector<UnaryFn> parts;
      for (const auto& [c, m] : ts->terms) {
        parts.push_back(c.is_one() ? UnaryFn::atom(m) : UnaryFn::scaled(c, UnaryFn::atom(m)));
      }
      return parts.size() == 1 ? parts.front() : UnaryFn::sum(std::move(parts));
    }
    if (const auto* p = get<ClassicalPoly>(v)) return UnaryFn::poly_of(*p, UnaryFn::arg_power(1));
    if (const auto* f = get<UnaryFn>(v)) return *f;
    if (is_formish(v)) fail_at(where, "a form is not a function of one variable; use trace(...)");
    fail_at(where, "a list is not a function");
  }

  static FieldElem to_const(const Value& v, const Token& where) {
    if (const auto* c = get<FieldElem>(v)) return *c;
    fail_at(where, "expected a constant");
  }

  static AdditiveMap to_map(const Value& v, const Token& where) {
    if (const auto* m = get<AdditiveMap>(v)) return *m;
    if (const auto* ts = get<MapTerms>(v)) return AdditiveMap::lincomb(ts->terms);
    fail_at(where, "expected an additive map");
  }

  static SymForm to_form(const Value& v, const Token& where) {
    if (const auto* f = get<SymForm>(v)) return *f;
    if (const auto* ts = get<FormTerms>(v)) return SymForm::sum(ts->arity, ts->terms);
    fail_at(where, "expected a symmetric form");
  }

  static long to_integer(const Value& v, const Token& where) {
    const FieldElem c = to_const(v, where);
    const auto q = c.as_constant();
    if (!q || !is_integer(*q) || !q->get_num().fits_slong_p()) fail_at(where, "expected an integer");
    return q->get_num().get_si();
  }

  static unsigned to_count(const Value& v, const Token& where) {
    const long n = to_integer(v, where);
    if (n < 0) fail_at(where, "expected a nonnegative integer");
    return static_cast<unsigned>(n);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(TokenKind k) {
    if (peek().kind != k) {
      fail_at(peek(), "expected " + detail::describe(k) + ", found " + detail::describe(peek().kind));
    }
    return take();
  }

  Value expression() {
    Value acc = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = take();
      Value rhs = term();
      acc = add(std::move(acc), std::move(rhs), op.kind == TokenKind::minus, op);
    }
    return acc;
  }

  Value term() {
    Value acc = unary();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
      const Token& op = take();
      Value rhs = unary();
      acc = op.kind == TokenKind::star ? mul(std::move(acc), std::move(rhs), op) : div(std::move(acc), std::move(rhs), op);
    }
    return acc;
  }

  Value unary() {
    if (peek().kind == TokenKind::minus) {
      const Token& op = take();
      return negate(unary(), op);
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (peek().kind != TokenKind::caret) return base;
    const Token& op = take();
    const Token& at = peek();
    bool negative = accept(TokenKind::minus);
    long k = to_integer(primary(), at);
    if (negative) k = -k;
    return raise(std::move(base), k, op);
  }

  Value primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::number: {
        take();
        return Value{FieldElem(Rat(mpz_class(tok.text)))};
      }
      case TokenKind::lparen: {
        take();
        Value inner = expression();
        expect(TokenKind::rparen);
        inner.open_sum = inner.open_product = false;
        return inner;
      }
      case TokenKind::lbrack: {
        take();
        List list;
        if (peek().kind != TokenKind::rbrack) {
          do {
            const Token& at = peek();
            list.items.push_back(to_const(expression(), at));
          } while (accept(TokenKind::comma));
        }
        expect(TokenKind::rbrack);
        return Value{std::move(list)};
      }
      case TokenKind::ident:
        return identifier();
      default:
        fail_at(tok, "unexpected " + detail::describe(tok.kind));
    }
  }

  // Comma-separated arguments up to `stop` (rparen or semicolon).
  std::vector<std::pair<Value, Token>> arguments(TokenKind stop) {
    std::vector<std::pair<Value, Token>> out;
    if (peek().kind == stop) return out;
    do {
      const Token at = peek();
      out.emplace_back(expression(), at);
    } while (accept(TokenKind::comma));
    return out;
  }

  void want_count(const std::vector<std::pair<Value, Token>>& args, std::size_t n, const Token& call) {
    if (args.size() != n) {
      fail_at(call, call.text + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                        std::to_string(args.size()));
    }
  }

  Value identifier() {
    const Token call = take();
    const std::string& name = call.text;
    if (peek().kind != TokenKind::lparen && peek().kind != TokenKind::lbrack) {
      if (name == "t") return Value{FieldElem::t()};
      if (name == "x") return Value{UnaryFn::arg_power(1)};
      if (name == "id") return Value{AdditiveMap::identity()};
      if (auto it = bindings_.find(name); it != bindings_.end()) {
        return std::visit([](const auto& e) { return Value{e}; }, it->second);
      }
      fail_at(call, "unknown identifier '" + name + "'");
    }
    try {
      return call_builtin(call);
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail_at(call, e.what());
    } catch (const EvaluationError& e) {
      fail_at(call, e.what());
    } catch (const SingularSystem& e) {
      fail_at(call, e.what());
    }
  }

  Value call_builtin(const Token& call) {
    const std::string& name = call.text;
    if (name == "poly") {
      expect(TokenKind::lbrack);
      std::vector<FieldElem> coeffs;
      if (peek().kind != TokenKind::rbrack) {
        do {
          const Token& at = peek();
          coeffs.push_back(to_const(expression(), at));
        } while (accept(TokenKind::comma));
      }
      expect(TokenKind::rbrack);
      return Value{ClassicalPoly(std::move(coeffs))};
    }
    expect(TokenKind::lparen);
    if (name == "lin") {
      const Token at = peek();
      Value inner = expression();
      expect(TokenKind::rparen);
      if (!is_mapish(inner)) fail_at(at, "lin(...) expects a combination of additive maps");
      return Value{AdditiveMap::lincomb(map_terms(inner).terms)};
    }
    if (name == "sum") {
      const Token at = peek();
      Value inner = expression();
      expect(TokenKind::rparen);
      if (!is_formish(inner)) fail_at(at, "sum(...) expects a combination of forms");
      FormTerms ts = form_terms(inner);
      return Value{SymForm::sum(ts.arity, std::move(ts.terms))};
    }
    if (name == "blocks" || name == "diag" || name == "delta" || name == "mdelta") {
      const Token at = peek();
      Value head = expression();
      expect(TokenKind::semicolon);
      auto rest = arguments(TokenKind::rparen);
      expect(TokenKind::rparen);
      if (name == "blocks" || name == "diag") {
        std::vector<unsigned> exps;
        for (const auto& [v, where] : rest) exps.push_back(to_count(v, where));
        if (name == "blocks") return Value{SymForm::power_blocks(to_form(head, at), std::move(exps))};
        return Value{UnaryFn::diagonal(to_form(head, at), std::move(exps))};
      }
      std::vector<FieldElem> ys;
      for (const auto& [v, where] : rest) ys.push_back(to_const(v, where));
      if (name == "delta") return Value{UnaryFn::difference(to_fn(head, at), std::move(ys))};
      return Value{UnaryFn::mult_difference(to_fn(head, at), std::move(ys))};
    }

    auto args = arguments(TokenKind::rparen);
    expect(TokenKind::rparen);
    if (name == "der" || name == "sub") {
      want_count(args, 1, call);
      FieldElem u = to_const(args[0].first, args[0].second);
      return Value{name == "der" ? AdditiveMap::derivation(std::move(u)) : AdditiveMap::substitution(std::move(u))};
    }
    if (name == "comp") {
      if (args.empty()) fail_at(call, "comp() needs at least one map");
      std::vector<AdditiveMap> parts;
      for (const auto& [v, where] : args) parts.push_back(to_map(v, where));
      return Value{AdditiveMap::compose(std::move(parts))};
    }
    if (name == "pull") {
      want_count(args, 2, call);
      const unsigned k = to_count(args[1].first, args[1].second);
      if (k == 0) fail_at(args[1].second, "arity must be positive");
      return Value{SymForm::pullback(to_map(args[0].first, args[0].second), k)};
    }
    if (name == "prod") {
      if (args.empty()) fail_at(call, "prod() needs at least one map");
      std::vector<AdditiveMap> maps;
      for (const auto& [v, where] : args) maps.push_back(to_map(v, where));
      return Value{SymForm::atom_product(std::move(maps))};
    }
    if (name == "zero") {
      want_count(args, 1, call);
      const unsigned k = to_count(args[0].first, args[0].second);
      if (k == 0) fail_at(args[0].second, "arity must be positive");
      return Value{SymForm::sum(k, {})};
    }
    if (name == "trace") {
      want_count(args, 1, call);
      return Value{UnaryFn::trace(to_form(args[0].first, args[0].second))};
    }
    if (name == "at") {
      want_count(args, 2, call);
      UnaryFn outer = to_fn(args[0].first, args[0].second);
      return Value{UnaryFn::composed(std::move(outer), to_classical(args[1].first, args[1].second))};
    }
    if (name == "polyof") {
      want_count(args, 2, call);
      const auto* p = get<ClassicalPoly>(args[0].first);
      if (!p) fail_at(args[0].second, "polyof expects poly[...] first");
      return Value{UnaryFn::poly_of(*p, to_fn(args[1].first, args[1].second))};
    }
    if (name == "rank") {
      want_count(args, 3, call);
      const auto* xs = get<List>(args[1].first);
      const auto* ys = get<List>(args[2].first);
      if (!xs) fail_at(args[1].second, "expected a list [..]");
      if (!ys) fail_at(args[2].second, "expected a list [..]");
      return Value{FieldElem(static_cast<long>(kernel_rank(to_kernel(args[0].first, args[0].second), xs->items, ys->items)))};
    }
    if (name == "hod") {
      want_count(args, 2, call);
      const AdditiveMap d = to_map(args[0].first, args[0].second);
      const unsigned nmax = to_count(args[1].first, args[1].second);
      const auto units = structured_samples();
      const auto report = hod_degree(d, nmax, {units.begin(), units.begin() + 4});
      return Value{FieldElem(report.degree ? static_cast<long>(*report.degree) : -1L)};
    }
    fail_at(call, "unknown function '" + name + "'");
  }

  static ClassicalPoly to_classical(const Value& v, const Token& where) {
    if (const auto* p = get<ClassicalPoly>(v)) return *p;
    if (auto p = as_classical_poly(to_fn(v, where))) return *p;
    fail_at(where, "expected a polynomial in x");
  }

  static Kernel to_kernel(const Value& v, const Token& where) {
    if (is_formish(v)) {
      SymForm f = to_form(v, where);
      if (f.arity() != 2) fail_at(where, "a kernel form must have arity 2");
      return [f](const FieldElem& x, const FieldElem& y) {
        const FieldElem args[] = {x, y};
        return f(args);
      };
    }
    return product_kernel(to_map(v, where));
  }

  // Operators.
  static Value add(Value a, Value b, bool minus, const Token& op) {
    if (get<FieldElem>(a) && get<FieldElem>(b)) {
      return Value{minus ? *get<FieldElem>(a) - *get<FieldElem>(b) : *get<FieldElem>(a) + *get<FieldElem>(b)};
    }
    if (is_mapish(a) && is_mapish(b)) {
      MapTerms out = map_terms(a);
      for (auto [c, m] : map_terms(b).terms) out.terms.emplace_back(minus ? -c : c, m);
      return Value{std::move(out)};
    }
    if (is_formish(a) || is_formish(b)) {
      if (!is_formish(a) || !is_formish(b)) fail_at(op, "cannot add a form and a non-form");
      FormTerms out = form_terms(a);
      FormTerms rhs = form_terms(b);
      if (out.arity != rhs.arity) fail_at(op, "cannot add forms of different arity");
      for (auto [c, f] : rhs.terms) out.terms.emplace_back(minus ? -c : c, f);
      return Value{std::move(out)};
    }
    UnaryFn rhs = to_fn(b, op);
    if (minus) rhs = UnaryFn::scaled(FieldElem(-1), rhs);
    UnaryFn lhs = to_fn(a, op);
    std::vector<UnaryFn> terms;
    if (const auto* s = std::get_if<fn::Sum>(&lhs.node().body); s && a.open_sum) {
      terms = s->terms;
    } else {
      terms.push_back(lhs);
    }
    terms.push_back(rhs);
    Value out{UnaryFn::sum(std::move(terms))};
    out.open_sum = true;
    return out;
  }

  static Value mul(Value a, Value b, const Token& op) {
    const auto* ca = get<FieldElem>(a);
    const auto* cb = get<FieldElem>(b);
    if (ca && cb) return Value{*ca * *cb};
    if (cb && !ca) {
      if (is_mapish(a) || is_formish(a)) return scale(a, *cb);
    }
    if (ca) {
      if (is_mapish(b) || is_formish(b)) return scale(b, *ca);
      return Value{UnaryFn::scaled(*ca, to_fn(b, op))};
    }
    if (is_formish(a) || is_formish(b)) fail_at(op, "forms can only be multiplied by constants");
    UnaryFn lhs = to_fn(a, op);
    std::vector<UnaryFn> factors;
    if (const auto* p = std::get_if<fn::Product>(&lhs.node().body); p && a.open_product) {
      factors = p->factors;
    } else {
      factors.push_back(lhs);
    }
    factors.push_back(to_fn(b, op));
    Value out{UnaryFn::product(std::move(factors))};
    out.open_product = true;
    return out;
  }

  static Value div(Value a, Value b, const Token& op) {
    try {
      const auto* ca = get<FieldElem>(a);
      const auto* cb = get<FieldElem>(b);
      if (ca && cb) return Value{*ca / *cb};
      if (cb) {
        const FieldElem r = inv(*cb);
        if (is_mapish(a) || is_formish(a)) return scale(a, r);
        return Value{UnaryFn::scaled(r, to_fn(a, op))};
      }
      if (is_formish(a) || is_formish(b)) fail_at(op, "forms can only be divided by constants");
      return Value{UnaryFn::quotient(to_fn(a, op), to_fn(b, op))};
    } catch (const DivisionByZero& e) {
      fail_at(op, e.what());
    }
  }

  static Value scale(const Value& v, const FieldElem& c) {
    if (is_mapish(v)) {
      MapTerms ts = map_terms(v);
      for (auto& term : ts.terms) term.first = c * term.first;
      return Value{std::move(ts)};
    }
    FormTerms ts = form_terms(v);
    for (auto& term : ts.terms) term.first = c * term.first;
    return Value{std::move(ts)};
  }

  static Value negate(Value v, const Token& op) {
    if (const auto* c = get<FieldElem>(v)) return Value{-*c};
    if (is_mapish(v) || is_formish(v)) return scale(v, FieldElem(-1));
    return Value{UnaryFn::scaled(FieldElem(-1), to_fn(v, op))};
  }

  static Value raise(Value base, long k, const Token& op) {
    if (const auto* c = get<FieldElem>(base)) {
      if (c->is_zero() && k < 0) fail_at(op, "zero raised to a negative power");
      return Value{pow(*c, k)};
    }
    if (is_formish(base)) fail_at(op, "a form cannot be raised to a power");
    UnaryFn f = to_fn(base, op);
    if (const auto* a = std::get_if<fn::ArgPower>(&f.node().body); a && a->exponent == 1) {
      return Value{UnaryFn::arg_power(k)};
    }
    return Value{UnaryFn::power(std::move(f), k)};
  }

  std::vector<Token> tokens_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

Value parse_value(std::string_view src, const Bindings& bindings, std::size_t line, std::size_t column) {
  Parser parser(detail::tokenize(src, line, column), bindings);
  return parser.parse_all();
}

const Token& origin() {
  static const Token t{TokenKind::end, "", 1, 1};
  return t;
}

}  // namespace

Expression parse_expression(std::string_view src, const Bindings& bindings, std::size_t first_line,
                            std::size_t first_column) {
  Value v = parse_value(src, bindings, first_line, first_column);
  const Token where{TokenKind::end, "", first_line, first_column};
  if (const auto* c = get<FieldElem>(v)) return *c;
  if (const auto* m = get<AdditiveMap>(v)) return *m;
  if (is_formish(v)) return Parser::to_form(v, where);
  if (const auto* p = get<ClassicalPoly>(v)) return *p;
  return Parser::to_fn(v, where);
}

FieldElem parse_field_elem(std::string_view src) {
  Value v = parse_value(src, {}, 1, 1);
  return Parser::to_const(v, origin());
}

AdditiveMap parse_map(std::string_view src) {
  Value v = parse_value(src, {}, 1, 1);
  return Parser::to_map(v, origin());
}

SymForm parse_form(std::string_view src) {
  Value v = parse_value(src, {}, 1, 1);
  return Parser::to_form(v, origin());
}

ClassicalPoly parse_poly(std::string_view src) {
  Value v = parse_value(src, {}, 1, 1);
  if (const auto* p = get<ClassicalPoly>(v)) return *p;
  if (auto p = as_classical_poly(Parser::to_fn(v, origin()))) return *p;
  throw ParseError("expected a polynomial", 1, 1);
}

UnaryFn parse_function(std::string_view src, const Bindings& bindings, std::size_t first_line,
                       std::size_t first_column) {
  Value v = parse_value(src, bindings, first_line, first_column);
  return Parser::to_fn(v, Token{TokenKind::end, "", first_line, first_column});
}

UnaryFn as_function(const Expression& e) {
  return std::visit(
      [](const auto& x) {
        Value v{x};
        return Parser::to_fn(v, origin());
      },
      e);
}

std::string print(const Expression& e) {
  return std::visit([](const auto& x) { return x.to_string(); }, e);
}

}  // namespace fecheck
