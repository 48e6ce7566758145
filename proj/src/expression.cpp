#include "confmod/expression.hpp"

#include <cctype>
#include <sstream>

namespace confmod {

bool operator==(const RawDerived& a, const RawDerived& b) {
  return a.d == b.d && *a.inner == *b.inner;
}

bool operator==(const RawProduct& a, const RawProduct& b) {
  return a.n == b.n && *a.left == *b.left && *a.right == *b.right;
}

bool operator==(const RawExpr& a, const RawExpr& b) { return a.terms == b.terms; }

namespace {

enum class Tok { Ident, Number, Slash, Plus, Minus, Star, Caret, LParen, RParen, ProductOpen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size()) {
        const char x = s[j];
        if (std::isalnum(static_cast<unsigned char>(x))) {
          ++j;
        } else if (x == '_' && !(j + 1 < s.size() && s[j + 1] == '(')) {
          ++j;
        } else {
          break;
        }
      }
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c == '_' && i + 1 < s.size() && s[i + 1] == '(') {
      out.push_back({Tok::ProductOpen, "_(", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::Slash; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(i, "identifier, number or operator",
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : tokens_(lex(text)), symbols_(symbols) {}

  RawExpr parse_all() {
    RawExpr e = element();
    if (peek().kind != Tok::End) fail("'+', '-' or end of input", "unexpected token");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(peek().offset, expected, message);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(what, std::string("missing ") + what);
  }

  std::uint32_t natural() {
    if (peek().kind != Tok::Number) fail("natural number", "expected a natural number");
    const std::string text = next().text;
    if (text.size() > 9) fail("natural number below 10^9", "exponent too large");
    return static_cast<std::uint32_t>(std::stoul(text));
  }

  RawExpr element() {
    RawExpr e;
    bool negative = false;
    if (accept(Tok::Minus)) negative = true;
    else accept(Tok::Plus);
    while (true) {
      if (zero_literal()) {
        next();
      } else {
        auto [c, w] = term();
        if (negative) c = -c;
        if (!c.is_zero()) e.terms.emplace_back(std::move(c), std::move(w));
      }
      if (accept(Tok::Plus)) negative = false;
      else if (accept(Tok::Minus)) negative = true;
      else break;
    }
    return e;
  }

  // a bare "0" term, as rendered for the zero element
  bool zero_literal() const {
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find_first_not_of('0') != std::string::npos) return false;
    const Tok after = peek(1).kind;
    return after != Tok::Star && after != Tok::Slash;
  }

  bool is_parameter(const Token& t) const {
    return t.kind == Tok::Ident && symbols_.find_parameter(t.text).has_value();
  }

  std::pair<Coefficient, RawWord> term() {
    Coefficient coef(1);
    while (true) {
      const std::size_t save = pos_;
      std::optional<Coefficient> f = try_factor();
      if (!f) break;
      if (!accept(Tok::Star)) {
        // a bare coefficient cannot stand without a word
        pos_ = save;
        if (is_parameter(peek())) fail("'*' and a word", "parameter used without a word");
        if (peek().kind == Tok::Number) fail("'*' and a word", "number used without a word");
        break;
      }
      coef *= *f;
    }
    return {coef, word()};
  }

  // Coefficient factor, or nullopt (with position restored) if the tokens do
  // not form one.
  std::optional<Coefficient> try_factor() {
    const std::size_t save = pos_;
    try {
      if (peek().kind == Tok::Number) return rational();
      if (is_parameter(peek())) return parameter_power();
      if (peek().kind == Tok::LParen) {
        ++pos_;
        Coefficient c = poly();
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::Star) {
          pos_ = save;
          return std::nullopt;
        }
        return c;
      }
    } catch (const ParseError&) {
      pos_ = save;
    }
    pos_ = save;
    return std::nullopt;
  }

  Coefficient rational() {
    const std::string num = next().text;
    Rational value(num);
    if (accept(Tok::Slash)) {
      if (peek().kind != Tok::Number) fail("denominator", "expected a denominator");
      Rational den(next().text);
      if (den == 0) fail("nonzero denominator", "division by zero");
      value /= den;
    }
    value.canonicalize();
    return Coefficient(value);
  }

  Coefficient parameter_power() {
    const std::size_t index = *symbols_.find_parameter(next().text);
    Coefficient p = Coefficient::parameter(index);
    Coefficient out(1);
    std::uint32_t k = 1;
    if (accept(Tok::Caret)) k = natural();
    for (std::uint32_t j = 0; j < k; ++j) out *= p;
    return out;
  }

  Coefficient poly_factor() {
    if (peek().kind == Tok::Number) return rational();
    if (is_parameter(peek())) return parameter_power();
    if (accept(Tok::LParen)) {
      Coefficient c = poly();
      expect(Tok::RParen, "')'");
      return c;
    }
    fail("number, parameter or '('", "expected a coefficient factor");
  }

  Coefficient poly_term() {
    Coefficient c = poly_factor();
    while (accept(Tok::Star)) c *= poly_factor();
    return c;
  }

  Coefficient poly() {
    bool negative = accept(Tok::Minus);
    if (!negative) accept(Tok::Plus);
    Coefficient out;
    while (true) {
      Coefficient t = poly_term();
      if (negative) out -= t;
      else out += t;
      if (accept(Tok::Plus)) negative = false;
      else if (accept(Tok::Minus)) negative = true;
      else break;
    }
    return out;
  }

  static std::shared_ptr<const RawExpr> wrap(RawWord w) {
    auto e = std::make_shared<RawExpr>();
    e->terms.emplace_back(Coefficient(1), std::move(w));
    return e;
  }

  RawWord word() {
    RawWord left = primary();
    if (!accept(Tok::ProductOpen)) return left;
    const std::uint32_t n = natural();
    expect(Tok::RParen, "')'");
    RawWord right = word();
    return RawProduct{wrap(std::move(left)), n, wrap(std::move(right))};
  }

  RawAtom atom(std::uint32_t d) {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("generator name", "expected a generator");
    if (auto b = symbols_.find_algebra(t.text)) {
      ++pos_;
      return RawAtom{d, SymbolKind::Algebra, b->index};
    }
    if (auto y = symbols_.find_module(t.text)) {
      ++pos_;
      return RawAtom{d, SymbolKind::Module, y->index};
    }
    if (symbols_.find_parameter(t.text)) fail("generator name", "parameter '" + t.text + "' used as a word");
    throw Error(ErrorCode::UnknownSymbol,
                "unknown symbol '" + t.text + "' at offset " + std::to_string(t.offset));
  }

  std::shared_ptr<const RawExpr> parenthesized() {
    expect(Tok::LParen, "'('");
    auto inner = std::make_shared<RawExpr>(element());
    expect(Tok::RParen, "')'");
    return inner;
  }

  RawWord primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "D") {
      ++pos_;
      std::uint32_t d = 1;
      if (accept(Tok::Caret)) d = natural();
      if (peek().kind == Tok::LParen) return RawDerived{d, parenthesized()};
      return atom(d);
    }
    if (t.kind == Tok::LParen) {
      auto inner = parenthesized();
      // "(w)" with a single unit-coefficient word is the word itself
      if (inner->terms.size() == 1 && inner->terms.front().first.is_one())
        return inner->terms.front().second;
      return RawDerived{0, inner};
    }
    if (t.kind == Tok::Ident) return atom(0);
    fail("generator, 'D' or '('", "expected a word");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const SymbolTable& symbols_;
};

std::optional<SymbolKind> word_kind(const RawWord& w);

// nullopt for the empty (zero) expression, which fits either kind
std::optional<SymbolKind> kind_of(const RawExpr& e) {
  std::optional<SymbolKind> k;
  for (const auto& [c, w] : e.terms) {
    const auto kw = word_kind(w);
    if (!kw) continue;
    if (k && *k != *kw) throw Error(ErrorCode::MalformedWord, "sum mixes algebra and module words");
    k = kw;
  }
  return k;
}

std::optional<SymbolKind> word_kind(const RawWord& w) {
  if (const auto* a = std::get_if<RawAtom>(&w)) return a->kind;
  if (const auto* d = std::get_if<RawDerived>(&w)) return kind_of(*d->inner);
  const auto& p = std::get<RawProduct>(w);
  if (kind_of(*p.left) == SymbolKind::Module)
    throw Error(ErrorCode::MalformedWord, "module generator must be the rightmost leaf");
  return kind_of(*p.right);
}

template <class Tail>
Element<Monomial<Tail>> evaluate(const RawExpr& e, const ActionEngine& engine);

template <class Tail>
Element<Monomial<Tail>> evaluate_word(const RawWord& w, const ActionEngine& engine) {
  using Result = Element<Monomial<Tail>>;
  if (const auto* a = std::get_if<RawAtom>(&w)) {
    Monomial<Tail> u;
    u.d = a->d;
    u.tail = Tail{a->index};
    return Result(u);
  }
  if (const auto* d = std::get_if<RawDerived>(&w))
    return engine.apply_D(evaluate<Tail>(*d->inner, engine), d->d);
  const auto& p = std::get<RawProduct>(w);
  const AlgebraElement left = evaluate<AlgebraGen>(*p.left, engine);
  const Result right = evaluate<Tail>(*p.right, engine);
  if constexpr (std::is_same_v<Tail, ModuleGen>) {
    return engine.act_element(left, p.n, right);
  } else {
    return engine.product(left, p.n, right);
  }
}

template <class Tail>
Element<Monomial<Tail>> evaluate(const RawExpr& e, const ActionEngine& engine) {
  Element<Monomial<Tail>> out;
  for (const auto& [c, w] : e.terms) out.add_scaled(evaluate_word<Tail>(w, engine), c);
  return out;
}

void check_atoms(const RawExpr& e, const ActionEngine& engine);

void check_word_atoms(const RawWord& w, const ActionEngine& engine) {
  if (const auto* a = std::get_if<RawAtom>(&w)) {
    const auto& loc = engine.locality_map();
    const bool ok = a->kind == SymbolKind::Algebra ? a->index < loc.algebra_count()
                                                   : a->index < loc.module_count();
    if (!ok) throw Error(ErrorCode::UnknownSymbol, "generator index outside the locality map");
  } else if (const auto* d = std::get_if<RawDerived>(&w)) {
    check_atoms(*d->inner, engine);
  } else {
    const auto& p = std::get<RawProduct>(w);
    check_atoms(*p.left, engine);
    check_atoms(*p.right, engine);
  }
}

void check_atoms(const RawExpr& e, const ActionEngine& engine) {
  for (const auto& [c, w] : e.terms) check_word_atoms(w, engine);
}

// Writes "c * word" style terms; `words` are already rendered.
std::string join_terms(const std::vector<std::pair<Coefficient, std::string>>& terms,
                       const SymbolTable& symbols) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, word] : terms) {
    bool negative = false;
    std::string factor;
    if (c.term_count() == 1) {
      const auto& [exps, value] = *c.terms().begin();
      negative = value < 0;
      const Coefficient magnitude = negative ? -c : c;
      if (!magnitude.is_one()) factor = magnitude.to_string(symbols.parameters());
    } else {
      factor = "(" + c.to_string(symbols.parameters()) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (!factor.empty()) os << factor << " * ";
    os << word;
  }
  return os.str();
}

std::string tail_text(std::uint32_t d, const std::string& name) {
  if (d == 0) return name;
  if (d == 1) return "D " + name;
  return "D^" + std::to_string(d) + " " + name;
}

template <class Tail>
std::string render_monomial(const Monomial<Tail>& u, const SymbolTable& symbols) {
  std::string out;
  for (const Letter& l : u.chain) out += symbols.name(l.gen) + "_(" + std::to_string(l.n) + ") ";
  out += tail_text(u.d, symbols.name(u.tail));
  return out;
}

template <class Tail>
std::string render_element(const Element<Monomial<Tail>>& f, const SymbolTable& symbols) {
  std::vector<std::pair<Coefficient, std::string>> terms;
  for (const auto& [u, c] : f) terms.emplace_back(c, render_monomial(u, symbols));
  return join_terms(terms, symbols);
}

std::string render_word(const RawWord& w, const SymbolTable& symbols);

bool is_plain_word(const RawExpr& e) {
  return e.terms.size() == 1 && e.terms.front().first.is_one();
}

std::string render_word(const RawWord& w, const SymbolTable& symbols) {
  if (const auto* a = std::get_if<RawAtom>(&w)) {
    const std::string& name = a->kind == SymbolKind::Algebra ? symbols.name(AlgebraGen{a->index})
                                                            : symbols.name(ModuleGen{a->index});
    return tail_text(a->d, name);
  }
  if (const auto* d = std::get_if<RawDerived>(&w)) {
    const std::string inner = "(" + render(*d->inner, symbols) + ")";
    if (d->d == 0) return inner;
    return (d->d == 1 ? std::string("D ") : "D^" + std::to_string(d->d) + " ") + inner;
  }
  const auto& p = std::get<RawProduct>(w);
  std::string left;
  if (is_plain_word(*p.left) && std::holds_alternative<RawAtom>(p.left->terms.front().second))
    left = render_word(p.left->terms.front().second, symbols);
  else
    left = "(" + render(*p.left, symbols) + ")";
  std::string right;
  if (is_plain_word(*p.right)) right = render_word(p.right->terms.front().second, symbols);
  else right = "(" + render(*p.right, symbols) + ")";
  return left + "_(" + std::to_string(p.n) + ") " + right;
}

}  // namespace

RawExpr parse_expression(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse_all();
}

SymbolKind expression_kind(const RawExpr& expr) { return kind_of(expr).value_or(SymbolKind::Module); }

ModuleElement normalize_module(const RawExpr& expr, const ActionEngine& engine) {
  if (kind_of(expr) == SymbolKind::Algebra)
    throw Error(ErrorCode::MalformedWord, "expected a module expression ending in a module generator");
  check_atoms(expr, engine);
  return evaluate<ModuleGen>(expr, engine);
}

AlgebraElement normalize_algebra(const RawExpr& expr, const ActionEngine& engine) {
  if (kind_of(expr) == SymbolKind::Module)
    throw Error(ErrorCode::MalformedWord, "expected an algebra expression without module generators");
  check_atoms(expr, engine);
  return evaluate<AlgebraGen>(expr, engine);
}

std::string render(const ModuleMonomial& u, const SymbolTable& symbols) {
  return render_monomial(u, symbols);
}

std::string render(const AlgebraMonomial& a, const SymbolTable& symbols) {
  return render_monomial(a, symbols);
}

std::string render(const ModuleElement& f, const SymbolTable& symbols) {
  return render_element(f, symbols);
}

std::string render(const AlgebraElement& f, const SymbolTable& symbols) {
  return render_element(f, symbols);
}

std::string render(const Coefficient& c, const SymbolTable& symbols) {
  return c.to_string(symbols.parameters());
}

std::string render(const RawExpr& expr, const SymbolTable& symbols) {
  std::vector<std::pair<Coefficient, std::string>> terms;
  for (const auto& [c, w] : expr.terms) terms.emplace_back(c, render_word(w, symbols));
  return join_terms(terms, symbols);
}

std::vector<std::pair<Rational, std::size_t>> parse_linear_combination(
    std::string_view text, const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, std::size_t>> out;
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  trimmed.erase(trimmed.find_last_not_of(" \t\n") + 1);
  if (trimmed == "0" || trimmed.empty()) return out;
  const SymbolTable table({}, names);
  const RawExpr e = parse_expression(trimmed, table);
  std::vector<Rational> acc(names.size());
  for (const auto& [c, w] : e.terms) {
    const auto* a = std::get_if<RawAtom>(&w);
    if (a == nullptr || a->d != 0)
      throw ParseError(0, "plain name", "linear combination may only contain plain names");
    acc[a->index] += *c.constant_value();
  }
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.emplace_back(acc[i], i);
  return out;
}

}  // namespace confmod
