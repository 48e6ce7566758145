#pragma once

#include "confmod/action.hpp"
#include "confmod/terms.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace confmod {

struct RawExpr;

enum class SymbolKind { Algebra, Module };

/// D^d applied to a single generator.
struct RawAtom {
  std::uint32_t d = 0;
  SymbolKind kind = SymbolKind::Module;
  std::uint32_t index = 0;
  friend bool operator==(const RawAtom&, const RawAtom&) = default;
};

/// D^d applied to a parenthesized expression.
struct RawDerived {
  std::uint32_t d = 1;
  std::shared_ptr<const RawExpr> inner;
};

/// left(n) right, an explicit product node of the bracketing tree.
struct RawProduct {
  std::shared_ptr<const RawExpr> left;
  std::uint32_t n = 0;
  std::shared_ptr<const RawExpr> right;
};

using RawWord = std::variant<RawAtom, RawDerived, RawProduct>;

/// Linear combination of bracketed words, exactly as written. Unparenthesized
/// chains associate to the right.
struct RawExpr {
  std::vector<std::pair<Coefficient, RawWord>> terms;
};

bool operator==(const RawExpr& a, const RawExpr& b);
bool operator==(const RawDerived& a, const RawDerived& b);
bool operator==(const RawProduct& a, const RawProduct& b);

/// Grammar (whitespace-insensitive):
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := [coef '*'] word
///   word    := primary ['_(' nat ')' word]
///   primary := ident | 'D' ['^' nat] (ident | '(' element ')') | '(' element ')'
///   coef    := factor ('*' factor)*,  factor := rational | parameter ['^' nat] | '(' poly ')'
RawExpr parse_expression(std::string_view text, const SymbolTable& symbols);

/// Structural kind of an expression; throws MalformedWord when a module word
/// appears anywhere but the rightmost slot or kinds are mixed in a sum.
SymbolKind expression_kind(const RawExpr& expr);

ModuleElement normalize_module(const RawExpr& expr, const ActionEngine& engine);
AlgebraElement normalize_algebra(const RawExpr& expr, const ActionEngine& engine);

std::string render(const ModuleMonomial& u, const SymbolTable& symbols);
std::string render(const AlgebraMonomial& a, const SymbolTable& symbols);
std::string render(const ModuleElement& f, const SymbolTable& symbols);
std::string render(const AlgebraElement& f, const SymbolTable& symbols);
std::string render(const Coefficient& c, const SymbolTable& symbols);
std::string render(const RawExpr& expr, const SymbolTable& symbols);

/// Linear combination of plain names with rational coefficients, e.g.
/// "y1 + 2*y2" or "-1/2 * a1"; "0" is the empty combination.
std::vector<std::pair<Rational, std::size_t>> parse_linear_combination(
    std::string_view text, const std::vector<std::string>& names);

}  // namespace confmod
