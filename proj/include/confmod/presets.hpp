#pragma once

#include "confmod/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace confmod {

using LinearCombination = std::vector<std::pair<Rational, std::size_t>>;

/// A finite-dimensional Lie algebra g with ordered basis {a_i} and a g-module
/// V with basis Y, by structure constants.
struct LieData {
  std::vector<std::string> basis;
  /// (i, j) with i > j -> [a_i a_j] over the basis.
  std::map<std::pair<std::size_t, std::size_t>, LinearCombination> brackets;
  std::vector<std::string> module_basis;
  /// (i, y) -> a_i . y over the module basis.
  std::map<std::pair<std::size_t, std::size_t>, LinearCombination> action;
};

/// g = k a abelian, V = k y with a . y = y.
LieData abelian_lie_data();
/// g = span{a1, a2} with [a2 a1] = a1, V = k y with a1 . y = 0, a2 . y = y.
LieData nonabelian_lie_data();

/// Parses
///   {"basis": [...], "brackets": {"a2,a1": "a1", ...},
///    "module_basis": [...], "action": {"a1,y": "y + 2*y2", ...}}
/// Throws ParseError (with byte offset) or UnknownSymbol.
LieData load_lie_data(std::string_view json_text);

/// [x, z] for basis indices in any order.
LinearCombination lie_bracket(const LieData& lie, std::size_t i, std::size_t j);

/// Jacobi identity and g-module property by brute force; one message per
/// violated instance.
std::vector<std::string> lie_data_warnings(const LieData& lie);

/// A rational value, or the symbolic parameter of the given name.
struct ParamValue {
  std::optional<Rational> value;
  static ParamValue symbolic() { return {}; }
  static ParamValue of(Rational r) { return ParamValue{std::move(r)}; }
  bool is_symbolic() const { return !value.has_value(); }
};

/// Parses "0", "-2", "1/2", or a parameter name (returns symbolic).
ParamValue parse_param_value(std::string_view text, std::string_view parameter_name);

/// M(Delta, alpha) over C(v; N=2 | v(1)v - v): Q = {v(0)y - Dy - alpha y,
/// v(1)y - Delta y}. Delta must be 0, 1 or symbolic; throws InvalidDelta.
Presentation virasoro_module(const ParamValue& delta, const ParamValue& alpha);

/// M(Delta, alpha, V) over the enveloping algebra of Vir + Cur(g). The a_i
/// are declared before v.
Presentation vir_cur_module(const LieData& lie, const ParamValue& delta, const ParamValue& alpha);

/// C(a; N=2 | a(1)a - a(0)Da, a(0)a(1)a, a(1)a(0)a, a(0)a(0)a, a(1)a(1)a) on
/// one module generator y, no module relations.
Presentation remark_counterexample();

/// Presentation from a JSON document:
///   {"name", "algebra_generators", "module_generators", "parameters",
///    "locality": {"uniform": N, "pairs": [{"left","right","value"}]},
///    "algebra_relations": [{"label","value"}], "d_free_gsb_asserted",
///    "module_relations": [{"label","value"}]}
Presentation load_presentation(std::string_view json_text);

/// Replaces every occurrence of the named parameter by `value`; unknown
/// names leave the presentation unchanged.
void specialize_parameter(Presentation& p, const std::string& name, const Rational& value);

}  // namespace confmod
