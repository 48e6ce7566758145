#pragma once

#include "confmod/terms.hpp"

#include <string>
#include <vector>

namespace confmod {

struct AlgebraRelation {
  std::string label;
  AlgebraElement value;
};

struct ModuleRelation {
  std::string label;
  ModuleElement value;
};

/// Generators, locality data and the two relation sets S (algebra side) and
/// Q (module side) of mod_{C(B,N|S)}(Y|Q).
struct Presentation {
  std::string name;
  SymbolTable symbols;
  LocalityMap locality;
  std::vector<AlgebraRelation> algebra_relations;
  /// The caller asserts S is a D-free Groebner-Shirshov basis of C(B,N).
  bool d_free_gsb_asserted = false;
  std::vector<ModuleRelation> module_relations;
  /// Non-fatal findings from construction (Jacobi identity, g-module checks).
  std::vector<std::string> warnings;
};

/// Leading coefficient exactly 1 as a parameter-free rational.
template <class Tail>
bool is_monic(const Element<Monomial<Tail>>& f) {
  return !f.is_zero() && f.leading_coefficient().is_one();
}

/// Checks relation monicity, the D-free assertion and word validity; throws
/// NonMonicRelation, NotDFree or MalformedWord.
void validate(const Presentation& p);

/// True when no monomial of any algebra relation carries a D.
bool algebra_relations_d_free(const Presentation& p);

}  // namespace confmod
