#include "confmod/presentation.hpp"

namespace confmod {

void validate(const Presentation& p) {
  for (const auto& r : p.algebra_relations) {
    if (!is_monic(r.value))
      throw Error(ErrorCode::NonMonicRelation, "algebra relation '" + r.label + "' is not monic");
    for (const auto& [a, c] : r.value)
      if (!is_valid(a, p.locality))
        throw Error(ErrorCode::MalformedWord, "algebra relation '" + r.label + "' leaves the basis");
    if (p.d_free_gsb_asserted && !r.value.leading_monomial().d_free())
      throw Error(ErrorCode::NotDFree,
                  "algebra relation '" + r.label + "' has a leading word carrying D");
  }
  for (const auto& r : p.module_relations) {
    if (!is_monic(r.value))
      throw Error(ErrorCode::NonMonicRelation, "module relation '" + r.label + "' is not monic");
    for (const auto& [u, c] : r.value)
      if (!is_valid(u, p.locality))
        throw Error(ErrorCode::MalformedWord, "module relation '" + r.label + "' leaves the basis");
  }
}

bool algebra_relations_d_free(const Presentation& p) {
  for (const auto& r : p.algebra_relations)
    for (const auto& [a, c] : r.value)
      if (!a.d_free()) return false;
  return true;
}

}  // namespace confmod
