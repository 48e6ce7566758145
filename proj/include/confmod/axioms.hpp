#pragma once

#include "confmod/action.hpp"
#include "confmod/presentation.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace confmod {

/// The operations under test. Defaults forward to an ActionEngine; tests
/// substitute corrupted versions as negative controls.
struct ActionOps {
  std::function<ModuleElement(const AlgebraMonomial&, std::uint32_t, const ModuleElement&)> act_monomial;
  std::function<ModuleElement(const AlgebraElement&, std::uint32_t, const ModuleElement&)> act_element;
  std::function<ModuleElement(const ModuleElement&)> derive_module;
  std::function<AlgebraElement(const AlgebraElement&)> derive_algebra;
  std::function<AlgebraElement(const AlgebraElement&, std::uint32_t, const AlgebraElement&)> product;
  std::function<std::uint32_t(const AlgebraMonomial&, const ModuleMonomial&)> locality;

  static ActionOps from_engine(const ActionEngine& engine);
};

enum class Identity { Locality, Leibniz, Shift, Associativity };
const char* identity_name(Identity id);
inline constexpr Identity kIdentities[] = {Identity::Locality, Identity::Leibniz, Identity::Shift,
                                           Identity::Associativity};

struct AxiomCounterexample {
  Identity identity{};
  std::string input;  // the sampled words and exponents
  std::string lhs;
  std::string rhs;
};

struct AxiomFamilyResult {
  Identity identity{};
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct AxiomReport {
  std::string preset;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomFamilyResult> families;
  std::vector<AxiomCounterexample> counterexamples;
  bool all_passed() const;
};

struct AxiomSampling {
  std::uint32_t max_algebra_len = 3;
  std::uint32_t max_algebra_d = 2;
  std::uint32_t max_n = 6;
  std::uint32_t max_module_len = 4;
  std::uint32_t max_module_d = 4;
  std::size_t max_counterexamples = 5;
};

/// Runs locality, D-Leibniz, D-shift (m = 0 included) and conformal
/// associativity on `samples` seeded random inputs over the generators of p.
AxiomReport verify_axioms(const Presentation& p, const ActionOps& ops, std::size_t samples,
                          std::uint64_t seed, const AxiomSampling& sampling = {});

}  // namespace confmod
