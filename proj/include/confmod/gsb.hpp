#pragma once

#include "confmod/action.hpp"
#include "confmod/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace confmod {

/// [u]_{D^i s} = b1(n1)(...(bk(nk) D^i s)...) for the module relation `relation`.
struct NormalSWordPattern {
  std::vector<Letter> prefix;
  std::uint32_t d_shift = 0;
  std::size_t relation = 0;
  friend bool operator==(const NormalSWordPattern&, const NormalSWordPattern&) = default;
};

/// A set of monic module relations over one action engine.
struct RelationSet {
  std::vector<std::string> labels;
  std::vector<ModuleElement> values;
  std::size_t size() const { return values.size(); }
};

RelationSet module_relation_set(const Presentation& p);

ModuleElement normal_s_word_value(const ActionEngine& engine, const RelationSet& s,
                                  const NormalSWordPattern& p);
/// prefix ++ s-bar with tail D-degree raised by i.
ModuleMonomial normal_s_word_leading(const RelationSet& s, const NormalSWordPattern& p);

/// The unique pattern over s whose leading word is w, if any. Requires all
/// chain exponents of w below the uniform bound.
std::optional<NormalSWordPattern> match(const ModuleMonomial& w, const ModuleMonomial& s_bar,
                                        std::size_t relation, std::uint32_t uniform_bound);

enum class CompositionKind { Inclusion, Intersection, LeftMultiplication };
const char* composition_kind_name(CompositionKind k);

struct CompositionInstance {
  CompositionKind kind{};
  std::size_t f = 0;
  std::size_t g = 0;  // unused for left multiplication
  NormalSWordPattern pattern;  // the S-word subtracted; prefix/i of the overlap
  AlgebraGen b;  // left multiplication only
  std::uint32_t n = 0;  // left multiplication only
  ModuleMonomial overlap;
  ModuleElement value;
};

std::vector<CompositionInstance> find_inclusion_compositions(const ActionEngine& engine,
                                                             const RelationSet& s, std::size_t f,
                                                             std::size_t g);
std::vector<CompositionInstance> find_intersection_compositions(const ActionEngine& engine,
                                                                const RelationSet& s, std::size_t f,
                                                                std::size_t g);
std::vector<CompositionInstance> left_mult_compositions(const ActionEngine& engine,
                                                        const RelationSet& s, std::size_t f,
                                                        std::uint32_t window);

struct ReductionStep {
  NormalSWordPattern pattern;
  ModuleMonomial reduced;  // the monomial that was cancelled
  Coefficient coefficient;
  ModuleElement snapshot;  // working element plus remainder after the step
};

struct Reduction {
  ModuleElement normal_form;
  std::vector<ReductionStep> trace;
};

enum class ReductionStrategy { LeadingFirst, Randomized };

struct ReduceOptions {
  ReductionStrategy strategy = ReductionStrategy::LeadingFirst;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

/// Normal form of h modulo the normal S-words of `s`.
Reduction reduce(const ActionEngine& engine, const RelationSet& s, const ModuleElement& h,
                 const ReduceOptions& options = {});

enum class Verdict { Pass, Fail, PassWithinWindow };
const char* verdict_name(Verdict v);

struct CompositionOutcome {
  CompositionInstance instance;
  ModuleElement residual;
  std::vector<ReductionStep> trace;
  bool zero() const { return residual.is_zero(); }
};

/// Left multiplication by b on relation f is closed when every b(n) f with
/// n beyond the window vanishes identically, i.e. locality(b, f) <= N+K+1.
struct ClosureCertificate {
  std::size_t f = 0;
  AlgebraGen b;
  std::uint32_t locality = 0;
  bool closed = false;
};

/// Consistency of the naive basis {[a(n) D^i y] : [a] in Irr(S)} of
/// mod_{C(B,N)}(Y|R) on a bounded slice of R.
struct FreeModuleAnalysis {
  bool d_free = false;
  std::vector<AlgebraMonomial> irr_s;  // D-free words of Irr(S) within bounds
  std::uint32_t max_len = 0;
  std::uint32_t max_d = 0;
  std::uint32_t max_m = 0;
  std::size_t slice_size = 0;
  bool consistent = true;
  bool conclusive = true;  // false when a pivot had a non-constant coefficient
  /// A nonzero element of the R slice supported on predicted basis words.
  ModuleElement witness;
  std::string witness_source;  // e.g. "s1_(2) y"
  ModuleElement witness_source_value;
};

struct GsbReport {
  std::string preset;
  std::uint32_t uniform_bound = 0;
  std::uint32_t window = 0;
  std::vector<CompositionOutcome> outcomes;
  std::vector<ClosureCertificate> certificates;
  std::optional<FreeModuleAnalysis> freemod;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Pass;

  std::size_t failing() const;
};

struct GsbOptions {
  std::optional<std::uint32_t> window;
  bool record_traces = true;
};

/// Default window: max tail D-degree over the leading words + max leading
/// length + 2.
std::uint32_t default_window(const RelationSet& s);

GsbReport check_gsb(const Presentation& p, const ActionEngine& engine, const GsbOptions& options = {});

/// All u in U with |u| <= max_len and i <= max_d, ascending.
std::vector<ModuleMonomial> enumerate_module_words(const LocalityMap& locality, std::uint32_t max_len,
                                                   std::uint32_t max_d);
/// All D-free words of T with |a| <= max_len, ascending.
std::vector<AlgebraMonomial> enumerate_algebra_words(const LocalityMap& locality,
                                                     std::uint32_t max_len);

/// Words of U within bounds not equal to any normal S-word leading term of s.
std::vector<ModuleMonomial> irr(const RelationSet& s, const LocalityMap& locality, std::uint32_t max_len,
                                std::uint32_t max_d);
std::vector<ModuleMonomial> irr(const Presentation& p, std::uint32_t max_len, std::uint32_t max_d);

/// D-free words of T within bounds avoiding every leading word of S as a
/// subword (the last letter of s-bar may carry any exponent).
std::vector<AlgebraMonomial> algebra_irr_dfree(const Presentation& p, std::uint32_t max_len);

/// {s(m)[u] : s in S, 0 <= m < N, |u| <= max_len, i <= max_d}, monic, zeros
/// dropped. Throws NotDFree unless every monomial of S is D-free.
RelationSet build_R1(const Presentation& p, const ActionEngine& engine, std::uint32_t max_len,
                     std::uint32_t max_d);

/// {D^i y} together with {[a(n) D^i y] : a in irr_s, 0 <= n < N}, restricted
/// to |word| <= max_len and i <= max_d, ascending.
std::vector<ModuleMonomial> irr_R1_closed_form(const Presentation& p,
                                               const std::vector<AlgebraMonomial>& irr_s,
                                               std::uint32_t max_len, std::uint32_t max_d);

/// Reduction modulo Q, together with an R1 slice sized to h when S is D-free.
ModuleElement quotient_normal_form(const Presentation& p, const ActionEngine& engine,
                                   const ModuleElement& h);

struct R1Check {
  std::size_t relations = 0;
  std::size_t compositions = 0;
  std::vector<CompositionOutcome> failing;
  std::uint32_t irr_max_len = 0;
  std::uint32_t irr_max_d = 0;
  std::vector<ModuleMonomial> irr_slice;
  std::vector<ModuleMonomial> closed_form;
  bool irr_matches() const { return irr_slice == closed_form; }
};

/// Builds the R1 slice for |u| <= max_len, i <= max_d, reduces all of its
/// inclusion and intersection compositions against the slice, and compares
/// Irr of the slice with the closed form on words short enough that every
/// reducing relation lies inside the slice.
R1Check check_R1(const Presentation& p, const ActionEngine& engine, std::uint32_t max_len,
                 std::uint32_t max_d);

/// Checks the naive basis prediction of mod_{C(B,N)}(Y|R) against the slice
/// {s(m)[u] : 0 <= m <= max_m, |u| <= max_len, i <= max_d}.
FreeModuleAnalysis analyze_free_module(const Presentation& p, const ActionEngine& engine,
                                       std::uint32_t max_len, std::uint32_t max_d,
                                       std::uint32_t max_m);

}  // namespace confmod
