#pragma once

#include "confmod/axioms.hpp"
#include "confmod/gsb.hpp"
#include "confmod/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confmod {

enum class Format { Text, Json };

inline constexpr int kReportSchemaVersion = 1;

/// Text: the rendered element on one line. Every output ends with '\n'.
std::string format_element(const ModuleElement& f, const SymbolTable& symbols, Format format);
std::string format_element(const AlgebraElement& f, const SymbolTable& symbols, Format format);

/// Text: one monomial per line.
std::string format_words(const std::vector<ModuleMonomial>& words, const SymbolTable& symbols,
                         Format format);

/// Text: the normal form line, preceded by the trace when `with_trace`.
std::string format_reduction(const Presentation& p, const ModuleElement& input, const Reduction& r,
                             const RelationSet& relations, bool with_trace, Format format);

std::string format_gsb(const Presentation& p, const GsbReport& report, Format format);
std::string format_axioms(const AxiomReport& report, Format format);
std::string format_freemod(const Presentation& p, const FreeModuleAnalysis& analysis,
                           const std::optional<R1Check>& r1, const std::vector<std::string>& notes,
                           Format format);
std::string format_presentation(const Presentation& p, Format format);

/// "v_(1) D^2 f2" style rendering of a normal S-word.
std::string render_pattern(const NormalSWordPattern& pattern, const RelationSet& relations,
                           const SymbolTable& symbols);

}  // namespace confmod
