#include "confmod/confmod.h"

#include "confmod/axioms.hpp"
#include "confmod/expression.hpp"
#include "confmod/gsb.hpp"
#include "confmod/presets.hpp"
#include "confmod/report.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

using namespace confmod;

namespace {

struct State {
  Presentation presentation;
  std::unique_ptr<ActionEngine> engine;
};

thread_local std::string last_error;
thread_local long last_offset = -1;

confmod_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CONFMOD_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return CONFMOD_ERR_PARSE;
    case ErrorCode::UnknownSymbol: return CONFMOD_ERR_UNKNOWN_SYMBOL;
    case ErrorCode::MalformedWord: return CONFMOD_ERR_MALFORMED_WORD;
    case ErrorCode::ZeroElement: return CONFMOD_ERR_ZERO_ELEMENT;
    case ErrorCode::NonMonicRelation: return CONFMOD_ERR_NON_MONIC;
    case ErrorCode::NotDFree: return CONFMOD_ERR_NOT_D_FREE;
    case ErrorCode::InvalidDelta: return CONFMOD_ERR_INVALID_DELTA;
    case ErrorCode::NonUniformLocality: return CONFMOD_ERR_NON_UNIFORM_LOCALITY;
    case ErrorCode::Io: return CONFMOD_ERR_IO;
  }
  return CONFMOD_ERR_INTERNAL;
}

template <class F>
confmod_status guarded(F&& body) {
  last_error.clear();
  last_offset = -1;
  try {
    body();
    return CONFMOD_OK;
  } catch (const confmod::ParseError& e) {
    last_error = e.what();
    last_offset = static_cast<long>(e.offset());
    return CONFMOD_ERR_PARSE;
  } catch (const Error& e) {
    last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return CONFMOD_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CONFMOD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CONFMOD_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

Format format_of(confmod_format f) { return f == CONFMOD_FORMAT_JSON ? Format::Json : Format::Text; }

std::shared_ptr<State> make_state(Presentation p) {
  auto s = std::make_shared<State>();
  s->presentation = std::move(p);
  s->engine = std::make_unique<ActionEngine>(s->presentation.locality);
  return s;
}

ModuleElement parse_module(const State& s, const char* expr) {
  require(expr, "expression");
  return normalize_module(parse_expression(expr, s.presentation.symbols), *s.engine);
}

}  // namespace

struct confmod_session {
  std::shared_ptr<State> state;
};

struct confmod_element {
  std::shared_ptr<State> state;
  ModuleElement value;
};

extern "C" {

const char* confmod_version(void) { return "1.0.0"; }

const char* confmod_last_error(void) { return last_error.c_str(); }

long confmod_last_error_offset(void) { return last_offset; }

confmod_status confmod_session_create_preset(const char* preset, const char* delta, const char* alpha,
                                             const char* lie_json, confmod_session** out) {
  return guarded([&] {
    require(preset, "preset");
    require(out, "out");
    *out = nullptr;
    const std::string name(preset);
    const ParamValue d = parse_param_value(delta ? delta : "0", "delta");
    const ParamValue a = parse_param_value(alpha ? alpha : "alpha", "alpha");
    Presentation p;
    if (name == "virasoro") {
      p = virasoro_module(d, a);
    } else if (name == "vircur") {
      p = vir_cur_module(lie_json ? load_lie_data(lie_json) : abelian_lie_data(), d, a);
    } else if (name == "remark") {
      p = remark_counterexample();
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
    }
    *out = new confmod_session{make_state(std::move(p))};
  });
}

confmod_status confmod_session_create_json(const char* presentation_json, const char* alpha,
                                           confmod_session** out) {
  return guarded([&] {
    require(presentation_json, "presentation");
    require(out, "out");
    *out = nullptr;
    Presentation p = load_presentation(presentation_json);
    if (alpha != nullptr) {
      const ParamValue a = parse_param_value(alpha, "alpha");
      if (a.value) specialize_parameter(p, "alpha", *a.value);
    }
    *out = new confmod_session{make_state(std::move(p))};
  });
}

void confmod_session_destroy(confmod_session* session) { delete session; }

void confmod_string_free(char* text) { std::free(text); }

confmod_status confmod_session_describe(const confmod_session* session, confmod_format format, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    *out = copy_string(format_presentation(session->state->presentation, format_of(format)));
  });
}

confmod_status confmod_normalize(const confmod_session* session, const char* expr, confmod_format format,
                                 char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    require(expr, "expression");
    const RawExpr raw = parse_expression(expr, s.presentation.symbols);
    if (expression_kind(raw) == SymbolKind::Algebra)
      *out = copy_string(format_element(normalize_algebra(raw, *s.engine), s.presentation.symbols, format_of(format)));
    else
      *out = copy_string(format_element(normalize_module(raw, *s.engine), s.presentation.symbols, format_of(format)));
  });
}

confmod_status confmod_act(const confmod_session* session, const char* acting, uint32_t n, const char* target,
                           confmod_format format, char** out) {
  return guarded([&] {
    require(session, "session");
    require(acting, "acting expression");
    require(out, "out");
    const State& s = *session->state;
    const AlgebraElement g = normalize_algebra(parse_expression(acting, s.presentation.symbols), *s.engine);
    const ModuleElement f = parse_module(s, target);
    *out = copy_string(format_element(s.engine->act_element(g, n, f), s.presentation.symbols, format_of(format)));
  });
}

confmod_status confmod_reduce(const confmod_session* session, const char* expr, int with_trace, int randomized,
                              uint64_t seed, confmod_format format, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    const ModuleElement h = parse_module(s, expr);
    const RelationSet q = module_relation_set(s.presentation);
    ReduceOptions options;
    options.strategy = randomized ? ReductionStrategy::Randomized : ReductionStrategy::LeadingFirst;
    options.seed = seed;
    options.record_trace = with_trace != 0;
    const Reduction r = reduce(*s.engine, q, h, options);
    *out = copy_string(format_reduction(s.presentation, h, r, q, with_trace != 0, format_of(format)));
  });
}

confmod_status confmod_quotient_normal_form(const confmod_session* session, const char* expr,
                                            confmod_format format, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    const ModuleElement h = parse_module(s, expr);
    *out = copy_string(format_element(quotient_normal_form(s.presentation, *s.engine, h), s.presentation.symbols,
                                      format_of(format)));
  });
}

confmod_status confmod_check_gsb(const confmod_session* session, int window, confmod_format format,
                                 confmod_verdict* verdict, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    GsbOptions options;
    if (window >= 0) options.window = static_cast<std::uint32_t>(window);
    const GsbReport report = check_gsb(s.presentation, *s.engine, options);
    if (verdict != nullptr) {
      switch (report.verdict) {
        case Verdict::Pass: *verdict = CONFMOD_VERDICT_PASS; break;
        case Verdict::Fail: *verdict = CONFMOD_VERDICT_FAIL; break;
        case Verdict::PassWithinWindow: *verdict = CONFMOD_VERDICT_PASS_WITHIN_WINDOW; break;
      }
    }
    *out = copy_string(format_gsb(s.presentation, report, format_of(format)));
  });
}

confmod_status confmod_irr(const confmod_session* session, uint32_t max_len, uint32_t max_d, confmod_format format,
                           size_t* count, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    const auto words = irr(s.presentation, max_len, max_d);
    if (count != nullptr) *count = words.size();
    *out = copy_string(format_words(words, s.presentation.symbols, format_of(format)));
  });
}

confmod_status confmod_verify_axioms(const confmod_session* session, uint32_t samples, uint64_t seed,
                                     confmod_format format, int* all_passed, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    if (samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
    const State& s = *session->state;
    const AxiomReport report = verify_axioms(s.presentation, ActionOps::from_engine(*s.engine), samples, seed);
    if (all_passed != nullptr) *all_passed = report.all_passed() ? 1 : 0;
    *out = copy_string(format_axioms(report, format_of(format)));
  });
}

confmod_status confmod_freemod(const confmod_session* session, uint32_t max_len, uint32_t max_d,
                               confmod_format format, int* consistent, char** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    const State& s = *session->state;
    const Presentation& p = s.presentation;
    std::vector<std::string> notes;
    const FreeModuleAnalysis analysis =
        analyze_free_module(p, *s.engine, max_len, max_d, p.locality.uniform_bound() + 1);
    std::optional<R1Check> r1;
    if (p.algebra_relations.empty()) {
      notes.push_back("no algebra relations; R is empty");
    } else if (algebra_relations_d_free(p)) {
      r1 = check_R1(p, *s.engine, max_len, max_d);
    } else {
      notes.push_back("some algebra relation has a monomial carrying D (strict D-free predicate); "
                      "the R1 reduction does not apply");
    }
    const bool ok = analysis.consistent && (!r1 || (r1->failing.empty() && r1->irr_matches()));
    if (consistent != nullptr) *consistent = ok ? 1 : 0;
    *out = copy_string(format_freemod(p, analysis, r1, notes, format_of(format)));
  });
}

confmod_status confmod_element_parse(const confmod_session* session, const char* expr, confmod_element** out) {
  return guarded([&] {
    require(session, "session");
    require(out, "out");
    *out = nullptr;
    ModuleElement f = parse_module(*session->state, expr);
    *out = new confmod_element{session->state, std::move(f)};
  });
}

confmod_status confmod_element_act(const confmod_session* session, const char* acting, uint32_t n,
                                   const confmod_element* target, confmod_element** out) {
  return guarded([&] {
    require(session, "session");
    require(acting, "acting expression");
    require(target, "target");
    require(out, "out");
    *out = nullptr;
    if (target->state != session->state)
      throw Error(ErrorCode::InvalidArgument, "element belongs to a different session");
    const State& s = *session->state;
    const AlgebraElement g = normalize_algebra(parse_expression(acting, s.presentation.symbols), *s.engine);
    *out = new confmod_element{session->state, s.engine->act_element(g, n, target->value)};
  });
}

confmod_status confmod_element_apply_d(const confmod_element* element, uint32_t j, confmod_element** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    *out = new confmod_element{element->state, element->state->engine->apply_D(element->value, j)};
  });
}

confmod_status confmod_element_reduce(const confmod_element* element, confmod_element** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    const State& s = *element->state;
    const Reduction r = reduce(*s.engine, module_relation_set(s.presentation), element->value);
    *out = new confmod_element{element->state, r.normal_form};
  });
}

confmod_status confmod_element_render(const confmod_element* element, char** out) {
  return guarded([&] {
    require(element, "element");
    require(out, "out");
    *out = copy_string(render(element->value, element->state->presentation.symbols));
  });
}

size_t confmod_element_term_count(const confmod_element* element) {
  return element == nullptr ? 0 : element->value.size();
}

int confmod_element_is_zero(const confmod_element* element) {
  return element == nullptr || element->value.is_zero() ? 1 : 0;
}

int confmod_element_equal(const confmod_element* a, const confmod_element* b) {
  if (a == nullptr || b == nullptr || a->state != b->state) return -1;
  return a->value == b->value ? 1 : 0;
}

void confmod_element_destroy(confmod_element* element) { delete element; }

}  // extern "C"
