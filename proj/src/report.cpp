#include "confmod/report.hpp"

#include "confmod/expression.hpp"

#include <json.hpp>

#include <sstream>

namespace confmod {

using nlohmann::ordered_json;

namespace {

template <class Tail>
ordered_json element_json(const Element<Monomial<Tail>>& f, const SymbolTable& symbols) {
  ordered_json terms = ordered_json::array();
  for (const auto& [u, c] : f) {
    terms.push_back({{"coefficient", render(c, symbols)},
                     {"monomial", render(u, symbols)},
                     {"weight", to_string(weight(u))}});
  }
  return {{"text", render(f, symbols)}, {"terms", terms}};
}

ordered_json header(const char* kind) {
  return {{"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string describe(const CompositionInstance& c, const RelationSet& s, const SymbolTable& symbols) {
  switch (c.kind) {
    case CompositionKind::Inclusion:
    case CompositionKind::Intersection:
      return "(" + s.labels[c.f] + ", " + s.labels[c.g] + ") via " + render_pattern(c.pattern, s, symbols);
    case CompositionKind::LeftMultiplication:
      return symbols.name(c.b) + "_(" + std::to_string(c.n) + ") " + s.labels[c.f];
  }
  return "";
}

ordered_json steps_json(const std::vector<ReductionStep>& trace, const RelationSet& s,
                        const SymbolTable& symbols) {
  ordered_json out = ordered_json::array();
  for (const auto& step : trace) {
    out.push_back({{"subtract", render_pattern(step.pattern, s, symbols)},
                   {"monomial", render(step.reduced, symbols)},
                   {"coefficient", render(step.coefficient, symbols)},
                   {"result", render(step.snapshot, symbols)}});
  }
  return out;
}

void text_steps(std::ostream& os, const std::vector<ReductionStep>& trace, const RelationSet& s,
                const SymbolTable& symbols, const char* indent) {
  for (const auto& step : trace) {
    os << indent << "- " << render(step.coefficient, symbols) << " * " << render_pattern(step.pattern, s, symbols)
       << " => " << render(step.snapshot, symbols) << "\n";
  }
}

}  // namespace

std::string render_pattern(const NormalSWordPattern& pattern, const RelationSet& relations,
                           const SymbolTable& symbols) {
  std::string out;
  for (const Letter& l : pattern.prefix) out += symbols.name(l.gen) + "_(" + std::to_string(l.n) + ") ";
  if (pattern.d_shift == 1) out += "D ";
  else if (pattern.d_shift > 1) out += "D^" + std::to_string(pattern.d_shift) + " ";
  return out + relations.labels.at(pattern.relation);
}

std::string format_element(const ModuleElement& f, const SymbolTable& symbols, Format format) {
  if (format == Format::Text) return render(f, symbols) + "\n";
  ordered_json j = header("module-element");
  j["element"] = element_json(f, symbols);
  return dump(j);
}

std::string format_element(const AlgebraElement& f, const SymbolTable& symbols, Format format) {
  if (format == Format::Text) return render(f, symbols) + "\n";
  ordered_json j = header("algebra-element");
  j["element"] = element_json(f, symbols);
  return dump(j);
}

std::string format_words(const std::vector<ModuleMonomial>& words, const SymbolTable& symbols,
                         Format format) {
  if (format == Format::Text) {
    std::string out;
    for (const auto& u : words) out += render(u, symbols) + "\n";
    return out;
  }
  ordered_json j = header("irr");
  j["count"] = words.size();
  ordered_json list = ordered_json::array();
  for (const auto& u : words) list.push_back({{"monomial", render(u, symbols)}, {"weight", to_string(weight(u))}});
  j["monomials"] = list;
  return dump(j);
}

std::string format_reduction(const Presentation& p, const ModuleElement& input, const Reduction& r,
                             const RelationSet& relations, bool with_trace, Format format) {
  if (format == Format::Text) {
    if (!with_trace) return render(r.normal_form, p.symbols) + "\n";
    std::ostringstream os;
    os << "confmod-reduce-report v" << kReportSchemaVersion << "\n";
    os << "input: " << render(input, p.symbols) << "\n";
    os << "steps: " << r.trace.size() << "\n";
    text_steps(os, r.trace, relations, p.symbols, "  ");
    os << "normal-form: " << render(r.normal_form, p.symbols) << "\n";
    return os.str();
  }
  ordered_json j = header("reduction");
  j["preset"] = p.name;
  j["input"] = element_json(input, p.symbols);
  if (with_trace) j["trace"] = steps_json(r.trace, relations, p.symbols);
  j["normal_form"] = element_json(r.normal_form, p.symbols);
  return dump(j);
}

namespace {

ordered_json freemod_json(const Presentation& p, const FreeModuleAnalysis& a) {
  ordered_json irr_s = ordered_json::array();
  for (const auto& w : a.irr_s) irr_s.push_back(render(w, p.symbols));
  ordered_json j = {{"d_free", a.d_free},
                    {"bounds", {{"max_len", a.max_len}, {"max_d", a.max_d}, {"max_m", a.max_m}}},
                    {"slice_size", a.slice_size},
                    {"irr_s", irr_s},
                    {"conclusive", a.conclusive},
                    {"consistent", a.consistent}};
  if (!a.consistent) {
    j["witness"] = element_json(a.witness, p.symbols);
    j["witness_source"] = a.witness_source;
    j["witness_source_value"] = element_json(a.witness_source_value, p.symbols);
  }
  return j;
}

void freemod_text(std::ostream& os, const Presentation& p, const FreeModuleAnalysis& a) {
  os << "free-module analysis:\n";
  os << "  algebra relations D-free: " << (a.d_free ? "yes" : "no") << "\n";
  os << "  slice: s_(m) [u] with m <= " << a.max_m << ", |u| <= " << a.max_len << ", i <= " << a.max_d << " ("
     << a.slice_size << " nonzero elements)\n";
  os << "  Irr(S) D-free words:";
  for (const auto& w : a.irr_s) os << " " << render(w, p.symbols) << ";";
  os << "\n";
  if (!a.conclusive) os << "  note: a pivot had a non-constant coefficient; the analysis is partial\n";
  if (a.consistent) {
    os << "  naive basis {[a_(n) D^i y] : [a] in Irr(S)} consistent on the slice\n";
  } else {
    os << "  naive basis {[a_(n) D^i y] : [a] in Irr(S)} INCONSISTENT\n";
    os << "  witness: " << render(a.witness, p.symbols) << " lies in subm(R)\n";
    os << "  from: " << a.witness_source << " = " << render(a.witness_source_value, p.symbols) << "\n";
  }
}

}  // namespace

std::string format_gsb(const Presentation& p, const GsbReport& report, Format format) {
  const RelationSet s = module_relation_set(p);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& o : report.outcomes) ++counts[static_cast<int>(o.instance.kind)];

  if (format == Format::Json) {
    ordered_json j = header("gsb-report");
    j["preset"] = report.preset;
    j["uniform_bound"] = report.uniform_bound;
    j["window"] = report.window;
    ordered_json rels = ordered_json::array();
    for (std::size_t k = 0; k < s.size(); ++k)
      rels.push_back({{"label", s.labels[k]}, {"value", render(s.values[k], p.symbols)}});
    j["relations"] = rels;
    ordered_json outs = ordered_json::array();
    for (const auto& o : report.outcomes) {
      ordered_json e = {{"kind", composition_kind_name(o.instance.kind)},
                        {"participants", describe(o.instance, s, p.symbols)},
                        {"overlap", render(o.instance.overlap, p.symbols)},
                        {"value", render(o.instance.value, p.symbols)},
                        {"reduced_to_zero", o.zero()},
                        {"residual", element_json(o.residual, p.symbols)}};
      e["trace"] = steps_json(o.trace, s, p.symbols);
      outs.push_back(e);
    }
    j["compositions"] = outs;
    ordered_json certs = ordered_json::array();
    for (const auto& c : report.certificates)
      certs.push_back({{"generator", p.symbols.name(c.b)},
                       {"relation", s.labels[c.f]},
                       {"locality", c.locality},
                       {"closed", c.closed}});
    j["closure"] = certs;
    if (report.freemod) j["free_module"] = freemod_json(p, *report.freemod);
    j["notes"] = report.notes;
    j["warnings"] = p.warnings;
    j["failing"] = report.failing();
    j["verdict"] = verdict_name(report.verdict);
    return dump(j);
  }

  std::ostringstream os;
  os << "confmod-gsb-report v" << kReportSchemaVersion << "\n";
  os << "preset: " << report.preset << "\n";
  os << "uniform-bound: " << report.uniform_bound << "\n";
  os << "window: " << report.window << " (n in [" << report.uniform_bound << ", "
     << report.uniform_bound + report.window << "])\n";
  for (const auto& w : p.warnings) os << "warning: " << w << "\n";
  os << "relations:\n";
  for (std::size_t k = 0; k < s.size(); ++k) os << "  " << s.labels[k] << ": " << render(s.values[k], p.symbols) << "\n";
  os << "compositions: " << report.outcomes.size() << " (inclusion " << counts[0] << ", intersection " << counts[1]
     << ", left-multiplication " << counts[2] << ")\n";
  for (const auto& o : report.outcomes) {
    os << "  [" << composition_kind_name(o.instance.kind) << "] " << describe(o.instance, s, p.symbols)
       << ": w = " << render(o.instance.overlap, p.symbols) << "\n";
    os << "    value: " << render(o.instance.value, p.symbols) << "\n";
    text_steps(os, o.trace, s, p.symbols, "    ");
    os << "    result: " << (o.zero() ? "0" : "RESIDUAL " + render(o.residual, p.symbols)) << "\n";
  }
  os << "closure:\n";
  for (const auto& c : report.certificates) {
    os << "  " << p.symbols.name(c.b) << " on " << s.labels[c.f] << ": locality " << c.locality
       << (c.closed ? " <= " : " > ") << report.uniform_bound + report.window + 1
       << (c.closed ? " closed" : " open") << "\n";
  }
  if (report.freemod) freemod_text(os, p, *report.freemod);
  for (const auto& n : report.notes) os << "note: " << n << "\n";
  os << "failing: " << report.failing() << "\n";
  os << "verdict: " << verdict_name(report.verdict) << "\n";
  return os.str();
}

std::string format_axioms(const AxiomReport& report, Format format) {
  if (format == Format::Json) {
    ordered_json j = header("axiom-report");
    j["preset"] = report.preset;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    ordered_json fams = ordered_json::array();
    for (const auto& f : report.families)
      fams.push_back({{"identity", identity_name(f.identity)}, {"passed", f.passed}, {"total", f.total}});
    j["families"] = fams;
    ordered_json ces = ordered_json::array();
    for (const auto& c : report.counterexamples)
      ces.push_back({{"identity", identity_name(c.identity)}, {"input", c.input}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    j["counterexamples"] = ces;
    j["all_passed"] = report.all_passed();
    return dump(j);
  }
  std::ostringstream os;
  os << "confmod-axiom-report v" << kReportSchemaVersion << "\n";
  os << "preset: " << report.preset << "\n";
  os << "samples: " << report.samples << "\n";
  os << "seed: " << report.seed << "\n";
  for (const auto& f : report.families)
    os << identity_name(f.identity) << ": " << f.passed << "/" << f.total << "\n";
  for (const auto& c : report.counterexamples) {
    os << "counterexample [" << identity_name(c.identity) << "] " << c.input << "\n";
    os << "  lhs: " << c.lhs << "\n";
    os << "  rhs: " << c.rhs << "\n";
  }
  os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_freemod(const Presentation& p, const FreeModuleAnalysis& analysis,
                           const std::optional<R1Check>& r1, const std::vector<std::string>& notes,
                           Format format) {
  const bool ok = analysis.consistent && (!r1 || (r1->failing.empty() && r1->irr_matches()));
  if (format == Format::Json) {
    ordered_json j = header("freemod-report");
    j["preset"] = p.name;
    j["free_module"] = freemod_json(p, analysis);
    if (r1) {
      ordered_json fails = ordered_json::array();
      for (const auto& o : r1->failing) fails.push_back(render(o.residual, p.symbols));
      j["r1"] = {{"relations", r1->relations},
                 {"compositions", r1->compositions},
                 {"failing", fails},
                 {"irr_bounds", {{"max_len", r1->irr_max_len}, {"max_d", r1->irr_max_d}}},
                 {"irr_slice_count", r1->irr_slice.size()},
                 {"closed_form_count", r1->closed_form.size()},
                 {"irr_matches_closed_form", r1->irr_matches()}};
    }
    j["notes"] = notes;
    j["result"] = ok ? "PASS" : "FAIL";
    return dump(j);
  }
  std::ostringstream os;
  os << "confmod-freemod-report v" << kReportSchemaVersion << "\n";
  os << "preset: " << p.name << "\n";
  freemod_text(os, p, analysis);
  if (r1) {
    os << "R1 slice: " << r1->relations << " relations, " << r1->compositions << " compositions, "
       << r1->failing.size() << " not reducing to 0\n";
    os << "Irr(R1) on |w| <= " << r1->irr_max_len << ", i <= " << r1->irr_max_d << ": " << r1->irr_slice.size()
       << " words; closed form " << r1->closed_form.size() << " words; "
       << (r1->irr_matches() ? "equal" : "DIFFERENT") << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  os << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_presentation(const Presentation& p, Format format) {
  const auto& sym = p.symbols;
  if (format == Format::Json) {
    ordered_json j = header("presentation");
    j["name"] = p.name;
    j["algebra_generators"] = sym.algebra_generators();
    j["module_generators"] = sym.module_generators();
    j["parameters"] = sym.parameters();
    j["uniform_bound"] = p.locality.uniform_bound();
    ordered_json alg = ordered_json::array();
    for (const auto& r : p.algebra_relations) alg.push_back({{"label", r.label}, {"value", render(r.value, sym)}});
    j["algebra_relations"] = alg;
    j["d_free_gsb_asserted"] = p.d_free_gsb_asserted;
    ordered_json mod = ordered_json::array();
    for (const auto& r : p.module_relations) mod.push_back({{"label", r.label}, {"value", render(r.value, sym)}});
    j["module_relations"] = mod;
    j["warnings"] = p.warnings;
    return dump(j);
  }
  std::ostringstream os;
  os << "preset: " << p.name << "\n";
  os << "B:";
  for (const auto& b : sym.algebra_generators()) os << " " << b;
  os << "\nY:";
  for (const auto& y : sym.module_generators()) os << " " << y;
  os << "\nN: " << p.locality.uniform_bound() << "\n";
  for (const auto& r : p.algebra_relations) os << "S " << r.label << ": " << render(r.value, sym) << "\n";
  for (const auto& r : p.module_relations) os << "Q " << r.label << ": " << render(r.value, sym) << "\n";
  for (const auto& w : p.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace confmod
