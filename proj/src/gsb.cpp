#include "confmod/gsb.hpp"

#include "confmod/expression.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace confmod {

const char* composition_kind_name(CompositionKind k) {
  switch (k) {
    case CompositionKind::Inclusion: return "inclusion";
    case CompositionKind::Intersection: return "intersection";
    case CompositionKind::LeftMultiplication: return "left-multiplication";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::PassWithinWindow: return "PASS_WITHIN_WINDOW";
  }
  return "UNKNOWN";
}

std::size_t GsbReport::failing() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.zero(); }));
}

RelationSet module_relation_set(const Presentation& p) {
  RelationSet s;
  for (const auto& r : p.module_relations) {
    if (!is_monic(r.value))
      throw Error(ErrorCode::NonMonicRelation, "module relation '" + r.label + "' is not monic");
    s.labels.push_back(r.label);
    s.values.push_back(r.value);
  }
  return s;
}

ModuleElement normal_s_word_value(const ActionEngine& engine, const RelationSet& s,
                                  const NormalSWordPattern& p) {
  ModuleElement v = engine.apply_D(s.values.at(p.relation), p.d_shift);
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it) v = engine.act_generator(it->gen, it->n, v);
  return v;
}

ModuleMonomial normal_s_word_leading(const RelationSet& s, const NormalSWordPattern& p) {
  const ModuleMonomial& bar = s.values.at(p.relation).leading_monomial();
  ModuleMonomial w;
  w.chain = p.prefix;
  w.chain.insert(w.chain.end(), bar.chain.begin(), bar.chain.end());
  w.d = bar.d + p.d_shift;
  w.tail = bar.tail;
  return w;
}

std::optional<NormalSWordPattern> match(const ModuleMonomial& w, const ModuleMonomial& s_bar,
                                        std::size_t relation, std::uint32_t uniform_bound) {
  if (w.tail != s_bar.tail || w.d < s_bar.d || w.chain.size() < s_bar.chain.size()) return std::nullopt;
  const std::size_t k = w.chain.size() - s_bar.chain.size();
  if (!std::equal(s_bar.chain.begin(), s_bar.chain.end(), w.chain.begin() + k)) return std::nullopt;
  NormalSWordPattern p;
  p.prefix.assign(w.chain.begin(), w.chain.begin() + k);
  for (const Letter& l : p.prefix)
    if (l.n >= uniform_bound) return std::nullopt;
  p.d_shift = w.d - s_bar.d;
  p.relation = relation;
  return p;
}

std::vector<CompositionInstance> find_inclusion_compositions(const ActionEngine& engine,
                                                             const RelationSet& s, std::size_t f,
                                                             std::size_t g) {
  std::vector<CompositionInstance> out;
  const ModuleMonomial& f_bar = s.values.at(f).leading_monomial();
  auto p = match(f_bar, s.values.at(g).leading_monomial(), g, engine.locality_map().uniform_bound());
  if (!p) return out;
  if (f == g && p->prefix.empty() && p->d_shift == 0) return out;
  CompositionInstance c;
  c.kind = CompositionKind::Inclusion;
  c.f = f;
  c.g = g;
  c.pattern = *p;
  c.overlap = f_bar;
  c.value = s.values[f] - normal_s_word_value(engine, s, *p);
  out.push_back(std::move(c));
  return out;
}

std::vector<CompositionInstance> find_intersection_compositions(const ActionEngine& engine,
                                                                const RelationSet& s, std::size_t f,
                                                                std::size_t g) {
  std::vector<CompositionInstance> out;
  const ModuleMonomial& f_bar = s.values.at(f).leading_monomial();
  const ModuleMonomial& g_bar = s.values.at(g).leading_monomial();
  // f-bar D^i = a(n) g-bar with a D-free: g-bar's chain is a proper suffix of
  // f-bar's and only the tail degree differs.
  if (f_bar.tail != g_bar.tail || g_bar.d <= f_bar.d || f_bar.chain.size() <= g_bar.chain.size())
    return out;
  const std::size_t k = f_bar.chain.size() - g_bar.chain.size();
  if (!std::equal(g_bar.chain.begin(), g_bar.chain.end(), f_bar.chain.begin() + k)) return out;
  CompositionInstance c;
  c.kind = CompositionKind::Intersection;
  c.f = f;
  c.g = g;
  c.pattern.prefix.assign(f_bar.chain.begin(), f_bar.chain.begin() + k);
  c.pattern.d_shift = 0;
  c.pattern.relation = g;
  const std::uint32_t i = g_bar.d - f_bar.d;
  c.overlap = f_bar;
  c.overlap.d = g_bar.d;
  c.value = engine.apply_D(s.values[f], i) - normal_s_word_value(engine, s, c.pattern);
  // the D-shift of f is recorded in the instance via the overlap degree
  out.push_back(std::move(c));
  return out;
}

std::vector<CompositionInstance> left_mult_compositions(const ActionEngine& engine,
                                                        const RelationSet& s, std::size_t f,
                                                        std::uint32_t window) {
  std::vector<CompositionInstance> out;
  const std::uint32_t N = engine.locality_map().uniform_bound();
  for (std::uint32_t b = 0; b < engine.locality_map().algebra_count(); ++b) {
    for (std::uint32_t n = N; n <= N + window; ++n) {
      CompositionInstance c;
      c.kind = CompositionKind::LeftMultiplication;
      c.f = f;
      c.g = f;
      c.b = AlgebraGen{b};
      c.n = n;
      c.overlap = s.values.at(f).leading_monomial();
      c.overlap.chain.insert(c.overlap.chain.begin(), Letter{AlgebraGen{b}, n});
      c.value = engine.act_generator(AlgebraGen{b}, n, s.values[f]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

std::optional<NormalSWordPattern> first_match(const RelationSet& s, const ModuleMonomial& u,
                                              std::uint32_t N) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (auto p = match(u, s.values[j].leading_monomial(), j, N)) return p;
  return std::nullopt;
}

std::vector<NormalSWordPattern> all_matches(const RelationSet& s, const ModuleMonomial& u,
                                            std::uint32_t N) {
  std::vector<NormalSWordPattern> out;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (auto p = match(u, s.values[j].leading_monomial(), j, N)) out.push_back(std::move(*p));
  return out;
}

void cancel(const ActionEngine& engine, const RelationSet& s, ModuleElement& work,
            const ModuleMonomial& u, const Coefficient& c, const NormalSWordPattern& p) {
  const ModuleElement value = normal_s_word_value(engine, s, p);
  if (value.leading_monomial() != u || !value.leading_coefficient().is_one())
    throw Error(ErrorCode::InvalidArgument, "normal S-word leading term does not match its pattern");
  work.add_scaled(value, -c);
}

}  // namespace

Reduction reduce(const ActionEngine& engine, const RelationSet& s, const ModuleElement& h,
                 const ReduceOptions& options) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!is_monic(s.values[j]))
      throw Error(ErrorCode::NonMonicRelation, "relation '" + s.labels[j] + "' is not monic");
  const std::uint32_t N = engine.locality_map().uniform_bound();
  Reduction out;
  ModuleElement work = h;

  if (options.strategy == ReductionStrategy::LeadingFirst) {
    ModuleElement remainder;
    while (!work.is_zero()) {
      const ModuleMonomial u = work.leading_monomial();
      const Coefficient c = work.leading_coefficient();
      auto p = first_match(s, u, N);
      if (!p) {
        remainder.add(u, c);
        work.erase(u);
        continue;
      }
      cancel(engine, s, work, u, c, *p);
      if (options.record_trace) out.trace.push_back({*p, u, c, work + remainder});
    }
    out.normal_form = std::move(remainder);
    return out;
  }

  std::mt19937_64 rng(options.seed);
  while (true) {
    std::vector<std::pair<ModuleMonomial, std::vector<NormalSWordPattern>>> reducible;
    for (const auto& [u, c] : work) {
      auto ps = all_matches(s, u, N);
      if (!ps.empty()) reducible.emplace_back(u, std::move(ps));
    }
    if (reducible.empty()) break;
    const auto& [u, ps] = reducible[rng() % reducible.size()];
    const NormalSWordPattern& p = ps[rng() % ps.size()];
    const Coefficient c = work.coefficient(u);
    const ModuleMonomial target = u;
    const NormalSWordPattern chosen = p;
    cancel(engine, s, work, target, c, chosen);
    if (options.record_trace) out.trace.push_back({chosen, target, c, work});
  }
  out.normal_form = std::move(work);
  return out;
}

std::uint32_t default_window(const RelationSet& s) {
  std::uint32_t max_d = 0;
  std::uint32_t max_len = 0;
  for (const auto& f : s.values) {
    const auto& bar = f.leading_monomial();
    max_d = std::max(max_d, bar.d);
    max_len = std::max(max_len, static_cast<std::uint32_t>(bar.length()));
  }
  return max_d + max_len + 2;
}

GsbReport check_gsb(const Presentation& p, const ActionEngine& engine, const GsbOptions& options) {
  validate(p);
  if (!engine.locality_map().is_uniform())
    throw Error(ErrorCode::NonUniformLocality, "the composition check needs a uniform locality bound");
  const RelationSet s = module_relation_set(p);
  GsbReport report;
  report.preset = p.name;
  report.uniform_bound = engine.locality_map().uniform_bound();
  report.window = options.window.value_or(default_window(s));

  std::vector<CompositionInstance> instances;
  for (std::size_t f = 0; f < s.size(); ++f)
    for (std::size_t g = 0; g < s.size(); ++g)
      for (auto& c : find_inclusion_compositions(engine, s, f, g)) instances.push_back(std::move(c));
  for (std::size_t f = 0; f < s.size(); ++f)
    for (std::size_t g = 0; g < s.size(); ++g)
      for (auto& c : find_intersection_compositions(engine, s, f, g)) instances.push_back(std::move(c));
  for (std::size_t f = 0; f < s.size(); ++f)
    for (auto& c : left_mult_compositions(engine, s, f, report.window)) instances.push_back(std::move(c));

  ReduceOptions ro;
  ro.record_trace = options.record_traces;
  for (auto& c : instances) {
    Reduction r = reduce(engine, s, c.value, ro);
    report.outcomes.push_back({std::move(c), std::move(r.normal_form), std::move(r.trace)});
  }

  const std::uint32_t N = report.uniform_bound;
  bool all_closed = true;
  for (std::size_t f = 0; f < s.size(); ++f) {
    for (std::uint32_t b = 0; b < engine.locality_map().algebra_count(); ++b) {
      ClosureCertificate cert;
      cert.f = f;
      cert.b = AlgebraGen{b};
      cert.locality = engine.locality(cert.b, s.values[f]);
      cert.closed = cert.locality <= N + report.window + 1;
      all_closed = all_closed && cert.closed;
      report.certificates.push_back(cert);
    }
  }

  if (s.size() == 0 && !p.algebra_relations.empty()) {
    report.notes.push_back("no module relations; checking the free module over C(B,N|S) instead");
    report.freemod = analyze_free_module(p, engine, 2, 2, N + 1);
  }

  if (report.failing() > 0 || (report.freemod && !report.freemod->consistent))
    report.verdict = Verdict::Fail;
  else if (!all_closed)
    report.verdict = Verdict::PassWithinWindow;
  else
    report.verdict = Verdict::Pass;
  return report;
}

namespace {

template <class Visit>
void chains_ending_before(const LocalityMap& locality, std::size_t length,
                          std::optional<AlgebraGen> next, std::optional<ModuleGen> tail,
                          std::vector<Letter>& suffix, Visit&& visit) {
  if (length == 0) {
    visit(suffix);
    return;
  }
  for (std::uint32_t b = 0; b < locality.algebra_count(); ++b) {
    const AlgebraGen gen{b};
    const std::uint32_t bound = next ? locality.at(gen, *next) : locality.at(gen, *tail);
    for (std::uint32_t n = 0; n < bound; ++n) {
      suffix.insert(suffix.begin(), Letter{gen, n});
      chains_ending_before(locality, length - 1, gen, std::nullopt, suffix, visit);
      suffix.erase(suffix.begin());
    }
  }
}

}  // namespace

std::vector<ModuleMonomial> enumerate_module_words(const LocalityMap& locality, std::uint32_t max_len,
                                                   std::uint32_t max_d) {
  std::vector<ModuleMonomial> out;
  for (std::uint32_t y = 0; y < locality.module_count(); ++y) {
    for (std::uint32_t len = 1; len <= max_len; ++len) {
      std::vector<Letter> suffix;
      chains_ending_before(locality, len - 1, std::nullopt, ModuleGen{y}, suffix,
                           [&](const std::vector<Letter>& chain) {
                             for (std::uint32_t d = 0; d <= max_d; ++d) {
                               ModuleMonomial u;
                               u.chain = chain;
                               u.d = d;
                               u.tail = ModuleGen{y};
                               out.push_back(std::move(u));
                             }
                           });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgebraMonomial> enumerate_algebra_words(const LocalityMap& locality,
                                                     std::uint32_t max_len) {
  std::vector<AlgebraMonomial> out;
  for (std::uint32_t t = 0; t < locality.algebra_count(); ++t) {
    for (std::uint32_t len = 1; len <= max_len; ++len) {
      std::vector<Letter> suffix;
      chains_ending_before(locality, len - 1, AlgebraGen{t}, std::nullopt, suffix,
                           [&](const std::vector<Letter>& chain) {
                             AlgebraMonomial a;
                             a.chain = chain;
                             a.tail = AlgebraGen{t};
                             out.push_back(std::move(a));
                           });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleMonomial> irr(const RelationSet& s, const LocalityMap& locality, std::uint32_t max_len,
                                std::uint32_t max_d) {
  std::vector<ModuleMonomial> out;
  for (auto& u : enumerate_module_words(locality, max_len, max_d))
    if (!first_match(s, u, locality.uniform_bound())) out.push_back(std::move(u));
  return out;
}

std::vector<ModuleMonomial> irr(const Presentation& p, std::uint32_t max_len, std::uint32_t max_d) {
  return irr(module_relation_set(p), p.locality, max_len, max_d);
}

namespace {

// s-bar occurs in the D-free word a: its chain letters appear consecutively
// and are followed by its tail generator, as a letter with any exponent or
// as the tail of a.
bool contains_leading(const AlgebraMonomial& a, const AlgebraMonomial& bar) {
  const std::size_t k = bar.chain.size();
  const std::size_t len = a.chain.size() + 1;
  for (std::size_t p = 0; p + k < len; ++p) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = a.chain[p + j] == bar.chain[j];
    if (!ok) continue;
    const std::size_t q = p + k;
    const AlgebraGen next = q < a.chain.size() ? a.chain[q].gen : a.tail;
    if (next == bar.tail) return true;
  }
  return false;
}

}  // namespace

std::vector<AlgebraMonomial> algebra_irr_dfree(const Presentation& p, std::uint32_t max_len) {
  std::vector<AlgebraMonomial> bars;
  for (const auto& r : p.algebra_relations) {
    const auto& bar = r.value.leading_monomial();
    if (bar.d_free()) bars.push_back(bar);
  }
  std::vector<AlgebraMonomial> out;
  for (auto& a : enumerate_algebra_words(p.locality, max_len)) {
    bool reducible = false;
    for (const auto& bar : bars) reducible = reducible || contains_leading(a, bar);
    if (!reducible) out.push_back(std::move(a));
  }
  return out;
}

RelationSet build_R1(const Presentation& p, const ActionEngine& engine, std::uint32_t max_len,
                     std::uint32_t max_d) {
  if (!algebra_relations_d_free(p))
    throw Error(ErrorCode::NotDFree, "some algebra relation has a monomial carrying D");
  const std::uint32_t N = engine.locality_map().uniform_bound();
  const auto words = enumerate_module_words(engine.locality_map(), max_len, max_d);
  RelationSet out;
  for (const auto& r : p.algebra_relations) {
    for (std::uint32_t m = 0; m < N; ++m) {
      for (const auto& u : words) {
        ModuleElement v = engine.act_element(r.value, m, ModuleElement(u));
        if (v.is_zero()) continue;
        auto lc = v.leading_coefficient().constant_value();
        if (!lc) throw Error(ErrorCode::NonMonicRelation, "R1 element with a non-constant leading coefficient");
        if (*lc != 1) v *= Coefficient(Rational(1 / *lc));
        out.labels.push_back(r.label + "_(" + std::to_string(m) + ") " + render(u, p.symbols));
        out.values.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<ModuleMonomial> irr_R1_closed_form(const Presentation& p,
                                               const std::vector<AlgebraMonomial>& irr_s,
                                               std::uint32_t max_len, std::uint32_t max_d) {
  std::set<ModuleMonomial> words;
  const std::uint32_t N = p.locality.uniform_bound();
  for (std::uint32_t y = 0; y < p.locality.module_count(); ++y) {
    for (std::uint32_t i = 0; i <= max_d; ++i) {
      if (max_len >= 1) {
        ModuleMonomial u;
        u.d = i;
        u.tail = ModuleGen{y};
        words.insert(u);
      }
      for (const auto& a : irr_s) {
        if (!a.d_free() || a.length() + 1 > max_len) continue;
        for (std::uint32_t n = 0; n < N; ++n) {
          ModuleMonomial u;
          u.chain = a.chain;
          u.chain.push_back(Letter{a.tail, n});
          u.d = i;
          u.tail = ModuleGen{y};
          words.insert(std::move(u));
        }
      }
    }
  }
  return {words.begin(), words.end()};
}

ModuleElement quotient_normal_form(const Presentation& p, const ActionEngine& engine,
                                   const ModuleElement& h) {
  RelationSet s = module_relation_set(p);
  if (!p.algebra_relations.empty() && algebra_relations_d_free(p) && !h.is_zero()) {
    std::uint32_t len = 0;
    std::uint32_t d = 0;
    for (const auto& [u, c] : h) {
      len = std::max(len, static_cast<std::uint32_t>(u.length()));
      d = std::max(d, u.d);
    }
    RelationSet r1 = build_R1(p, engine, len, d + len);
    s.labels.insert(s.labels.end(), r1.labels.begin(), r1.labels.end());
    s.values.insert(s.values.end(), r1.values.begin(), r1.values.end());
  }
  return reduce(engine, s, h).normal_form;
}

R1Check check_R1(const Presentation& p, const ActionEngine& engine, std::uint32_t max_len,
                 std::uint32_t max_d) {
  const RelationSet r1 = build_R1(p, engine, max_len, max_d);
  R1Check out;
  out.relations = r1.size();
  for (std::size_t f = 0; f < r1.size(); ++f) {
    for (std::size_t g = 0; g < r1.size(); ++g) {
      auto found = find_inclusion_compositions(engine, r1, f, g);
      auto inter = find_intersection_compositions(engine, r1, f, g);
      found.insert(found.end(), inter.begin(), inter.end());
      for (auto& c : found) {
        ++out.compositions;
        Reduction r = reduce(engine, r1, c.value);
        if (!r.normal_form.is_zero()) out.failing.push_back({std::move(c), std::move(r.normal_form), {}});
      }
    }
  }
  std::uint32_t shortest = 0;
  for (const auto& r : p.algebra_relations) {
    const auto len = static_cast<std::uint32_t>(r.value.leading_monomial().length());
    shortest = shortest == 0 ? len : std::min(shortest, len);
  }
  out.irr_max_len = max_len + shortest;
  out.irr_max_d = max_d;
  out.irr_slice = irr(r1, engine.locality_map(), out.irr_max_len, out.irr_max_d);
  out.closed_form = irr_R1_closed_form(p, algebra_irr_dfree(p, out.irr_max_len - 1), out.irr_max_len,
                                       out.irr_max_d);
  return out;
}

namespace {

// Monomials outside the predicted basis rank above every predicted one, so
// an echelon row led by a predicted word is supported on predicted words only.
struct RankedOrder {
  const std::set<ModuleMonomial>* predicted;
  bool operator()(const ModuleMonomial& u, const ModuleMonomial& v) const {
    const bool pu = predicted->count(u) > 0;
    const bool pv = predicted->count(v) > 0;
    if (pu != pv) return !pu;
    return compare(u, v) > 0;
  }
};

}  // namespace

FreeModuleAnalysis analyze_free_module(const Presentation& p, const ActionEngine& engine,
                                       std::uint32_t max_len, std::uint32_t max_d,
                                       std::uint32_t max_m) {
  FreeModuleAnalysis out;
  out.d_free = algebra_relations_d_free(p);
  out.max_len = max_len;
  out.max_d = max_d;
  out.max_m = max_m;

  struct Row {
    std::string label;
    ModuleElement value;
  };
  std::vector<Row> rows;
  std::uint32_t row_len = 0;
  std::uint32_t row_d = 0;
  const auto words = enumerate_module_words(engine.locality_map(), max_len, max_d);
  for (const auto& r : p.algebra_relations) {
    for (std::uint32_t m = 0; m <= max_m; ++m) {
      for (const auto& u : words) {
        ModuleElement v = engine.act_element(r.value, m, ModuleElement(u));
        if (v.is_zero()) continue;
        for (const auto& [w, c] : v) {
          row_len = std::max(row_len, static_cast<std::uint32_t>(w.length()));
          row_d = std::max(row_d, w.d);
        }
        rows.push_back({r.label + "_(" + std::to_string(m) + ") " + render(u, p.symbols), std::move(v)});
      }
    }
  }
  out.slice_size = rows.size();
  out.irr_s = algebra_irr_dfree(p, row_len > 0 ? row_len - 1 : 0);
  const auto predicted_list = irr_R1_closed_form(p, out.irr_s, row_len, row_d);
  const std::set<ModuleMonomial> predicted(predicted_list.begin(), predicted_list.end());
  const RankedOrder order{&predicted};

  using RankedRow = std::map<ModuleMonomial, Coefficient, RankedOrder>;
  std::map<ModuleMonomial, RankedRow, RankedOrder> pivots(order);
  for (const auto& row : rows) {
    RankedRow work(order);
    for (const auto& [w, c] : row.value) work.emplace(w, c);
    while (!work.empty()) {
      const auto lead = work.begin()->first;
      const Coefficient lc = work.begin()->second;
      auto pivot = pivots.find(lead);
      if (pivot == pivots.end()) {
        auto value = lc.constant_value();
        if (!value) {
          out.conclusive = false;
          break;
        }
        const Coefficient inv(Rational(1 / *value));
        for (auto& [w, c] : work) c *= inv;
        if (predicted.count(lead) > 0 && out.consistent) {
          out.consistent = false;
          for (const auto& [w, c] : work) out.witness.add(w, c);
          out.witness_source = row.label;
          out.witness_source_value = row.value;
        }
        pivots.emplace(lead, std::move(work));
        break;
      }
      for (const auto& [w, c] : pivot->second) {
        auto [it, inserted] = work.try_emplace(w, Coefficient());
        it->second -= lc * c;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

}  // namespace confmod
