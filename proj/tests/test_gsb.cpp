#include <doctest.h>

#include "support.hpp"

#include "confmod/gsb.hpp"
#include "confmod/presets.hpp"

using namespace confmod;
using testing::algebra;
using testing::module;
using testing::word;

namespace {

Presentation vir(ParamValue delta = ParamValue::of(0), ParamValue alpha = ParamValue::symbolic()) {
  return virasoro_module(delta, alpha);
}

// Virasoro generators with hand-picked module relations.
Presentation constructed(const std::vector<std::string>& relations, std::uint32_t n = 2) {
  Presentation p;
  p.name = "constructed";
  p.symbols = SymbolTable({"v"}, {"y"});
  p.locality = LocalityMap(1, 1, n);
  const ActionEngine e(p.locality);
  int k = 1;
  for (const auto& r : relations) p.module_relations.push_back({"g" + std::to_string(k++), module(p, e, r)});
  return p;
}

}  // namespace

TEST_CASE("normal S-word values and their leading words") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  REQUIRE(s.labels == std::vector<std::string>{"f1", "f2"});
  NormalSWordPattern pat{{}, 0, 0};
  CHECK(normal_s_word_value(e, s, pat) == s.values[0]);
  pat.d_shift = 1;
  const ModuleElement shifted = normal_s_word_value(e, s, pat);
  CHECK(shifted == module(p, e, "v_(0) D y - D^2 y - alpha * D y"));
  CHECK(shifted.leading_monomial() == normal_s_word_leading(s, pat));
  pat = NormalSWordPattern{{Letter{AlgebraGen{0}, 1}}, 0, 0};
  const ModuleElement prefixed = normal_s_word_value(e, s, pat);
  CHECK(prefixed == module(p, e, "v_(1) v_(0) y - v_(1) D y - alpha * v_(1) y"));
  CHECK(prefixed.leading_monomial() == word(p, e, "v_(1) v_(0) y"));
  CHECK(normal_s_word_leading(s, pat) == word(p, e, "v_(1) v_(0) y"));
}

TEST_CASE("leading word of every normal S-word is the predicted one") {
  const Presentation p = vir_cur_module(nonabelian_lie_data(), ParamValue::of(1), ParamValue::symbolic());
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  for (std::size_t r = 0; r < s.size(); ++r)
    for (const auto& u : enumerate_module_words(p.locality, 3, 0))
      for (std::uint32_t i = 0; i < 3; ++i) {
        NormalSWordPattern pat{u.chain, i, r};
        const ModuleElement value = normal_s_word_value(e, s, pat);
        CHECK(value.leading_monomial() == normal_s_word_leading(s, pat));
        CHECK(value.leading_coefficient().is_one());
      }
}

TEST_CASE("matching against leading words") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const ModuleMonomial f1 = word(p, e, "v_(0) y");
  auto m = match(word(p, e, "v_(1) v_(0) D^2 y"), f1, 0, 2);
  REQUIRE(m);
  CHECK(m->prefix == std::vector<Letter>{Letter{AlgebraGen{0}, 1}});
  CHECK(m->d_shift == 2);
  CHECK_FALSE(match(word(p, e, "v_(0) v_(1) y"), f1, 0, 2));
  CHECK_FALSE(match(word(p, e, "D y"), f1, 0, 2));
}

TEST_CASE("inclusion compositions") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  CHECK(find_inclusion_compositions(e, s, 0, 0).empty());
  CHECK(find_inclusion_compositions(e, s, 0, 1).empty());
  CHECK(find_inclusion_compositions(e, s, 1, 0).empty());

  const Presentation q = constructed({"v_(1) v_(0) D y - y", "v_(0) y - D y"});
  const ActionEngine eq(q.locality);
  const RelationSet sq = module_relation_set(q);
  const auto found = find_inclusion_compositions(eq, sq, 0, 1);
  REQUIRE(found.size() == 1);
  CHECK(found[0].pattern.prefix == std::vector<Letter>{Letter{AlgebraGen{0}, 1}});
  CHECK(found[0].pattern.d_shift == 1);
  CHECK(normal_s_word_value(eq, sq, found[0].pattern).leading_monomial() == sq.values[0].leading_monomial());
  CHECK(found[0].value == sq.values[0] - normal_s_word_value(eq, sq, found[0].pattern));
  CHECK(find_inclusion_compositions(eq, sq, 1, 0).empty());
}

TEST_CASE("intersection compositions") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  CHECK(find_intersection_compositions(e, s, 0, 1).empty());
  CHECK(find_intersection_compositions(e, s, 1, 0).empty());

  const Presentation q = constructed({"v_(1) y", "D y - y"});
  const ActionEngine eq(q.locality);
  const RelationSet sq = module_relation_set(q);
  const auto found = find_intersection_compositions(eq, sq, 0, 1);
  REQUIRE(found.size() == 1);
  CHECK(found[0].overlap == word(q, eq, "v_(1) D y"));
  CHECK(found[0].value == eq.apply_D(sq.values[0]) - eq.act_generator(AlgebraGen{0}, 1, sq.values[1]));
  // g-bar has tail degree 0 in the other order
  CHECK(find_intersection_compositions(eq, sq, 1, 0).empty());
}

TEST_CASE("left multiplication compositions") {
  const Presentation p = vir(ParamValue::symbolic(), ParamValue::symbolic());
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  const auto f2 = left_mult_compositions(e, s, 1, 0);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].n == 2);
  CHECK(f2[0].value == module(p, e, "v_(2) v_(1) y - delta * v_(2) y"));
  for (const auto& c : left_mult_compositions(e, s, 0, 4)) CHECK(c.n >= 2);
  CHECK(left_mult_compositions(e, s, 0, 4).size() == 5);

  // v_(2) f1 reduces through 2(delta^2 - delta) y
  const auto f1 = left_mult_compositions(e, s, 0, 0);
  REQUIRE(f1.size() == 1);
  const Reduction r = reduce(e, s, f1[0].value, {ReductionStrategy::LeadingFirst, 0, true});
  CHECK(r.normal_form == module(p, e, "(2*delta^2 - 2*delta) * y"));
  const Presentation zero = vir(ParamValue::of(1), ParamValue::of(Rational(1, 2)));
  const ActionEngine ez(zero.locality);
  const RelationSet sz = module_relation_set(zero);
  CHECK(reduce(ez, sz, left_mult_compositions(ez, sz, 0, 0)[0].value).normal_form.is_zero());
}

TEST_CASE("reduction modulo the Virasoro relations") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const RelationSet s = module_relation_set(p);
  RelationSet only_f1;
  only_f1.labels = {s.labels[0]};
  only_f1.values = {s.values[0]};
  CHECK(reduce(e, only_f1, module(p, e, "v_(0) y")).normal_form == module(p, e, "D y + alpha * y"));
  CHECK(reduce(e, s, module(p, e, "D^3 y")).normal_form == module(p, e, "D^3 y"));
  CHECK(reduce(e, s, ModuleElement()).normal_form.is_zero());

  const Presentation q = vir(ParamValue::of(1), ParamValue::symbolic());
  const ActionEngine eq(q.locality);
  const RelationSet sq = module_relation_set(q);
  CHECK(reduce(eq, sq, eq.act_generator(AlgebraGen{0}, 2, sq.values[0])).normal_form.is_zero());
}

TEST_CASE("reduction agrees with the rank-one Virasoro representation") {
  // M(delta, alpha) is k[D]y with v_lambda y = (D + alpha + delta lambda) y
  for (long delta : {0L, 1L}) {
    const Presentation p = vir(ParamValue::of(delta), ParamValue::symbolic());
    const ActionEngine e(p.locality);
    const RelationSet s = module_relation_set(p);
    const Coefficient alpha = Coefficient::parameter(0);
    const testing::RankOne rep({{Coefficient(1), alpha, Coefficient(delta)}});
    for (const auto& u : enumerate_module_words(p.locality, 4, 3)) {
      CAPTURE(render(u, p.symbols));
      CHECK(reduce(e, s, ModuleElement(u)).normal_form == testing::tail_element(rep.eval(u)));
    }
  }
}

TEST_CASE("check-gsb verdicts on the Virasoro presets") {
  for (long delta : {0L, 1L}) {
    for (const ParamValue& alpha : {ParamValue::of(0), ParamValue::of(1), ParamValue::of(-2),
                                    ParamValue::of(Rational(1, 2)), ParamValue::symbolic()}) {
      const Presentation p = vir(ParamValue::of(delta), alpha);
      const ActionEngine e(p.locality);
      const GsbReport r = check_gsb(p, e, {6, true});
      CHECK(r.failing() == 0);
      CHECK(r.verdict == Verdict::Pass);
      CHECK(r.window == 6);
    }
  }
  const Presentation sym = vir(ParamValue::symbolic(), ParamValue::symbolic());
  const ActionEngine e(sym.locality);
  const GsbReport r = check_gsb(sym, e, {6, true});
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.failing() == 1);
}

TEST_CASE("small windows without a closure certificate") {
  // v(n) D^4 y vanishes only from n = 6 on; y makes every composition trivial
  const Presentation p = constructed({"D^4 y", "y"});
  const ActionEngine e(p.locality);
  GsbOptions opts;
  opts.window = 0;
  const GsbReport r = check_gsb(p, e, opts);
  CHECK(r.failing() == 0);
  CHECK(r.verdict == Verdict::PassWithinWindow);
  CHECK(check_gsb(p, e).verdict == Verdict::Pass);
}

TEST_CASE("non-uniform locality is rejected") {
  Presentation p = constructed({"v_(0) y"});
  p.locality.set(AlgebraGen{0}, ModuleGen{0}, 1);
  const ActionEngine e(p.locality);
  CHECK_THROWS_AS(check_gsb(p, e), Error);
}

TEST_CASE("Irr of the module relations") {
  const Presentation p = vir(ParamValue::of(0), ParamValue::of(0));
  const auto words = irr(p, 4, 10);
  REQUIRE(words.size() == 11);
  for (std::uint32_t i = 0; i <= 10; ++i) {
    CHECK(words[i].chain.empty());
    CHECK(words[i].d == i);
  }
  const Presentation q = vir_cur_module(abelian_lie_data(), ParamValue::of(0), ParamValue::of(0));
  CHECK(irr(q, 3, 5).size() == 6);
  const Presentation none = constructed({});
  CHECK(irr(none, 3, 2) == enumerate_module_words(none.locality, 3, 2));
}

TEST_CASE("R1 relations for a D-free algebra basis") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const RelationSet r1 = build_R1(p, e, 1, 0);
  // s_(0) y and s_(1) y, with s = v_(1) v - v
  REQUIRE(r1.size() == 2);
  const AlgebraElement s = p.algebra_relations[0].value;
  const ModuleElement y = module(p, e, "y");
  for (std::size_t k = 0; k < r1.size(); ++k) {
    CHECK(r1.values[k].leading_coefficient().is_one());
    CHECK(r1.values[k].leading_monomial().chain.size() == 2);
  }
  auto monic = [](ModuleElement f) {
    const Coefficient c = f.leading_coefficient();
    f *= Coefficient(Rational(1) / *c.constant_value());
    return f;
  };
  CHECK(r1.values[0] == monic(e.act_element(s, 0, y)));
  CHECK(r1.values[1] == monic(e.act_element(s, 1, y)));
  CHECK(r1.values[0] == module(p, e, "v_(1) v_(0) y - v_(0) v_(1) y - v_(0) y"));

  const Presentation remark = remark_counterexample();
  const ActionEngine er(remark.locality);
  try {
    build_R1(remark, er, 1, 0);
    FAIL("expected NotDFree");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotDFree);
  }
}

TEST_CASE("closed-form Irr of R1") {
  const Presentation p = vir();
  const std::vector<AlgebraMonomial> v_only = {AlgebraMonomial{}};
  // one generator, n in {0, 1}, i <= 2, plus the three D^i y
  CHECK(irr_R1_closed_form(p, v_only, 2, 2).size() == 9);
  CHECK(irr_R1_closed_form(p, {}, 3, 2).size() == 3);
  const auto irr_s = algebra_irr_dfree(p, 3);
  REQUIRE(irr_s.size() == 3);
  CHECK(render(irr_s[2], p.symbols) == "v_(0) v_(0) v");
  CHECK(irr_R1_closed_form(p, irr_s, 3, 1).size() == 2 + 2 * 2 + 2 * 2);

  const auto remark_irr = algebra_irr_dfree(remark_counterexample(), 4);
  REQUIRE(remark_irr.size() == 2);
  CHECK(render(remark_irr[1], remark_counterexample().symbols) == "a_(0) a");
}

TEST_CASE("quotient normal forms") {
  const Presentation p = vir(ParamValue::of(0), ParamValue::of(0));
  const ActionEngine e(p.locality);
  CHECK(quotient_normal_form(p, e, module(p, e, "v_(1) v_(0) y")) == module(p, e, "D y"));
  CHECK(quotient_normal_form(p, e, module(p, e, "D^4 y")) == module(p, e, "D^4 y"));
  CHECK(quotient_normal_form(p, e, ModuleElement()).is_zero());
}

TEST_CASE("R1 check on the Virasoro algebra relation") {
  const Presentation p = vir();
  const ActionEngine e(p.locality);
  const R1Check c = check_R1(p, e, 2, 2);
  CHECK(c.failing.empty());
  CHECK(c.relations > 0);
  CHECK(c.irr_matches());
}

TEST_CASE("free-module analysis of the counterexample") {
  const Presentation p = remark_counterexample();
  const ActionEngine e(p.locality);
  const FreeModuleAnalysis a = analyze_free_module(p, e, 2, 2, 3);
  CHECK_FALSE(a.d_free);
  CHECK_FALSE(a.consistent);
  CHECK(a.witness == module(p, e, "a_(0) a_(1) y"));
  CHECK(a.witness_source == "s1_(2) y");
  CHECK(a.witness_source_value == module(p, e, "2 * a_(0) a_(1) y"));

  const Presentation v = vir();
  const ActionEngine ev(v.locality);
  CHECK(analyze_free_module(v, ev, 2, 2, 3).consistent);

  const GsbReport r = check_gsb(p, e);
  REQUIRE(r.freemod);
  CHECK(r.verdict == Verdict::Fail);
}
