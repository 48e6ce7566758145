#include <doctest.h>

#include "support.hpp"

#include "confmod/axioms.hpp"
#include "confmod/presets.hpp"
#include "confmod/report.hpp"

using namespace confmod;

TEST_CASE("axiom suite passes on the engine") {
  const Presentation p = vir_cur_module(nonabelian_lie_data(), ParamValue::of(1), ParamValue::of(0));
  const ActionEngine e(p.locality);
  const AxiomReport r = verify_axioms(p, ActionOps::from_engine(e), 60, 5);
  CHECK(r.all_passed());
  REQUIRE(r.families.size() == 4);
  for (const auto& f : r.families) {
    CHECK(f.total == 60);
    CHECK(f.passed == 60);
  }
  CHECK(r.counterexamples.empty());
}

TEST_CASE("a single sample is enough to run every family") {
  const Presentation p = virasoro_module(ParamValue::of(0), ParamValue::symbolic());
  const ActionEngine e(p.locality);
  const AxiomReport r = verify_axioms(p, ActionOps::from_engine(e), 1, 0);
  CHECK(r.all_passed());
  for (const auto& f : r.families) CHECK(f.total == 1);
}

TEST_CASE("reports are a function of the seed") {
  const Presentation p = virasoro_module(ParamValue::of(0), ParamValue::symbolic());
  const ActionEngine e(p.locality);
  const ActionOps ops = ActionOps::from_engine(e);
  CHECK(format_axioms(verify_axioms(p, ops, 40, 9), Format::Text) ==
        format_axioms(verify_axioms(p, ops, 40, 9), Format::Text));
}

TEST_CASE("corrupted actions are caught") {
  const Presentation p = virasoro_module(ParamValue::of(0), ParamValue::symbolic());
  const ActionEngine e(p.locality);

  SUBCASE("sign flip in the shift rule") {
    ActionOps ops = ActionOps::from_engine(e);
    const auto derive = ops.derive_algebra;
    ops.derive_algebra = [derive](const AlgebraElement& a) { return -derive(a); };
    const AxiomReport r = verify_axioms(p, ops, 50, 1);
    CHECK_FALSE(r.all_passed());
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK_FALSE(r.counterexamples[0].lhs == r.counterexamples[0].rhs);
    CHECK(format_axioms(r, Format::Text).find("counterexample") != std::string::npos);
  }
  SUBCASE("dropped term in D") {
    ActionOps ops = ActionOps::from_engine(e);
    ops.derive_module = [&e](const ModuleElement& f) {
      ModuleElement out = e.apply_D(f);
      if (!out.is_zero()) out.erase(out.leading_monomial());
      return out;
    };
    CHECK_FALSE(verify_axioms(p, ops, 50, 1).all_passed());
  }
  SUBCASE("locality bound too small") {
    ActionOps ops = ActionOps::from_engine(e);
    ops.locality = [](const AlgebraMonomial&, const ModuleMonomial&) { return 0u; };
    const AxiomReport r = verify_axioms(p, ops, 50, 1);
    CHECK_FALSE(r.all_passed());
    bool locality_failed = false;
    for (const auto& f : r.families)
      if (f.identity == Identity::Locality) locality_failed = f.passed < f.total;
    CHECK(locality_failed);
  }
  SUBCASE("associativity with the wrong sign") {
    ActionOps ops = ActionOps::from_engine(e);
    ops.product = [&e](const AlgebraElement& g, std::uint32_t n, const AlgebraElement& c) {
      AlgebraElement out = e.product(g, n, c);
      return n % 2 == 1 ? -out : out;
    };
    CHECK_FALSE(verify_axioms(p, ops, 80, 1).all_passed());
  }
}
