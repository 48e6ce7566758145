#include "confmod/axioms.hpp"

#include "confmod/expression.hpp"

#include <random>

namespace confmod {

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::Locality: return "locality";
    case Identity::Leibniz: return "d-leibniz";
    case Identity::Shift: return "d-shift";
    case Identity::Associativity: return "associativity";
  }
  return "unknown";
}

bool AxiomReport::all_passed() const {
  for (const auto& f : families)
    if (f.passed != f.total) return false;
  return true;
}

ActionOps ActionOps::from_engine(const ActionEngine& engine) {
  ActionOps ops;
  ops.act_monomial = [&engine](const AlgebraMonomial& a, std::uint32_t n, const ModuleElement& f) {
    return engine.act_monomial(a, n, f);
  };
  ops.act_element = [&engine](const AlgebraElement& g, std::uint32_t n, const ModuleElement& f) {
    return engine.act_element(g, n, f);
  };
  ops.derive_module = [&engine](const ModuleElement& f) { return engine.apply_D(f, 1); };
  ops.derive_algebra = [&engine](const AlgebraElement& f) { return engine.apply_D(f, 1); };
  ops.product = [&engine](const AlgebraElement& g, std::uint32_t n, const AlgebraElement& c) {
    return engine.product(g, n, c);
  };
  ops.locality = [&engine](const AlgebraMonomial& a, const ModuleMonomial& u) {
    return engine.locality(a, u);
  };
  return ops;
}

namespace {

class Sampler {
 public:
  Sampler(const LocalityMap& locality, std::uint64_t seed) : locality_(locality), rng_(seed) {}

  std::uint32_t below(std::uint32_t bound) { return static_cast<std::uint32_t>(rng_() % bound); }
  std::uint32_t upto(std::uint32_t top) { return below(top + 1); }

  template <class Tail>
  Monomial<Tail> word(std::uint32_t max_len, std::uint32_t max_d, std::size_t tail_count) {
    Monomial<Tail> u;
    const std::uint32_t len = 1 + below(max_len);
    u.tail = Tail{below(static_cast<std::uint32_t>(tail_count))};
    u.d = upto(max_d);
    for (std::uint32_t j = 1; j < len; ++j) {
      const AlgebraGen b{below(static_cast<std::uint32_t>(locality_.algebra_count()))};
      const std::uint32_t bound = u.chain.empty() ? locality_.at(b, u.tail) : locality_.at(b, u.chain.front().gen);
      if (bound == 0) break;
      u.chain.insert(u.chain.begin(), Letter{b, below(bound)});
    }
    return u;
  }

 private:
  const LocalityMap& locality_;
  std::mt19937_64 rng_;
};

}  // namespace

AxiomReport verify_axioms(const Presentation& p, const ActionOps& ops, std::size_t samples,
                          std::uint64_t seed, const AxiomSampling& sampling) {
  AxiomReport report;
  report.preset = p.name;
  report.samples = samples;
  report.seed = seed;
  for (Identity id : kIdentities) report.families.push_back({id, 0, 0});
  if (p.locality.algebra_count() == 0 || p.locality.module_count() == 0) return report;

  Sampler sample(p.locality, seed);
  const SymbolTable& sym = p.symbols;
  auto record = [&](Identity id, bool ok, const std::string& input, const ModuleElement& lhs,
                    const ModuleElement& rhs) {
    auto& fam = report.families[static_cast<std::size_t>(id)];
    ++fam.total;
    if (ok) {
      ++fam.passed;
    } else if (report.counterexamples.size() < sampling.max_counterexamples) {
      report.counterexamples.push_back({id, input, render(lhs, sym), render(rhs, sym)});
    }
  };

  for (std::size_t k = 0; k < samples; ++k) {
    const auto a = sample.word<AlgebraGen>(sampling.max_algebra_len, sampling.max_algebra_d,
                                           p.locality.algebra_count());
    const auto c = sample.word<AlgebraGen>(sampling.max_algebra_len, sampling.max_algebra_d,
                                           p.locality.algebra_count());
    const auto u = sample.word<ModuleGen>(sampling.max_module_len, sampling.max_module_d,
                                          p.locality.module_count());
    const std::uint32_t n = sample.upto(sampling.max_n);
    const std::uint32_t m = sample.upto(sampling.max_n);
    const ModuleElement fu(u);
    const AlgebraElement ga(a);
    const std::string au = "a = " + render(a, sym) + ", u = " + render(u, sym);

    // locality: a(n)u = 0 on [L, L+4]
    {
      const std::uint32_t bound = ops.locality(a, u);
      bool ok = true;
      ModuleElement bad;
      std::uint32_t at = bound;
      for (std::uint32_t j = bound; j <= bound + 4 && ok; ++j) {
        bad = ops.act_monomial(a, j, fu);
        ok = bad.is_zero();
        at = j;
      }
      record(Identity::Locality, ok, au + ", n = " + std::to_string(at) + " (bound " + std::to_string(bound) + ")",
             bad, ModuleElement());
    }

    const AlgebraElement da = ops.derive_algebra(ga);
    // D(a(m)u) = (Da)(m)u + a(m)Du
    {
      const ModuleElement lhs = ops.derive_module(ops.act_monomial(a, m, fu));
      const ModuleElement rhs = ops.act_element(da, m, fu) + ops.act_monomial(a, m, ops.derive_module(fu));
      record(Identity::Leibniz, lhs == rhs, au + ", m = " + std::to_string(m), lhs, rhs);
    }
    // (Da)(m)u = -m a(m-1)u, and 0 at m = 0
    {
      const ModuleElement lhs = ops.act_element(da, m, fu);
      ModuleElement rhs;
      if (m > 0) rhs = Coefficient(-static_cast<long>(m)) * ops.act_monomial(a, m - 1, fu);
      record(Identity::Shift, lhs == rhs, au + ", m = " + std::to_string(m), lhs, rhs);
    }
    // (a(n)c)(m)u = sum_k (-1)^k C(n,k) a(n-k)(c(m+k)u)
    {
      const ModuleElement lhs = ops.act_element(ops.product(ga, n, AlgebraElement(c)), m, fu);
      ModuleElement rhs;
      for (std::uint32_t t = 0; t <= n; ++t) {
        Rational coef(binomial(n, t));
        if (t % 2 == 1) coef = -coef;
        rhs.add_scaled(ops.act_monomial(a, n - t, ops.act_monomial(c, m + t, fu)), Coefficient(coef));
      }
      record(Identity::Associativity, lhs == rhs,
             au + ", c = " + render(c, sym) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m), lhs,
             rhs);
    }
  }
  return report;
}

}  // namespace confmod
