#pragma once

#include "confmod/action.hpp"
#include "confmod/coefficient.hpp"
#include "confmod/expression.hpp"
#include "confmod/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace confmod;

inline ModuleElement module(const Presentation& p, const ActionEngine& e, const std::string& text) {
  return normalize_module(parse_expression(text, p.symbols), e);
}

inline AlgebraElement algebra(const Presentation& p, const ActionEngine& e, const std::string& text) {
  return normalize_algebra(parse_expression(text, p.symbols), e);
}

inline ModuleMonomial word(const Presentation& p, const ActionEngine& e, const std::string& text) {
  ModuleElement f = module(p, e, text);
  REQUIRE(f.size() == 1);
  REQUIRE(f.leading_coefficient().is_one());
  return f.leading_monomial();
}

/// Polynomial in (lambda, D) over the coefficient ring, keyed by the two
/// exponents.
using Poly2 = std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient>;

inline void add_to(Poly2& p, std::pair<std::uint32_t, std::uint32_t> key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// Polynomial in D alone: index is the power.
using PolyD = std::map<std::uint32_t, Coefficient>;

/// A rank-one module k[D]y over one module generator, on which each algebra
/// generator b acts by b_lambda y = (beta D + gamma + delta lambda) y. It is a
/// module over C(B,N=2) whenever (beta_c - delta_c) delta_b = 0 for all b, c.
/// Words are evaluated directly through the lambda-action, without the
/// rewriting rules of the engine.
class RankOne {
 public:
  struct Data {
    Coefficient beta, gamma, delta;
  };

  explicit RankOne(std::vector<Data> data) : data_(std::move(data)) {}

  /// b(n) q(D) y = n! [lambda^n] q(D + lambda) (beta D + gamma + delta lambda) y
  PolyD generator(std::uint32_t b, std::uint32_t n, const PolyD& q) const {
    Poly2 shifted;
    for (const auto& [k, c] : q)
      for (std::uint32_t t = 0; t <= k; ++t)
        add_to(shifted, {t, k - t}, c * Coefficient(Rational(binomial(k, t))));
    const Data& d = data_.at(b);
    Poly2 product;
    for (const auto& [key, c] : shifted) {
      add_to(product, {key.first, key.second + 1}, c * d.beta);
      add_to(product, key, c * d.gamma);
      add_to(product, {key.first + 1, key.second}, c * d.delta);
    }
    PolyD out;
    Integer fact = falling_factorial(n, n);
    for (const auto& [key, c] : product)
      if (key.first == n) {
        Coefficient v = c * Coefficient(Rational(fact));
        if (!v.is_zero()) out[key.second] += v;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  PolyD derive(const PolyD& q) const {
    PolyD out;
    for (const auto& [k, c] : q) out[k + 1] = c;
    return out;
  }

  /// Action of an algebra word [a] through (D^j b)(n) = (-1)^j n!/(n-j)! b(n-j)
  /// and (x(m) z)(n) = sum_t (-1)^t C(m,t) x(m-t) z(n+t).
  PolyD act_word(const AlgebraMonomial& a, std::uint32_t n, const PolyD& q) const {
    return act_rest(a, 0, n, q);
  }

  PolyD act_algebra(const AlgebraElement& g, std::uint32_t n, const PolyD& q) const {
    PolyD out;
    for (const auto& [a, c] : g) {
      for (const auto& [k, v] : act_word(a, n, q)) out[k] += c * v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  PolyD eval(const ModuleMonomial& u) const {
    PolyD q;
    q[u.d] = Coefficient(1);
    for (auto it = u.chain.rbegin(); it != u.chain.rend(); ++it) q = generator(it->gen.index, it->n, q);
    return q;
  }

  PolyD eval(const ModuleElement& f) const {
    PolyD out;
    for (const auto& [u, c] : f)
      for (const auto& [k, v] : eval(u)) out[k] += c * v;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

 private:
  PolyD act_rest(const AlgebraMonomial& a, std::size_t from, std::uint32_t n, const PolyD& q) const {
    if (from == a.chain.size()) {
      if (a.d > n) return {};
      Coefficient c = Coefficient(Rational(falling_factorial(n, a.d)));
      if (a.d % 2 == 1) c = -c;
      PolyD out = generator(a.tail.index, n - a.d, q);
      for (auto& [k, v] : out) v *= c;
      return out;
    }
    const Letter x = a.chain[from];
    PolyD out;
    for (std::uint32_t t = 0; t <= x.n; ++t) {
      PolyD inner = act_rest(a, from + 1, n + t, q);
      if (inner.empty()) continue;
      PolyD outer = generator(x.gen.index, x.n - t, inner);
      Coefficient c = Coefficient(Rational(binomial(x.n, t)));
      if (t % 2 == 1) c = -c;
      for (const auto& [k, v] : outer) out[k] += c * v;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  std::vector<Data> data_;
};

/// The element sum_k c_k D^k y of the module over one generator.
inline ModuleElement tail_element(const PolyD& q) {
  ModuleElement f;
  for (const auto& [k, c] : q) {
    ModuleMonomial u;
    u.d = k;
    f.add(u, c);
  }
  return f;
}

}  // namespace testing
