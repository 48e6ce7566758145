#include "confmod/action.hpp"

#include <algorithm>

namespace confmod {

namespace {

Coefficient signed_integer(const Integer& magnitude, bool negative) {
  Rational r(magnitude);
  return Coefficient(negative ? Rational(-r) : r);
}

template <class Tail>
Monomial<Tail> prepend(AlgebraGen b, std::uint32_t n, const Monomial<Tail>& u) {
  Monomial<Tail> out;
  out.chain.reserve(u.chain.size() + 1);
  out.chain.push_back(Letter{b, n});
  out.chain.insert(out.chain.end(), u.chain.begin(), u.chain.end());
  out.d = u.d;
  out.tail = u.tail;
  return out;
}

template <class Tail>
Monomial<Tail> drop_head(const Monomial<Tail>& u) {
  Monomial<Tail> out;
  out.chain.assign(u.chain.begin() + 1, u.chain.end());
  out.d = u.d;
  out.tail = u.tail;
  return out;
}

}  // namespace

ActionEngine::ActionEngine(LocalityMap locality, bool memoize)
    : locality_(std::move(locality)), memoize_(memoize) {}

template <>
ActionEngine::Cache<ModuleGen>& ActionEngine::cache<ModuleGen>() const {
  return module_cache_;
}

template <>
ActionEngine::Cache<AlgebraGen>& ActionEngine::cache<AlgebraGen>() const {
  return algebra_cache_;
}

void ActionEngine::clear_cache() const {
  std::lock_guard lock(cache_mutex_);
  module_cache_.clear();
  algebra_cache_.clear();
}

template <class Tail>
Element<Monomial<Tail>> ActionEngine::derive(const Element<Monomial<Tail>>& f) const {
  // D[u] = sum_j (D b_j)(n_j)... + [u D] with (D b)(n) = -n b(n-1); lowering an
  // exponent keeps the word inside the basis.
  Element<Monomial<Tail>> out;
  for (const auto& [u, c] : f) {
    for (std::size_t j = 0; j < u.chain.size(); ++j) {
      if (u.chain[j].n == 0) continue;
      Monomial<Tail> w = u;
      w.chain[j].n -= 1;
      out.add(w, c * Coefficient(-static_cast<long>(u.chain[j].n)));
    }
    Monomial<Tail> w = u;
    w.d += 1;
    out.add(w, c);
  }
  return out;
}

ModuleElement ActionEngine::apply_D(const ModuleElement& f, std::uint32_t j) const {
  ModuleElement out = f;
  for (std::uint32_t k = 0; k < j; ++k) out = derive(out);
  return out;
}

AlgebraElement ActionEngine::apply_D(const AlgebraElement& f, std::uint32_t j) const {
  AlgebraElement out = f;
  for (std::uint32_t k = 0; k < j; ++k) out = derive(out);
  return out;
}

template <class Tail>
Element<Monomial<Tail>> ActionEngine::generator_on_monomial(AlgebraGen b, std::uint32_t n,
                                                            const Monomial<Tail>& u) const {
  using Result = Element<Monomial<Tail>>;
  if (n < head_locality(locality_, b, u)) return Result(prepend(b, n, u));

  std::tuple<std::uint32_t, std::uint32_t, Monomial<Tail>> key{b.index, n, u};
  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    auto& c = cache<Tail>();
    if (auto it = c.find(key); it != c.end()) return it->second;
  }

  Result out;
  if (u.chain.empty()) {
    // b(n) D^i y = -sum_{t>=1} (-1)^t C(i,t) n!/(n-t)! b(n-t) D^{i-t} y
    const std::uint32_t top = std::min(u.d, n);
    for (std::uint32_t t = 1; t <= top; ++t) {
      Monomial<Tail> lower = u;
      lower.d -= t;
      const Integer mag = binomial(u.d, t) * falling_factorial(n, t);
      // -(-1)^t is negative for even t
      out.add_scaled(generator_on_monomial(b, n - t, lower), signed_integer(mag, t % 2 == 0));
    }
  } else {
    // b(n)(b1(m)[u1]) = -sum_{t>=1} (-1)^t C(n,t) b(n-t)(b1(m+t)[u1])
    const Letter head = u.chain.front();
    const Monomial<Tail> rest = drop_head(u);
    for (std::uint32_t t = 1; t <= n; ++t) {
      Result inner = generator_on_monomial(head.gen, head.n + t, rest);
      if (inner.is_zero()) continue;
      Result outer = generator_on_element(b, n - t, inner);
      out.add_scaled(outer, signed_integer(binomial(n, t), t % 2 == 0));
    }
  }

  if (memoize_) {
    std::lock_guard lock(cache_mutex_);
    cache<Tail>().emplace(std::move(key), out);
  }
  return out;
}

template <class Tail>
Element<Monomial<Tail>> ActionEngine::generator_on_element(AlgebraGen b, std::uint32_t n,
                                                           const Element<Monomial<Tail>>& f) const {
  Element<Monomial<Tail>> out;
  for (const auto& [u, c] : f) out.add_scaled(generator_on_monomial(b, n, u), c);
  return out;
}

template <class Tail>
Element<Monomial<Tail>> ActionEngine::monomial_on_element(const AlgebraMonomial& a, std::uint32_t n,
                                                          const Element<Monomial<Tail>>& f) const {
  using Result = Element<Monomial<Tail>>;
  if (f.is_zero()) return Result();
  if (a.chain.empty()) {
    // (D^i b)(n) = (-1)^i n!/(n-i)! b(n-i), zero when i > n
    if (a.d > n) return Result();
    Result out = generator_on_element(a.tail, n - a.d, f);
    out *= signed_integer(falling_factorial(n, a.d), a.d % 2 == 1);
    return out;
  }
  // (b(m)[c])(n) f = sum_{t=0..m} (-1)^t C(m,t) b(m-t)([c](n+t) f)
  const Letter head = a.chain.front();
  const AlgebraMonomial rest = drop_head(a);
  Result out;
  for (std::uint32_t t = 0; t <= head.n; ++t) {
    Result inner = monomial_on_element(rest, n + t, f);
    if (inner.is_zero()) continue;
    out.add_scaled(generator_on_element(head.gen, head.n - t, inner),
                   signed_integer(binomial(head.n, t), t % 2 == 1));
  }
  return out;
}

ModuleElement ActionEngine::act_generator(AlgebraGen b, std::uint32_t n, const ModuleElement& f) const {
  return generator_on_element(b, n, f);
}

AlgebraElement ActionEngine::act_generator(AlgebraGen b, std::uint32_t n,
                                           const AlgebraElement& f) const {
  return generator_on_element(b, n, f);
}

ModuleElement ActionEngine::act_monomial(const AlgebraMonomial& a, std::uint32_t n,
                                         const ModuleElement& f) const {
  return monomial_on_element(a, n, f);
}

AlgebraElement ActionEngine::act_monomial(const AlgebraMonomial& a, std::uint32_t n,
                                          const AlgebraElement& f) const {
  return monomial_on_element(a, n, f);
}

ModuleElement ActionEngine::act_element(const AlgebraElement& g, std::uint32_t n,
                                        const ModuleElement& f) const {
  ModuleElement out;
  for (const auto& [a, c] : g) out.add_scaled(monomial_on_element(a, n, f), c);
  return out;
}

AlgebraElement ActionEngine::product(const AlgebraElement& g, std::uint32_t n,
                                     const AlgebraElement& c) const {
  AlgebraElement out;
  for (const auto& [a, k] : g) out.add_scaled(monomial_on_element(a, n, c), k);
  return out;
}

std::uint32_t ActionEngine::locality(AlgebraGen b, const ModuleMonomial& u) const {
  if (u.chain.empty()) return locality_.at(b, u.tail) + u.d;
  const Letter head = u.chain.front();
  // N(b, b1(m)[u1]) = N(b,b1) + N(b1,[u1]) - m - 1, never below N(b,b1) since
  // m < N(b1, head u1) <= N(b1,[u1]).
  return locality_.at(b, head.gen) + locality(head.gen, drop_head(u)) - head.n - 1;
}

std::uint32_t ActionEngine::locality(const AlgebraMonomial& a, const ModuleMonomial& u) const {
  if (a.chain.empty()) return locality(a.tail, u) + a.d;
  return locality(drop_head(a), u);
}

std::uint32_t ActionEngine::locality(const AlgebraElement& g, const ModuleElement& f) const {
  std::uint32_t bound = 0;
  for (const auto& [a, c] : g)
    for (const auto& [u, k] : f) bound = std::max(bound, locality(a, u));
  return bound;
}

std::uint32_t ActionEngine::locality(AlgebraGen b, const ModuleElement& f) const {
  std::uint32_t bound = 0;
  for (const auto& [u, k] : f) bound = std::max(bound, locality(b, u));
  return bound;
}

}  // namespace confmod
