#pragma once

#include "confmod/terms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace confmod {

/// Rewriting engine for the n-products of the free associative conformal
/// algebra C(B,N) on the free module span[U], and (mirrored with an algebra
/// tail) on C(B,N) itself.
///
/// Every result is fully normalized onto the right-normed basis. Recursion
/// terminates because each rewrite of b(n)[u] with n >= N(b, head u) either
/// lowers the tail D-degree (u = D^i y, measure (i, n)) or recurses into the
/// shorter word [u1] and re-enters with a strictly smaller n (u = b1(m)[u1]).
class ActionEngine {
 public:
  explicit ActionEngine(LocalityMap locality, bool memoize = true);

  const LocalityMap& locality_map() const { return locality_; }
  bool memoizing() const { return memoize_; }

  /// D^j applied to a normalized element.
  ModuleElement apply_D(const ModuleElement& f, std::uint32_t j = 1) const;
  AlgebraElement apply_D(const AlgebraElement& f, std::uint32_t j = 1) const;

  /// b(n) f for a generator b.
  ModuleElement act_generator(AlgebraGen b, std::uint32_t n, const ModuleElement& f) const;
  AlgebraElement act_generator(AlgebraGen b, std::uint32_t n, const AlgebraElement& f) const;

  /// [a](n) f for a basis word a of T.
  ModuleElement act_monomial(const AlgebraMonomial& a, std::uint32_t n, const ModuleElement& f) const;
  AlgebraElement act_monomial(const AlgebraMonomial& a, std::uint32_t n,
                              const AlgebraElement& f) const;

  /// Bilinear extension g(n) f.
  ModuleElement act_element(const AlgebraElement& g, std::uint32_t n, const ModuleElement& f) const;
  /// Product g(n) c inside C(B,N), normalized onto [T].
  AlgebraElement product(const AlgebraElement& g, std::uint32_t n, const AlgebraElement& c) const;

  /// Bound M with [a](n)[u] = 0 for all n >= M.
  std::uint32_t locality(AlgebraGen b, const ModuleMonomial& u) const;
  std::uint32_t locality(const AlgebraMonomial& a, const ModuleMonomial& u) const;
  /// Maximum of the monomial bounds over the supports (0 when either is zero).
  std::uint32_t locality(const AlgebraElement& g, const ModuleElement& f) const;
  std::uint32_t locality(AlgebraGen b, const ModuleElement& f) const;

  void clear_cache() const;

 private:
  template <class Tail>
  Element<Monomial<Tail>> generator_on_monomial(AlgebraGen b, std::uint32_t n,
                                                const Monomial<Tail>& u) const;
  template <class Tail>
  Element<Monomial<Tail>> generator_on_element(AlgebraGen b, std::uint32_t n,
                                               const Element<Monomial<Tail>>& f) const;
  template <class Tail>
  Element<Monomial<Tail>> monomial_on_element(const AlgebraMonomial& a, std::uint32_t n,
                                              const Element<Monomial<Tail>>& f) const;
  template <class Tail>
  Element<Monomial<Tail>> derive(const Element<Monomial<Tail>>& f) const;

  template <class Tail>
  using Cache = std::map<std::tuple<std::uint32_t, std::uint32_t, Monomial<Tail>>,
                         Element<Monomial<Tail>>>;

  template <class Tail>
  Cache<Tail>& cache() const;

  LocalityMap locality_;
  bool memoize_;
  mutable std::mutex cache_mutex_;
  mutable Cache<ModuleGen> module_cache_;
  mutable Cache<AlgebraGen> algebra_cache_;
};

}  // namespace confmod
