#pragma once

#include "confmod/coefficient.hpp"
#include "confmod/error.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confmod {

/// Index of a generator of B in declaration order.
struct AlgebraGen {
  std::uint32_t index = 0;
  friend auto operator<=>(const AlgebraGen&, const AlgebraGen&) = default;
};

/// Index of a generator of Y in declaration order.
struct ModuleGen {
  std::uint32_t index = 0;
  friend auto operator<=>(const ModuleGen&, const ModuleGen&) = default;
};

/// Names of B, Y and the commuting coefficient parameters. Declaration order
/// is the well-order used by the monomial ordering.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::vector<std::string> algebra, std::vector<std::string> module,
              std::vector<std::string> parameters = {});

  const std::vector<std::string>& algebra_generators() const { return algebra_; }
  const std::vector<std::string>& module_generators() const { return module_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  std::optional<AlgebraGen> find_algebra(const std::string& name) const;
  std::optional<ModuleGen> find_module(const std::string& name) const;
  std::optional<std::size_t> find_parameter(const std::string& name) const;

  const std::string& name(AlgebraGen b) const { return algebra_.at(b.index); }
  const std::string& name(ModuleGen y) const { return module_.at(y.index); }

 private:
  std::vector<std::string> algebra_;
  std::vector<std::string> module_;
  std::vector<std::string> parameters_;
};

/// Locality orders N(b,b') and N(b,y) together with a uniform bound N that
/// dominates every pairwise value.
class LocalityMap {
 public:
  LocalityMap() = default;
  /// All pairs set to `uniform`.
  LocalityMap(std::size_t algebra_count, std::size_t module_count, std::uint32_t uniform);

  void set(AlgebraGen b, AlgebraGen c, std::uint32_t value);
  void set(AlgebraGen b, ModuleGen y, std::uint32_t value);

  std::uint32_t at(AlgebraGen b, AlgebraGen c) const { return algebra_.at(b.index).at(c.index); }
  std::uint32_t at(AlgebraGen b, ModuleGen y) const { return module_.at(b.index).at(y.index); }
  std::uint32_t uniform_bound() const { return uniform_; }
  /// True when every pairwise value equals the uniform bound.
  bool is_uniform() const;

  std::size_t algebra_count() const { return algebra_.size(); }
  std::size_t module_count() const { return module_.empty() ? 0 : module_.front().size(); }

 private:
  std::uint32_t uniform_ = 1;
  std::vector<std::vector<std::uint32_t>> algebra_;
  std::vector<std::vector<std::uint32_t>> module_;
};

struct Letter {
  AlgebraGen gen;
  std::uint32_t n = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A flattened right-normed word b1(n1) ... bk(nk) D^d tail. With a module
/// tail this is an element of U, with an algebra tail an element of T.
template <class Tail>
struct Monomial {
  std::vector<Letter> chain;
  std::uint32_t d = 0;
  Tail tail{};

  std::size_t length() const { return chain.size() + 1; }
  bool d_free() const { return d == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using ModuleMonomial = Monomial<ModuleGen>;
using AlgebraMonomial = Monomial<AlgebraGen>;

/// Weight-lexicographic comparison: (|u|, b1, n1, ..., bk, nk, tail, d).
template <class Tail>
std::strong_ordering compare(const Monomial<Tail>& u, const Monomial<Tail>& v) {
  if (auto c = u.chain.size() <=> v.chain.size(); c != 0) return c;
  for (std::size_t j = 0; j < u.chain.size(); ++j) {
    if (auto c = u.chain[j].gen.index <=> v.chain[j].gen.index; c != 0) return c;
    if (auto c = u.chain[j].n <=> v.chain[j].n; c != 0) return c;
  }
  if (auto c = u.tail.index <=> v.tail.index; c != 0) return c;
  return u.d <=> v.d;
}

template <class Tail>
bool operator<(const Monomial<Tail>& u, const Monomial<Tail>& v) {
  return compare(u, v) < 0;
}

/// The flattened weight tuple of a monomial.
struct Weight {
  std::vector<std::uint32_t> components;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

template <class Tail>
Weight weight(const Monomial<Tail>& u) {
  Weight w;
  w.components.reserve(2 * u.chain.size() + 3);
  w.components.push_back(static_cast<std::uint32_t>(u.length()));
  for (const Letter& l : u.chain) {
    w.components.push_back(l.gen.index);
    w.components.push_back(l.n);
  }
  w.components.push_back(u.tail.index);
  w.components.push_back(u.d);
  return w;
}

/// Inverse of weight(); throws InvalidArgument on a malformed tuple.
template <class Tail>
Monomial<Tail> from_weight(const Weight& w) {
  const auto& c = w.components;
  if (c.size() < 3 || c.size() != 2 * static_cast<std::size_t>(c[0]) + 1)
    throw Error(ErrorCode::InvalidArgument, "malformed weight tuple");
  Monomial<Tail> u;
  for (std::size_t j = 0; j + 1 < c[0]; ++j)
    u.chain.push_back(Letter{AlgebraGen{c[1 + 2 * j]}, c[2 + 2 * j]});
  u.tail = Tail{c[c.size() - 2]};
  u.d = c.back();
  return u;
}

/// Canonical rendering "(k+1; b1,n1; ...; y,i)" with generator indices.
std::string to_string(const Weight& w);

bool is_valid(const ModuleMonomial& u, const LocalityMap& locality);
bool is_valid(const AlgebraMonomial& a, const LocalityMap& locality);

/// Locality order between b and the head letter of u (its first chain letter,
/// or its tail when the chain is empty).
template <class Tail>
std::uint32_t head_locality(const LocalityMap& locality, AlgebraGen b, const Monomial<Tail>& u) {
  if (!u.chain.empty()) return locality.at(b, u.chain.front().gen);
  return locality.at(b, u.tail);
}

template <class Tail>
struct DescendingOrder {
  bool operator()(const Monomial<Tail>& u, const Monomial<Tail>& v) const {
    return compare(u, v) > 0;
  }
};

/// Finite formal sum of basis monomials with nonzero coefficients, iterated in
/// descending monomial order.
template <class Mono>
class Element;

template <class Tail>
class Element<Monomial<Tail>> {
 public:
  using MonomialType = Monomial<Tail>;
  using Terms = std::map<MonomialType, Coefficient, DescendingOrder<Tail>>;

  Element() = default;
  explicit Element(MonomialType u, Coefficient c = Coefficient(1)) { add(std::move(u), c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Maximal monomial and its coefficient; throws ZeroElement on zero.
  const std::pair<const MonomialType, Coefficient>& leading() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "leading term of the zero element");
    return *terms_.begin();
  }
  const MonomialType& leading_monomial() const { return leading().first; }
  const Coefficient& leading_coefficient() const { return leading().second; }

  Coefficient coefficient(const MonomialType& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add(const MonomialType& u, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void erase(const MonomialType& u) { terms_.erase(u); }

  /// this += c * other
  void add_scaled(const Element& other, const Coefficient& c) {
    if (c.is_zero()) return;
    const bool unit = c.is_one();
    for (const auto& [u, a] : other.terms_) add(u, unit ? a : a * c);
  }

  Element& operator+=(const Element& other) {
    add_scaled(other, Coefficient(1));
    return *this;
  }
  Element& operator-=(const Element& other) {
    add_scaled(other, Coefficient(-1));
    return *this;
  }
  Element& operator*=(const Coefficient& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [u, a] : terms_) a *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Coefficient& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Coefficient(-1); }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using ModuleElement = Element<ModuleMonomial>;
using AlgebraElement = Element<AlgebraMonomial>;

}  // namespace confmod
