#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confmod {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(std::uint64_t n, std::uint64_t k);
/// n!/(n-k)!, zero when k > n.
Integer falling_factorial(std::uint64_t n, std::uint64_t k);

std::string to_string(const Rational& r);

/// Exponent vector of a monomial in the commuting parameters; trailing zeros
/// are always trimmed so that equal monomials compare equal.
using ParamExponents = std::vector<std::uint32_t>;

/// Descending graded-lex order on parameter monomials.
struct ParamOrder {
  bool operator()(const ParamExponents& a, const ParamExponents& b) const;
};

/// Element of Q[p_0, ..., p_{r-1}] in canonical sparse form: no zero terms,
/// terms kept in descending ParamOrder.
class Coefficient {
 public:
  using Terms = std::map<ParamExponents, Rational, ParamOrder>;

  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  Coefficient(Rational value);  // NOLINT(google-explicit-constructor)

  static Coefficient parameter(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// The value when the polynomial has degree zero.
  std::optional<Rational> constant_value() const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Highest parameter index that occurs, plus one.
  std::size_t parameter_span() const;

  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  Coefficient& operator*=(const Rational& scalar);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(Coefficient a);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  Coefficient substitute(std::size_t param, const Rational& value) const;

  /// Renders e.g. "alpha^2 - 1/2*alpha + 3". Parameters without a name in
  /// `names` render as "p<index>".
  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(const ParamExponents& exps, const Rational& value);

  Terms terms_;
};

}  // namespace confmod
