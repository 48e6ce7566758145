#include "confmod/coefficient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confmod {

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer result;
  if (k > n) return result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Integer(0);
  Integer result(1);
  for (std::uint64_t j = 0; j < k; ++j) result *= static_cast<unsigned long>(n - j);
  return result;
}

std::string to_string(const Rational& r) {
  // mpq_class keeps the value canonical: reduced and positive denominator.
  return r.get_str();
}

namespace {

std::uint64_t total_degree(const ParamExponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

void trim(ParamExponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ParamExponents multiply(const ParamExponents& a, const ParamExponents& b) {
  ParamExponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

bool ParamOrder::operator()(const ParamExponents& a, const ParamExponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

Coefficient::Coefficient(long value) {
  if (value != 0) terms_.emplace(ParamExponents{}, Rational(value));
}

Coefficient::Coefficient(Rational value) {
  value.canonicalize();
  if (value != 0) terms_.emplace(ParamExponents{}, std::move(value));
}

Coefficient Coefficient::parameter(std::size_t index) {
  Coefficient c;
  ParamExponents e(index + 1, 0);
  e[index] = 1;
  c.terms_.emplace(std::move(e), Rational(1));
  return c;
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> Coefficient::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

std::size_t Coefficient::parameter_span() const {
  std::size_t span = 0;
  for (const auto& [e, c] : terms_) span = std::max(span, e.size());
  return span;
}

void Coefficient::add_term(const ParamExponents& exps, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Coefficient& Coefficient::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  *this = *this * other;
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_constant()) {
    out = a;
    return out *= b.terms_.begin()->second;
  }
  if (a.is_constant()) {
    out = b;
    return out *= a.terms_.begin()->second;
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto e = multiply(ea, eb);
      trim(e);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Coefficient operator-(Coefficient a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

Coefficient Coefficient::substitute(std::size_t param, const Rational& value) const {
  Coefficient out;
  for (const auto& [e, c] : terms_) {
    if (param >= e.size() || e[param] == 0) {
      out.add_term(e, c);
      continue;
    }
    ParamExponents reduced = e;
    Rational factor(1);
    for (std::uint32_t k = 0; k < e[param]; ++k) factor *= value;
    reduced[param] = 0;
    trim(reduced);
    out.add_term(reduced, c * factor);
  }
  return out;
}

std::string Coefficient::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += i < names.size() ? names[i] : "p" + std::to_string(i);
      if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      os << confmod::to_string(magnitude);
    } else if (magnitude == 1) {
      os << monomial;
    } else {
      os << confmod::to_string(magnitude) << '*' << monomial;
    }
  }
  return os.str();
}

}  // namespace confmod
