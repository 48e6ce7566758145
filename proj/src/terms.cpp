#include "confmod/terms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace confmod {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NonMonicRelation: return "NonMonicRelation";
    case ErrorCode::NotDFree: return "NotDFree";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::NonUniformLocality: return "NonUniformLocality";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

SymbolTable::SymbolTable(std::vector<std::string> algebra, std::vector<std::string> module,
                         std::vector<std::string> parameters)
    : algebra_(std::move(algebra)), module_(std::move(module)), parameters_(std::move(parameters)) {
  std::set<std::string> seen;
  auto check = [&](const std::string& name) {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty symbol name");
    if (name == "D") throw Error(ErrorCode::InvalidArgument, "'D' is reserved for the derivation");
    if (!seen.insert(name).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate symbol name '" + name + "'");
  };
  for (const auto& n : algebra_) check(n);
  for (const auto& n : module_) check(n);
  for (const auto& n : parameters_) check(n);
}

std::optional<AlgebraGen> SymbolTable::find_algebra(const std::string& name) const {
  auto it = std::find(algebra_.begin(), algebra_.end(), name);
  if (it == algebra_.end()) return std::nullopt;
  return AlgebraGen{static_cast<std::uint32_t>(it - algebra_.begin())};
}

std::optional<ModuleGen> SymbolTable::find_module(const std::string& name) const {
  auto it = std::find(module_.begin(), module_.end(), name);
  if (it == module_.end()) return std::nullopt;
  return ModuleGen{static_cast<std::uint32_t>(it - module_.begin())};
}

std::optional<std::size_t> SymbolTable::find_parameter(const std::string& name) const {
  auto it = std::find(parameters_.begin(), parameters_.end(), name);
  if (it == parameters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - parameters_.begin());
}

LocalityMap::LocalityMap(std::size_t algebra_count, std::size_t module_count, std::uint32_t uniform)
    : uniform_(uniform),
      algebra_(algebra_count, std::vector<std::uint32_t>(algebra_count, uniform)),
      module_(algebra_count, std::vector<std::uint32_t>(module_count, uniform)) {
  if (uniform < 1) throw Error(ErrorCode::InvalidArgument, "uniform locality bound must be >= 1");
}

void LocalityMap::set(AlgebraGen b, AlgebraGen c, std::uint32_t value) {
  if (value > uniform_)
    throw Error(ErrorCode::InvalidArgument, "pairwise locality exceeds the uniform bound");
  algebra_.at(b.index).at(c.index) = value;
}

void LocalityMap::set(AlgebraGen b, ModuleGen y, std::uint32_t value) {
  if (value > uniform_)
    throw Error(ErrorCode::InvalidArgument, "pairwise locality exceeds the uniform bound");
  module_.at(b.index).at(y.index) = value;
}

bool LocalityMap::is_uniform() const {
  for (const auto& row : algebra_)
    for (auto v : row)
      if (v != uniform_) return false;
  for (const auto& row : module_)
    for (auto v : row)
      if (v != uniform_) return false;
  return true;
}

std::string to_string(const Weight& w) {
  const auto& c = w.components;
  std::ostringstream os;
  os << '(';
  if (!c.empty()) os << c[0];
  for (std::size_t j = 1; j + 1 < c.size(); j += 2) os << "; " << c[j] << ',' << c[j + 1];
  os << ')';
  return os.str();
}

namespace {

template <class Tail>
bool chain_valid(const Monomial<Tail>& u, const LocalityMap& locality) {
  for (std::size_t j = 0; j < u.chain.size(); ++j) {
    if (u.chain[j].gen.index >= locality.algebra_count()) return false;
    const std::uint32_t bound = j + 1 < u.chain.size()
                                    ? locality.at(u.chain[j].gen, u.chain[j + 1].gen)
                                    : locality.at(u.chain[j].gen, u.tail);
    if (u.chain[j].n >= bound) return false;
  }
  return true;
}

}  // namespace

bool is_valid(const ModuleMonomial& u, const LocalityMap& locality) {
  if (u.tail.index >= locality.module_count()) return false;
  return chain_valid(u, locality);
}

bool is_valid(const AlgebraMonomial& a, const LocalityMap& locality) {
  if (a.tail.index >= locality.algebra_count()) return false;
  return chain_valid(a, locality);
}

}  // namespace confmod
