#include "confmod/presets.hpp"

#include "confmod/action.hpp"
#include "confmod/expression.hpp"

#include <json.hpp>

#include <cctype>
#include <regex>
#include <set>

namespace confmod {

using nlohmann::json;

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isalnum(static_cast<unsigned char>(c))) continue;
    if (c == '_' && !(i + 1 < s.size() && s[i + 1] == '(')) continue;
    return false;
  }
  return s != "D";
}

ModuleElement module_expr(const Presentation& p, const ActionEngine& engine, const std::string& text) {
  return normalize_module(parse_expression(text, p.symbols), engine);
}

AlgebraElement algebra_expr(const Presentation& p, const ActionEngine& engine, const std::string& text) {
  return normalize_algebra(parse_expression(text, p.symbols), engine);
}

ModuleMonomial tail_word(std::uint32_t y) {
  ModuleMonomial u;
  u.tail = ModuleGen{y};
  return u;
}

AlgebraMonomial generator_word(std::uint32_t b) {
  AlgebraMonomial a;
  a.tail = AlgebraGen{b};
  return a;
}

void check_delta(const ParamValue& delta) {
  if (delta.value && *delta.value != 0 && *delta.value != 1)
    throw Error(ErrorCode::InvalidDelta, "Delta must be 0 or 1, got " + to_string(*delta.value));
}

std::vector<std::string> parameter_names(const ParamValue& delta, const ParamValue& alpha) {
  std::vector<std::string> names;
  if (alpha.is_symbolic()) names.push_back("alpha");
  if (delta.is_symbolic()) names.push_back("delta");
  return names;
}

Coefficient coefficient_of(const ParamValue& v, const SymbolTable& symbols, const std::string& name) {
  if (v.value) return Coefficient(*v.value);
  return Coefficient::parameter(*symbols.find_parameter(name));
}

// f1 = v(0)y - Dy - alpha y, f2 = v(1)y - Delta y for every y.
void add_virasoro_relations(Presentation& p, const ActionEngine& engine, const ParamValue& delta,
                            const ParamValue& alpha) {
  const Coefficient a = coefficient_of(alpha, p.symbols, "alpha");
  const Coefficient d = coefficient_of(delta, p.symbols, "delta");
  const auto& ys = p.symbols.module_generators();
  for (std::uint32_t y = 0; y < ys.size(); ++y) {
    ModuleElement f1 = module_expr(p, engine, "v_(0) " + ys[y] + " - D " + ys[y]);
    f1.add(tail_word(y), -a);
    ModuleElement f2 = module_expr(p, engine, "v_(1) " + ys[y]);
    f2.add(tail_word(y), -d);
    const std::string suffix = ys.size() == 1 ? "" : "_" + ys[y];
    p.module_relations.push_back({"f1" + suffix, std::move(f1)});
    p.module_relations.push_back({"f2" + suffix, std::move(f2)});
  }
}

std::vector<Rational> dense(const LinearCombination& c, std::size_t dim) {
  std::vector<Rational> out(dim);
  for (const auto& [r, i] : c) out.at(i) += r;
  return out;
}

LinearCombination sparse(const std::vector<Rational>& v) {
  LinearCombination out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(v[i], i);
  return out;
}

std::vector<Rational> act_on(const LieData& lie, std::size_t i, const std::vector<Rational>& vec) {
  std::vector<Rational> out(lie.module_basis.size());
  for (std::size_t y = 0; y < vec.size(); ++y) {
    if (vec[y] == 0) continue;
    auto it = lie.action.find({i, y});
    if (it == lie.action.end()) continue;
    for (const auto& [r, z] : it->second) out[z] += vec[y] * r;
  }
  return out;
}

std::vector<Rational> bracket_with(const LieData& lie, std::size_t i, const std::vector<Rational>& vec) {
  std::vector<Rational> out(lie.basis.size());
  for (std::size_t t = 0; t < vec.size(); ++t) {
    if (vec[t] == 0) continue;
    for (const auto& [r, s] : lie_bracket(lie, i, t)) out[s] += vec[t] * r;
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(0, "array", std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(0, "string", std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "valid JSON", e.what());
  }
}

std::pair<std::string, std::string> split_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ParseError(0, "\"x,z\"", "key '" + key + "' lacks a comma");
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error(ErrorCode::UnknownSymbol, "undeclared symbol '" + name + "'");
}

LinearCombination negated(LinearCombination c) {
  for (auto& [r, i] : c) r = -r;
  return c;
}

}  // namespace

LieData abelian_lie_data() {
  LieData lie;
  lie.basis = {"a"};
  lie.module_basis = {"y"};
  lie.action[{0, 0}] = {{Rational(1), 0}};
  return lie;
}

LieData nonabelian_lie_data() {
  LieData lie;
  lie.basis = {"a1", "a2"};
  lie.brackets[{1, 0}] = {{Rational(1), 0}};
  lie.module_basis = {"y"};
  lie.action[{1, 0}] = {{Rational(1), 0}};
  return lie;
}

LieData load_lie_data(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError(0, "object", "Lie data must be a JSON object");
  LieData lie;
  lie.basis = string_list(j, "basis");
  lie.module_basis = string_list(j, "module_basis");
  std::set<std::string> seen;
  for (const auto& n : lie.basis)
    if (!is_identifier(n) || n == "v" || !seen.insert(n).second)
      throw ParseError(0, "identifier", "invalid or duplicate basis name '" + n + "'");
  for (const auto& n : lie.module_basis)
    if (!is_identifier(n) || n == "v" || !seen.insert(n).second)
      throw ParseError(0, "identifier", "invalid or duplicate module basis name '" + n + "'");

  if (j.contains("brackets")) {
    for (const auto& [key, value] : j.at("brackets").items()) {
      const auto [x, z] = split_key(key);
      const std::size_t i = index_of(lie.basis, x);
      const std::size_t k = index_of(lie.basis, z);
      if (i == k) throw ParseError(0, "distinct basis elements", "bracket key '" + key + "' repeats a name");
      if (!value.is_string()) throw ParseError(0, "string", "bracket value must be a string");
      LinearCombination c = parse_linear_combination(value.get<std::string>(), lie.basis);
      // [a_k a_i] = -[a_i a_k]: store the key with the later element first
      const auto stored = i > k ? std::pair{i, k} : std::pair{k, i};
      if (i < k) c = negated(std::move(c));
      auto [it, inserted] = lie.brackets.emplace(stored, c);
      if (!inserted && dense(it->second, lie.basis.size()) != dense(c, lie.basis.size()))
        throw ParseError(0, "antisymmetric brackets", "bracket '" + key + "' contradicts its reverse");
    }
  }
  if (j.contains("action")) {
    for (const auto& [key, value] : j.at("action").items()) {
      const auto [x, y] = split_key(key);
      const std::size_t i = index_of(lie.basis, x);
      const std::size_t m = index_of(lie.module_basis, y);
      if (!value.is_string()) throw ParseError(0, "string", "action value must be a string");
      lie.action[{i, m}] = parse_linear_combination(value.get<std::string>(), lie.module_basis);
    }
  }
  return lie;
}

LinearCombination lie_bracket(const LieData& lie, std::size_t i, std::size_t j) {
  if (i == j) return {};
  if (i > j) {
    auto it = lie.brackets.find({i, j});
    return it == lie.brackets.end() ? LinearCombination{} : it->second;
  }
  return negated(lie_bracket(lie, j, i));
}

std::vector<std::string> lie_data_warnings(const LieData& lie) {
  std::vector<std::string> out;
  const std::size_t dim = lie.basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
          return bracket_with(lie, x, dense(lie_bracket(lie, y, z), dim));
        };
        auto a = term(i, j, k), b = term(j, k, i), c = term(k, i, j);
        for (std::size_t t = 0; t < dim; ++t) a[t] += b[t] + c[t];
        if (!sparse(a).empty())
          out.push_back("Jacobi identity fails on (" + lie.basis[i] + ", " + lie.basis[j] + ", " +
                        lie.basis[k] + ")");
      }
    }
  }
  const std::size_t mdim = lie.module_basis.size();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      for (std::size_t y = 0; y < mdim; ++y) {
        std::vector<Rational> e(mdim);
        e[y] = 1;
        auto lhs = act_on(lie, i, act_on(lie, j, e));
        const auto swapped = act_on(lie, j, act_on(lie, i, e));
        for (const auto& [r, t] : lie_bracket(lie, i, j)) {
          const auto part = act_on(lie, t, e);
          for (std::size_t z = 0; z < mdim; ++z) lhs[z] -= r * part[z];
        }
        for (std::size_t z = 0; z < mdim; ++z) lhs[z] -= swapped[z];
        if (!sparse(lhs).empty())
          out.push_back("not a g-module: [" + lie.basis[i] + ", " + lie.basis[j] + "] on " +
                        lie.module_basis[y]);
      }
    }
  }
  return out;
}

ParamValue parse_param_value(std::string_view text, std::string_view parameter_name) {
  if (text == parameter_name) return ParamValue::symbolic();
  static const std::regex rational(R"(([+-]?)(\d+)(?:/(\d+))?)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, rational))
    throw ParseError(0, "rational or '" + std::string(parameter_name) + "'", "invalid value '" + s + "'");
  Rational r(m[2].str());
  if (m[3].matched) {
    const Rational den(m[3].str());
    if (den == 0) throw ParseError(static_cast<std::size_t>(m.position(3)), "nonzero denominator", "division by zero");
    r /= den;
  }
  if (m[1].str() == "-") r = -r;
  return ParamValue::of(r);
}

Presentation virasoro_module(const ParamValue& delta, const ParamValue& alpha) {
  check_delta(delta);
  Presentation p;
  p.name = "virasoro";
  p.symbols = SymbolTable({"v"}, {"y"}, parameter_names(delta, alpha));
  p.locality = LocalityMap(1, 1, 2);
  const ActionEngine engine(p.locality, false);
  p.algebra_relations.push_back({"s", algebra_expr(p, engine, "v_(1) v - v")});
  p.d_free_gsb_asserted = true;
  add_virasoro_relations(p, engine, delta, alpha);
  validate(p);
  return p;
}

Presentation vir_cur_module(const LieData& lie, const ParamValue& delta, const ParamValue& alpha) {
  check_delta(delta);
  if (lie.module_basis.empty()) throw Error(ErrorCode::InvalidArgument, "the g-module needs a basis");
  std::vector<std::string> algebra = lie.basis;
  algebra.push_back("v");
  Presentation p;
  p.name = "vircur";
  p.symbols = SymbolTable(algebra, lie.module_basis, parameter_names(delta, alpha));
  p.locality = LocalityMap(algebra.size(), lie.module_basis.size(), 2);
  p.warnings = lie_data_warnings(lie);
  const ActionEngine engine(p.locality, false);
  const auto& a = lie.basis;
  const std::size_t dim = a.size();
  auto add = [&](const std::string& label, const std::string& text) {
    p.algebra_relations.push_back({label, algebra_expr(p, engine, text)});
  };
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      AlgebraElement s1 = algebra_expr(p, engine, a[i] + "_(0) " + a[j] + " - " + a[j] + "_(0) " + a[i]);
      for (const auto& [r, t] : lie_bracket(lie, i, j))
        s1.add(generator_word(static_cast<std::uint32_t>(t)), Coefficient(Rational(-r)));
      p.algebra_relations.push_back({"s1_" + a[i] + "_" + a[j], std::move(s1)});
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j) add("s2_" + a[i] + "_" + a[j], a[i] + "_(1) " + a[j]);
  add("s3", "v_(1) v - v");
  for (std::size_t i = 0; i < dim; ++i)
    add("s4_" + a[i], "v_(0) " + a[i] + " + " + a[i] + "_(1) D v - 2 * " + a[i] + "_(0) v - D " + a[i]);
  for (std::size_t i = 0; i < dim; ++i)
    add("s5_" + a[i], "v_(1) " + a[i] + " + " + a[i] + "_(1) v - " + a[i]);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      add("s6_" + a[i] + "_" + a[j],
          "v_(0) (" + a[j] + "_(0) " + a[i] + ") - " + a[j] + "_(0) (v_(0) " + a[i] + ")");
  for (std::size_t i = 0; i < dim; ++i)
    add("s7_" + a[i], "v_(0) (" + a[i] + "_(0) v) - " + a[i] + "_(0) (v_(0) v)");
  for (std::size_t i = 0; i < dim; ++i)
    add("s8_" + a[i],
        "v_(0) (" + a[i] + "_(1) v) - " + a[i] + "_(1) (v_(0) v) + " + a[i] + "_(0) v");

  add_virasoro_relations(p, engine, delta, alpha);
  const auto& ys = lie.module_basis;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::uint32_t y = 0; y < ys.size(); ++y) {
      ModuleElement f3 = module_expr(p, engine, a[i] + "_(0) " + ys[y]);
      if (auto it = lie.action.find({i, y}); it != lie.action.end())
        for (const auto& [r, z] : it->second)
          f3.add(tail_word(static_cast<std::uint32_t>(z)), Coefficient(Rational(-r)));
      p.module_relations.push_back({"f3_" + a[i] + "_" + ys[y], std::move(f3)});
      p.module_relations.push_back({"f4_" + a[i] + "_" + ys[y], module_expr(p, engine, a[i] + "_(1) " + ys[y])});
    }
  }
  validate(p);
  return p;
}

Presentation remark_counterexample() {
  Presentation p;
  p.name = "remark";
  p.symbols = SymbolTable({"a"}, {"y"});
  p.locality = LocalityMap(1, 1, 2);
  const ActionEngine engine(p.locality, false);
  const char* relations[] = {"a_(1) a - a_(0) D a", "a_(0) a_(1) a", "a_(1) a_(0) a", "a_(0) a_(0) a",
                             "a_(1) a_(1) a"};
  int k = 1;
  for (const char* r : relations) p.algebra_relations.push_back({"s" + std::to_string(k++), algebra_expr(p, engine, r)});
  validate(p);
  return p;
}

Presentation load_presentation(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError(0, "object", "preset file must be a JSON object");
  Presentation p;
  p.name = j.value("name", std::string("file"));
  const auto algebra = string_list(j, "algebra_generators");
  const auto module = string_list(j, "module_generators");
  if (module.empty()) throw Error(ErrorCode::InvalidArgument, "preset declares no module generators");
  p.symbols = SymbolTable(algebra, module, string_list(j, "parameters"));
  std::uint32_t uniform = 1;
  json pairs = json::array();
  if (j.contains("locality")) {
    const json& loc = j.at("locality");
    uniform = loc.value("uniform", 1u);
    if (loc.contains("pairs")) pairs = loc.at("pairs");
  }
  p.locality = LocalityMap(algebra.size(), module.size(), uniform);
  for (const auto& e : pairs) {
    const auto left = p.symbols.find_algebra(e.at("left").get<std::string>());
    if (!left) throw Error(ErrorCode::UnknownSymbol, "unknown algebra generator in locality pairs");
    const std::string right = e.at("right").get<std::string>();
    const auto value = e.at("value").get<std::uint32_t>();
    if (auto c = p.symbols.find_algebra(right)) p.locality.set(*left, *c, value);
    else if (auto y = p.symbols.find_module(right)) p.locality.set(*left, *y, value);
    else throw Error(ErrorCode::UnknownSymbol, "unknown generator '" + right + "' in locality pairs");
  }
  const ActionEngine engine(p.locality, false);
  auto relations = [&](const char* key, auto&& handle) {
    if (!j.contains(key)) return;
    int k = 1;
    for (const auto& e : j.at(key)) {
      const std::string label = e.value("label", std::string(key[0] == 'a' ? "s" : "f") + std::to_string(k));
      ++k;
      handle(label, e.at("value").get<std::string>());
    }
  };
  relations("algebra_relations", [&](const std::string& label, const std::string& text) {
    p.algebra_relations.push_back({label, algebra_expr(p, engine, text)});
  });
  relations("module_relations", [&](const std::string& label, const std::string& text) {
    p.module_relations.push_back({label, module_expr(p, engine, text)});
  });
  p.d_free_gsb_asserted = j.value("d_free_gsb_asserted", false);
  validate(p);
  return p;
}

void specialize_parameter(Presentation& p, const std::string& name, const Rational& value) {
  const auto index = p.symbols.find_parameter(name);
  if (!index) return;
  auto apply = [&](auto& element) {
    std::remove_reference_t<decltype(element)> out;
    for (const auto& [u, c] : element) out.add(u, c.substitute(*index, value));
    element = std::move(out);
  };
  for (auto& r : p.algebra_relations) apply(r.value);
  for (auto& r : p.module_relations) apply(r.value);
  validate(p);
}

}  // namespace confmod
