#include "bsr/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "bsr/errors.hpp"

namespace bsr {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c))
      throw parse_error(std::string("expected '") + c + "' " + what, pos);
  }
  Int digits(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error(std::string("expected ") + what, pos);
    return Int(s.substr(start, pos - start));
  }
};

// factor := 'x' index ['^' ['-'] digits]. Exponents land in `exps`, growing
// it as higher indices appear.
void parse_factor(Cursor& cur, std::vector<Int>& exps) {
  cur.skip_ws();
  if (cur.peek() != 'x') throw parse_error("expected a variable like x1", cur.pos);
  ++cur.pos;
  Int index = cur.digits("a variable index after 'x'");
  if (index < 1) throw parse_error("variable indices start at 1", cur.pos);
  std::size_t idx = static_cast<std::size_t>(to_u64(index, "variable index"));
  Int exp = 1;
  if (cur.eat('^')) {
    bool neg = cur.eat('-');
    exp = cur.digits("an exponent after '^'");
    if (neg) throw parse_error("negative exponents are not allowed", cur.pos);
  }
  if (exps.size() < idx) exps.resize(idx, Int(0));
  exps[idx - 1] += exp;
}

// monomial := '1' | factor ('*' factor)*
std::vector<Int> parse_monomial_exps(Cursor& cur) {
  std::vector<Int> exps;
  if (cur.peek() == '1') {
    ++cur.pos;
    return exps;
  }
  parse_factor(cur, exps);
  while (cur.eat('*')) parse_factor(cur, exps);
  return exps;
}

Monomial with_dim(std::vector<Int> exps, std::size_t dim, std::size_t at) {
  if (exps.size() > dim)
    throw parse_error("monomial uses variable x" + std::to_string(exps.size()) +
                          " but only " + std::to_string(dim) + " variables are declared",
                      at);
  exps.resize(dim, Int(0));
  return Monomial(std::move(exps));
}

MonomialIdeal finish_ideal(std::vector<std::vector<Int>> raw_gens, bool saw_zero,
                           std::optional<std::size_t> vars, std::size_t at) {
  std::size_t dim = vars.value_or(0);
  if (!vars) {
    for (const auto& g : raw_gens) dim = std::max(dim, g.size());
  }
  std::vector<Monomial> gens;
  gens.reserve(raw_gens.size());
  for (auto& g : raw_gens) gens.push_back(with_dim(std::move(g), dim, at));
  if (saw_zero && !gens.empty())
    throw parse_error("'0' cannot be mixed with other generators", at);
  return MonomialIdeal(dim, std::move(gens));
}

}  // namespace

Monomial parse_monomial(const std::string& text, std::optional<std::size_t> vars) {
  Cursor cur{text};
  std::vector<Int> exps = parse_monomial_exps(cur);
  if (!cur.eof()) throw parse_error("trailing input after monomial", cur.pos);
  std::size_t dim = vars.value_or(exps.size());
  return with_dim(std::move(exps), dim, cur.pos);
}

MonomialIdeal parse_ideal(const std::string& text, std::optional<std::size_t> vars) {
  Cursor probe{text};
  if (probe.peek() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(std::string("bad JSON ideal: ") + e.what(), probe.pos);
    }
    return ideal_from_json(j, vars);
  }

  Cursor cur{text};
  cur.expect('(', "to open the generator list");
  std::vector<std::vector<Int>> raw;
  bool saw_zero = false;
  if (cur.peek() != ')') {
    do {
      if (cur.peek() == '0') {
        ++cur.pos;
        saw_zero = true;
      } else {
        raw.push_back(parse_monomial_exps(cur));
      }
    } while (cur.eat(','));
  }
  cur.expect(')', "to close the generator list");
  if (!cur.eof()) throw parse_error("trailing input after ideal", cur.pos);
  return finish_ideal(std::move(raw), saw_zero, vars, cur.pos);
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] != 1) out += '^' + m[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string render_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.num_generators(); ++i) {
    if (i) out += ", ";
    out += render_monomial(ideal.generators()[i]);
  }
  return out + ")";
}

MonomialIdeal ideal_from_json(const nlohmann::json& j, std::optional<std::size_t> vars) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
    throw parse_error("JSON ideal needs fields \"n\" and \"gens\"", 0);
  Int n = int_from_json(j.at("n"));
  if (n < 0) throw parse_error("JSON ideal: \"n\" must be >= 0", 0);
  std::size_t dim = static_cast<std::size_t>(to_u64(n, "variable count"));
  if (vars && *vars != dim)
    throw parse_error("JSON ideal declares n=" + std::to_string(dim) +
                          " but --vars says " + std::to_string(*vars),
                      0);
  if (!j.at("gens").is_array()) throw parse_error("JSON ideal: \"gens\" must be an array", 0);
  std::vector<Monomial> gens;
  for (const auto& row : j.at("gens")) {
    if (!row.is_array() || row.size() != dim)
      throw parse_error("JSON ideal: each generator must list exactly n exponents", 0);
    std::vector<Int> exps;
    exps.reserve(dim);
    for (const auto& v : row) exps.push_back(int_from_json(v));
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(dim, std::move(gens));
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : ideal.generators()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Int& e : g.exponents()) row.push_back(int_to_json(e));
    gens.push_back(std::move(row));
  }
  return {{"n", ideal.dim()}, {"gens", std::move(gens)}};
}

nlohmann::json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw parse_error("bad integer string \"" + j.get<std::string>() + "\"", 0);
    }
  }
  throw parse_error("expected an integer (number or decimal string)", 0);
}

nlohmann::json rat_to_json(const Rat& v) {
  return {{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

Rat rat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw parse_error("rational needs fields \"num\" and \"den\"", 0);
  Int num = int_from_json(j.at("num"));
  Int den = int_from_json(j.at("den"));
  if (den == 0) throw parse_error("rational with zero denominator", 0);
  // cpp_rational's (num, den) constructor rejects negative denominators.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

}  // namespace bsr
