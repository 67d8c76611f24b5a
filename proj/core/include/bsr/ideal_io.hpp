#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bsr/monomial.hpp"
#include "bsr/numeric.hpp"

namespace bsr {

// Text format. Variables are x1, x2, ...; a monomial is "x1^2*x3", the unit
// monomial is "1". An ideal is a parenthesized comma list: "(x1^2, x2^3)";
// "(0)" and "()" give the zero ideal, "(1)" the whole ring.
//
// `vars`: fixed ambient dimension. Without it the dimension is the largest
// variable index seen (0 variables only for "(1)"/"(0)" forms).
MonomialIdeal parse_ideal(const std::string& text,
                          std::optional<std::size_t> vars = std::nullopt);
Monomial parse_monomial(const std::string& text,
                        std::optional<std::size_t> vars = std::nullopt);

std::string render_monomial(const Monomial& m);
std::string render_ideal(const MonomialIdeal& ideal);

// JSON structural form: {"n": 2, "gens": [[2,0],[0,3]]}. Exponents are JSON
// numbers when they fit in 64 bits and decimal strings otherwise; both are
// accepted on input. parse_ideal dispatches here when text starts with '{'.
MonomialIdeal ideal_from_json(const nlohmann::json& j,
                              std::optional<std::size_t> vars = std::nullopt);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

// Canonical scalar renderings shared by the CLI and the cache keys.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& v);  // {"num": "-5", "den": "4"}
Rat rat_from_json(const nlohmann::json& j);

}  // namespace bsr
