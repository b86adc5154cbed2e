#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toriclog/connection.hpp"
#include "toriclog/fan.hpp"
#include "toriclog/klyachko.hpp"

namespace toriclog {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Multiplies g[source][target] by coefficient * x^exponent; a deliberately
// broken cocycle for negative controls.
struct CocyclePerturbation {
  std::size_t source = 0;
  std::size_t target = 0;
  Rational coefficient = 1;
  Exponent exponent;
};

struct BundleSpec {
  KlyachkoData data;
  std::optional<CocyclePerturbation> perturbation;
};

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// Integers as JSON numbers, other rationals as "p/q" strings.
OrderedJson rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Fan fan_from_json(const Json& j);
OrderedJson fan_to_json(const Fan& fan);

// { "rank", "filtrations": { "<ray>": [ {"jump", "vectors"} ] } } or the
// line-bundle shorthand { "cartier": { "<cone>": [u...] } }. Optional
// "perturb_cocycle": { "pair": [s, t], "coefficient", "exponent" }.
BundleSpec bundle_from_json(const Json& j, const Fan& fan);
OrderedJson bundle_to_json(const BundleSpec& bundle);

// [ {"coeff": q, "exp": [..]} ] in term order.
OrderedJson poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j, std::size_t nvars);
OrderedJson matrix_to_json(const LaurentMatrix& m);

// Per cone: constant log part per coordinate plus hol part terms.
OrderedJson connection_to_json(const LogConnection& conn);

}  // namespace toriclog
