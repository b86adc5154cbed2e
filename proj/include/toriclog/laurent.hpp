#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toriclog/rational.hpp"

namespace toriclog {

// Dense exponent vector; entries may be negative.
using Exponent = std::vector<std::int64_t>;

// Sparse Laurent polynomial in a fixed number of variables over Q. Terms live
// in an ordered map and zero coefficients are never stored, so equality of
// polynomials is equality of term maps.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly variable(std::size_t nvars, std::size_t i, std::int64_t power = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // A unit of Q[x^{+-1}]: exactly one term.
  bool is_unit() const { return terms_.size() == 1; }
  Rational constant_term() const;

  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Rational& c) const;
  // Multiply by x^e.
  LaurentPoly shifted(const Exponent& e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Inverse of a unit; NotInvertible otherwise.
  LaurentPoly unit_inverse() const;
  // Integer power of a unit (negative powers allowed).
  LaurentPoly unit_power(std::int64_t k) const;

  // Euler operator x_i d/dx_i: multiplies each term by its i-th exponent.
  LaurentPoly euler(std::size_t i) const;

  // Restriction to the hypersurface x_i = 0: keeps terms with e_i == 0 and
  // drops those with e_i > 0. NotLogarithmic if some term has e_i < 0.
  LaurentPoly at_zero(std::size_t i) const;

  // Terms selected by a predicate on the exponent.
  template <class Pred>
  LaurentPoly filtered(Pred pred) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (pred(e)) out.terms_.emplace(e, c);
    return out;
  }

  // Re-embeds into `nvars` variables; existing variables keep their index and
  // new ones get exponent 0.
  LaurentPoly extended(std::size_t nvars) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

// Ring homomorphism x_j -> images[j]; each image must be a unit of the target
// ring so negative exponents substitute exactly.
LaurentPoly laurent_substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

// Monomial change of variables with exponent map: x^e -> y^(A e), where A
// has `nvars_out` rows and p.nvars() columns. Coefficients are unchanged.
class IntMatrix;
LaurentPoly monomial_transform(const LaurentPoly& p, const IntMatrix& a);

std::string default_variable_name(std::size_t i);

}  // namespace toriclog
