#include "toriclog/laurent.hpp"

#include <sstream>

#include "toriclog/error.hpp"
#include "toriclog/integer_matrix.hpp"

namespace toriclog {

namespace {

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "Laurent polynomials in " + std::to_string(a.nvars()) +
                                                  " and " + std::to_string(b.nvars()) + " variables");
  }
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, std::int64_t power) {
  Exponent e(nvars, 0);
  e.at(i) = power;
  return monomial(1, std::move(e));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same(a, b);
  LaurentPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  if (s.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "shift exponent length");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::unit_inverse() const { return unit_power(-1); }

LaurentPoly LaurentPoly::unit_power(std::int64_t k) const {
  if (!is_unit()) throw Error(ErrorKind::NotInvertible, "not a unit: " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponent f = e;
  for (auto& x : f) x *= k;
  Rational v = 1;
  const Rational base = k >= 0 ? c : Rational(1) / c;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) v *= base;
  return monomial(v, std::move(f));
}

LaurentPoly LaurentPoly::euler(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorKind::DimensionMismatch, "Euler operator index");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) out.terms_.emplace(e, c * Rational(static_cast<long>(e[i])));
  return out;
}

LaurentPoly LaurentPoly::at_zero(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorKind::DimensionMismatch, "restriction index");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < 0) {
      throw Error(ErrorKind::NotLogarithmic,
                  "term " + monomial(c, e).to_string() + " has a pole along x" + std::to_string(i + 1) + " = 0");
    }
    if (e[i] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(ErrorKind::DimensionMismatch, "cannot shrink variable count");
  LaurentPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(nvars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string default_variable_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += i < names.size() ? names[i] : default_variable_name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      mag = abs(c);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else if (mag == -1) {
      os << '-' << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly laurent_substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  if (images.size() != p.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "substitution needs one image per variable");
  }
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (!images[j].is_unit()) {
      throw Error(ErrorKind::NonUnitImage,
                  "image of " + default_variable_name(j) + " is " + images[j].to_string() + ", not a unit");
    }
    if (images[j].nvars() != images.front().nvars()) {
      throw Error(ErrorKind::DimensionMismatch, "substitution images live in different rings");
    }
  }
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  LaurentPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) term = term * images[j].unit_power(e[j]);
    out += term;
  }
  return out;
}

LaurentPoly monomial_transform(const LaurentPoly& p, const IntMatrix& a) {
  if (a.cols() != p.nvars()) throw Error(ErrorKind::DimensionMismatch, "monomial transform shape");
  LaurentPoly out(a.rows());
  for (const auto& [e, c] : p.terms()) {
    Exponent f(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0) f[i] += to_int64(a(i, j)) * e[j];
    out.add_term(f, c);
  }
  return out;
}

}  // namespace toriclog
