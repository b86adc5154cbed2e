#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toriclog {

// GMP values are always kept canonical: lowest terms, positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with decimal integers. Anything else (including
// decimal points and exponents) is a ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace toriclog
