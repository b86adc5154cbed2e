#include "toriclog/rational.hpp"

#include <cctype>

#include "toriclog/error.hpp"

namespace toriclog {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonUnitImage: return "NonUnitImage";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MalformedFan: return "MalformedFan";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NonSmoothCone: return "NonSmoothCone";
    case ErrorKind::IncompleteFan: return "IncompleteFan";
    case ErrorKind::RayNotInCone: return "RayNotInCone";
    case ErrorKind::LogFrameFailure: return "LogFrameFailure";
    case ErrorKind::InvalidFiltration: return "InvalidFiltration";
    case ErrorKind::IncompatibleFiltrations: return "IncompatibleFiltrations";
    case ErrorKind::CocycleFailure: return "CocycleFailure";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NoCoboundary: return "NoCoboundary";
    case ErrorKind::GaugeMismatch: return "GaugeMismatch";
    case ErrorKind::NonzeroCurvature: return "NonzeroCurvature";
    case ErrorKind::FlatFrameFailure: return "FlatFrameFailure";
    case ErrorKind::NotLogarithmic: return "NotLogarithmic";
    case ErrorKind::ChartDisagreement: return "ChartDisagreement";
    case ErrorKind::ResidueMismatch: return "ResidueMismatch";
    case ErrorKind::ChernMismatch: return "ChernMismatch";
  }
  return "Unknown";
}

namespace {

bool is_decimal_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  Integer n(strip_plus(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace toriclog
