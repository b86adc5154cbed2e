#include "toriclog/log_tangent.hpp"

#include "toriclog/error.hpp"

namespace toriclog {

std::vector<LaurentPoly> ordinary_coefficients(const LogVectorField& field) {
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < field.coeffs.size(); ++i) {
    Exponent e(field.coeffs[i].nvars(), 0);
    e.at(i) = 1;
    out.push_back(field.coeffs[i].shifted(e));
  }
  return out;
}

bool is_log_tangent(const std::vector<LaurentPoly>& ordinary) {
  for (std::size_t i = 0; i < ordinary.size(); ++i)
    for (const auto& [e, c] : ordinary[i].terms()) {
      for (auto x : e)
        if (x < 0) return false;
      if (e[i] < 1) return false;
    }
  return true;
}

BetaMatrix beta_matrix(const Atlas& atlas, std::size_t cone) {
  return BetaMatrix{cone, atlas.charts.at(cone).dual_basis};
}

LogVectorField beta_column(const Atlas& atlas, std::size_t cone, std::size_t j) {
  const auto beta = beta_matrix(atlas, cone);
  const std::size_t n = atlas.dim();
  LogVectorField f{cone, {}};
  for (std::size_t i = 0; i < n; ++i) f.coeffs.push_back(LaurentPoly::constant(n, Rational(beta.matrix(i, j))));
  return f;
}

LogVectorField transport_log_field(const Atlas& atlas, const LogVectorField& field, std::size_t target) {
  const std::size_t n = atlas.dim();
  if (field.coeffs.size() != n) throw Error(ErrorKind::DimensionMismatch, "field has wrong number of components");
  // x^(s)_i d/dx^(s)_i = sum_j T(i, j) x^(t)_j d/dx^(t)_j  with T = T_{s t}.
  const IntMatrix& t = atlas.transition(field.chart, target).exponent;
  LogVectorField out{target, std::vector<LaurentPoly>(n, LaurentPoly(field.coeffs.empty() ? n : field.coeffs[0].nvars()))};
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly moved = atlas.rewrite(field.coeffs[i], field.chart, target);
    for (std::size_t j = 0; j < n; ++j)
      if (t(i, j) != 0) out.coeffs[j] += moved.scaled(Rational(t(i, j)));
  }
  return out;
}

LogFrameReport check_log_frame(const Atlas& atlas) {
  LogFrameReport rep;
  const std::size_t n = atlas.dim();
  for (std::size_t c = 0; c < atlas.cone_count(); ++c) {
    const auto beta = beta_matrix(atlas, c);
    LogFrameConeResult r{c, determinant(beta.matrix), false, true};
    r.unimodular = abs(r.determinant) == 1;
    if (!r.unimodular) {
      rep.failures.push_back("cone " + std::to_string(c) + ": det beta = " + r.determinant.get_str() +
                             ", wedge^n beta is not a unit");
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!is_log_tangent(ordinary_coefficients(beta_column(atlas, c, j)))) r.log_tangent = false;
    if (!r.log_tangent) rep.failures.push_back("cone " + std::to_string(c) + ": beta column leaves TM(-log D)");
    rep.cones.push_back(r);
  }
  for (std::size_t s = 0; s < atlas.cone_count(); ++s)
    for (std::size_t t = 0; t < atlas.cone_count(); ++t)
      for (std::size_t j = 0; j < n; ++j) {
        const auto moved = transport_log_field(atlas, beta_column(atlas, s, j), t);
        ++rep.transports_checked;
        if (moved != beta_column(atlas, t, j)) {
          rep.failures.push_back("cone " + std::to_string(s) + " -> cone " + std::to_string(t) + ": beta column " +
                                 std::to_string(j) + " does not transport to the target beta column");
        } else if (!is_log_tangent(ordinary_coefficients(moved))) {
          rep.failures.push_back("cone " + std::to_string(t) + ": transported column leaves TM(-log D)");
        }
      }
  return rep;
}

void require_log_frame(const Atlas& atlas) {
  const auto rep = check_log_frame(atlas);
  if (!rep.ok()) throw Error(ErrorKind::LogFrameFailure, rep.failures.front());
}

}  // namespace toriclog
