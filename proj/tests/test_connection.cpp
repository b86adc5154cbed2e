#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toriclog/builtins.hpp"
#include "toriclog/connection.hpp"
#include "toriclog/error.hpp"

using namespace toriclog;

namespace {

struct Built {
  Fan fan;
  Atlas atlas;
  KlyachkoData data;
  std::vector<ConeDecomposition> decs;
  Cocycle cocycle;
  LogConnection conn;
};

Built build(const Fan& fan, const KlyachkoData& data) {
  Atlas atlas = build_atlas(fan);
  auto decs = solve_all_decompositions(data, atlas);
  Cocycle c = build_cocycle(decs, atlas);
  LogConnection conn = canonical_connection(decs, atlas);
  return Built{fan, std::move(atlas), data, std::move(decs), std::move(c), std::move(conn)};
}

Built build(const std::string& fan, const std::string& bundle) {
  return build(builtin_fan(fan), builtin_bundle(fan, bundle).data);
}

LaurentMatrix scalar(std::size_t n, const Rational& c) { return LaurentMatrix::constant(n, QMatrix::from_rows({{c}}, 1)); }

}  // namespace

TEST_CASE("the pinned sign is the one the flat-frame oracle selects") {
  CHECK(pin_connection_sign() == kConnectionSign);
  CHECK(kConnectionSign == -1);
}

TEST_CASE("trivial bundle has the zero connection") {
  const auto b = build("p2", "trivial(2)");
  for (const auto& f : b.conn.forms) CHECK(f.is_zero());
}

TEST_CASE("O(k) on P1") {
  for (std::int64_t k = -2; k <= 2; ++k) {
    const auto b = build("p1", "O(" + std::to_string(k) + ")");
    CHECK(b.conn.forms[0].is_zero());
    CHECK(b.conn.forms[1] == LogOneForm::from_log_frame({scalar(1, kConnectionSign * k)}));
    CHECK(check_gauge_law(b.conn, b.cocycle, b.atlas).ok());
    const auto spec = residues(b.conn, b.atlas);
    CHECK(spec.rays[0].trace + spec.rays[1].trace == Rational(static_cast<long>(kConnectionSign * k)));
    // degree + (-sign) * total residue = 0
    CHECK(Rational(static_cast<long>(k)) - kConnectionSign * (spec.rays[0].trace + spec.rays[1].trace) == 0);
  }
}

TEST_CASE("canonical connection is minus the log derivative of the orbit frame") {
  // Orbit frame s_a = z^{u_a} e_a is flat, so A = -dPhi Phi^{-1}, Phi = diag(z^{u_a}).
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    for (const auto& d : b.decs) {
      std::vector<LaurentPoly> diag, inv;
      for (const auto& w : d.frame) {
        diag.push_back(oracle::character(b.fan, d.cone, w.weight));
        inv.push_back(diag.back().unit_inverse());
      }
      const std::size_t n = b.fan.rank;
      std::vector<LaurentMatrix> coeff;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<LaurentPoly> entries;
        for (std::size_t a = 0; a < diag.size(); ++a) {
          // x_i d/dx_i of the monomial, times its inverse
          LaurentPoly e = oracle::partial(diag[a], i) * inv[a] * LaurentPoly::variable(n, i);
          entries.push_back(-e);
        }
        coeff.push_back(LaurentMatrix::diagonal(entries));
      }
      CHECK(b.conn.forms[d.cone] == LogOneForm::from_log_frame(coeff));
    }
  }
}

TEST_CASE("gauge law on the catalog") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    const auto rep = check_gauge_law(b.conn, b.cocycle, b.atlas);
    CHECK(rep.ok());
    const std::size_t k = b.atlas.cone_count();
    CHECK(rep.pairs.size() == k * (k - 1));
  }
  CHECK(check_gauge_law(build("p2", "tangent").conn, build("p2", "tangent").cocycle, build_atlas(builtin_fan("p2"))).pairs.size() == 6);
}

TEST_CASE("gauge law catches a corrupted cocycle") {
  auto b = build("p1", "O(1)");
  b.cocycle(0, 1) = b.cocycle(0, 1).scaled(LaurentPoly::variable(1, 0));
  const auto rep = check_gauge_law(b.conn, b.cocycle, b.atlas);
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& p : rep.pairs)
    if (!p.ok && p.source == 0 && p.target == 1) named = p.detail.find("GaugeMismatch") == 0;
  CHECK(named);
}

TEST_CASE("curvature vanishes on the catalog") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    for (const auto& f : curvature(b.conn)) CHECK(f.is_zero());
  }
}

TEST_CASE("hand-built non-flat connection") {
  // A = x2 dx1 N with N nilpotent: F = -dx1 ^ dx2 N
  LaurentMatrix n1(2, 2, 2);
  n1(0, 1) = LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1);
  const LogConnection conn{2, 2, {LogOneForm::from_log_frame({n1, LaurentMatrix::zero(2, 2, 2)})}};
  const auto f = curvature(conn);
  REQUIRE_FALSE(f[0].is_zero());
  LaurentMatrix expected(2, 2, 2);
  expected(0, 1) = -(LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 1));
  CHECK(f[0].coefficient(0, 1) == expected);
  const auto checks = check_curvature(conn);
  CHECK_FALSE(checks[0].ok);
  CHECK(checks[0].detail.find("NonzeroCurvature") == 0);
}

TEST_CASE("random constant connections: flat iff the matrices commute") {
  gen::Source g(51);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LaurentMatrix> diag, full;
    for (std::size_t i = 0; i < 2; ++i) {
      diag.push_back(LaurentMatrix::diagonal({LaurentPoly::constant(2, g.rational()), LaurentPoly::constant(2, g.rational())}));
      QMatrix q(2, 2);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) q(r, c) = g.rational();
      full.push_back(LaurentMatrix::constant(2, q));
    }
    CHECK(curvature(LogConnection{2, 2, {LogOneForm::from_log_frame(diag)}})[0].is_zero());
    const bool commute = full[0] * full[1] == full[1] * full[0];
    CHECK(curvature(LogConnection{2, 2, {LogOneForm::from_log_frame(full)}})[0].is_zero() == commute);
  }
}

TEST_CASE("flat frames on the catalog") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    const auto rep = flat_frame_check(b.conn, b.decs, b.atlas);
    CHECK(rep.ok());
    CHECK(rep.charts.size() == b.atlas.cone_count());
  }
}

TEST_CASE("the opposite sign is rejected by the flat-frame check") {
  const auto b = build("p1", "O(1)");
  const auto wrong = canonical_connection(b.decs, b.atlas, -kConnectionSign);
  CHECK_FALSE(flat_frame_check(wrong, b.decs, b.atlas, -kConnectionSign).ok());
  CHECK_FALSE(check_gauge_law(wrong, b.cocycle, b.atlas).ok());
}

TEST_CASE("perturbed weight fails at the named chart") {
  const auto b = build("p2", "tangent");
  auto bad = b.decs;
  bad[2].frame[0].weight[0] += 1;
  const auto conn = canonical_connection(bad, b.atlas);
  const auto rep = flat_frame_check(conn, b.decs, b.atlas);
  CHECK_FALSE(rep.ok());
  for (const auto& c : rep.charts) {
    CHECK(c.ok == (c.cone != 2));
    if (!c.ok) CHECK(c.detail.find("FlatFrameFailure") == 0);
  }
}

TEST_CASE("characteristic polynomials and rational eigenvalues") {
  const QMatrix a = QMatrix::from_rows({{2, 1}, {0, 3}}, 2);
  CHECK(characteristic_polynomial(a) == std::vector<Rational>{6, -5, 1});
  CHECK(rational_eigenvalues(a) == std::vector<Rational>{2, 3});
  const QMatrix half = QMatrix::from_rows({{Rational(1, 2), 0, 0}, {1, Rational(1, 2), 0}, {0, 0, -4}}, 3);
  CHECK(rational_eigenvalues(half) == std::vector<Rational>{-4, Rational(1, 2), Rational(1, 2)});
  CHECK_FALSE(rational_eigenvalues(QMatrix::from_rows({{0, 1}, {2, 0}}, 2)).has_value());
  CHECK(rational_eigenvalues(QMatrix(2, 2)) == std::vector<Rational>{0, 0});
}

TEST_CASE("residues on the catalog match signed jumps and the determinant") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    const auto spec = residues(b.conn, b.atlas);
    CHECK(spec.rays.size() == b.fan.rays.size());
    CHECK(residue_jump_mismatches(spec, b.data).empty());
    const auto chern = check_first_chern(spec, b.cocycle, b.atlas);
    CHECK(chern.ok);
    // tr Res_rho is exactly sign * (jump sum) = sign * det divisor coefficient
    const auto det = determinant_divisor(b.data, b.fan);
    for (const auto& rr : spec.rays) CHECK(rr.trace == Rational(static_cast<long>(kConnectionSign * det[rr.ray])));
    for (const auto& rr : spec.rays)
      for (const auto& ev : rr.eigenvalues) CHECK(is_integer(ev));
  }
}

TEST_CASE("trivial bundle residues are zero") {
  const auto b = build("f1", "trivial(2)");
  for (const auto& rr : residues(b.conn, b.atlas).rays) CHECK(rr.eigenvalues == std::vector<Rational>{0, 0});
}

TEST_CASE("residue failures") {
  const Fan p1 = builtin_fan("p1");
  const Atlas a = build_atlas(p1);
  SUBCASE("charts disagree") {
    // P^2 with residues along ray 1 that differ between cones 0 and 1.
    const Fan p2 = builtin_fan("p2");
    const Atlas a2 = build_atlas(p2);
    const auto zero = LogOneForm::zero(2, 1, 1);
    const LogConnection conn{2, 1, {LogOneForm::from_log_frame({scalar(2, 0), scalar(2, 1)}), zero, zero}};
    try {
      residues(conn, a2);
      FAIL("expected ChartDisagreement");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ChartDisagreement);
    }
  }
  SUBCASE("pole of higher order") {
    LaurentMatrix m(1, 1, 1);
    m(0, 0) = LaurentPoly::variable(1, 0, -1);
    const LogConnection conn{1, 1, {LogOneForm::from_log_frame({m}), LogOneForm::zero(1, 1, 1)}};
    try {
      residues(conn, a);
      FAIL("expected NotLogarithmic");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotLogarithmic);
    }
  }
  SUBCASE("wrong jumps") {
    const auto b = build("p1", "O(1)");
    const auto spec = residues(b.conn, b.atlas);
    CHECK(residue_jump_mismatches(spec, line_bundle(p1, {0, 2})).size() == 1);
  }
  SUBCASE("wrong total residue") {
    const auto b = build("p1", "O(1)");
    auto spec = residues(b.conn, b.atlas);
    spec.rays[0].trace += 1;
    CHECK_FALSE(check_first_chern(spec, b.cocycle, b.atlas).ok);
  }
}

TEST_CASE("determinant divisor from the cocycle alone") {
  const auto b = build("p2", "tangent");
  const auto d = cocycle_determinant_divisor(b.cocycle, b.atlas);
  // sum is the degree of the anticanonical class
  CHECK(d[0] + d[1] + d[2] == 3);
}

TEST_CASE("rewritten forms compose") {
  const auto b = build("f2", "tangent");
  const std::size_t k = b.atlas.cone_count();
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t u = 0; u < k; ++u) {
        const auto direct = rewrite_form(b.conn.forms[u], b.atlas, u, s);
        const auto twice = rewrite_form(rewrite_form(b.conn.forms[u], b.atlas, u, t), b.atlas, t, s);
        CHECK(direct == twice);
      }
}
