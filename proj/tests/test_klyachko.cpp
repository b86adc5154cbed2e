#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toriclog/builtins.hpp"
#include "toriclog/error.hpp"
#include "toriclog/klyachko.hpp"
#include "toriclog/serialization.hpp"

using namespace toriclog;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

struct Built {
  Fan fan;
  Atlas atlas;
  KlyachkoData data;
  std::vector<ConeDecomposition> decs;
  Cocycle cocycle;
};

Built build(const Fan& fan, const KlyachkoData& data) {
  Atlas atlas = build_atlas(fan);
  auto decs = solve_all_decompositions(data, atlas);
  Cocycle c = build_cocycle(decs, atlas);
  return Built{fan, std::move(atlas), data, std::move(decs), std::move(c)};
}

Built build(const std::string& fan, const std::string& bundle) {
  return build(builtin_fan(fan), builtin_bundle(fan, bundle).data);
}

LaurentPoly xpow(std::size_t n, std::size_t i, std::int64_t k) { return LaurentPoly::variable(n, i, k); }

}  // namespace

TEST_CASE("O(k) on P1 decomposes with weights 0 and -k") {
  const Fan p1 = builtin_fan("p1");
  const Atlas a = build_atlas(p1);
  for (std::int64_t k = -3; k <= 3; ++k) {
    const auto data = line_bundle(p1, {0, k});
    CHECK(solve_decomposition(data, a, 0).frame.front().weight == IntVector{0});
    CHECK(solve_decomposition(data, a, 1).frame.front().weight == IntVector{-k});
  }
}

TEST_CASE("trivial bundle has weight zero everywhere") {
  const auto b = build("p2", "trivial(3)");
  for (const auto& d : b.decs) {
    REQUIRE(d.frame.size() == 3);
    for (const auto& w : d.frame) CHECK(w.weight == IntVector{0, 0});
  }
  const auto id = LaurentMatrix::identity(2, 3);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = 0; t < 3; ++t) CHECK(b.cocycle(s, t) == id);
}

TEST_CASE("tangent bundle of P2 uses chart characters and ray eigenvectors") {
  const auto b = build("p2", "tangent");
  for (const auto& d : b.decs) {
    const auto rows = oracle::dual_rows(b.fan, d.cone);
    REQUIRE(d.frame.size() == 2);
    for (const auto& w : d.frame) {
      // weight is some m_i and the eigenvector is parallel to v_i
      bool matched = false;
      for (std::size_t i = 0; i < 2; ++i) {
        if (w.weight != rows[i]) continue;
        const auto& v = b.fan.rays[b.fan.cones[d.cone][i]];
        const Rational cross = w.vector[0] * Rational(static_cast<long>(v[1])) - w.vector[1] * Rational(static_cast<long>(v[0]));
        matched = cross == 0;
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("filtration validation") {
  const Fan p1 = builtin_fan("p1");
  const auto ok = line_bundle(p1, {0, 1});
  CHECK_NOTHROW(validate_klyachko(ok, p1));
  auto missing = ok;
  missing.filtrations.erase(1);
  CHECK(kind_of([&] { validate_klyachko(missing, p1); }) == ErrorKind::InvalidFiltration);
  KlyachkoData ragged{2, {{0, {{0, {{1, 0}, {0}}}}}, {1, {{0, {{1, 0}, {0, 1}}}}}}};
  CHECK(kind_of([&] { validate_klyachko(ragged, p1); }) == ErrorKind::InvalidFiltration);
  KlyachkoData increasing{2, {{0, {{0, {{1, 0}}}, {1, {{0, 1}}}}}, {1, {{0, {{1, 0}, {0, 1}}}}}}};
  CHECK(kind_of([&] { validate_klyachko(increasing, p1); }) == ErrorKind::InvalidFiltration);
  KlyachkoData stalled{2, {{0, {{2, {{1, 0}}}, {1, {{3, 0}}}, {0, {{0, 1}}}}}, {1, {{0, {{1, 0}, {0, 1}}}}}}};
  CHECK(kind_of([&] { validate_klyachko(stalled, p1); }) == ErrorKind::InvalidFiltration);
  KlyachkoData short_span{2, {{0, {{0, {{1, 0}}}}}, {1, {{0, {{1, 0}, {0, 1}}}}}}};
  CHECK(kind_of([&] { validate_klyachko(short_span, p1); }) == ErrorKind::InvalidFiltration);
}

TEST_CASE("three lines on one cone of P3 are incompatible") {
  const Fan p3 = fan_from_json(load_json_file(std::string(TORICLOG_DATA_DIR) + "/p3.json"));
  const auto spec = bundle_from_json(load_json_file(std::string(TORICLOG_DATA_DIR) + "/p3_incompatible.json"), p3);
  const Atlas a = build_atlas(p3);
  try {
    solve_all_decompositions(spec.data, a);
    FAIL("expected IncompatibleFiltrations");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleFiltrations);
    CHECK(std::string(e.what()).find("cone 0") != std::string::npos);
  }
}

TEST_CASE("cartier shorthand") {
  const Fan p1 = builtin_fan("p1");
  const auto spec = bundle_from_json(load_json_file(std::string(TORICLOG_DATA_DIR) + "/p1_cartier_o2.json"), p1);
  CHECK(spec.data.jumps(1) == std::vector<std::int64_t>{2});
  CHECK(spec.data.jumps(0) == std::vector<std::int64_t>{0});
  const Fan p2 = builtin_fan("p2");
  CHECK(kind_of([&] { line_bundle_from_cartier(p2, {{0, {1, 0}}, {1, {0, 0}}, {2, {0, 0}}}); }) ==
        ErrorKind::InvalidFiltration);
}

TEST_CASE("O(k) cocycle on P1 is x^k") {
  for (std::int64_t k = -2; k <= 2; ++k) {
    const auto b = build(builtin_fan("p1"), line_bundle(builtin_fan("p1"), {0, k}));
    CHECK(b.cocycle(0, 1)(0, 0) == xpow(1, 0, k));
    CHECK(b.cocycle(1, 0)(0, 0) == xpow(1, 0, k));  // y^k in chart 1
  }
}

TEST_CASE("cocycle identities and reconstruction on the whole catalog") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    for (const auto& d : b.decs) CHECK_FALSE(reconstruction_failure(b.data, b.atlas, d).has_value());
    const auto rep = check_cocycle(b.cocycle, b.atlas);
    CHECK(rep.ok());
    CHECK(rep.determinants_are_units);
    CHECK(rep.triples_checked == b.atlas.cone_count() * b.atlas.cone_count() * b.atlas.cone_count());
    if (c.split) CHECK(b.cocycle.is_diagonal());
  }
}

TEST_CASE("line bundle cocycles match the Cartier oracle") {
  gen::Source g(21);
  for (const auto& name : builtin_fan_names()) {
    const Fan fan = builtin_fan(name);
    for (int trial = 0; trial < 8; ++trial) {
      IntVector d(fan.rays.size());
      for (auto& x : d) x = g.integer(-4, 4);
      CAPTURE(name);
      const auto b = build(fan, line_bundle(fan, d));
      for (std::size_t s = 0; s < fan.cones.size(); ++s)
        for (std::size_t t = 0; t < fan.cones.size(); ++t)
          CHECK(b.cocycle(s, t) == oracle::line_bundle_transition(fan, d, s, t));
    }
  }
}

TEST_CASE("tangent cocycles match the Jacobian oracle") {
  for (const auto& name : builtin_fan_names()) {
    CAPTURE(name);
    const Fan fan = builtin_fan(name);
    const auto b = build(fan, tangent_bundle(fan));
    for (std::size_t s = 0; s < fan.cones.size(); ++s)
      for (std::size_t t = 0; t < fan.cones.size(); ++t)
        CHECK(b.cocycle(s, t) == oracle::tangent_transition(fan, b.decs, s, t));
  }
  const Fan p3 = fan_from_json(load_json_file(std::string(TORICLOG_DATA_DIR) + "/p3.json"));
  const auto b = build(p3, tangent_bundle(p3));
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) CHECK(b.cocycle(s, t) == oracle::tangent_transition(p3, b.decs, s, t));
}

TEST_CASE("determinant of the cocycle is the determinant line bundle") {
  for (const auto& c : builtin_catalog()) {
    CAPTURE(c.fan);
    CAPTURE(c.bundle);
    const auto b = build(c.fan, c.bundle);
    const auto det = determinant_divisor(b.data, b.fan);
    const auto line = build(b.fan, line_bundle(b.fan, det));
    for (std::size_t s = 0; s < b.fan.cones.size(); ++s)
      for (std::size_t t = 0; t < b.fan.cones.size(); ++t) {
        const LaurentPoly d = b.cocycle(s, t).determinant();
        REQUIRE(d.is_unit());
        // equal up to the constant change of fiber basis
        const LaurentPoly ratio = d * line.cocycle(s, t)(0, 0).unit_inverse();
        CHECK(ratio.is_constant());
      }
  }
}

TEST_CASE("random two-dimensional filtrations are always compatible") {
  gen::Source g(31);
  const std::vector<std::string> fans{"p2", "p1xp1", "f1", "f3", "blp2"};
  for (int trial = 0; trial < 40; ++trial) {
    const Fan fan = builtin_fan(fans[static_cast<std::size_t>(g.integer(0, 4))]);
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    KlyachkoData data{r, {}};
    for (std::size_t ray = 0; ray < fan.rays.size(); ++ray) {
      // random flag from a random basis, random decreasing jumps
      std::vector<QVector> basis;
      while (basis.size() < r) {
        QVector v(r);
        for (auto& x : v) x = g.rational(3);
        basis.push_back(v);
        if (Subspace::span(basis, r).dim() < basis.size()) basis.pop_back();
      }
      std::vector<FiltrationStep> steps;
      std::int64_t jump = g.integer(-2, 3);
      std::size_t used = 0;
      while (used < r) {
        const auto take = static_cast<std::size_t>(g.integer(1, static_cast<std::int64_t>(r - used)));
        FiltrationStep s{jump, {}};
        for (std::size_t k = 0; k < take; ++k) s.vectors.push_back(basis[used + k]);
        used += take;
        steps.push_back(s);
        jump -= g.integer(1, 3);
      }
      data.filtrations[ray] = steps;
    }
    REQUIRE_NOTHROW(validate_klyachko(data, fan));
    const auto b = build(fan, data);
    for (const auto& d : b.decs) CHECK_FALSE(reconstruction_failure(data, b.atlas, d).has_value());
    CHECK(check_cocycle(b.cocycle, b.atlas).ok());
  }
}

TEST_CASE("pullback by the torus") {
  SUBCASE("O(k) on P1 becomes t^k x^k") {
    const auto b = build("p1", "O(3)");
    const Cocycle pulled = pullback_by_torus(b.cocycle, b.atlas);
    CHECK(pulled.nvars == 2);
    CHECK(pulled(0, 1)(0, 0) == LaurentPoly::monomial(1, {3, 3}));
  }
  SUBCASE("constant cocycles are unchanged") {
    const auto b = build("p2", "trivial(2)");
    const Cocycle pulled = pullback_by_torus(b.cocycle, b.atlas);
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t t = 0; t < 3; ++t) CHECK(pulled(s, t) == b.cocycle(s, t).extended(4));
  }
  SUBCASE("pullback is still a cocycle") {
    const auto b = build("f2", "tangent");
    const Cocycle pulled = pullback_by_torus(b.cocycle, b.atlas);
    CHECK(check_cocycle(pulled, b.atlas).ok());
  }
}

TEST_CASE("coboundary split") {
  SUBCASE("O(k) on P1") {
    const auto b = build("p1", "O(2)");
    const auto w = solve_coboundary_split(b.cocycle, pullback_by_torus(b.cocycle, b.atlas), b.atlas);
    CHECK(w.exponents[0][0] == IntVector{0});
    CHECK(w.exponents[1][0] == IntVector{-2});
  }
  SUBCASE("trivial") {
    const auto b = build("p1xp1", "O(0,0)");
    const auto w = solve_coboundary_split(b.cocycle, pullback_by_torus(b.cocycle, b.atlas), b.atlas);
    for (const auto& cone : w.exponents) CHECK(cone.front() == IntVector{0, 0});
  }
  SUBCASE("every split catalog bundle") {
    for (const auto& c : builtin_catalog()) {
      if (!c.split) continue;
      CAPTURE(c.fan);
      CAPTURE(c.bundle);
      const auto b = build(c.fan, c.bundle);
      CHECK_NOTHROW(solve_coboundary_split(b.cocycle, pullback_by_torus(b.cocycle, b.atlas), b.atlas));
    }
  }
  SUBCASE("non-exact character cocycle") {
    const auto b = build("p1xp1", "O(0,0)");
    Cocycle pulled = pullback_by_torus(b.cocycle, b.atlas);
    pulled(0, 1) = pulled(0, 1).scaled(LaurentPoly::monomial(1, {0, 0, 1, 0}));
    CHECK(kind_of([&] { solve_coboundary_split(b.cocycle, pulled, b.atlas); }) == ErrorKind::NoCoboundary);
  }
  SUBCASE("non-diagonal input") {
    const auto b = build("p2", "tangent");
    CHECK(kind_of([&] { solve_coboundary_split(b.cocycle, pullback_by_torus(b.cocycle, b.atlas), b.atlas); }) ==
          ErrorKind::NotSplit);
  }
}

TEST_CASE("random sums of line bundles split") {
  gen::Source g(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto names = builtin_fan_names();
    const Fan fan = builtin_fan(names[static_cast<std::size_t>(g.integer(0, 6))]);
    KlyachkoData data;
    const auto summands = g.integer(1, 3);
    for (std::int64_t s = 0; s < summands; ++s) {
      IntVector d(fan.rays.size());
      for (auto& x : d) x = g.integer(-3, 3);
      data = s == 0 ? line_bundle(fan, d) : direct_sum(data, line_bundle(fan, d));
    }
    const auto b = build(fan, data);
    REQUIRE(b.cocycle.is_diagonal());
    CHECK_NOTHROW(solve_coboundary_split(b.cocycle, pullback_by_torus(b.cocycle, b.atlas), b.atlas));
  }
}
