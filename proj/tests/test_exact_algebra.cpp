#include <doctest.h>

#include "generators.hpp"
#include "toriclog/error.hpp"
#include "toriclog/integer_matrix.hpp"
#include "toriclog/laurent.hpp"
#include "toriclog/log_forms.hpp"
#include "toriclog/rational_linalg.hpp"

using namespace toriclog;

namespace {

LaurentPoly x(std::size_t n, std::size_t i, std::int64_t p = 1) { return LaurentPoly::variable(n, i, p); }

LaurentMatrix scalar(const LaurentPoly& p) {
  LaurentMatrix m(p.nvars(), 1, 1);
  m(0, 0) = p;
  return m;
}

LaurentMatrix scalar(std::size_t n, const Rational& c) { return scalar(LaurentPoly::constant(n, c)); }

bool is_diagonal_chain(const IntMatrix& s) {
  Integer prev = 0;
  const std::size_t k = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s(i, i) < 0) return false;
    if (i > 0 && prev == 0 && s(i, i) != 0) return false;
    if (i > 0 && prev != 0 && s(i, i) % prev != 0) return false;
    prev = s(i, i);
  }
  return true;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms and parse exactly") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4").get_den() == 2);
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("3/-6"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(parse_rational("-3/9")) == "-1/3");
  Rational big = parse_rational("123456789012345678901234567890/3");
  CHECK(big * 3 == parse_rational("123456789012345678901234567890"));
}

TEST_CASE("smith normal form examples") {
  SUBCASE("identity") {
    const auto f = smith_normal_form(IntMatrix::identity(2));
    CHECK(f.s == IntMatrix::identity(2));
    CHECK(f.u * IntMatrix::identity(2) * f.v == f.s);
  }
  SUBCASE("2 4 / 6 8") {
    const IntMatrix m{{2, 4}, {6, 8}};
    const auto f = smith_normal_form(m);
    CHECK(f.s == IntMatrix{{2, 0}, {0, 4}});
    CHECK(f.u * m * f.v == f.s);
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
    CHECK(f.rank == 2);
  }
  SUBCASE("zero row") {
    const IntMatrix z(1, 3);
    const auto f = smith_normal_form(z);
    CHECK(f.s.is_zero());
    CHECK(f.rank == 0);
  }
}

TEST_CASE("smith normal form on random integer matrices") {
  gen::Source g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(g.integer(1, 4));
    const auto cols = static_cast<std::size_t>(g.integer(1, 4));
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(g.integer(-12, 12));
    const auto f = smith_normal_form(m);
    REQUIRE(f.u * m * f.v == f.s);
    CHECK(is_diagonal_chain(f.s));
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
  }
}

TEST_CASE("integer systems and unimodular inverses") {
  const IntMatrix a{{1, 1}, {1, -1}};
  CHECK_FALSE(solve_integer_system(a, {1, 0}).has_value());
  const auto s = solve_integer_system(a, {4, 2});
  REQUIRE(s.has_value());
  CHECK((*s)[0] == 3);
  CHECK((*s)[1] == 1);
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("laurent substitution examples") {
  const std::size_t n = 2;
  CHECK(laurent_substitute(x(n, 0), {x(n, 0, -1), x(n, 1)}) == x(n, 0, -1));
  const LaurentPoly p = x(n, 0, 2) * x(n, 1);
  const LaurentPoly img = x(n, 0) * x(n, 1);
  CHECK(laurent_substitute(p, {x(n, 1), img}) == x(n, 0) * x(n, 1, 3));
  CHECK(laurent_substitute(LaurentPoly::constant(n, 3), {x(n, 1), img}) == LaurentPoly::constant(n, 3));
  CHECK_THROWS_AS(laurent_substitute(p, {x(n, 0) + x(n, 1), x(n, 1)}), Error);
  try {
    laurent_substitute(p, {x(n, 0) + x(n, 1), x(n, 1)});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitImage);
  }
}

TEST_CASE("laurent ring axioms on random inputs") {
  gen::Source g(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const auto a = g.poly(n), b = g.poly(n), c = g.poly(n);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const auto ab = a * b;
    for (const auto& [e, q] : ab.terms()) CHECK(q != 0);
  }
}

TEST_CASE("units and monomial substitution") {
  gen::Source g(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = g.unit(3);
    CHECK(u * u.unit_inverse() == LaurentPoly::constant(3, 1));
    CHECK(u.unit_power(3) == u * u * u);
  }
  CHECK_THROWS_AS((x(1, 0) + LaurentPoly::constant(1, 1)).unit_inverse(), Error);
  CHECK_THROWS_AS(x(1, 0) + x(2, 0), Error);
}

TEST_CASE("laurent matrix inverse is exact") {
  gen::Source g(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t size = static_cast<std::size_t>(g.integer(1, 3));
    const auto m = g.invertible(2, size);
    REQUIRE(m.determinant().is_unit());
    CHECK(m * m.inverse() == LaurentMatrix::identity(2, size));
    CHECK(m.inverse() * m == LaurentMatrix::identity(2, size));
  }
  LaurentMatrix singular(1, 2, 2);
  singular(0, 0) = x(1, 0) + LaurentPoly::constant(1, 1);
  singular(1, 1) = LaurentPoly::constant(1, 1);
  CHECK_THROWS_AS(singular.inverse(), Error);
}

TEST_CASE("exterior derivative examples") {
  const std::size_t n = 2;
  SUBCASE("constant log form is closed") {
    const auto a = LogOneForm::from_log_frame({scalar(n, 5), scalar(n, -2)});
    CHECK(exterior_derivative(a).is_zero());
  }
  SUBCASE("x2 dx1 gives -dx1^dx2") {
    // x2 dx1 = x1 x2 dx1/x1
    const auto a = LogOneForm::from_log_frame({scalar(x(n, 0) * x(n, 1)), scalar(n, 0)});
    const auto da = exterior_derivative(a);
    CHECK(da.coefficient(0, 1) == scalar(-(x(n, 0) * x(n, 1))));
    const auto& comp = da.components().at({0, 1});
    CHECK(comp.hol_hol == scalar(n, -1));
    CHECK(comp.log_log.is_zero());
  }
  SUBCASE("x1 dx1/x1 = dx1 is exact") {
    const auto a = LogOneForm::from_log_frame({scalar(x(n, 0)), scalar(n, 0)});
    CHECK(a.log_part()[0].is_zero());
    CHECK(a.hol_part()[0] == scalar(n, 1));
    CHECK(exterior_derivative(a).is_zero());
  }
}

TEST_CASE("wedge examples") {
  const std::size_t n = 2;
  SUBCASE("basis wedge") {
    const auto a = LogOneForm::from_log_frame({scalar(n, 1), scalar(n, 0)});
    const auto b = LogOneForm::from_log_frame({scalar(n, 0), scalar(n, 1)});
    const auto w = wedge(a, b);
    REQUIRE(w.components().size() == 1);
    CHECK(w.components().at({0, 1}).log_log == scalar(n, 1));
    CHECK(wedge(b, a).coefficient(0, 1) == scalar(n, -1));
  }
  SUBCASE("diagonal constant forms self-wedge to zero") {
    gen::Source g(8);
    std::vector<LaurentMatrix> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs.push_back(LaurentMatrix::diagonal({LaurentPoly::constant(n, g.rational()), LaurentPoly::constant(n, g.rational()),
                                                LaurentPoly::constant(n, g.rational())}));
    }
    const auto a = LogOneForm::from_log_frame(coeffs);
    CHECK(wedge(a, a).is_zero());
  }
  SUBCASE("non-commuting constants give the commutator") {
    QMatrix qa = QMatrix::from_rows({{1, 2}, {0, 1}}, 2);
    QMatrix qb = QMatrix::from_rows({{0, 0}, {3, 1}}, 2);
    const auto A = LaurentMatrix::constant(n, qa);
    const auto B = LaurentMatrix::constant(n, qb);
    const auto a = LogOneForm::from_log_frame({A, B});
    const auto w = wedge(a, a);
    CHECK_FALSE(w.is_zero());
    CHECK(w.coefficient(0, 1) == A * B - B * A);
  }
  SUBCASE("dimension mismatch") {
    const auto a = LogOneForm::from_log_frame({scalar(n, 1), scalar(n, 0)});
    const auto b = LogOneForm::from_log_frame({scalar(1, 1)});
    CHECK_THROWS_AS(wedge(a, b), Error);
  }
}

TEST_CASE("d of a total derivative vanishes") {
  gen::Source g(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const auto m = g.matrix(n, 2, 2, 4);
    CHECK(exterior_derivative(total_derivative(m)).is_zero());
  }
}

TEST_CASE("normalization is idempotent and preserves the form") {
  gen::Source g(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const auto a = g.one_form(n, 2);
    CHECK(a.normalized() == a);
    CHECK(a.normalized().normalized() == a.normalized());
    for (std::size_t i = 0; i < n; ++i) {
      // residue part has no x_i-divisible terms
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          for (const auto& [e, q] : a.log_part()[i](r, c).terms()) CHECK(e[i] <= 0);
    }
    CHECK(LogOneForm::from_log_frame(a.coefficients()) == a);
  }
}

TEST_CASE("leibniz rule for the total derivative") {
  gen::Source g(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = g.matrix(2, 2, 2, 3), b = g.matrix(2, 2, 2, 3);
    CHECK(total_derivative(a * b) == total_derivative(a) * b + a * total_derivative(b));
  }
}
