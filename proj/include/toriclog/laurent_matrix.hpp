#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "toriclog/laurent.hpp"
#include "toriclog/rational_linalg.hpp"

namespace toriclog {

class IntMatrix;

// Matrix over Q[x_1^{+-1}, ..., x_n^{+-1}].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t nvars, std::size_t rows, std::size_t cols);

  static LaurentMatrix zero(std::size_t nvars, std::size_t rows, std::size_t cols) {
    return LaurentMatrix(nvars, rows, cols);
  }
  static LaurentMatrix identity(std::size_t nvars, std::size_t n);
  static LaurentMatrix constant(std::size_t nvars, const QMatrix& m);
  static LaurentMatrix diagonal(const std::vector<LaurentPoly>& entries);

  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_constant() const;
  // Constant matrix of a constant LaurentMatrix; DimensionMismatch otherwise.
  QMatrix constant_value() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  LaurentMatrix& operator-=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  LaurentMatrix operator-() const;
  LaurentMatrix scaled(const Rational& c) const;
  LaurentMatrix scaled(const LaurentPoly& p) const;
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;

  // Laplace expansion; fiber ranks here are small.
  LaurentPoly determinant() const;
  // Adjugate divided by a unit determinant; NotInvertible if det is not a unit.
  LaurentMatrix inverse() const;

  // Entrywise application of a polynomial map (substitution, Euler operator).
  LaurentMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;
  LaurentMatrix substitute(const std::vector<LaurentPoly>& images) const;
  LaurentMatrix monomial_transform(const IntMatrix& a) const;
  LaurentMatrix euler(std::size_t i) const;
  LaurentMatrix extended(std::size_t nvars) const;

  // "(i,j): term" for the first entry where *this and other differ, or
  // nullopt when equal.
  std::optional<std::string> first_difference(const LaurentMatrix& other) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

}  // namespace toriclog
