#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toriclog/rational.hpp"

namespace toriclog {

using QVector = std::vector<Rational>;

// Row-major matrix over Q, used for fiber linear algebra (filtrations,
// eigenframes, constant change-of-basis matrices).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form; zero rows are dropped.
QMatrix rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Basis (as rows, in RREF-derived canonical order) of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

// A subspace of Q^dim, stored by its RREF basis so that equality of
// subspaces is structural equality.
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}
  static Subspace span(const std::vector<QVector>& vectors, std::size_t dim);
  static Subspace whole(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Basis vectors of this space's RREF basis, chosen greedily, that extend a
  // basis of `sub` (assumed contained in *this) to a basis of *this.
  std::vector<QVector> complement_of(const Subspace& sub) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t dim_;
  std::vector<QVector> basis_;
};

std::string to_string(const QVector& v);

}  // namespace toriclog
