#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toriclog/rational.hpp"

namespace toriclog {

// Dense row-major matrix over the arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Builds the matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const;
  std::vector<std::int64_t> column(std::size_t j) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

// Inverse of a unimodular matrix; NotInvertible if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix s;  // diagonal, d_1 | d_2 | ..., d_i >= 0
  IntMatrix v;  // cols x cols, unimodular
  std::size_t rank = 0;
};

// U * m * V = S.
SmithForm smith_normal_form(const IntMatrix& m);

// Integer solution of a * x = b, or nullopt when none exists over Z. Free
// coordinates in the Smith basis are set to zero.
std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         const std::vector<Integer>& b);

std::int64_t to_int64(const Integer& z);
Integer gcd_of(const std::vector<std::int64_t>& v);

}  // namespace toriclog
