#include "toriclog/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "toriclog/error.hpp"

namespace toriclog {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  IntMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw Error(ErrorKind::DimensionMismatch, "columns of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = static_cast<long>(columns[j][i]);
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  std::vector<std::int64_t> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = to_int64((*this)(i, j));
  return out;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
  std::vector<std::int64_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = to_int64((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "integer matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::DimensionMismatch, "integer matrix difference");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (abs(det) != 1) {
    throw Error(ErrorKind::NotInvertible, "matrix " + m.to_string() + " has determinant " + det.get_str());
  }
  // Smith form of a unimodular matrix is the identity, so V * U inverts m.
  const SmithForm f = smith_normal_form(m);
  return f.v * f.u;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
}

// row_i -= q * row_k
void add_row_multiple(IntMatrix& a, std::size_t i, std::size_t k, const Integer& q) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(k, j);
}

// col_i -= q * col_k
void add_col_multiple(IntMatrix& a, std::size_t i, std::size_t k, const Integer& q) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& s = f.s;
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return f;
      swap_rows(s, t, pi);
      swap_rows(f.u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(f.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        add_row_multiple(s, i, t, q);
        add_row_multiple(f.u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        add_col_multiple(s, j, t, q);
        add_col_multiple(f.v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            add_row_multiple(s, t, i, Integer(-1));
            add_row_multiple(f.u, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < rows; ++j) f.u(t, j) = -f.u(t, j);
    }
    f.rank = t + 1;
  }
  return f;
}

std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "integer system right-hand side");
  const SmithForm f = smith_normal_form(a);
  std::vector<Integer> ub(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) ub[i] += f.u(i, k) * b[k];

  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), f.s(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / f.s(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) x[i] += f.v(i, k) * y[k];
  return x;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::DimensionMismatch, "integer too large for exponent: " + z.get_str());
  return z.get_si();
}

Integer gcd_of(const std::vector<std::int64_t>& v) {
  Integer g = 0;
  for (auto x : v) g = gcd(g, Integer(static_cast<long>(x)));
  return g;
}

}  // namespace toriclog
