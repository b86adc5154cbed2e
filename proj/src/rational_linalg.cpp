#include "toriclog/rational_linalg.hpp"

#include <sstream>
#include <utility>

#include "toriclog/error.hpp"

namespace toriclog {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "rational matrix product");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const Rational lead = a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix rref(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = reduce(a);
  QMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rows(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = reduce(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible, "singular rational matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t dim) {
  Subspace s(dim);
  if (vectors.empty()) return s;
  const QMatrix r = rref(QMatrix::from_rows(vectors, dim));
  for (std::size_t i = 0; i < r.rows(); ++i) s.basis_.push_back(r.row(i));
  return s;
}

Subspace Subspace::whole(std::size_t dim) {
  std::vector<QVector> e;
  for (std::size_t i = 0; i < dim; ++i) {
    QVector v(dim);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return span(e, dim);
}

bool Subspace::contains(const QVector& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return rank(QMatrix::from_rows(rows, dim_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const { return (*this + other).dim() == dim(); }

Subspace Subspace::operator+(const Subspace& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  auto rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(rows, dim_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  // U cap W = (U^perp + W^perp)^perp
  auto perp = [this](const Subspace& s) {
    if (s.basis_.empty()) return Subspace::whole(dim_).basis_;
    return nullspace(QMatrix::from_rows(s.basis_, dim_));
  };
  auto rows = perp(*this);
  const auto w = perp(other);
  rows.insert(rows.end(), w.begin(), w.end());
  if (rows.empty()) return whole(dim_);
  return span(nullspace(QMatrix::from_rows(rows, dim_)), dim_);
}

std::vector<QVector> Subspace::complement_of(const Subspace& sub) const {
  std::vector<QVector> chosen;
  auto acc = sub.basis_;
  std::size_t current = sub.dim();
  for (const auto& v : basis_) {
    acc.push_back(v);
    const std::size_t r = rank(QMatrix::from_rows(acc, dim_));
    if (r > current) {
      current = r;
      chosen.push_back(v);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace toriclog
