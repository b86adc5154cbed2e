#include "toriclog/laurent_matrix.hpp"

#include <sstream>

#include "toriclog/error.hpp"
#include "toriclog/integer_matrix.hpp"

namespace toriclog {

LaurentMatrix::LaurentMatrix(std::size_t nvars, std::size_t rows, std::size_t cols)
    : nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(nvars)) {}

LaurentMatrix LaurentMatrix::identity(std::size_t nvars, std::size_t n) {
  LaurentMatrix m(nvars, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(nvars, 1);
  return m;
}

LaurentMatrix LaurentMatrix::constant(std::size_t nvars, const QMatrix& q) {
  LaurentMatrix m(nvars, q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = LaurentPoly::constant(nvars, q(i, j));
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  const std::size_t nvars = entries.empty() ? 0 : entries.front().nvars();
  LaurentMatrix m(nvars, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].nvars() != nvars) throw Error(ErrorKind::DimensionMismatch, "diagonal entries");
    m(i, i) = entries[i];
  }
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

QMatrix LaurentMatrix::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::DimensionMismatch, "matrix is not constant: " + to_string());
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).constant_term();
  return q;
}

namespace {

void require_shape(const LaurentMatrix& a, const LaurentMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, what);
  }
}

}  // namespace

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  require_shape(*this, o, "Laurent matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& o) {
  require_shape(*this, o, "Laurent matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "Laurent matrix product");
  LaurentMatrix c(a.nvars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

LaurentMatrix LaurentMatrix::operator-() const { return scaled(Rational(-1)); }

LaurentMatrix LaurentMatrix::scaled(const Rational& c) const {
  return map([&](const LaurentPoly& p) { return p.scaled(c); });
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& q) const {
  return map([&](const LaurentPoly& p) { return p * q; });
}

namespace {

LaurentPoly laplace(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return LaurentPoly::constant(m.nvars(), 1);
  LaurentPoly acc(m.nvars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    LaurentPoly minor = entry * laplace(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2 == 0) acc += minor;
    else acc -= minor;
  }
  return acc;
}

}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  std::vector<std::size_t> cols(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
  return laplace(*this, cols, 0);
}

LaurentMatrix LaurentMatrix::inverse() const {
  const LaurentPoly det = determinant();
  if (!det.is_unit()) {
    throw Error(ErrorKind::NotInvertible, "determinant " + det.to_string() + " is not a unit");
  }
  const LaurentPoly inv_det = det.unit_inverse();
  const std::size_t n = rows_;
  LaurentMatrix out(nvars_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij goes to out(j, i)
      LaurentMatrix minor(nvars_, n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = (*this)(r, c);
        }
        ++mr;
      }
      LaurentPoly cof = minor.determinant() * inv_det;
      out(j, i) = (i + j) % 2 == 0 ? cof : -cof;
    }
  return out;
}

LaurentMatrix LaurentMatrix::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  LaurentMatrix out;
  out.rows_ = rows_;
  out.cols_ = cols_;
  out.data_.reserve(data_.size());
  for (const auto& p : data_) out.data_.push_back(f(p));
  out.nvars_ = out.data_.empty() ? nvars_ : out.data_.front().nvars();
  for (const auto& p : out.data_)
    if (p.nvars() != out.nvars_) throw Error(ErrorKind::DimensionMismatch, "entrywise map changed rings unevenly");
  return out;
}

LaurentMatrix LaurentMatrix::substitute(const std::vector<LaurentPoly>& images) const {
  LaurentMatrix out = map([&](const LaurentPoly& p) { return laurent_substitute(p, images); });
  if (data_.empty() && !images.empty()) out.nvars_ = images.front().nvars();
  return out;
}

LaurentMatrix LaurentMatrix::monomial_transform(const IntMatrix& a) const {
  LaurentMatrix out = map([&](const LaurentPoly& p) { return toriclog::monomial_transform(p, a); });
  if (data_.empty()) out.nvars_ = a.rows();
  return out;
}

LaurentMatrix LaurentMatrix::euler(std::size_t i) const {
  return map([i](const LaurentPoly& p) { return p.euler(i); });
}

LaurentMatrix LaurentMatrix::extended(std::size_t nvars) const {
  LaurentMatrix out = map([nvars](const LaurentPoly& p) { return p.extended(nvars); });
  out.nvars_ = nvars;
  return out;
}

std::optional<std::string> LaurentMatrix::first_difference(const LaurentMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || nvars_ != other.nvars_) {
    return "shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
           std::to_string(other.rows_) + "x" + std::to_string(other.cols_);
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const LaurentPoly diff = (*this)(i, j) - other(i, j);
      if (diff.is_zero()) continue;
      const auto& [e, c] = *diff.terms().begin();
      return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): lhs - rhs has term " +
             LaurentPoly::monomial(c, e).to_string();
    }
  return std::nullopt;
}

std::string LaurentMatrix::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(names);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace toriclog
