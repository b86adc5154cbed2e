#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriclog/laurent_matrix.hpp"

namespace toriclog {

// Matrix-valued logarithmic differential forms on an n-dimensional chart with
// coordinates x_1..x_n.
//
// Sign conventions (fixed here, inherited by every caller):
//   * A one-form is sum_i F_i dlog x_i with dlog x_i = dx_i / x_i. Its
//     "log-frame coefficient" F_i is the full coefficient of dlog x_i.
//   * d(F dlog x_j) = sum_i (x_i dF/dx_i) dlog x_i ^ dlog x_j and
//     d(dlog x_i) = 0.
//   * Two-forms are stored in the i < j normal form of dlog x_i ^ dlog x_j;
//     dlog x_j ^ dlog x_i = -dlog x_i ^ dlog x_j.
//   * (a ^ b) has (i,j) coefficient A_i B_j - A_j B_i (matrix products, in
//     that order), so the curvature of nabla e = e A is dA + A ^ A.
class LogOneForm {
 public:
  LogOneForm() = default;
  // Normalizes the given parts.
  LogOneForm(std::vector<LaurentMatrix> log_part, std::vector<LaurentMatrix> hol_part);

  static LogOneForm zero(std::size_t n, std::size_t rows, std::size_t cols);
  static LogOneForm from_log_frame(std::vector<LaurentMatrix> coefficients);

  std::size_t dim() const { return log_part_.size(); }
  std::size_t rows() const { return log_part_.empty() ? 0 : log_part_.front().rows(); }
  std::size_t cols() const { return log_part_.empty() ? 0 : log_part_.front().cols(); }

  // logPart[i] holds the terms with e_i <= 0 (coefficient of dx_i / x_i);
  // holPart[i] holds the rest divided by x_i (coefficient of dx_i).
  const std::vector<LaurentMatrix>& log_part() const { return log_part_; }
  const std::vector<LaurentMatrix>& hol_part() const { return hol_part_; }
  LaurentMatrix coefficient(std::size_t i) const;
  std::vector<LaurentMatrix> coefficients() const;

  LogOneForm normalized() const { return LogOneForm(log_part_, hol_part_); }
  bool is_zero() const;
  // Regular on the chart with at worst log poles: every stored term has
  // nonnegative exponents.
  bool is_logarithmic() const;

  LogOneForm operator+(const LogOneForm& o) const;
  LogOneForm operator-(const LogOneForm& o) const;
  friend LogOneForm operator*(const LaurentMatrix& m, const LogOneForm& a);
  friend LogOneForm operator*(const LogOneForm& a, const LaurentMatrix& m);
  friend bool operator==(const LogOneForm& a, const LogOneForm& b) = default;

  std::optional<std::string> first_difference(const LogOneForm& other) const;
  std::string to_string() const;

 private:
  std::vector<LaurentMatrix> log_part_;
  std::vector<LaurentMatrix> hol_part_;
};

class LogTwoForm {
 public:
  // Coefficients of (dx_i/x_i)^(dx_j/x_j), (dx_i/x_i)^dx_j, dx_i^(dx_j/x_j)
  // and dx_i^dx_j. A term lands in the component whose factors absorb the
  // positive powers of x_i and x_j.
  struct Components {
    LaurentMatrix log_log;
    LaurentMatrix log_hol;
    LaurentMatrix hol_log;
    LaurentMatrix hol_hol;
    friend bool operator==(const Components&, const Components&) = default;
  };
  using Key = std::pair<std::size_t, std::size_t>;

  LogTwoForm() = default;
  LogTwoForm(std::size_t n, std::size_t rows, std::size_t cols) : n_(n), rows_(rows), cols_(cols) {}
  static LogTwoForm from_log_frame(std::size_t n, std::size_t rows, std::size_t cols,
                                   const std::map<Key, LaurentMatrix>& coefficients);

  std::size_t dim() const { return n_; }
  // Only nonzero pairs are stored.
  const std::map<Key, Components>& components() const { return components_; }
  // Full coefficient of dlog x_i ^ dlog x_j for i < j.
  LaurentMatrix coefficient(std::size_t i, std::size_t j) const;
  bool is_zero() const { return components_.empty(); }

  friend bool operator==(const LogTwoForm& a, const LogTwoForm& b) = default;
  // First nonzero pair and entry, for failure reports.
  std::optional<std::string> first_nonzero() const;
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Components> components_;
};

LogTwoForm exterior_derivative(const LogOneForm& a);
LogTwoForm wedge(const LogOneForm& a, const LogOneForm& b);
// d of a matrix of functions: sum_i (x_i d/dx_i g) dlog x_i.
LogOneForm total_derivative(const LaurentMatrix& g);

}  // namespace toriclog
