#include "toriclog/log_forms.hpp"

#include <sstream>

#include "toriclog/error.hpp"

namespace toriclog {

namespace {

void require_chart(const LaurentMatrix& m, std::size_t n) {
  if (m.nvars() != n) {
    throw Error(ErrorKind::DimensionMismatch, "form coefficient in " + std::to_string(m.nvars()) +
                                                  " variables on a chart of dimension " + std::to_string(n));
  }
}

Exponent unit_vector(std::size_t n, std::size_t i, std::int64_t v) {
  Exponent e(n, 0);
  e[i] = v;
  return e;
}

}  // namespace

LogOneForm::LogOneForm(std::vector<LaurentMatrix> log_part, std::vector<LaurentMatrix> hol_part) {
  const std::size_t n = log_part.size();
  if (hol_part.size() != n) throw Error(ErrorKind::DimensionMismatch, "log and holomorphic parts differ in length");
  std::vector<LaurentMatrix> coeffs;
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_chart(log_part[i], n);
    require_chart(hol_part[i], n);
    const Exponent xi = unit_vector(n, i, 1);
    coeffs.push_back(log_part[i] + hol_part[i].map([&](const LaurentPoly& p) { return p.shifted(xi); }));
  }
  *this = from_log_frame(std::move(coeffs));
}

LogOneForm LogOneForm::zero(std::size_t n, std::size_t rows, std::size_t cols) {
  return from_log_frame(std::vector<LaurentMatrix>(n, LaurentMatrix::zero(n, rows, cols)));
}

LogOneForm LogOneForm::from_log_frame(std::vector<LaurentMatrix> coefficients) {
  const std::size_t n = coefficients.size();
  LogOneForm out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = coefficients[i];
    require_chart(f, n);
    if (f.rows() != coefficients.front().rows() || f.cols() != coefficients.front().cols()) {
      throw Error(ErrorKind::DimensionMismatch, "one-form coefficients of different sizes");
    }
    const Exponent down = unit_vector(n, i, -1);
    out.log_part_.push_back(
        f.map([i](const LaurentPoly& p) { return p.filtered([i](const Exponent& e) { return e[i] <= 0; }); }));
    out.hol_part_.push_back(f.map([&](const LaurentPoly& p) {
      return p.filtered([i](const Exponent& e) { return e[i] >= 1; }).shifted(down);
    }));
  }
  return out;
}

LaurentMatrix LogOneForm::coefficient(std::size_t i) const {
  const Exponent xi = unit_vector(dim(), i, 1);
  return log_part_.at(i) + hol_part_.at(i).map([&](const LaurentPoly& p) { return p.shifted(xi); });
}

std::vector<LaurentMatrix> LogOneForm::coefficients() const {
  std::vector<LaurentMatrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(coefficient(i));
  return out;
}

bool LogOneForm::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!log_part_[i].is_zero() || !hol_part_[i].is_zero()) return false;
  return true;
}

bool LogOneForm::is_logarithmic() const {
  auto regular = [](const LaurentMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [e, v] : m(r, c).terms())
          for (auto x : e)
            if (x < 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < dim(); ++i)
    if (!regular(log_part_[i]) || !regular(hol_part_[i])) return false;
  return true;
}

LogOneForm LogOneForm::operator+(const LogOneForm& o) const {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "one-forms on charts of different dimension");
  std::vector<LaurentMatrix> c;
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(coefficient(i) + o.coefficient(i));
  return from_log_frame(std::move(c));
}

LogOneForm LogOneForm::operator-(const LogOneForm& o) const {
  if (o.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "one-forms on charts of different dimension");
  std::vector<LaurentMatrix> c;
  for (std::size_t i = 0; i < dim(); ++i) c.push_back(coefficient(i) - o.coefficient(i));
  return from_log_frame(std::move(c));
}

LogOneForm operator*(const LaurentMatrix& m, const LogOneForm& a) {
  std::vector<LaurentMatrix> c;
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(m * a.coefficient(i));
  return LogOneForm::from_log_frame(std::move(c));
}

LogOneForm operator*(const LogOneForm& a, const LaurentMatrix& m) {
  std::vector<LaurentMatrix> c;
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a.coefficient(i) * m);
  return LogOneForm::from_log_frame(std::move(c));
}

std::optional<std::string> LogOneForm::first_difference(const LogOneForm& other) const {
  if (other.dim() != dim()) return "chart dimension " + std::to_string(dim()) + " vs " + std::to_string(other.dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (auto d = log_part_[i].first_difference(other.log_part_[i])) return "dx" + std::to_string(i + 1) + "/x" + std::to_string(i + 1) + " " + *d;
    if (auto d = hol_part_[i].first_difference(other.hol_part_[i])) return "dx" + std::to_string(i + 1) + " " + *d;
  }
  return std::nullopt;
}

std::string LogOneForm::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::string k = std::to_string(i + 1);
    if (!log_part_[i].is_zero()) {
      os << (any ? " + " : "") << log_part_[i].to_string() << " dx" << k << "/x" << k;
      any = true;
    }
    if (!hol_part_[i].is_zero()) {
      os << (any ? " + " : "") << hol_part_[i].to_string() << " dx" << k;
      any = true;
    }
  }
  return any ? os.str() : "0";
}

LogTwoForm LogTwoForm::from_log_frame(std::size_t n, std::size_t rows, std::size_t cols,
                                      const std::map<Key, LaurentMatrix>& coefficients) {
  LogTwoForm out(n, rows, cols);
  for (const auto& [key, f] : coefficients) {
    const auto [i, j] = key;
    if (i >= j || j >= n) throw Error(ErrorKind::DimensionMismatch, "two-form index pair must satisfy i < j < n");
    require_chart(f, n);
    if (f.is_zero()) continue;
    auto pick = [&](bool hol_i, bool hol_j) {
      Exponent down(n, 0);
      down[i] = hol_i ? -1 : 0;
      down[j] = hol_j ? -1 : 0;
      return f.map([&](const LaurentPoly& p) {
        return p.filtered([&](const Exponent& e) { return (e[i] >= 1) == hol_i && (e[j] >= 1) == hol_j; })
            .shifted(down);
      });
    };
    out.components_.emplace(key, Components{pick(false, false), pick(false, true), pick(true, false), pick(true, true)});
  }
  return out;
}

LaurentMatrix LogTwoForm::coefficient(std::size_t i, std::size_t j) const {
  auto it = components_.find({i, j});
  if (it == components_.end()) return LaurentMatrix::zero(n_, rows_, cols_);
  const auto& c = it->second;
  auto up = [&](const LaurentMatrix& m, bool ui, bool uj) {
    Exponent e(n_, 0);
    e[i] = ui ? 1 : 0;
    e[j] = uj ? 1 : 0;
    return m.map([&](const LaurentPoly& p) { return p.shifted(e); });
  };
  return c.log_log + up(c.log_hol, false, true) + up(c.hol_log, true, false) + up(c.hol_hol, true, true);
}

std::optional<std::string> LogTwoForm::first_nonzero() const {
  if (components_.empty()) return std::nullopt;
  const auto& [key, c] = *components_.begin();
  const auto zero = LaurentMatrix::zero(n_, rows_, cols_);
  const auto diff = coefficient(key.first, key.second).first_difference(zero);
  return "dlog x" + std::to_string(key.first + 1) + " ^ dlog x" + std::to_string(key.second + 1) + " " +
         diff.value_or("");
}

std::string LogTwoForm::to_string() const {
  if (components_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : components_) {
    const std::string a = std::to_string(key.first + 1), b = std::to_string(key.second + 1);
    auto emit = [&](const LaurentMatrix& m, const std::string& basis) {
      if (m.is_zero()) return;
      os << (first ? "" : " + ") << m.to_string() << ' ' << basis;
      first = false;
    };
    emit(c.log_log, "dx" + a + "/x" + a + "^dx" + b + "/x" + b);
    emit(c.log_hol, "dx" + a + "/x" + a + "^dx" + b);
    emit(c.hol_log, "dx" + a + "^dx" + b + "/x" + b);
    emit(c.hol_hol, "dx" + a + "^dx" + b);
  }
  return os.str();
}

LogTwoForm exterior_derivative(const LogOneForm& a) {
  const std::size_t n = a.dim();
  const auto f = a.coefficients();
  std::map<LogTwoForm::Key, LaurentMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace(LogTwoForm::Key{i, j}, f[j].euler(i) - f[i].euler(j));
  return LogTwoForm::from_log_frame(n, a.rows(), a.cols(), out);
}

LogTwoForm wedge(const LogOneForm& a, const LogOneForm& b) {
  if (a.dim() != b.dim() || a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "wedge of incompatible matrix-valued one-forms");
  }
  const std::size_t n = a.dim();
  const auto fa = a.coefficients();
  const auto fb = b.coefficients();
  std::map<LogTwoForm::Key, LaurentMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace(LogTwoForm::Key{i, j}, fa[i] * fb[j] - fa[j] * fb[i]);
  return LogTwoForm::from_log_frame(n, a.rows(), b.cols(), out);
}

LogOneForm total_derivative(const LaurentMatrix& g) {
  std::vector<LaurentMatrix> c;
  for (std::size_t i = 0; i < g.nvars(); ++i) c.push_back(g.euler(i));
  return LogOneForm::from_log_frame(std::move(c));
}

}  // namespace toriclog
