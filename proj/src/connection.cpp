#include "toriclog/connection.hpp"

#include <algorithm>

#include "toriclog/error.hpp"

namespace toriclog {

LogConnection canonical_connection(const std::vector<ConeDecomposition>& decs, const Atlas& atlas, int sign) {
  const std::size_t n = atlas.dim();
  if (decs.size() != atlas.cone_count()) throw Error(ErrorKind::DimensionMismatch, "one decomposition per cone is required");
  LogConnection conn{n, decs.front().frame.size(), {}};
  for (const auto& dec : decs) {
    const auto& rays = atlas.fan.cones[dec.cone];
    std::vector<LaurentMatrix> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<LaurentPoly> diag;
      for (const auto& w : dec.frame) {
        const auto p = pairing(w.weight, atlas.fan.rays[rays[i]]);
        diag.push_back(LaurentPoly::constant(n, Rational(static_cast<long>(sign * p))));
      }
      coeffs.push_back(LaurentMatrix::diagonal(diag));
    }
    conn.forms.push_back(LogOneForm::from_log_frame(std::move(coeffs)));
  }
  return conn;
}

LogOneForm rewrite_form(const LogOneForm& form, const Atlas& atlas, std::size_t from, std::size_t into) {
  const std::size_t n = atlas.dim();
  // dlog x^(from)_j = sum_i T(i, j) dlog x^(into)_i with T = T_{into from}.
  const IntMatrix& t = atlas.transition(into, from).exponent;
  std::vector<LaurentMatrix> out(n, LaurentMatrix::zero(n, form.rows(), form.cols()));
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentMatrix moved = atlas.rewrite(form.coefficient(j), from, into);
    for (std::size_t i = 0; i < n; ++i)
      if (t(i, j) != 0) out[i] += moved.scaled(Rational(t(i, j)));
  }
  return LogOneForm::from_log_frame(std::move(out));
}

bool GaugeReport::ok() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.ok; });
}

GaugeReport check_gauge_law(const LogConnection& conn, const Cocycle& cocycle, const Atlas& atlas) {
  GaugeReport rep;
  const std::size_t k = atlas.cone_count();
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      PairCheck pc{s, t, false, {}};
      try {
        const LaurentMatrix& g = cocycle(s, t);
        const LaurentMatrix gi = g.inverse();
        const LogOneForm rhs = gi * conn.forms[s] * g + gi * total_derivative(g);
        const LogOneForm lhs = rewrite_form(conn.forms[t], atlas, t, s);
        if (auto d = lhs.first_difference(rhs)) {
          pc.detail = "GaugeMismatch: " + *d;
        } else {
          pc.ok = true;
        }
      } catch (const Error& e) {
        pc.detail = e.what();
      }
      rep.pairs.push_back(std::move(pc));
    }
  return rep;
}

std::vector<LogTwoForm> curvature(const LogConnection& conn) {
  std::vector<LogTwoForm> out;
  for (const auto& a : conn.forms) {
    const LogTwoForm da = exterior_derivative(a);
    const LogTwoForm aa = wedge(a, a);
    std::map<LogTwoForm::Key, LaurentMatrix> sum;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i + 1; j < a.dim(); ++j) sum.emplace(LogTwoForm::Key{i, j}, da.coefficient(i, j) + aa.coefficient(i, j));
    out.push_back(LogTwoForm::from_log_frame(a.dim(), a.rows(), a.cols(), sum));
  }
  return out;
}

std::vector<ChartCheck> check_curvature(const LogConnection& conn) {
  std::vector<ChartCheck> out;
  const auto f = curvature(conn);
  for (std::size_t c = 0; c < f.size(); ++c) {
    ChartCheck cc{c, f[c].is_zero(), {}};
    if (!cc.ok) cc.detail = "NonzeroCurvature: " + f[c].first_nonzero().value_or("");
    out.push_back(std::move(cc));
  }
  return out;
}

bool FlatFrameReport::ok() const {
  return std::all_of(charts.begin(), charts.end(), [](const ChartCheck& c) { return c.ok; }) &&
         std::all_of(transitions.begin(), transitions.end(), [](const PairCheck& p) { return p.ok; });
}

namespace {

LaurentMatrix flat_frame_matrix(const ConeDecomposition& dec, const Atlas& atlas, int sign) {
  std::vector<LaurentPoly> diag;
  for (const auto& w : dec.frame) {
    IntVector m = w.weight;
    for (auto& x : m) x *= -sign;
    diag.push_back(LaurentPoly::monomial(1, atlas.character_exponent(m, dec.cone)));
  }
  return LaurentMatrix::diagonal(diag);
}

}  // namespace

FlatFrameReport flat_frame_check(const LogConnection& conn, const std::vector<ConeDecomposition>& decs,
                                 const Atlas& atlas, int sign) {
  FlatFrameReport rep;
  std::vector<LaurentMatrix> frames;
  for (const auto& dec : decs) frames.push_back(flat_frame_matrix(dec, atlas, sign));

  for (std::size_t c = 0; c < decs.size(); ++c) {
    // nabla (e Phi) = e (dPhi + A Phi)
    const LogOneForm residual = total_derivative(frames[c]) + conn.forms.at(c) * frames[c];
    ChartCheck cc{c, residual.is_zero(), {}};
    if (!cc.ok) cc.detail = "FlatFrameFailure: nabla f != 0 at " + residual.first_difference(LogOneForm::zero(residual.dim(), residual.rows(), residual.cols())).value_or("");
    rep.charts.push_back(std::move(cc));
  }

  const Cocycle g = build_cocycle(decs, atlas);
  for (std::size_t s = 0; s < decs.size(); ++s)
    for (std::size_t t = 0; t < decs.size(); ++t) {
      // f^(t) = e^(t) Phi_t = f^(s) Phi_s^{-1} g Phi_t
      const LaurentMatrix change = frames[s].inverse() * g(s, t) * atlas.rewrite(frames[t], t, s);
      PairCheck pc{s, t, change.is_constant(), {}};
      if (!pc.ok) pc.detail = "FlatFrameFailure: flat frames differ by non-constant " + change.to_string();
      rep.transitions.push_back(std::move(pc));
    }
  return rep;
}

int pin_connection_sign() {
  const Fan p1{1, {{1}, {-1}}, {{0}, {1}}};
  const Atlas atlas = build_atlas(p1);
  const auto decs = solve_all_decompositions(line_bundle(p1, {0, 1}), atlas);
  std::vector<int> passing;
  for (int sign : {1, -1})
    if (flat_frame_check(canonical_connection(decs, atlas, sign), decs, atlas, sign).ok()) passing.push_back(sign);
  if (passing.size() != 1) {
    throw Error(ErrorKind::FlatFrameFailure, std::to_string(passing.size()) + " signs pass the O(1) flat-frame check");
  }
  return passing.front();
}

std::vector<Rational> characteristic_polynomial(const QMatrix& a) {
  // Faddeev-LeVerrier: exact over Q.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const QMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides p by (x - r), p(r) == 0 assumed.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    carry = p[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

}  // namespace

std::optional<std::vector<Rational>> rational_eigenvalues(const QMatrix& m) {
  std::vector<Rational> p = characteristic_polynomial(m);
  std::vector<Rational> roots;
  while (p.size() > 1 && p[0] == 0) {
    roots.emplace_back(0);
    p.erase(p.begin());
  }
  while (p.size() > 1) {
    // Clear denominators to apply the rational root test.
    Integer l = 1;
    for (const auto& c : p) l = lcm(l, c.get_den());
    const Integer lead = Rational(p.back() * l).get_num();
    const Integer tail = Rational(p.front() * l).get_num();
    bool found = false;
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        for (int s : {1, -1}) {
          Rational r(Integer(num * s), den);
          r.canonicalize();
          if (evaluate(p, r) == 0) {
            roots.push_back(r);
            p = deflate(p, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ResidueSpectrum residues(const LogConnection& conn, const Atlas& atlas) {
  ResidueSpectrum out;
  const auto& fan = atlas.fan;
  for (std::size_t c = 0; c < conn.forms.size(); ++c) {
    if (!conn.forms[c].is_logarithmic()) {
      throw Error(ErrorKind::NotLogarithmic, "connection form on chart " + std::to_string(c) + " is not regular logarithmic");
    }
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    RayResidue rr{r, {}, {}, 0};
    std::vector<Rational> reference_poly;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
      if (std::find(fan.cones[c].begin(), fan.cones[c].end(), r) == fan.cones[c].end()) continue;
      const std::size_t i = divisor_chart_index(fan, r, c);
      const LaurentMatrix res = conn.forms[c].log_part()[i].map([i](const LaurentPoly& p) { return p.at_zero(i); });
      if (!res.is_constant()) {
        throw Error(ErrorKind::NotLogarithmic, "residue along ray " + std::to_string(r) + " in chart " +
                                                   std::to_string(c) + " is not constant: " + res.to_string());
      }
      const QMatrix q = res.constant_value();
      const auto poly = characteristic_polynomial(q);
      if (rr.charts.empty()) {
        reference_poly = poly;
        auto ev = rational_eigenvalues(q);
        if (!ev) {
          throw Error(ErrorKind::NotLogarithmic, "residue along ray " + std::to_string(r) + " has irrational eigenvalues");
        }
        rr.eigenvalues = *ev;
        for (std::size_t k = 0; k < q.rows(); ++k) rr.trace += q(k, k);
      } else if (poly != reference_poly) {
        throw Error(ErrorKind::ChartDisagreement, "residues along ray " + std::to_string(r) + " differ between chart " +
                                                      std::to_string(rr.charts.front()) + " and chart " + std::to_string(c));
      }
      rr.charts.push_back(c);
    }
    out.rays.push_back(std::move(rr));
  }
  return out;
}

std::vector<std::string> residue_jump_mismatches(const ResidueSpectrum& spectrum, const KlyachkoData& data, int sign) {
  std::vector<std::string> out;
  for (const auto& rr : spectrum.rays) {
    std::vector<Rational> expected;
    for (auto j : data.jump_multiset(rr.ray)) expected.emplace_back(static_cast<long>(sign * j));
    std::sort(expected.begin(), expected.end());
    if (expected != rr.eigenvalues) {
      std::string got, want;
      for (const auto& v : rr.eigenvalues) got += (got.empty() ? "" : ",") + v.get_str();
      for (const auto& v : expected) want += (want.empty() ? "" : ",") + v.get_str();
      out.push_back("ResidueMismatch: ray " + std::to_string(rr.ray) + " residue eigenvalues {" + got +
                    "} but signed jumps {" + want + "}");
    }
  }
  return out;
}

IntVector cocycle_determinant_divisor(const Cocycle& cocycle, const Atlas& atlas) {
  const std::size_t n = atlas.dim();
  const std::size_t k = atlas.cone_count();
  if (cocycle.nvars != n) throw Error(ErrorKind::DimensionMismatch, "determinant divisor needs an x-only cocycle");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<IntVector> chars;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      if (s == t) continue;
      const LaurentPoly det = cocycle(s, t).determinant();
      if (!det.is_unit()) throw Error(ErrorKind::CocycleFailure, "det g[" + std::to_string(s) + "][" + std::to_string(t) + "] is not a unit");
      pairs.emplace_back(s, t);
      chars.push_back(atlas.exponent_character(det.terms().begin()->first, s));
    }
  IntMatrix system(pairs.size(), k);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    system(p, pairs[p].first) += 1;
    system(p, pairs[p].second) -= 1;
  }
  // det g[s][t] = z^{w_s - w_t}; the line bundle then has local frames
  // z^{-w_s} and divisor coefficient <w_s, v_rho> for rho in s.
  std::vector<IntVector> w(k, IntVector(n, 0));
  for (std::size_t comp = 0; comp < n; ++comp) {
    std::vector<Integer> rhs;
    for (const auto& m : chars) rhs.emplace_back(static_cast<long>(m[comp]));
    const auto sol = solve_integer_system(system, rhs);
    if (!sol) throw Error(ErrorKind::CocycleFailure, "determinant cocycle is not a coboundary of characters");
    for (std::size_t s = 0; s < k; ++s) w[s][comp] = to_int64((*sol)[s]);
  }
  const auto& fan = atlas.fan;
  IntVector divisor(fan.rays.size(), 0);
  std::vector<bool> seen(fan.rays.size(), false);
  for (std::size_t s = 0; s < k; ++s)
    for (auto r : fan.cones[s]) {
      const auto a = pairing(w[s], fan.rays[r]);
      if (seen[r] && divisor[r] != a) {
        throw Error(ErrorKind::CocycleFailure, "determinant Cartier data disagree on ray " + std::to_string(r));
      }
      divisor[r] = a;
      seen[r] = true;
    }
  return divisor;
}

ChernCheck check_first_chern(const ResidueSpectrum& spectrum, const Cocycle& cocycle, const Atlas& atlas) {
  ChernCheck cc;
  const auto& fan = atlas.fan;
  cc.determinant_divisor = cocycle_determinant_divisor(cocycle, atlas);
  cc.residue_divisor.assign(fan.rays.size(), 0);
  for (const auto& rr : spectrum.rays) cc.residue_divisor.at(rr.ray) = rr.trace;

  IntMatrix rays(fan.rays.size(), fan.rank);
  std::vector<Integer> rhs;
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    for (std::size_t i = 0; i < fan.rank; ++i) rays(r, i) = static_cast<long>(fan.rays[r][i]);
    const Rational total = cc.residue_divisor[r] + Rational(static_cast<long>(cc.determinant_divisor[r]));
    if (!is_integer(total)) {
      cc.detail = "ChernMismatch: non-integral residue trace on ray " + std::to_string(r);
      return cc;
    }
    rhs.push_back(total.get_num());
  }
  const auto m = solve_integer_system(rays, rhs);
  if (!m) {
    cc.detail = "ChernMismatch: sum tr(Res) D + [det E] is not principal";
    return cc;
  }
  for (const auto& x : *m) cc.principal_character.push_back(to_int64(x));
  cc.ok = true;
  return cc;
}

}  // namespace toriclog
