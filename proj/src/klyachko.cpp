#include "toriclog/klyachko.hpp"

#include <algorithm>
#include <set>

#include "toriclog/error.hpp"

namespace toriclog {

Subspace KlyachkoData::level(std::size_t ray, std::int64_t i) const {
  std::vector<QVector> vs;
  auto it = filtrations.find(ray);
  if (it == filtrations.end()) throw Error(ErrorKind::InvalidFiltration, "no filtration for ray " + std::to_string(ray));
  for (const auto& step : it->second)
    if (step.jump >= i) vs.insert(vs.end(), step.vectors.begin(), step.vectors.end());
  return Subspace::span(vs, rank);
}

std::vector<std::int64_t> KlyachkoData::jumps(std::size_t ray) const {
  std::vector<std::int64_t> out;
  for (const auto& step : filtrations.at(ray)) out.push_back(step.jump);
  return out;
}

std::vector<std::int64_t> KlyachkoData::jump_multiset(std::size_t ray) const {
  std::vector<std::int64_t> out;
  std::size_t below = 0;
  for (auto j : jumps(ray)) {
    const std::size_t d = level(ray, j).dim();
    out.insert(out.end(), d - below, j);
    below = d;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_klyachko(const KlyachkoData& data, const Fan& fan) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidFiltration, m); };
  if (data.rank == 0) fail("rank must be positive");
  for (const auto& [ray, steps] : data.filtrations)
    if (ray >= fan.rays.size()) fail("filtration given for missing ray " + std::to_string(ray));
  for (std::size_t ray = 0; ray < fan.rays.size(); ++ray) {
    auto it = data.filtrations.find(ray);
    const std::string name = "ray " + std::to_string(ray);
    if (it == data.filtrations.end() || it->second.empty()) fail(name + " has no filtration");
    std::size_t prev_dim = 0;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      const auto& step = it->second[k];
      if (k > 0 && step.jump >= it->second[k - 1].jump) fail(name + ": jumps must be listed in decreasing order");
      for (const auto& v : step.vectors)
        if (v.size() != data.rank) fail(name + ": vector of length " + std::to_string(v.size()) + " in rank " +
                                        std::to_string(data.rank));
      const std::size_t d = data.level(ray, step.jump).dim();
      if (d <= prev_dim) fail(name + ": step at jump " + std::to_string(step.jump) + " adds no new direction");
      prev_dim = d;
    }
    if (prev_dim != data.rank) fail(name + ": lowest filtration level does not span the fiber");
  }
}

KlyachkoData trivial_bundle(const Fan& fan, std::size_t rank) {
  KlyachkoData d{rank, {}};
  const auto whole = Subspace::whole(rank).basis();
  for (std::size_t r = 0; r < fan.rays.size(); ++r) d.filtrations[r] = {FiltrationStep{0, whole}};
  return d;
}

KlyachkoData line_bundle(const Fan& fan, const IntVector& divisor) {
  if (divisor.size() != fan.rays.size())
    throw Error(ErrorKind::InvalidFiltration, "divisor needs one coefficient per ray");
  KlyachkoData d{1, {}};
  for (std::size_t r = 0; r < fan.rays.size(); ++r) d.filtrations[r] = {FiltrationStep{divisor[r], {QVector{1}}}};
  return d;
}

KlyachkoData line_bundle_from_cartier(const Fan& fan, const std::map<std::size_t, IntVector>& cartier) {
  std::map<std::size_t, std::int64_t> coeff;
  for (const auto& [cone, u] : cartier) {
    if (cone >= fan.cones.size()) throw Error(ErrorKind::InvalidFiltration, "Cartier data for missing cone " + std::to_string(cone));
    if (u.size() != fan.rank) throw Error(ErrorKind::InvalidFiltration, "Cartier character has wrong length");
    for (auto r : fan.cones[cone]) {
      const auto a = pairing(u, fan.rays[r]);
      auto [it, inserted] = coeff.emplace(r, a);
      if (!inserted && it->second != a) {
        throw Error(ErrorKind::InvalidFiltration, "Cartier data disagree on ray " + std::to_string(r) + " (" +
                                                      std::to_string(it->second) + " vs " + std::to_string(a) + ")");
      }
    }
  }
  IntVector divisor(fan.rays.size());
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    auto it = coeff.find(r);
    if (it == coeff.end()) throw Error(ErrorKind::InvalidFiltration, "Cartier data do not cover ray " + std::to_string(r));
    divisor[r] = it->second;
  }
  return line_bundle(fan, divisor);
}

namespace {

QVector to_q(const IntVector& v) {
  QVector q;
  for (auto x : v) q.emplace_back(static_cast<long>(x));
  return q;
}

}  // namespace

KlyachkoData tangent_bundle(const Fan& fan) {
  KlyachkoData d{fan.rank, {}};
  const auto whole = Subspace::whole(fan.rank);
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const QVector v = to_q(fan.rays[r]);
    d.filtrations[r] = {FiltrationStep{1, {v}}, FiltrationStep{0, whole.complement_of(Subspace::span({v}, fan.rank))}};
    if (fan.rank == 1) d.filtrations[r].pop_back();
  }
  return d;
}

KlyachkoData cotangent_bundle(const Fan& fan) {
  KlyachkoData d{fan.rank, {}};
  const auto whole = Subspace::whole(fan.rank);
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const QVector v = to_q(fan.rays[r]);
    const auto perp = nullspace(QMatrix::from_rows({v}, fan.rank));
    const auto rest = whole.complement_of(Subspace::span(perp, fan.rank));
    if (perp.empty()) {
      d.filtrations[r] = {FiltrationStep{-1, rest}};
    } else {
      d.filtrations[r] = {FiltrationStep{0, perp}, FiltrationStep{-1, rest}};
    }
  }
  return d;
}

KlyachkoData direct_sum(const KlyachkoData& a, const KlyachkoData& b) {
  KlyachkoData d{a.rank + b.rank, {}};
  auto pad = [&](const QVector& v, bool first) {
    QVector out(d.rank);
    for (std::size_t i = 0; i < v.size(); ++i) out[first ? i : a.rank + i] = v[i];
    return out;
  };
  for (const auto& [ray, steps_a] : a.filtrations) {
    auto it = b.filtrations.find(ray);
    if (it == b.filtrations.end()) throw Error(ErrorKind::InvalidFiltration, "direct sum of data on different rays");
    std::map<std::int64_t, std::vector<QVector>, std::greater<>> merged;
    for (const auto& s : steps_a)
      for (const auto& v : s.vectors) merged[s.jump].push_back(pad(v, true));
    for (const auto& s : it->second)
      for (const auto& v : s.vectors) merged[s.jump].push_back(pad(v, false));
    for (auto& [j, vs] : merged) d.filtrations[ray].push_back(FiltrationStep{j, std::move(vs)});
  }
  return d;
}

IntVector determinant_divisor(const KlyachkoData& data, const Fan& fan) {
  IntVector out(fan.rays.size(), 0);
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    for (auto j : data.jump_multiset(r)) out[r] += j;
  return out;
}

QMatrix ConeDecomposition::basis_matrix() const {
  std::vector<QVector> cols;
  for (const auto& w : frame) cols.push_back(w.vector);
  return QMatrix::from_columns(cols, frame.empty() ? 0 : frame.front().vector.size());
}

namespace {

bool frame_less(const WeightedVector& a, const WeightedVector& b) {
  auto lead = [](const QVector& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    return i;
  };
  const auto la = lead(a.vector), lb = lead(b.vector);
  if (la != lb) return la < lb;
  if (a.vector != b.vector) return a.vector < b.vector;
  return a.weight < b.weight;
}

}  // namespace

ConeDecomposition solve_decomposition(const KlyachkoData& data, const Atlas& atlas, std::size_t cone) {
  const auto& rays = atlas.fan.cones.at(cone);
  const auto& dual = atlas.charts.at(cone).dual_basis;
  const std::size_t n = rays.size();

  std::vector<std::vector<std::int64_t>> jump_sets;
  for (auto r : rays) jump_sets.push_back(data.jumps(r));

  // All jump tuples, ordered by decreasing sum: a linear extension of the
  // reversed product order, so larger weights are always handled first.
  std::vector<std::vector<std::int64_t>> tuples{{}};
  for (const auto& js : jump_sets) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& t : tuples)
      for (auto j : js) {
        auto u = t;
        u.push_back(j);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  auto sum = [](const std::vector<std::int64_t>& t) {
    std::int64_t s = 0;
    for (auto x : t) s += x;
    return s;
  };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
    if (sum(a) != sum(b)) return sum(a) > sum(b);
    return a > b;
  });

  ConeDecomposition dec{cone, {}};
  Subspace taken(data.rank);
  for (const auto& lambda : tuples) {
    Subspace s = Subspace::whole(data.rank);
    for (std::size_t j = 0; j < n && s.dim() > 0; ++j) s = s.intersect(data.level(rays[j], lambda[j]));
    if (s.dim() == 0) continue;
    const auto chosen = s.complement_of(taken.intersect(s));
    if (chosen.empty()) continue;
    IntVector u(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) u[k] += lambda[j] * to_int64(dual(j, k));
    for (const auto& v : chosen) dec.frame.push_back(WeightedVector{u, v});
    taken = taken + Subspace::span(chosen, data.rank);
  }
  std::sort(dec.frame.begin(), dec.frame.end(), frame_less);

  if (dec.frame.size() != data.rank) {
    throw Error(ErrorKind::IncompatibleFiltrations,
                "cone " + std::to_string(cone) + ": the ray filtrations admit no common eigenbasis (found " +
                    std::to_string(dec.frame.size()) + " of " + std::to_string(data.rank) + " vectors)");
  }
  if (auto bad = reconstruction_failure(data, atlas, dec)) {
    throw Error(ErrorKind::IncompatibleFiltrations, "cone " + std::to_string(cone) + ": " + *bad);
  }
  return dec;
}

std::vector<ConeDecomposition> solve_all_decompositions(const KlyachkoData& data, const Atlas& atlas) {
  validate_klyachko(data, atlas.fan);
  std::vector<ConeDecomposition> out;
  for (std::size_t c = 0; c < atlas.cone_count(); ++c) out.push_back(solve_decomposition(data, atlas, c));
  return out;
}

std::optional<std::string> reconstruction_failure(const KlyachkoData& data, const Atlas& atlas,
                                                  const ConeDecomposition& dec) {
  if (rank(dec.basis_matrix()) != data.rank) return "frame vectors are not a basis";
  for (auto r : atlas.fan.cones.at(dec.cone)) {
    const auto js = data.jumps(r);
    const auto& v = atlas.fan.rays[r];
    for (std::int64_t i = js.back() - 1; i <= js.front() + 1; ++i) {
      std::vector<QVector> vs;
      for (const auto& w : dec.frame)
        if (pairing(w.weight, v) >= i) vs.push_back(w.vector);
      if (Subspace::span(vs, data.rank) != data.level(r, i)) {
        return "ray " + std::to_string(r) + " level " + std::to_string(i) + " is not spanned by its eigenvectors";
      }
    }
  }
  return std::nullopt;
}

bool Cocycle::is_diagonal() const {
  for (const auto& row : g)
    for (const auto& m : row)
      if (!m.is_diagonal()) return false;
  return true;
}

Cocycle build_cocycle(const std::vector<ConeDecomposition>& decs, const Atlas& atlas) {
  const std::size_t k = atlas.cone_count();
  if (decs.size() != k) throw Error(ErrorKind::DimensionMismatch, "one decomposition per cone is required");
  const std::size_t n = atlas.dim();
  const std::size_t r = decs.front().frame.size();
  Cocycle c{n, r, std::vector<std::vector<LaurentMatrix>>(k)};
  std::vector<QMatrix> inv;
  for (const auto& d : decs) inv.push_back(inverse(d.basis_matrix()));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      // s^(t)_b = sum_a C(a, b) s^(s)_a and e_a = z^{-u_a} s_a, so
      // g(a, b) = C(a, b) z^{u_a(s) - u_b(t)}.
      const QMatrix change = inv[s] * decs[t].basis_matrix();
      LaurentMatrix g(n, r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
          if (change(a, b) == 0) continue;
          IntVector m(n);
          for (std::size_t i = 0; i < n; ++i) m[i] = decs[s].frame[a].weight[i] - decs[t].frame[b].weight[i];
          g(a, b) = LaurentPoly::monomial(change(a, b), atlas.character_exponent(m, s));
        }
      c.g[s].push_back(std::move(g));
    }
  return c;
}

CocycleReport check_cocycle(const Cocycle& c, const Atlas& atlas) {
  CocycleReport rep;
  const std::size_t k = c.cone_count();
  const auto id = LaurentMatrix::identity(c.nvars, c.rank);
  for (std::size_t s = 0; s < k; ++s) {
    if (auto d = c(s, s).first_difference(id))
      rep.failures.push_back("identity g[" + std::to_string(s) + "][" + std::to_string(s) + "] fails at " + *d);
    for (std::size_t t = 0; t < k; ++t) {
      if (!c(s, t).determinant().is_unit()) {
        rep.determinants_are_units = false;
        rep.failures.push_back("det g[" + std::to_string(s) + "][" + std::to_string(t) + "] is not a unit");
      }
      for (std::size_t u = 0; u < k; ++u) {
        ++rep.triples_checked;
        const LaurentMatrix lhs = c(s, t) * atlas.rewrite(c(t, u), t, s);
        if (auto d = lhs.first_difference(c(s, u))) {
          rep.failures.push_back("triple (" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(u) +
                                 "), pair (" + std::to_string(s) + "," + std::to_string(t) + "): " + *d);
        }
      }
    }
  }
  return rep;
}

Cocycle pullback_by_torus(const Cocycle& c, const Atlas& atlas) {
  const std::size_t n = atlas.dim();
  if (c.nvars != n) throw Error(ErrorKind::DimensionMismatch, "cocycle already carries torus parameters");
  Cocycle out{2 * n, c.rank, std::vector<std::vector<LaurentMatrix>>(c.cone_count())};
  for (std::size_t s = 0; s < c.cone_count(); ++s) {
    std::vector<LaurentPoly> images;
    const auto& dual = atlas.charts[s].dual_basis;
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(2 * n, 0);
      e[i] = 1;
      for (std::size_t k = 0; k < n; ++k) e[n + k] = to_int64(dual(i, k));
      images.push_back(LaurentPoly::monomial(1, std::move(e)));
    }
    for (std::size_t t = 0; t < c.cone_count(); ++t) out.g[s].push_back(c(s, t).substitute(images));
  }
  return out;
}

CoboundaryWitness solve_coboundary_split(const Cocycle& original, const Cocycle& pulled, const Atlas& atlas) {
  const std::size_t n = atlas.dim();
  const std::size_t k = original.cone_count();
  if (!original.is_diagonal() || !pulled.is_diagonal()) {
    throw Error(ErrorKind::NotSplit, "cocycle is not diagonal; only split bundles are decided");
  }
  if (pulled.nvars != 2 * n || original.nvars != n || pulled.cone_count() != k || pulled.rank != original.rank) {
    throw Error(ErrorKind::DimensionMismatch, "original and pulled cocycles do not match");
  }

  // Equations w_s - w_t = f_st over all ordered pairs s != t.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      if (s != t) pairs.emplace_back(s, t);
  IntMatrix system(pairs.size(), k);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    system(p, pairs[p].first) += 1;
    system(p, pairs[p].second) -= 1;
  }

  CoboundaryWitness w{std::vector<std::vector<IntVector>>(k, std::vector<IntVector>(original.rank, IntVector(n, 0)))};
  for (std::size_t a = 0; a < original.rank; ++a) {
    std::vector<IntVector> ratios;
    for (const auto& [s, t] : pairs) {
      const LaurentPoly orig = original(s, t)(a, a).extended(2 * n);
      if (!orig.is_unit()) throw Error(ErrorKind::NotSplit, "diagonal entry is not a unit");
      const LaurentPoly ratio = pulled(s, t)(a, a) * orig.unit_inverse();
      const auto& [e, coeff] = *ratio.terms().begin();
      bool pure_t = ratio.is_unit() && coeff == 1;
      for (std::size_t i = 0; i < n && pure_t; ++i) pure_t = e[i] == 0;
      if (!pure_t) {
        throw Error(ErrorKind::NoCoboundary, "pair (" + std::to_string(s) + "," + std::to_string(t) + ") slot " +
                                                 std::to_string(a) + ": ratio " + ratio.to_string() +
                                                 " is not a character of t");
      }
      ratios.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
    }
    for (std::size_t comp = 0; comp < n; ++comp) {
      std::vector<Integer> rhs;
      for (const auto& f : ratios) rhs.emplace_back(static_cast<long>(f[comp]));
      const auto sol = solve_integer_system(system, rhs);
      if (!sol) {
        throw Error(ErrorKind::NoCoboundary, "slot " + std::to_string(a) + ", t" + std::to_string(comp + 1) +
                                                 ": pullback ratios do not form a coboundary");
      }
      // Normalize so that cone 0 carries lambda = 1.
      for (std::size_t s = 0; s < k; ++s) w.exponents[s][a][comp] = to_int64((*sol)[s] - (*sol)[0]);
    }
  }

  // Exact confirmation of the witness.
  auto lambda = [&](std::size_t s, bool inverse) {
    std::vector<LaurentPoly> diag;
    for (std::size_t a = 0; a < original.rank; ++a) {
      Exponent e(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) e[n + i] = inverse ? -w.exponents[s][a][i] : w.exponents[s][a][i];
      diag.push_back(LaurentPoly::monomial(1, std::move(e)));
    }
    return LaurentMatrix::diagonal(diag);
  };
  for (const auto& [s, t] : pairs) {
    const LaurentMatrix rhs = lambda(s, false) * original(s, t).extended(2 * n) * lambda(t, true);
    if (auto d = pulled(s, t).first_difference(rhs)) {
      throw Error(ErrorKind::NoCoboundary, "witness fails on pair (" + std::to_string(s) + "," + std::to_string(t) +
                                               "): " + *d);
    }
  }
  return w;
}

}  // namespace toriclog
