#include "toriclog/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toriclog/error.hpp"
#include "toriclog/rational_linalg.hpp"

namespace toriclog {

std::int64_t pairing(const IntVector& m, const IntVector& v) {
  if (m.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * v[i];
  return s;
}

namespace {

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string cone_str(const Fan& fan, std::size_t c) {
  std::string s = "cone " + std::to_string(c) + " {";
  for (std::size_t k = 0; k < fan.cones[c].size(); ++k) s += (k ? "," : "") + std::to_string(fan.cones[c][k]);
  return s + "}";
}

IntMatrix cone_matrix(const Fan& fan, std::size_t c) {
  std::vector<IntVector> cols;
  for (auto r : fan.cones[c]) cols.push_back(fan.rays[r]);
  return IntMatrix::from_columns(cols);
}

void check_structure(const Fan& fan) {
  if (fan.rank == 0) throw Error(ErrorKind::MalformedFan, "rank must be positive");
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if (fan.rays[r].size() != fan.rank)
      throw Error(ErrorKind::MalformedFan, "ray " + std::to_string(r) + " has wrong length");
  if (fan.cones.empty()) throw Error(ErrorKind::MalformedFan, "no maximal cones");
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    if (cone.size() != fan.rank)
      throw Error(ErrorKind::MalformedFan, "cone " + std::to_string(c) + " is not full-dimensional simplicial");
    std::set<std::size_t> seen(cone.begin(), cone.end());
    if (seen.size() != cone.size()) throw Error(ErrorKind::MalformedFan, "cone " + std::to_string(c) + " repeats a ray");
    for (auto r : cone)
      if (r >= fan.rays.size())
        throw Error(ErrorKind::MalformedFan, "cone " + std::to_string(c) + " references missing ray " + std::to_string(r));
  }
}

// Deterministic probe directions with entries in a small box, skipping ones
// that lie on a wall of some cone (those are ambiguous for interior counting).
std::vector<IntVector> probe_directions(std::size_t n) {
  std::vector<IntVector> out;
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int k = 0; k < 64; ++k) {
    IntVector d(n);
    bool nonzero = false;
    for (auto& x : d) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      x = static_cast<std::int64_t>((state >> 33) % 23) - 11;
      nonzero = nonzero || x != 0;
    }
    if (nonzero) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
  check_structure(fan);
  ValidationReport rep;
  const std::size_t n = fan.rank;

  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const bool prim = gcd_of(fan.rays[r]) == 1;
    rep.primitive_rays.push_back(prim);
    if (!prim)
      rep.issues.push_back({ErrorKind::NonPrimitiveRay, "ray " + std::to_string(r) + " " + vec_str(fan.rays[r]) +
                                                            " is not primitive"});
  }
  for (std::size_t a = 0; a < fan.rays.size(); ++a)
    for (std::size_t b = a + 1; b < fan.rays.size(); ++b)
      if (fan.rays[a] == fan.rays[b])
        rep.issues.push_back({ErrorKind::DuplicateRay, "rays " + std::to_string(a) + " and " + std::to_string(b) +
                                                           " coincide"});

  bool smooth = true;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const Integer det = determinant(cone_matrix(fan, c));
    rep.cone_determinants.push_back(det);
    if (abs(det) != 1) {
      smooth = false;
      rep.issues.push_back({ErrorKind::NonSmoothCone, cone_str(fan, c) + " has determinant " + det.get_str()});
    }
  }

  // Completeness: facets shared by exactly two cones, connected adjacency,
  // then a backstop probing deterministic directions.
  std::vector<std::string> completeness;
  std::set<std::vector<std::size_t>> cone_sets;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    auto s = fan.cones[c];
    std::sort(s.begin(), s.end());
    if (!cone_sets.insert(s).second) completeness.push_back(cone_str(fan, c) + " is listed twice");
  }
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < fan.cones.size(); ++c)
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k < n; ++k)
        if (k != drop) f.push_back(fan.cones[c][k]);
      std::sort(f.begin(), f.end());
      facets[f].push_back(c);
    }
  rep.facets_checked = facets.size();
  std::vector<std::size_t> parent(fan.cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [f, owners] : facets) {
    if (owners.size() != 2) {
      std::string s = "facet {";
      for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
      completeness.push_back(s + "} lies in " + std::to_string(owners.size()) + " maximal cone(s), expected 2");
    } else {
      parent[find(owners[0])] = find(owners[1]);
    }
  }
  for (std::size_t c = 1; c < fan.cones.size(); ++c)
    if (find(c) != find(0)) {
      completeness.push_back(cone_str(fan, c) + " is not connected to cone 0 through shared facets");
      break;
    }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    bool used = false;
    for (const auto& cone : fan.cones) used = used || std::find(cone.begin(), cone.end(), r) != cone.end();
    if (!used) completeness.push_back("ray " + std::to_string(r) + " lies in no maximal cone");
  }

  if (smooth && completeness.empty()) {
    std::vector<IntMatrix> duals;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) duals.push_back(unimodular_inverse(cone_matrix(fan, c)));
    for (const auto& d : probe_directions(n)) {
      std::size_t interior = 0, closed = 0;
      for (const auto& m : duals) {
        bool in = true, strict = true;
        for (std::size_t i = 0; i < n; ++i) {
          const auto coord = pairing(m.row(i), d);
          in = in && coord >= 0;
          strict = strict && coord > 0;
        }
        closed += in;
        interior += strict;
      }
      ++rep.directions_probed;
      if (closed == 0) {
        completeness.push_back("direction " + vec_str(d) + " lies in no maximal cone");
        break;
      }
      if (interior > 1) {
        completeness.push_back("direction " + vec_str(d) + " is interior to " + std::to_string(interior) + " cones");
        break;
      }
    }
  }
  for (auto& msg : completeness) rep.issues.push_back({ErrorKind::IncompleteFan, std::move(msg)});
  rep.complete = completeness.empty();
  rep.simple_normal_crossing = smooth && rep.complete;
  return rep;
}

void require_valid(const Fan& fan) {
  const auto rep = validate_fan(fan);
  for (ErrorKind k : {ErrorKind::NonPrimitiveRay, ErrorKind::DuplicateRay, ErrorKind::NonSmoothCone,
                      ErrorKind::IncompleteFan})
    for (const auto& issue : rep.issues)
      if (issue.kind == k) throw Error(issue.kind, issue.message);
}

Atlas build_atlas(const Fan& fan) {
  require_valid(fan);
  Atlas atlas;
  atlas.fan = fan;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    Chart chart;
    chart.cone = c;
    chart.ray_matrix = cone_matrix(fan, c);
    chart.dual_basis = unimodular_inverse(chart.ray_matrix);
    atlas.charts.push_back(std::move(chart));
  }
  const std::size_t k = fan.cones.size();
  atlas.transitions.resize(k);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      // exponent(i, j) = <m_j^(t), v_i^(s)>  i.e. (M_t V_s)^T
      const IntMatrix e = (atlas.charts[t].dual_basis * atlas.charts[s].ray_matrix).transpose();
      atlas.transitions[s].push_back(TransitionMap{s, t, e});
    }
  return atlas;
}

LaurentPoly Atlas::rewrite(const LaurentPoly& p, std::size_t from_chart, std::size_t into_chart) const {
  const std::size_t n = dim();
  if (p.nvars() < n) throw Error(ErrorKind::DimensionMismatch, "polynomial has fewer variables than the chart");
  // x^(from)_j = prod_i (x^(into)_i)^T(i, j) with T = transition(into, from).
  const IntMatrix& t = transition(into_chart, from_chart).exponent;
  IntMatrix a = IntMatrix::identity(p.nvars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = t(i, j);
  return monomial_transform(p, a);
}

LaurentMatrix Atlas::rewrite(const LaurentMatrix& m, std::size_t from_chart, std::size_t into_chart) const {
  return m.map([&](const LaurentPoly& p) { return rewrite(p, from_chart, into_chart); });
}

Exponent Atlas::character_exponent(const IntVector& m, std::size_t chart) const {
  const auto& v = charts.at(chart).ray_matrix;
  Exponent e(dim());
  for (std::size_t i = 0; i < dim(); ++i) e[i] = pairing(m, v.column(i));
  return e;
}

IntVector Atlas::exponent_character(const Exponent& e, std::size_t chart) const {
  const auto& mb = charts.at(chart).dual_basis;
  IntVector m(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) m[k] += e[i] * to_int64(mb(i, k));
  return m;
}

std::size_t divisor_chart_index(const Fan& fan, std::size_t ray, std::size_t cone) {
  const auto& c = fan.cones.at(cone);
  auto it = std::find(c.begin(), c.end(), ray);
  if (it == c.end())
    throw Error(ErrorKind::RayNotInCone, "ray " + std::to_string(ray) + " is not a ray of " + cone_str(fan, cone));
  return static_cast<std::size_t>(it - c.begin());
}

}  // namespace toriclog
