#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toriclog/fan.hpp"
#include "toriclog/rational_linalg.hpp"

namespace toriclog {

// One step of a decreasing filtration: the vectors first appear at `jump`.
struct FiltrationStep {
  std::int64_t jump = 0;
  std::vector<QVector> vectors;
};

// Klyachko data of a torus-equivariant vector bundle: for each ray a
// decreasing filtration of Q^rank with E^ray(i) = span of all vectors whose
// step has jump >= i. Steps are listed in decreasing jump order.
struct KlyachkoData {
  std::size_t rank = 0;
  std::map<std::size_t, std::vector<FiltrationStep>> filtrations;

  Subspace level(std::size_t ray, std::int64_t i) const;
  // Distinct jumps of a ray, decreasing.
  std::vector<std::int64_t> jumps(std::size_t ray) const;
  // Jump values repeated by the dimension of their graded piece.
  std::vector<std::int64_t> jump_multiset(std::size_t ray) const;
};

// InvalidFiltration on ragged vectors, non-decreasing jumps, steps that add
// nothing, missing rays or a lowest level that is not the whole space.
void validate_klyachko(const KlyachkoData& data, const Fan& fan);

KlyachkoData trivial_bundle(const Fan& fan, std::size_t rank);
// Line bundle O(sum_rho a_rho D_rho): ray rho jumps at a_rho.
KlyachkoData line_bundle(const Fan& fan, const IntVector& divisor);
// Line bundle from per-cone characters u_sigma; ray rho of sigma jumps at
// <u_sigma, v_rho>. InvalidFiltration if two cones disagree on a ray.
KlyachkoData line_bundle_from_cartier(const Fan& fan, const std::map<std::size_t, IntVector>& cartier);
KlyachkoData tangent_bundle(const Fan& fan);
KlyachkoData cotangent_bundle(const Fan& fan);
KlyachkoData direct_sum(const KlyachkoData& a, const KlyachkoData& b);

// Divisor coefficients (per ray) of the determinant line bundle.
IntVector determinant_divisor(const KlyachkoData& data, const Fan& fan);

struct WeightedVector {
  IntVector weight;  // character u in M
  QVector vector;    // eigenvector in the fixed fiber Q^rank
};

// Equivariant frame of one chart: a basis of Q^rank split into character
// eigenspaces. Listed in a canonical order (by eigenvector).
struct ConeDecomposition {
  std::size_t cone = 0;
  std::vector<WeightedVector> frame;

  QMatrix basis_matrix() const;
};

ConeDecomposition solve_decomposition(const KlyachkoData& data, const Atlas& atlas, std::size_t cone);
std::vector<ConeDecomposition> solve_all_decompositions(const KlyachkoData& data, const Atlas& atlas);
// First violation of E^rho(i) = span{frame vectors with <u, v_rho> >= i} over
// the rays of the cone, or nullopt.
std::optional<std::string> reconstruction_failure(const KlyachkoData& data, const Atlas& atlas,
                                                  const ConeDecomposition& dec);

// Transition functions g[s][t] in the coordinates of chart s, with frames
// related by e^(t) = e^(s) g[s][t]. Entries may carry torus parameters as
// extra variables past the chart dimension.
struct Cocycle {
  std::size_t nvars = 0;
  std::size_t rank = 0;
  std::vector<std::vector<LaurentMatrix>> g;

  const LaurentMatrix& operator()(std::size_t s, std::size_t t) const { return g.at(s).at(t); }
  LaurentMatrix& operator()(std::size_t s, std::size_t t) { return g.at(s).at(t); }
  std::size_t cone_count() const { return g.size(); }
  bool is_diagonal() const;
};

Cocycle build_cocycle(const std::vector<ConeDecomposition>& decompositions, const Atlas& atlas);

struct CocycleReport {
  std::size_t triples_checked = 0;
  bool determinants_are_units = true;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// g[s][s] = I, g[s][t] * g[t][u] = g[s][u] for all triples (u = s covers the
// pair identity) and unit determinants.
CocycleReport check_cocycle(const Cocycle& c, const Atlas& atlas);

// Pullback along the torus action x_i -> chi^{m_i}(t) x_i; the result lives
// in 2n variables (x_1..x_n, t_1..t_n).
Cocycle pullback_by_torus(const Cocycle& c, const Atlas& atlas);

// lambda[s] = diag(t^{exponents[s][a]}) with pulled = lambda_s * original *
// lambda_t^{-1} on every ordered pair.
struct CoboundaryWitness {
  std::vector<std::vector<IntVector>> exponents;
};

CoboundaryWitness solve_coboundary_split(const Cocycle& original, const Cocycle& pulled, const Atlas& atlas);

}  // namespace toriclog
