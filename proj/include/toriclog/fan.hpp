#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toriclog/error.hpp"
#include "toriclog/integer_matrix.hpp"
#include "toriclog/laurent_matrix.hpp"

namespace toriclog {

using IntVector = std::vector<std::int64_t>;

// A complete smooth fan in N = Z^n. Maximal cones list ray indices; the order
// inside a cone is the coordinate order of that cone's chart.
struct Fan {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

struct ValidationIssue {
  ErrorKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<bool> primitive_rays;
  std::vector<Integer> cone_determinants;
  bool complete = false;
  std::size_t facets_checked = 0;
  std::size_t directions_probed = 0;
  // Smooth complete fans have a simple normal crossing boundary; reported
  // as a consequence of smoothness, not checked separately.
  bool simple_normal_crossing = false;
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate_fan(const Fan& fan);
// Throws the first issue of validate_fan (primitivity, then smoothness, then
// completeness).
void require_valid(const Fan& fan);

struct Chart {
  std::size_t cone = 0;
  IntMatrix ray_matrix;  // columns v_1..v_n
  IntMatrix dual_basis;  // rows m_1..m_n, <m_i, v_j> = delta_ij
};

// x^(target)_j = prod_i (x^(source)_i)^exponent(i, j)
struct TransitionMap {
  std::size_t source = 0;
  std::size_t target = 0;
  IntMatrix exponent;
};

struct Atlas {
  Fan fan;
  std::vector<Chart> charts;
  // transitions[s][t]
  std::vector<std::vector<TransitionMap>> transitions;

  std::size_t dim() const { return fan.rank; }
  std::size_t cone_count() const { return charts.size(); }
  const TransitionMap& transition(std::size_t source, std::size_t target) const {
    return transitions.at(source).at(target);
  }

  // Rewrites a function of the target chart's coordinates into the source
  // chart's coordinates. Variables past dim() (torus parameters) are kept.
  LaurentPoly rewrite(const LaurentPoly& p, std::size_t from_chart, std::size_t into_chart) const;
  LaurentMatrix rewrite(const LaurentMatrix& m, std::size_t from_chart, std::size_t into_chart) const;

  // Character z^m of the torus written in the coordinates of a chart:
  // exponent vector (<m, v_1>, ..., <m, v_n>).
  Exponent character_exponent(const IntVector& m, std::size_t chart) const;
  // Inverse: the character whose chart monomial is x^e.
  IntVector exponent_character(const Exponent& e, std::size_t chart) const;
};

Atlas build_atlas(const Fan& fan);

std::size_t divisor_chart_index(const Fan& fan, std::size_t ray, std::size_t cone);

std::int64_t pairing(const IntVector& m, const IntVector& v);

}  // namespace toriclog
