#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toriclog/fan.hpp"

namespace toriclog {

// Infinitesimal torus action in the logarithmic frame {x_i d/dx_i} of a chart:
// column j expresses the fundamental vector field of the j-th standard
// cocharacter e_j. Entry (i, j) = <m_i, e_j>, i.e. the matrix is the chart's
// dual basis.
struct BetaMatrix {
  std::size_t cone = 0;
  IntMatrix matrix;
};

// Vector field sum_i coeffs[i] x_i d/dx_i on a chart.
struct LogVectorField {
  std::size_t chart = 0;
  std::vector<LaurentPoly> coeffs;

  friend bool operator==(const LogVectorField&, const LogVectorField&) = default;
};

// The same field in the ordinary frame d/dx_i: coefficient x_i * coeffs[i].
std::vector<LaurentPoly> ordinary_coefficients(const LogVectorField& field);
// A field written in the ordinary frame lies in TM(-log D) on the chart iff
// each d/dx_i coefficient is a polynomial divisible by x_i.
bool is_log_tangent(const std::vector<LaurentPoly>& ordinary);

BetaMatrix beta_matrix(const Atlas& atlas, std::size_t cone);
LogVectorField beta_column(const Atlas& atlas, std::size_t cone, std::size_t j);

LogVectorField transport_log_field(const Atlas& atlas, const LogVectorField& field, std::size_t target);

struct LogFrameConeResult {
  std::size_t cone = 0;
  Integer determinant;
  bool unimodular = false;
  bool log_tangent = false;
};

struct LogFrameReport {
  std::vector<LogFrameConeResult> cones;
  std::size_t transports_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Per-cone |det beta| = 1, containment in TM(-log D), and agreement of beta
// columns under transport between every ordered pair of charts.
LogFrameReport check_log_frame(const Atlas& atlas);
// Throws LogFrameFailure naming the first failing cone.
void require_log_frame(const Atlas& atlas);

}  // namespace toriclog
