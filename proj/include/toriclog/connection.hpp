#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toriclog/klyachko.hpp"
#include "toriclog/log_forms.hpp"

namespace toriclog {

// Global sign of the canonical connection matrix. With equivariant frames
// e_a = chi^{-u_a} s_a (s_a the torus-orbit frame of the open orbit) and the
// convention nabla e_a = sum_b e_b A_ba, the orbit frame is flat exactly when
//   A = kConnectionSign * diag_a( sum_i <u_a, v_i> dx_i / x_i ).
// pin_connection_sign() re-derives this value from O(1) on P^1.
inline constexpr int kConnectionSign = -1;

struct LogConnection {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<LogOneForm> forms;  // one per maximal cone, chart coordinates
};

LogConnection canonical_connection(const std::vector<ConeDecomposition>& decompositions, const Atlas& atlas,
                                   int sign = kConnectionSign);

// Rewrites a one-form given in the coordinates of chart `from` into chart `into`.
LogOneForm rewrite_form(const LogOneForm& form, const Atlas& atlas, std::size_t from, std::size_t into);

struct PairCheck {
  std::size_t source = 0;
  std::size_t target = 0;
  bool ok = false;
  std::string detail;
};

struct ChartCheck {
  std::size_t cone = 0;
  bool ok = false;
  std::string detail;
};

struct GaugeReport {
  std::vector<PairCheck> pairs;
  bool ok() const;
};

// For s != t: A^(t) rewritten into chart s equals g^{-1} A^(s) g + g^{-1} dg, g = g[s][t].
GaugeReport check_gauge_law(const LogConnection& conn, const Cocycle& cocycle, const Atlas& atlas);

// F = dA + A ^ A per chart.
std::vector<LogTwoForm> curvature(const LogConnection& conn);
std::vector<ChartCheck> check_curvature(const LogConnection& conn);

struct FlatFrameReport {
  // d f + A f = 0 for f_a = chi^{-sign u_a} e_a.
  std::vector<ChartCheck> charts;
  // The flat frames of two charts differ by a constant matrix, i.e. they are
  // one frame of torus orbits on the open orbit.
  std::vector<PairCheck> transitions;
  bool ok() const;
};

FlatFrameReport flat_frame_check(const LogConnection& conn, const std::vector<ConeDecomposition>& decompositions,
                                 const Atlas& atlas, int sign = kConnectionSign);

// Runs flat_frame_check on O(1) over P^1 for both signs; returns the one that
// passes (throws FlatFrameFailure if not exactly one does).
int pin_connection_sign();

struct RayResidue {
  std::size_t ray = 0;
  std::vector<std::size_t> charts;
  std::vector<Rational> eigenvalues;  // sorted multiset
  Rational trace;
};

struct ResidueSpectrum {
  std::vector<RayResidue> rays;
};

// Residue of the log part along each divisor, eigenvalues via the exact
// characteristic polynomial. ChartDisagreement if two charts through the same
// ray see different characteristic polynomials; NotLogarithmic on poles of
// higher order or non-constant residues.
ResidueSpectrum residues(const LogConnection& conn, const Atlas& atlas);

// Characteristic polynomial det(x I - m), coefficients from x^0 upwards.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);
// Rational roots with multiplicity; nullopt if some root is irrational.
std::optional<std::vector<Rational>> rational_eigenvalues(const QMatrix& m);

// Compares each ray's residue eigenvalues with sign * (jump multiset).
std::vector<std::string> residue_jump_mismatches(const ResidueSpectrum& spectrum, const KlyachkoData& data,
                                                 int sign = kConnectionSign);

struct ChernCheck {
  std::vector<Rational> residue_divisor;  // tr Res along each ray
  IntVector determinant_divisor;          // from det of the cocycle
  IntVector principal_character;          // m with residue + det = div(chi^m)
  bool ok = false;
  std::string detail;
};

// Residue theorem: sum tr(Res_rho) D_rho = -c_1(E) = -[det E] in Pic. The
// determinant class is recovered from det g[s][t] alone.
ChernCheck check_first_chern(const ResidueSpectrum& spectrum, const Cocycle& cocycle, const Atlas& atlas);

// Divisor coefficients of the line bundle whose transition functions are the
// unit determinants of the cocycle.
IntVector cocycle_determinant_divisor(const Cocycle& cocycle, const Atlas& atlas);

}  // namespace toriclog
