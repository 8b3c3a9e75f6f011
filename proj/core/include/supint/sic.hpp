#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "supint/pluecker.hpp"

namespace supint {

struct SicReport {
  std::array<BiPoly, 2> cubic_residuals;
  BiPoly quartic_residual;
  std::array<BiPoly, 2> ab3_residuals;
  BiPoly d3_residual;
  bool on_variety = false;
  bool degenerate = false;
};

/// Literal left-minus-right residuals of the superintegrability conditions.
/// The triple must be consistent with some point (see to_point).
SicReport sic_residuals(const TernaryTriple& t);
SicReport sic_residuals(const PlueckerPoint& p);

bool on_variety(const PlueckerPoint& p);
/// D = 0 and exactly one of A_z, B_w a nonzero constant.
bool is_degenerate(const TernaryTriple& t);

/// Integrability conditions of the prolongation system at a sample point.
/// Throws SingularSample when D vanishes there.
std::array<std::complex<double>, 3> ic_residuals(const TernaryTriple& t, std::complex<double> z0,
                                                  std::complex<double> w0);

/// Residuals of the D3 condition and its derivatives: d3, d3_z, d3_w, d3_zw.
std::array<BiPoly, 4> derive_d3_chain(const TernaryTriple& t);

struct SlotLift {
  enum class Kind { unique, free, inconsistent };
  Kind kind = Kind::inconsistent;
  GaussRat value;  // meaningful for unique
  /// Names of the formulas that were defined and evaluated.
  std::vector<std::string> formulas;
};

struct LiftResult {
  SlotLift a30;
  SlotLift a03;
  /// Both slots are free (D constant or zero), subject to a30 * a03 = 0.
  bool product_constraint = false;
};

/// Recovers a30 and a03 from the coefficients of D.
/// Throws NotReducible when D fails the D3 membership condition.
LiftResult lift(const BiPoly& D);

std::string to_string(SlotLift::Kind k);

}  // namespace supint
