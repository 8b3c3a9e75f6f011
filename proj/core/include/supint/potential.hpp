#pragma once

#include <array>
#include <complex>
#include <vector>

#include "supint/expression.hpp"
#include "supint/killing.hpp"
#include "supint/pluecker.hpp"

namespace supint {

struct Sample {
  std::complex<double> z;
  std::complex<double> w;
};

struct RationalEntry {
  BiPoly num;
  BiPoly den;
  std::complex<double> eval(std::complex<double> z0, std::complex<double> w0) const;
};

/// Coefficient matrix of V_zz = (3/2)(C11 V_z + C12 V_w), V_ww = (3/2)(C21 V_z + C22 V_w).
struct CMatrix {
  RationalEntry c11, c12, c21, c22;
};

/// Throws DegeneratePoint when D vanishes identically.
CMatrix c_matrix(const TernaryTriple& t);

/// Max over samples of both prolongation equation residuals. Throws SingularSample.
double prolongation_residual(const TernaryTriple& t, const Expr& V, const std::vector<Sample>& samples);

struct SeriesMismatch {
  int i;
  int j;
  GaussRat from_z;  // via the V_zz equation
  GaussRat from_w;  // via the V_ww equation
};

/// Series solutions with seeds (V, V_z, V_w, V_zw) = e_k at the base point.
struct FibreBasis {
  GaussRat z0;
  GaussRat w0;
  int order = 0;
  std::array<ExactSeries, 4> basis;
  std::array<std::vector<SeriesMismatch>, 4> mismatches;
  int rank = 0;
  bool consistent() const;
};

/// Series of the solution with Taylor seeds (v00, v10, v01, v11).
/// Doubly-determined coefficients that disagree are appended to `mismatches`.
ExactSeries solve_series(const TernaryTriple& t, const GaussRat& z0, const GaussRat& w0, int order,
                         const std::array<GaussRat, 4>& seeds, std::vector<SeriesMismatch>* mismatches = nullptr);

/// Throws SingularBase when D(z0, w0) = 0 and std::invalid_argument when order < 4.
FibreBasis solve_fibre_series(const TernaryTriple& t, const GaussRat& z0, const GaussRat& w0, int order);

/// Largest deviation of V's Taylor coefficients from the fibre member with the
/// same seeds, relative to the largest coefficient, through total degree `order`.
double series_match(const FibreBasis& fibre, const Expr& V, int order = 6);

/// L_ww V_zz - L_zz V_ww - (3/2)(lambda_z V_w - lambda_w V_z), max over samples.
double bd_residual(const Sckt& t, const Expr& V, const std::vector<Sample>& samples);

/// The 1-form K dV with the index raised by g_zw = 1.
std::array<Expr, 2> companion_form(const Sckt& t, const Expr& V);

struct CompanionResult {
  /// V^(alpha) at the path vertices, normalised to 0 at the first vertex.
  std::vector<std::complex<double>> values;
  /// max |d_z (KdV)_w - d_w (KdV)_z| over vertices and segment midpoints.
  double closedness = 0;
};

/// Integrates K dV along a polyline with adaptive Gauss-Legendre quadrature.
/// Throws PathThroughSingularity.
CompanionResult recover_companion_potential(const Sckt& t, const Expr& V, const std::vector<Sample>& path,
                                            double tol = 1e-13);

/// |integral of K dV| around the closed polyline through `loop`.
double loop_defect(const Sckt& t, const Expr& V, const std::vector<Sample>& loop, double tol = 1e-13);

struct PhasePoint {
  std::complex<double> z;
  std::complex<double> w;
  std::complex<double> p_z;
  std::complex<double> p_w;
};

struct PoissonReport {
  /// Cubic-in-momenta parts {K, g} vanish identically.
  std::array<bool, 2> cubic_zero{};
  /// max |{K, V} + {V^(alpha), g}| over the phase samples.
  std::array<double, 2> linear_max{};
  double max() const;
};

/// {F, H} for F = K^ij p_i p_j + V^(alpha), H = 2 p_z p_w + V.
PoissonReport poisson_verify(const Sckt& t1, const Sckt& t2, const Expr& V, const std::vector<PhasePoint>& samples,
                             double step = 1e-3);

struct PointFit {
  /// Null vector of the linear system for (D, A_z, B_w), largest entry scaled to 1.
  std::array<std::complex<double>, 10> coords{};
  std::vector<double> singular_values;
  /// Number of singular values below tol * largest.
  int nullity = 0;
};

/// Fits the point whose fibre contains the given potentials.
PointFit fit_point(const std::vector<Expr>& potentials, const std::vector<Sample>& samples, double tol = 1e-9);

}  // namespace supint
