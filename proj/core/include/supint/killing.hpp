#pragma once

#include <array>

#include "supint/gauss_rat.hpp"
#include "supint/poly.hpp"

namespace supint {

/// Trace-free special conformal Killing tensor in null coordinates,
/// L = A + b x^T + x b^T + c x x^T with A_zw = 0.
struct SpecialConformalKillingTensor {
  GaussRat A_zz;
  GaussRat b_z;
  GaussRat c;
  GaussRat b_w;
  GaussRat A_ww;

  /// (A_zz, 2 b_z, c, 2 b_w, A_ww)
  std::array<GaussRat, 5> vec() const;
  static SpecialConformalKillingTensor from_vec(const std::array<GaussRat, 5>& v);

  friend bool operator==(const SpecialConformalKillingTensor& a, const SpecialConformalKillingTensor& b) {
    return a.vec() == b.vec();
  }
  friend SpecialConformalKillingTensor operator+(const SpecialConformalKillingTensor& a,
                                                 const SpecialConformalKillingTensor& b);
  friend SpecialConformalKillingTensor operator*(const GaussRat& s, const SpecialConformalKillingTensor& t);
};

using Sckt = SpecialConformalKillingTensor;

/// Position-dependent components of L.
struct ScktField {
  BiPoly L_zz;  // depends on w only
  BiPoly L_ww;  // depends on z only
  BiPoly lambda;
  BiPoly lambda_z;
  BiPoly lambda_w;
  GaussRat c;
};

struct KillingTensorField {
  BiPoly K_zz;
  BiPoly K_zw;
  BiPoly K_ww;
};

/// Symmetrized first derivatives of K; all zero iff K is a Killing tensor.
struct KillingResidual {
  BiPoly zzz;
  BiPoly zzw;
  BiPoly zww;
  BiPoly www;
  bool is_zero() const { return zzz.is_zero() && zzw.is_zero() && zww.is_zero() && www.is_zero(); }
};

ScktField to_field(const Sckt& t);

/// K = L - (tr L) g with g_zw = 1. `metric_part` is an optional A_zw entry;
/// with it set to 1 and everything else 0 the input is g itself.
KillingTensorField to_killing(const Sckt& t, const GaussRat& metric_part = 0);

KillingResidual killing_residual(const KillingTensorField& k);

}  // namespace supint
