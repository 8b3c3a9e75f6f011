#include "supint/killing.hpp"

namespace supint {

std::array<GaussRat, 5> SpecialConformalKillingTensor::vec() const {
  return {A_zz, GaussRat(2) * b_z, c, GaussRat(2) * b_w, A_ww};
}

SpecialConformalKillingTensor SpecialConformalKillingTensor::from_vec(const std::array<GaussRat, 5>& v) {
  const GaussRat half(1, 2);
  return {v[0], v[1] * half, v[2], v[3] * half, v[4]};
}

SpecialConformalKillingTensor operator+(const SpecialConformalKillingTensor& a,
                                        const SpecialConformalKillingTensor& b) {
  return {a.A_zz + b.A_zz, a.b_z + b.b_z, a.c + b.c, a.b_w + b.b_w, a.A_ww + b.A_ww};
}

SpecialConformalKillingTensor operator*(const GaussRat& s, const SpecialConformalKillingTensor& t) {
  return {s * t.A_zz, s * t.b_z, s * t.c, s * t.b_w, s * t.A_ww};
}

ScktField to_field(const Sckt& t) {
  const BiPoly z = BiPoly::z(), w = BiPoly::w();
  const GaussRat two(2);
  ScktField f;
  f.L_zz = BiPoly(t.A_zz) + two * t.b_z * w + t.c * (w * w);
  f.L_ww = BiPoly(t.A_ww) + two * t.b_w * z + t.c * (z * z);
  f.lambda = two * (t.b_z * z + t.b_w * w + t.c * (z * w));
  f.lambda_z = BiPoly(two * t.b_z) + two * t.c * w;
  f.lambda_w = BiPoly(two * t.b_w) + two * t.c * z;
  f.c = t.c;
  return f;
}

KillingTensorField to_killing(const Sckt& t, const GaussRat& metric_part) {
  const BiPoly z = BiPoly::z(), w = BiPoly::w();
  const ScktField f = to_field(t);
  // L_zw = A_zw + b_z z + b_w w + c z w and tr L = 2 L_zw, so K_zw = -L_zw.
  const BiPoly L_zw = BiPoly(metric_part) + t.b_z * z + t.b_w * w + t.c * (z * w);
  return {f.L_zz, -L_zw, f.L_ww};
}

KillingResidual killing_residual(const KillingTensorField& k) {
  const GaussRat two(2), three(3);
  KillingResidual r;
  r.zzz = three * diff(k.K_zz, Var::z);
  r.zzw = diff(k.K_zz, Var::w) + two * diff(k.K_zw, Var::z);
  r.zww = diff(k.K_ww, Var::z) + two * diff(k.K_zw, Var::w);
  r.www = three * diff(k.K_ww, Var::w);
  return r;
}

}  // namespace supint
