#include "supint/sic.hpp"

#include <algorithm>

#include "supint/errors.hpp"

namespace supint {

namespace {

struct Derivs {
  BiPoly D, Dz, Dw, Dzz, Dzw, Dww, Dzzw, Dwwz;
  explicit Derivs(const BiPoly& d) : D(d) {
    Dz = diff(D, Var::z);
    Dw = diff(D, Var::w);
    Dzz = diff(Dz, Var::z);
    Dzw = diff(Dz, Var::w);
    Dww = diff(Dw, Var::w);
    Dzzw = diff(Dzz, Var::w);
    Dwwz = diff(Dww, Var::z);
  }
};

// Right-hand side of A_z D_w^2 = ... ; the B-version is obtained by swapping variables.
BiPoly a3_rhs(const Derivs& d) {
  const GaussRat two(2), three_halves(3, 2);
  return two * (d.D * d.Dw * d.Dzz) - three_halves * (d.D * d.D * d.Dzzw) - d.Dw * d.Dz * d.Dz +
         d.D * d.Dz * d.Dzw;
}

BiPoly b3_rhs(const Derivs& d) {
  const GaussRat two(2), three_halves(3, 2);
  return two * (d.D * d.Dz * d.Dww) - three_halves * (d.D * d.D * d.Dwwz) - d.Dz * d.Dw * d.Dw +
         d.D * d.Dw * d.Dzw;
}

BiPoly d3_poly(const Derivs& d) {
  const GaussRat two(2);
  return d.Dz * d.Dz * d.Dww + d.Dw * d.Dw * d.Dzz + d.Dz * d.Dw * d.Dzw -
         d.D * (two * (d.Dzz * d.Dww) + d.Dz * d.Dwwz + d.Dw * d.Dzzw + d.Dzw * d.Dzw);
}

// Small Gaussian-rational values used to pick a deterministic generic point.
std::vector<GaussRat> probe_values() {
  return {GaussRat(0),   GaussRat(1),    GaussRat(-1),   GaussRat(2),       GaussRat(-2),
          GaussRat::i(), -GaussRat::i(), GaussRat(1, 2), GaussRat(3) + GaussRat::i()};
}

bool rank_at_most_one(const std::vector<std::array<GaussRat, 2>>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[i][0] * cols[j][1] != cols[i][1] * cols[j][0]) return false;
  return true;
}

// The a30 slot over a D which depends on w.
SlotLift lift_a30(const BiPoly& D) {
  SlotLift out;
  auto a = [&](int i, int j) { return D.coeff(i, j); };
  std::vector<GaussRat> values;
  auto record = [&](const std::string& name, const GaussRat& num, const GaussRat& den) {
    if (den.is_zero()) return;
    out.formulas.push_back(name);
    values.push_back(num / den);
  };

  record("pluecker_a12", a(2, 0) * a(1, 1) - a(2, 1) * a(1, 0), a(1, 2));
  record("pluecker_a02", a(2, 0) * a(0, 1) - a(2, 1) * a(0, 0), a(0, 2));
  record("a3_origin",
         GaussRat(4) * a(0, 0) * a(0, 1) * a(2, 0) - GaussRat(3) * a(0, 0) * a(0, 0) * a(2, 1) -
             a(0, 1) * a(1, 0) * a(1, 0) + a(0, 0) * a(1, 0) * a(1, 1),
         a(0, 1) * a(0, 1));
  record("quotient_a21", a(2, 0) * a(2, 0), a(2, 1));

  const bool v11_0_1 =
      a(1, 2).is_zero() && a(0, 2).is_zero() &&
      rank_at_most_one({{a(2, 1), a(2, 0)}, {a(1, 1), a(1, 0)}, {a(0, 1), a(0, 0)}});
  if (v11_0_1) {
    record("v11_0_1_a11", a(1, 0) * a(2, 0), a(1, 1));
    record("v11_0_1_a01", a(0, 0) * a(2, 0), a(0, 1));
  }
  const GaussRat det = a(0, 2) * (GaussRat(4) * a(0, 0) * a(2, 0) - a(1, 0) * a(1, 0)) - a(0, 1) * a(0, 1) * a(2, 0);
  const bool v0_11_0 = a(2, 1).is_zero() && a(1, 2).is_zero() && a(1, 1).is_zero() && det.is_zero();
  if (v0_11_0) {
    record("v0_11_0_a02", a(2, 0) * a(0, 1), a(0, 2));
    record("v0_11_0_a01", GaussRat(4) * a(0, 0) * a(2, 0) - a(1, 0) * a(1, 0), a(0, 1));
  }

  const Derivs d(D);
  for (const auto& z0 : probe_values()) {
    bool found = false;
    for (const auto& w0 : probe_values()) {
      const GaussRat dw = d.Dw.eval(z0, w0);
      if (dw.is_zero()) continue;
      const GaussRat A_at = a3_rhs(d).eval(z0, w0) / (dw * dw);
      record("a3_generic", A_at - a(2, 1) * w0 * w0 - GaussRat(2) * a(2, 0) * w0, GaussRat(1));
      found = true;
      break;
    }
    if (found) break;
  }

  if (values.empty()) return out;  // cannot happen when D_w != 0
  const bool agree = std::all_of(values.begin(), values.end(), [&](const GaussRat& v) { return v == values[0]; });
  if (!agree) return out;

  // The candidate must satisfy the A3 identity exactly.
  const BiPoly A = BiPoly::monomial(a(2, 1), 0, 2) + BiPoly::monomial(GaussRat(2) * a(2, 0), 0, 1) + BiPoly(values[0]);
  if (A * d.Dw * d.Dw != a3_rhs(d)) return out;
  out.kind = SlotLift::Kind::unique;
  out.value = values[0];
  return out;
}

SlotLift lift_slot(const BiPoly& D) {
  if (!D.depends_on(Var::w)) {
    SlotLift free;
    free.kind = SlotLift::Kind::free;
    return free;
  }
  return lift_a30(D);
}

}  // namespace

bool is_degenerate(const TernaryTriple& t) {
  if (!t.D.is_zero()) return false;
  const bool a = !t.A.is_zero() && t.A.is_constant();
  const bool b = !t.B.is_zero() && t.B.is_constant();
  return a != b && (t.A.is_zero() || t.B.is_zero());
}

SicReport sic_residuals(const TernaryTriple& t) {
  const PlueckerPoint p = to_point(t);
  const Derivs d(t.D);
  const BiPoly& A = t.A;
  const BiPoly& B = t.B;
  const GaussRat two(2), three(3);
  SicReport r;
  r.cubic_residuals[0] = three * (A * d.D * d.Dww) - two * (A * B * d.Dz) - two * (A * d.Dw * d.Dw) + d.D * d.Dw * d.Dzz;
  r.cubic_residuals[1] = three * (B * d.D * d.Dzz) - two * (A * B * d.Dw) - two * (B * d.Dz * d.Dz) + d.D * d.Dz * d.Dww;
  r.quartic_residual = two * (d.D * d.D * d.Dzz * d.Dww) - B * d.D * d.Dz * d.Dzz - A * d.D * d.Dw * d.Dww -
                       A * B * d.Dz * d.Dw + A * A * B * B;
  r.ab3_residuals[0] = A * d.Dw * d.Dw - a3_rhs(d);
  r.ab3_residuals[1] = B * d.Dz * d.Dz - b3_rhs(d);
  r.d3_residual = d3_poly(d);
  r.on_variety = on_grassmannian(p) && r.ab3_residuals[0].is_zero() && r.ab3_residuals[1].is_zero();
  r.degenerate = is_degenerate(t);
  return r;
}

SicReport sic_residuals(const PlueckerPoint& p) { return sic_residuals(extract(p)); }

bool on_variety(const PlueckerPoint& p) { return sic_residuals(p).on_variety; }

std::array<std::complex<double>, 3> ic_residuals(const TernaryTriple& t, std::complex<double> z0,
                                                  std::complex<double> w0) {
  using C = std::complex<double>;
  const C D = t.D.eval(z0, w0);
  if (std::abs(D) == 0.0) throw SingularSample("D vanishes at the sample point");
  const C Dz = diff(t.D, Var::z).eval(z0, w0);
  const C Dw = diff(t.D, Var::w).eval(z0, w0);
  const C A = t.A.eval(z0, w0), B = t.B.eval(z0, w0);
  const C Aw = diff(t.A, Var::w).eval(z0, w0), Bz = diff(t.B, Var::z).eval(z0, w0);
  const C c11 = -Dz / D, c12 = A / D, c21 = B / D, c22 = -Dw / D;
  const C c122 = (Aw * D - A * Dw) / (D * D);
  const C c211 = (Bz * D - B * Dz) / (D * D);
  return {
      3.0 * c21 * c122 - c11 * c211 - c22 * c12 * c21 - c21 * c11 * c11,
      3.0 * c12 * c211 - c22 * c122 - c11 * c21 * c12 - c12 * c22 * c22,
      2.0 * c122 * c211 - c11 * c21 * c122 - c22 * c12 * c211 + c12 * c12 * c21 * c21 - c11 * c22 * c12 * c21,
  };
}

std::array<BiPoly, 4> derive_d3_chain(const TernaryTriple& t) {
  const Derivs d(t.D);
  const GaussRat two(2);
  return {
      d3_poly(d),
      d.Dw * d.Dzz * d.Dzw - d.D * (d.Dzz * d.Dwwz + d.Dzw * d.Dzzw),
      d.Dz * d.Dww * d.Dzw - d.D * (d.Dww * d.Dzzw + d.Dzw * d.Dwwz),
      d.Dzz * d.Dzw * d.Dww - two * (d.D * d.Dzzw * d.Dwwz),
  };
}

LiftResult lift(const BiPoly& D) {
  point_from(D, 1, 0);  // shape check
  LiftResult r;
  if (D.is_zero()) {
    r.a30.kind = r.a03.kind = SlotLift::Kind::free;
    r.product_constraint = true;
    return r;
  }
  if (!d3_poly(Derivs(D)).is_zero()) throw NotReducible("D fails the D3 condition: " + D.to_string());
  r.a30 = lift_slot(D);
  r.a03 = lift_slot(D.swap_vars());
  // Constant D: A_z B_w = D_z D_w - D D_zw = 0 still couples the two free slots.
  r.product_constraint = r.a30.kind == SlotLift::Kind::free && r.a03.kind == SlotLift::Kind::free;
  return r;
}

std::string to_string(SlotLift::Kind k) {
  switch (k) {
    case SlotLift::Kind::unique:
      return "unique";
    case SlotLift::Kind::free:
      return "free";
    case SlotLift::Kind::inconsistent:
      return "inconsistent";
  }
  return "?";
}

}  // namespace supint
