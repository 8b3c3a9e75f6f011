#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "supint/classification.hpp"
#include "supint/pluecker.hpp"

namespace supint {

/// Pullback by (z, w) -> (lambda z + c, w / lambda + d): a shear followed by a shift.
template <class T>
struct BasicIsometry {
  T c{0};
  T d{0};
  T lambda{1};
};

using PlanarIsometry = BasicIsometry<GaussRat>;
using FloatIsometry = BasicIsometry<std::complex<double>>;
using ComplexCoords = std::array<std::complex<double>, 10>;

PlanarIsometry identity_isometry();
/// act(compose(g, h), p) = act(g, act(h, p)).
PlanarIsometry compose(const PlanarIsometry& g, const PlanarIsometry& h);
PlanarIsometry inverse(const PlanarIsometry& g);
FloatIsometry to_float(const PlanarIsometry& g);

/// D -> D(lambda z + c, w/lambda + d), A -> lambda^3 A(w/lambda + d),
/// B -> lambda^-3 B(lambda z + c); a shear alone scales a_ij by lambda^(i-j).
PlueckerPoint act(const PlanarIsometry& g, const PlueckerPoint& p);
ComplexCoords act(const FloatIsometry& g, const ComplexCoords& p);

ComplexCoords to_complex(const PlueckerPoint& p);

/// One row of the normal-form table.
struct NormalFormRow {
  ClassLabel label;
  std::string e_label;
  BiPoly D;
  BiPoly A;
  BiPoly B;
  /// Values as printed in the table, when they differ from (A, B).
  std::optional<std::pair<BiPoly, BiPoly>> printed;
  std::string note;
  PlueckerPoint point() const;
};

/// The nineteen rows, in table order, with audited corrections applied.
const std::vector<NormalFormRow>& normal_form_table();

struct NormalFormResult {
  enum class Status { exact, irrational_orbit };
  Status status = Status::exact;
  std::optional<PlanarIsometry> iso;  // set when exact
  FloatIsometry float_iso;            // always set
  /// Index into normal_form_table(); -1 for degenerate points.
  int row = -1;
  ClassLabel label;
  std::string e_label;
  /// act(iso, p) = scale * row point (exact case).
  std::optional<GaussRat> scale;
  /// act(float_iso, p) / scale, close to the row point.
  ComplexCoords normal_float{};
  /// Set when the matched row deviates from the printed table.
  std::string deviation;
};

/// Reduces an on-variety point to its table row. Throws NotOnVariety.
NormalFormResult normal_form(const PlueckerPoint& p);

}  // namespace supint
