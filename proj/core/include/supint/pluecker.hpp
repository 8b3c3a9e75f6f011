#pragma once

#include <array>
#include <string>

#include "supint/gauss_rat.hpp"
#include "supint/killing.hpp"
#include "supint/poly.hpp"

namespace supint {

/// Coordinate slots in canonical order.
enum class Coord { a30, a20, a10, a00, a21, a11, a01, a12, a02, a03 };

inline constexpr std::array<Coord, 10> kCoords = {Coord::a30, Coord::a20, Coord::a10, Coord::a00, Coord::a21,
                                                 Coord::a11, Coord::a01, Coord::a12, Coord::a02, Coord::a03};

/// "a30", "a20", ...
std::string coord_name(Coord c);
/// (i, j) of a coordinate a_ij.
std::pair<int, int> coord_index(Coord c);
/// Position of a_ij in the canonical order, or -1 (for example a_22).
int coord_slot(int i, int j);

/// Homogeneous coordinates of a 2-plane of trace-free tensors.
class PlueckerPoint {
 public:
  using Coords = std::array<GaussRat, 10>;

  /// Throws InvalidPoint when every coordinate vanishes.
  explicit PlueckerPoint(Coords a);

  const Coords& coords() const { return a_; }
  const GaussRat& operator[](Coord c) const { return a_[static_cast<int>(c)]; }
  /// a_ij, with a_22 = 0 and zero for slots outside the coordinate set.
  GaussRat a(int i, int j) const;

  /// First nonzero coordinate scaled to 1.
  PlueckerPoint canonical() const;
  PlueckerPoint scaled(const GaussRat& s) const;

  /// Exact coordinate-wise equality.
  bool same_coords(const PlueckerPoint& o) const { return a_ == o.a_; }
  /// Projective equality.
  friend bool operator==(const PlueckerPoint& p, const PlueckerPoint& q);
  friend bool operator!=(const PlueckerPoint& p, const PlueckerPoint& q) { return !(p == q); }

  std::string to_string() const;

 private:
  Coords a_;
};

/// (D, A_z, B_w) with A_z = a21 w^2 + 2 a20 w + a30 and B_w = a12 z^2 + 2 a02 z + a03.
struct TernaryTriple {
  BiPoly D;
  BiPoly A;
  BiPoly B;
};

/// Rank-two skew matrix entries v1_i v2_j - v1_j v2_i as a point.
/// Throws DependentPair when the tensors are proportional.
PlueckerPoint wedge(const Sckt& t1, const Sckt& t2);

/// The 5x5 skew matrix of a point.
std::array<std::array<GaussRat, 5>, 5> skew_matrix(const PlueckerPoint& p);

/// Pfaffians of the principal 4x4 minors, the k-th omitting row/column k.
std::array<GaussRat, 5> pfaffians(const PlueckerPoint& p);
bool on_grassmannian(const PlueckerPoint& p);

TernaryTriple extract(const PlueckerPoint& p);

/// Inverse of extract. Throws InvalidPoint if D has a forbidden monomial,
/// A_z/B_w are inconsistent with D, or everything vanishes.
PlueckerPoint to_point(const TernaryTriple& t);
/// Point with the D-coefficients of `D` and the given a30, a03 slots.
PlueckerPoint point_from(const BiPoly& D, const GaussRat& a30, const GaussRat& a03);

/// Residuals of A_z B_w = D_z D_w - D D_zw and its four consequences.
std::array<BiPoly, 5> local_pluecker_residuals(const TernaryTriple& t);

}  // namespace supint
