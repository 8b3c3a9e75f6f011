#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supint/pluecker.hpp"

namespace supint {

enum class Mult { none, one, two, one_one };

/// Multiplicities of the linear factors of D over the orbits
/// (z only, mixed, w only), or the degenerate tag.
struct ClassLabel {
  std::array<Mult, 3> m{Mult::none, Mult::none, Mult::none};
  bool degenerate = false;

  static ClassLabel of(Mult zm, Mult mixed, Mult wm) { return {{zm, mixed, wm}, false}; }
  static ClassLabel empty_set() { return {{}, true}; }
  /// Parses "(11,0,1)" (whitespace tolerant) or "V_0"/"V_empty". Throws ParseError.
  static ClassLabel parse(std::string_view text);

  ClassLabel conjugate() const { return degenerate ? *this : of(m[2], m[1], m[0]); }
  std::string to_string() const;

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.degenerate == b.degenerate && a.m == b.m;
  }
  friend bool operator!=(const ClassLabel& a, const ClassLabel& b) { return !(a == b); }
  friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
    if (a.degenerate != b.degenerate) return a.degenerate < b.degenerate;
    return a.m < b.m;
  }
};

/// The fifteen class labels of the normal-form table.
const std::vector<ClassLabel>& known_labels();
/// Direct parents in the inclusion lattice.
std::vector<ClassLabel> parents(const ClassLabel& c);
/// All strict ancestors.
std::vector<ClassLabel> ancestors(const ClassLabel& c);
/// a equals b or lies below it.
bool is_below(const ClassLabel& a, const ClassLabel& b);

enum class Orbit { z_only, mixed, w_only, constant };
std::string to_string(Orbit o);

/// a z + b w + c, exact when the split was rational over Q(i).
struct LinearForm {
  std::array<std::complex<double>, 3> approx{};
  std::optional<std::array<GaussRat, 3>> exact;
  Orbit orbit = Orbit::constant;

  static LinearForm from_exact(const GaussRat& a, const GaussRat& b, const GaussRat& c);
  static LinearForm from_float(std::complex<double> a, std::complex<double> b, std::complex<double> c, Orbit o);
  std::string to_string() const;
};

struct LineFactor {
  LinearForm form;
  int multiplicity = 1;
};

/// D = scalar * product of factors^multiplicity.
struct LineArrangement {
  std::vector<LineFactor> factors;
  GaussRat scalar;
  bool exact = true;
  /// Max coefficient deviation of the reconstructed product (0 when exact).
  double residual = 0.0;
  int degree() const;
  ClassLabel label() const;
};

/// Splits D into linear forms. Throws ZeroPolynomial for D = 0 and
/// NotReducible when the primitive part has no linear split.
LineArrangement factor_cubic(const BiPoly& D);

/// Coefficient-wise product of the arrangement, in floats.
std::vector<std::pair<std::pair<int, int>, std::complex<double>>> expand(const LineArrangement& arr);

/// Multiplicity class of D alone (no variety check).
ClassLabel class_of_polynomial(const BiPoly& D);
/// Throws NotOnVariety.
ClassLabel class_of(const TernaryTriple& t);
ClassLabel class_of(const PlueckerPoint& p);

/// Table label such as "E16"; "V_0" for degenerate points. Throws NotOnVariety.
std::string e_label(const PlueckerPoint& p);

struct InvariantRelation {
  std::string name;
  bool holds = false;
};

struct InvariantPattern {
  std::vector<Coord> vanishing;
  std::vector<InvariantRelation> relations;
  /// Rows of the relative-invariant table (and conjugates) whose pattern the point satisfies.
  std::vector<ClassLabel> matching_rows;
};

InvariantPattern invariant_pattern(const PlueckerPoint& p);

enum class Component { v1_1_1, v11_0_1, v11_0_0, v0_11_0, v1_0_11, v0_0_11 };
std::string to_string(Component c);

struct ComponentReport {
  std::vector<Component> components;
  /// D lies in D_(0,11,0) and in its singular locus D_(2,0,0) u D_(0,0,2).
  bool singular_locus = false;
};

/// Throws NotOnVariety.
ComponentReport component_of(const PlueckerPoint& p);

/// a_ij -> a_ji.
PlueckerPoint conjugate(const PlueckerPoint& p);

enum class RealForm { euclidean, minkowski };
/// Checked on the given representative: euclidean means a_ij = conj(a_ji),
/// minkowski means every a_ij is real.
bool real_form(const PlueckerPoint& p, RealForm which);

}  // namespace supint
