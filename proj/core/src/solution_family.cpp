#include "supint/solution_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace supint {

namespace {

GaussRat random_rat(std::mt19937_64& rng, const FamilyOptions& opt, bool nonzero) {
  std::uniform_int_distribution<long> num(-opt.max_num, opt.max_num), den(1, opt.max_den);
  for (;;) {
    GaussRat x(num(rng), den(rng));
    if (opt.gaussian) x += GaussRat(num(rng), den(rng)) * GaussRat::i();
    if (!nonzero || !x.is_zero()) return x;
  }
}

BiPoly lin(const GaussRat& a, const GaussRat& b, const GaussRat& c) {
  return a * BiPoly::z() + b * BiPoly::w() + BiPoly(c);
}

TernaryTriple family_111(std::mt19937_64& rng, const FamilyOptions& o) {
  // (a1 z + c1)(a2 z + b2 w + c2)(b3 w + c3) with the collinearity determinant solved for c2.
  const GaussRat a1 = random_rat(rng, o, true), c1 = random_rat(rng, o, false);
  const GaussRat a2 = random_rat(rng, o, true), b2 = random_rat(rng, o, true);
  const GaussRat b3 = random_rat(rng, o, true), c3 = random_rat(rng, o, false);
  const GaussRat c2 = (a1 * b2 * c3 + c1 * a2 * b3) / (a1 * b3);
  const BiPoly f1 = lin(a1, 0, c1), f3 = lin(0, b3, c3);
  return {f1 * lin(a2, b2, c2) * f3, (a1 * a2 / b3) * f3 * f3, (b2 * b3 / a1) * f1 * f1};
}

TernaryTriple family_010(std::mt19937_64& rng, const FamilyOptions& o) {
  const GaussRat a2 = random_rat(rng, o, true), b2 = random_rat(rng, o, true), c2 = random_rat(rng, o, false);
  return {lin(a2, b2, c2), BiPoly(-a2 * a2 / b2), BiPoly(-b2 * b2 / a2)};
}

TernaryTriple family_1101(std::mt19937_64& rng, const FamilyOptions& o) {
  const GaussRat a1 = random_rat(rng, o, true), c1 = random_rat(rng, o, false);
  const GaussRat a2 = random_rat(rng, o, true), c2 = random_rat(rng, o, false);
  const GaussRat b3 = random_rat(rng, o, true), c3 = random_rat(rng, o, false);
  const BiPoly f3 = lin(0, b3, c3);
  return {lin(a1, 0, c1) * lin(a2, 0, c2) * f3, (a1 * a2 / b3) * f3 * f3, BiPoly()};
}

TernaryTriple family_0110(std::mt19937_64& rng, const FamilyOptions& o) {
  // b3 fixed by a1 b3 + b1 a3 = 0.
  const GaussRat a1 = random_rat(rng, o, true), b1 = random_rat(rng, o, true), c1 = random_rat(rng, o, false);
  const GaussRat a3 = random_rat(rng, o, true), c3 = random_rat(rng, o, false);
  const GaussRat b3 = -b1 * a3 / a1;
  const GaussRat two(2);
  return {lin(a1, b1, c1) * lin(a3, b3, c3), (a1 * a3) * lin(0, two, c3 / b3 + c1 / b1),
          (b1 * b3) * lin(two, 0, c3 / a3 + c1 / a1)};
}

TernaryTriple family_1100(std::mt19937_64& rng, const FamilyOptions& o) {
  const GaussRat a1 = random_rat(rng, o, true), c1 = random_rat(rng, o, false);
  const GaussRat a2 = random_rat(rng, o, true), c2 = random_rat(rng, o, false);
  const GaussRat a30 = random_rat(rng, o, false);
  return {lin(a1, 0, c1) * lin(a2, 0, c2), lin(0, GaussRat(2) * a1 * a2, a30), BiPoly()};
}

}  // namespace

const std::vector<ClassLabel>& family_labels() {
  static const std::vector<ClassLabel> labels = [] {
    std::vector<ClassLabel> out;
    for (const char* s : {"(1,1,1)", "(0,1,0)", "(11,0,1)", "(0,11,0)", "(11,0,0)"}) {
      const ClassLabel c = ClassLabel::parse(s);
      out.push_back(c);
      if (c.conjugate() != c) out.push_back(c.conjugate());
    }
    return out;
  }();
  return labels;
}

bool has_family(const ClassLabel& label) {
  const auto& ls = family_labels();
  return std::find(ls.begin(), ls.end(), label) != ls.end();
}

PlueckerPoint sample_family(const ClassLabel& label, std::mt19937_64& rng, const FamilyOptions& opt) {
  if (!has_family(label)) throw std::invalid_argument("no parametrized family for class " + label.to_string());
  ClassLabel base = label;
  bool conj = false;
  // Families are written for the z-heavy side; the others are conjugates.
  if (label.m[0] < label.m[2]) {
    base = label.conjugate();
    conj = true;
  }
  TernaryTriple t;
  if (base == ClassLabel::parse("(1,1,1)"))
    t = family_111(rng, opt);
  else if (base == ClassLabel::parse("(0,1,0)"))
    t = family_010(rng, opt);
  else if (base == ClassLabel::parse("(11,0,1)"))
    t = family_1101(rng, opt);
  else if (base == ClassLabel::parse("(0,11,0)"))
    t = family_0110(rng, opt);
  else
    t = family_1100(rng, opt);
  const PlueckerPoint p = to_point(t);
  return conj ? conjugate(p) : p;
}

std::vector<PlueckerPoint> enumerate_family(const ClassLabel& label, int count, unsigned long seed,
                                            const FamilyOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<PlueckerPoint> out;
  out.reserve(std::max(count, 0));
  for (int k = 0; k < count; ++k) out.push_back(sample_family(label, rng, opt));
  return out;
}

PlueckerPoint perturb(const PlueckerPoint& p, std::mt19937_64& rng) {
  static constexpr std::array<Coord, 8> kD = {Coord::a20, Coord::a10, Coord::a00, Coord::a21,
                                              Coord::a11, Coord::a01, Coord::a12, Coord::a02};
  std::uniform_int_distribution<int> slot(0, 7);
  auto a = p.coords();
  a[static_cast<int>(kD[slot(rng)])] += random_rat(rng, FamilyOptions{}, true);
  return PlueckerPoint(a);
}

}  // namespace supint
