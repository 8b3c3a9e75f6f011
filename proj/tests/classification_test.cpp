#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "supint/classification.hpp"
#include "supint/errors.hpp"
#include "supint/isometry.hpp"
#include "supint/sic.hpp"
#include "supint/solution_family.hpp"
#include "support.hpp"

using namespace supint;
using test::poly;

namespace {

PlueckerPoint point(const BiPoly& D, const BiPoly& A, const BiPoly& B) { return to_point({D, A, B}); }

// scalar * prod(form^mult) evaluated at a sample, using only the float coordinates.
std::complex<double> product_at(const LineArrangement& arr, std::complex<double> z, std::complex<double> w) {
  std::complex<double> v = arr.scalar.to_complex();
  for (const auto& f : arr.factors) {
    const auto& c = f.form.approx;
    v *= std::pow(c[0] * z + c[1] * w + c[2], f.multiplicity);
  }
  return v;
}

bool contains(const std::vector<Component>& cs, Component c) { return std::find(cs.begin(), cs.end(), c) != cs.end(); }

}  // namespace

TEST(ClassLabel, ParseAndPrint) {
  EXPECT_EQ(ClassLabel::parse(" ( 11 , 0,1 ) ").to_string(), "(11,0,1)");
  EXPECT_TRUE(ClassLabel::parse("V_0").degenerate);
  EXPECT_THROW(ClassLabel::parse("(3,0,0)"), ParseError);
  EXPECT_EQ(ClassLabel::parse("(2,0,1)").conjugate(), ClassLabel::parse("(1,0,2)"));
  EXPECT_EQ(known_labels().size(), 15u);
}

TEST(ClassLabel, LatticeIsAcyclicWithFourMaxima) {
  std::vector<ClassLabel> tops;
  for (const char* s : {"(1,1,1)", "(11,0,1)", "(1,0,11)", "(0,11,0)"})
    tops.push_back(ClassLabel::parse(s));
  for (const auto& t : tops) EXPECT_TRUE(parents(t).empty()) << t.to_string();
  for (const auto& c : known_labels()) {
    const auto anc = ancestors(c);
    EXPECT_EQ(std::count(anc.begin(), anc.end(), c), 0) << c.to_string();
    EXPECT_TRUE(std::any_of(tops.begin(), tops.end(), [&](const ClassLabel& t) { return is_below(c, t); }))
        << c.to_string();
    // conjugation is a lattice automorphism
    for (const auto& p : parents(c)) EXPECT_TRUE(is_below(c.conjugate(), p.conjugate()));
  }
}

TEST(FactorCubic, Examples) {
  const LineArrangement e16 = factor_cubic(poly({{1, 2, 1}, {1, 1, 2}}));
  ASSERT_EQ(e16.factors.size(), 3u);
  EXPECT_EQ(e16.factors[0].form.orbit, Orbit::z_only);
  EXPECT_EQ(e16.factors[1].form.orbit, Orbit::mixed);
  EXPECT_EQ(e16.factors[2].form.orbit, Orbit::w_only);
  EXPECT_EQ(e16.label(), ClassLabel::parse("(1,1,1)"));

  const LineArrangement sq = factor_cubic(poly({{1, 2, 0}}));
  ASSERT_EQ(sq.factors.size(), 1u);
  EXPECT_EQ(sq.factors[0].multiplicity, 2);

  // 2z^2 + 2w^2 = 2 (z + i w)(z - i w), split exactly.
  const LineArrangement c = factor_cubic(poly({{2, 2, 0}, {2, 0, 2}}));
  EXPECT_TRUE(c.exact);
  ASSERT_EQ(c.factors.size(), 2u);
  for (const auto& f : c.factors) {
    ASSERT_TRUE(f.form.exact);
    EXPECT_EQ(f.form.orbit, Orbit::mixed);
    EXPECT_EQ((*f.form.exact)[1] * (*f.form.exact)[1], GaussRat(-1) * (*f.form.exact)[0] * (*f.form.exact)[0]);
  }
  EXPECT_THROW(factor_cubic(BiPoly()), ZeroPolynomial);
  EXPECT_THROW(factor_cubic(poly({{1, 2, 1}, {1, 0, 0}})), NotReducible);
}

TEST(FactorCubic, IrrationalSplitIsCertified) {
  // z^2 - 2 w^2 needs sqrt 2.
  const BiPoly D = poly({{1, 2, 0}, {-2, 0, 2}});
  const LineArrangement arr = factor_cubic(D);
  EXPECT_FALSE(arr.exact);
  EXPECT_LT(arr.residual, 1e-10);
  EXPECT_EQ(arr.label(), ClassLabel::parse("(0,11,0)"));
}

TEST(FactorCubic, ReconstructsFamilyPolynomials) {
  std::mt19937_64 rng(51);
  for (const auto& label : family_labels())
    for (const auto& p : enumerate_family(label, 40, rng())) {
      const BiPoly D = extract(p).D;
      if (D.is_zero()) continue;
      const LineArrangement arr = factor_cubic(D);
      for (const auto& f : arr.factors) EXPECT_LE(f.multiplicity, 2);
      EXPECT_EQ(arr.degree(), D.total_degree());
      for (int k = 0; k < 5; ++k) {
        const auto z = test::random_sample(rng), w = test::random_sample(rng);
        const auto want = D.eval(z, w);
        EXPECT_LT(std::abs(product_at(arr, z, w) - want), 1e-9 * (1 + std::abs(want))) << D.to_string();
      }
    }
}

TEST(ClassOf, Examples) {
  EXPECT_EQ(class_of(point(poly({{1, 2, 0}, {-1, 0, 2}}), poly({{2, 0, 1}}), poly({{-2, 1, 0}}))),
            ClassLabel::parse("(0,11,0)"));
  const PlueckerPoint e20 = point(poly({{1, 1, 1}}), BiPoly(), BiPoly());
  EXPECT_EQ(class_of(e20), ClassLabel::parse("(1,0,1)"));
  EXPECT_EQ(e_label(e20), "E20");
  EXPECT_TRUE(class_of(point(BiPoly(), BiPoly(1), BiPoly())).degenerate);
  EXPECT_THROW(class_of(point(poly({{1, 1, 0}, {1, 0, 1}}), BiPoly(1), BiPoly(1))), NotOnVariety);
}

TEST(ClassOf, ConjugationReversesLabel) {
  std::mt19937_64 rng(52);
  for (const auto& label : family_labels())
    for (const auto& p : enumerate_family(label, 30, rng())) {
      const ClassLabel c = class_of(p);
      EXPECT_EQ(class_of(conjugate(p)), c.conjugate());
    }
}

TEST(ClassOf, FamiliesLandInTheirClassOrBelow) {
  std::mt19937_64 rng(53);
  for (const auto& label : family_labels()) {
    int exact = 0;
    for (const auto& p : enumerate_family(label, 200, rng())) {
      const ClassLabel c = class_of(p);
      EXPECT_TRUE(c.degenerate || is_below(c, label)) << label.to_string() << " -> " << c.to_string();
      exact += c == label;
    }
    EXPECT_GT(exact, 150) << label.to_string();
  }
}

TEST(InvariantPattern, Examples) {
  PlueckerPoint::Coords a;
  a[static_cast<int>(Coord::a21)] = 1;
  const InvariantPattern e17 = invariant_pattern(PlueckerPoint(a));
  for (Coord c : {Coord::a12, Coord::a02, Coord::a03})
    EXPECT_NE(std::find(e17.vanishing.begin(), e17.vanishing.end(), c), e17.vanishing.end());
  for (const auto& r : e17.relations) EXPECT_TRUE(r.holds) << r.name;
  EXPECT_NE(std::find(e17.matching_rows.begin(), e17.matching_rows.end(), ClassLabel::parse("(2,0,1)")),
            e17.matching_rows.end());

  const InvariantPattern e1 = invariant_pattern(point(poly({{1, 2, 0}, {-1, 0, 2}}), poly({{2, 0, 1}}), poly({{-2, 1, 0}})));
  EXPECT_NE(std::find(e1.matching_rows.begin(), e1.matching_rows.end(), ClassLabel::parse("(0,11,0)")),
            e1.matching_rows.end());

  std::mt19937_64 rng(54);
  const PlueckerPoint generic = sample_family(ClassLabel::parse("(1,1,1)"), rng);
  EXPECT_TRUE(invariant_pattern(generic).vanishing.empty());
}

TEST(InvariantPattern, ConsistentWithClass) {
  std::mt19937_64 rng(55);
  for (const auto& label : family_labels())
    for (const auto& p : enumerate_family(label, 20, rng())) {
      const ClassLabel c = class_of(p);
      if (c.degenerate) continue;
      const auto rows = invariant_pattern(p).matching_rows;
      EXPECT_NE(std::find(rows.begin(), rows.end(), c), rows.end()) << p.to_string() << " " << c.to_string();
    }
}

TEST(ComponentOf, Examples) {
  EXPECT_EQ(component_of(point(poly({{1, 2, 1}, {1, 1, 2}}), poly({{1, 0, 2}}), poly({{1, 2, 0}}))).components,
            std::vector<Component>{Component::v1_1_1});
  const ComponentReport e8 = component_of(point(poly({{1, 2, 0}}), poly({{2, 0, 1}}), BiPoly()));
  EXPECT_TRUE(contains(e8.components, Component::v11_0_0));
  EXPECT_TRUE(e8.singular_locus);
  const ComponentReport deg = component_of(point(BiPoly(), BiPoly(1), BiPoly()));
  EXPECT_EQ(deg.components, std::vector<Component>{Component::v11_0_0});
  const ComponentReport deg2 = component_of(point(BiPoly(), BiPoly(), BiPoly(1)));
  EXPECT_EQ(deg2.components, std::vector<Component>{Component::v0_0_11});
}

TEST(ComponentOf, FamiliesLieOnTheirComponent) {
  std::mt19937_64 rng(56);
  const std::vector<std::pair<std::string, Component>> fam = {
      {"(1,1,1)", Component::v1_1_1},   {"(11,0,1)", Component::v11_0_1}, {"(1,0,11)", Component::v1_0_11},
      {"(0,11,0)", Component::v0_11_0}, {"(11,0,0)", Component::v11_0_0}, {"(0,0,11)", Component::v0_0_11}};
  for (const auto& [name, comp] : fam)
    for (const auto& p : enumerate_family(ClassLabel::parse(name), 30, rng()))
      EXPECT_TRUE(contains(component_of(p).components, comp)) << name << " " << p.to_string();
}

TEST(RealForms, Examples) {
  PlueckerPoint::Coords a;
  a[static_cast<int>(Coord::a21)] = 1;
  const PlueckerPoint e17(a);
  EXPECT_EQ(conjugate(e17)[Coord::a12], GaussRat(1));
  EXPECT_EQ(class_of(conjugate(e17)), ClassLabel::parse("(1,0,2)"));

  const PlueckerPoint e1 = point(poly({{1, 2, 0}, {-1, 0, 2}}), poly({{2, 0, 1}}), poly({{-2, 1, 0}}));
  EXPECT_TRUE(real_form(e1, RealForm::minkowski));
  EXPECT_FALSE(real_form(e1, RealForm::euclidean));

  std::mt19937_64 rng(57);
  for (int k = 0; k < 50; ++k) {
    const PlueckerPoint p = test::random_point(rng);
    EXPECT_TRUE(conjugate(conjugate(p)).same_coords(p));
  }
}
