#include <gtest/gtest.h>

#include <random>

#include "supint/errors.hpp"
#include "supint/expression.hpp"
#include "support.hpp"

using namespace supint;
using cd = std::complex<double>;

namespace {

// Central difference of order 4 in one variable.
cd fd(const Expr& e, Var v, cd z, cd w, double h = 1e-4) {
  auto f = [&](double s) { return v == Var::z ? e.eval(z + s, w) : e.eval(z, w + s); };
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12 * h);
}

const std::vector<std::string> kSamples = {
    "(pow (prod z w) -1/2)",
    "(prod (pow (prod z w) -1/2) (pow (sum (pow z 1/2) (pow w 1/2)) -2))",
    "(prod (aff 1 3 0) (pow w -1/2))",
    "(sum (pow w 3) (prod 3 z w))",
    "(prod w (pow (prod (aff 0 1 1) (aff 0 1 -1)) -1/2))",
    "(sum (pow x 2) (prod -4 (pow y 2)))",
    "(pow (aff 2 -1 3/2) 5/3)",
};

}  // namespace

TEST(Expr, ParseAndPrintRoundTrip) {
  for (const auto& s : kSamples) {
    const Expr e = Expr::parse(s);
    const Expr back = Expr::parse(e.to_string());
    EXPECT_EQ(back.to_string(), e.to_string());
    EXPECT_LT(std::abs(back.eval({0.7, 0.1}, {1.9, -0.2}) - e.eval({0.7, 0.1}, {1.9, -0.2})), 1e-14);
  }
}

TEST(Expr, ParseErrors) {
  for (const char* bad : {"", "(pow z)", "(sum z", "(frob z w)", "(pow z 1/0)", "z w", "(aff 1 2)", "q"})
    EXPECT_THROW(Expr::parse(bad), ParseError) << bad;
}

TEST(Expr, Simplification) {
  EXPECT_TRUE(Expr::parse("(prod 0 z w)").is_zero());
  EXPECT_TRUE(Expr::parse("(sum 1 -1)").is_zero());
  EXPECT_TRUE(Expr::parse("(pow z 0)").is_one());
  EXPECT_EQ(Expr::parse("(prod 1 z)").kind(), Expr::Kind::z);
  EXPECT_EQ(Expr::parse("(sum (sum z w) 2)").args().size(), 3u);
  const Expr nested = pow(pow(Expr::z(), mpq_class(1, 2)), mpq_class(4));
  ASSERT_EQ(nested.kind(), Expr::Kind::power);
  EXPECT_EQ(nested.exponent(), mpq_class(2));
}

TEST(Expr, AtomsXY) {
  const Expr x = Expr::parse("x"), y = Expr::parse("y");
  EXPECT_EQ(x.eval(2.0, 3.0), cd(5));
  EXPECT_EQ(y.eval(2.0, 3.0), cd(-1));
}

TEST(Expr, EvaluationMatchesClosedForms) {
  const cd z(0.8, 0.2), w(2.1, -0.1);
  EXPECT_LT(std::abs(Expr::parse(kSamples[0]).eval(z, w) - 1.0 / std::sqrt(z * w)), 1e-15);
  EXPECT_LT(std::abs(Expr::parse(kSamples[3]).eval(z, w) - (w * w * w + 3.0 * z * w)), 1e-13);
  EXPECT_LT(std::abs(Expr::parse(kSamples[5]).eval(z, w) - ((z + w) * (z + w) - 4.0 * (z - w) * (z - w))), 1e-13);
}

TEST(Expr, SingularSamples) {
  EXPECT_THROW(Expr::parse("(pow z -1)").eval(0.0, 1.0), SingularSample);
  EXPECT_THROW(Expr::parse("(pow (aff 1 -1 0) -1/2)").eval(1.0, 1.0), SingularSample);
  EXPECT_NO_THROW(Expr::parse("(pow z 1/2)").eval(0.0, 1.0));
}

TEST(Expr, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (const auto& s : kSamples) {
    const Expr e = Expr::parse(s);
    for (int k = 0; k < 10; ++k) {
      const cd z(0.75 + u(rng), u(rng)), w(2.0 + u(rng), u(rng));
      for (Var v : {Var::z, Var::w}) {
        const cd exact = e.diff(v).eval(z, w);
        EXPECT_LT(std::abs(exact - fd(e, v, z, w)), 1e-7 * (1 + std::abs(exact))) << s;
        const cd second = e.diff(v, 2).eval(z, w);
        EXPECT_LT(std::abs(second - fd(e.diff(v), v, z, w)), 1e-7 * (1 + std::abs(second))) << s;
      }
      EXPECT_LT(std::abs(e.diff(Var::z).diff(Var::w).eval(z, w) - e.diff(Var::w).diff(Var::z).eval(z, w)), 1e-10);
    }
  }
}

TEST(Expr, DiffOfPolynomialAgreesWithBiPoly) {
  const BiPoly p = test::poly({{3, 2, 1}, {-1, 0, 2}, {5, 1, 0}});
  const Expr e = Expr::from_poly(p);
  for (Var v : {Var::z, Var::w}) {
    const cd z(0.3, 1.1), w(-0.4, 0.2);
    EXPECT_LT(std::abs(e.diff(v).eval(z, w) - diff(p, v).eval(z, w)), 1e-13);
  }
}

TEST(Expr, TaylorCoefficients) {
  // Reference values computed by symbolic differentiation.
  const ComplexSeries a = Expr::parse(kSamples[0]).taylor(1.0, 2.0, 6);
  EXPECT_NEAR(a.at(0, 0).real(), 0.70710678118654752, 1e-14);
  EXPECT_NEAR(a.at(1, 0).real(), -0.35355339059327376, 1e-14);
  EXPECT_NEAR(a.at(2, 1).real(), -0.066291260736238830, 1e-14);
  EXPECT_NEAR(a.at(3, 3).real(), 0.0086316745750310977, 1e-14);

  const Expr b = Expr::parse("(prod (aff 1 3 0) (pow w -1/2) (pow (sum (prod z w) 1) -3/2))");
  const ComplexSeries s = b.taylor(0.5, 1.5, 7);
  EXPECT_NEAR(s.at(0, 0).real(), 1.7634668567096218, 1e-13);
  EXPECT_NEAR(s.at(1, 1).real(), -0.76536860855832567, 1e-13);
  EXPECT_NEAR(s.at(2, 3).real(), 0.0051902675777098407, 1e-13);
  EXPECT_NEAR(s.at(4, 0).real(), 1.8566529697646128, 1e-12);
}

TEST(Expr, TaylorOfPolynomialIsExact) {
  const ComplexSeries s = Expr::parse("(prod z w)").taylor(1.0, 2.0, 4);
  EXPECT_EQ(s.at(0, 0), cd(2));
  EXPECT_EQ(s.at(1, 0), cd(2));
  EXPECT_EQ(s.at(0, 1), cd(1));
  EXPECT_EQ(s.at(1, 1), cd(1));
  EXPECT_EQ(s.at(2, 0), cd(0));
  EXPECT_EQ(s.at(2, 2), cd(0));
}

TEST(Expr, Operators) {
  const Expr z = Expr::z(), w = Expr::w();
  const Expr e = (z * w - z) / (w + 1) + -w;
  const cd z0(0.4, 0.3), w0(1.2, -0.5);
  EXPECT_LT(std::abs(e.eval(z0, w0) - ((z0 * w0 - z0) / (w0 + 1.0) - w0)), 1e-14);
  EXPECT_LT(std::abs(sqrt(z).eval(z0, w0) - std::sqrt(z0)), 1e-15);
}
