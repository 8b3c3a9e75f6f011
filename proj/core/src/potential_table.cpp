#include "supint/potential_table.hpp"

#include <random>

namespace supint {

namespace {

BiPoly P(std::initializer_list<std::array<long, 3>> terms) {
  BiPoly p;
  for (const auto& [c, i, j] : terms) p += BiPoly::monomial(GaussRat(c), static_cast<int>(i), static_cast<int>(j));
  return p;
}

TablePotential T(std::string printed, std::string_view prefix, std::string deviation = "",
                 std::string_view printed_prefix = "") {
  std::optional<Expr> printed_expr;
  if (!printed_prefix.empty()) printed_expr = Expr::parse(printed_prefix);
  return {std::move(printed), Expr::parse(prefix), std::move(deviation), std::move(printed_expr)};
}

}  // namespace

std::vector<Sample> PotentialRow::samples(int n, unsigned seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  auto draw = [&](std::complex<double> lo, std::complex<double> hi) {
    return std::complex<double>(lo.real() + u(rng) * (hi.real() - lo.real()),
                                lo.imag() + u(rng) * (hi.imag() - lo.imag()));
  };
  std::vector<Sample> out;
  for (int k = 0; k < n; ++k) {
    const auto z = draw(z_lo, z_hi);
    out.push_back({z, draw(w_lo, w_hi)});
  }
  return out;
}

const std::vector<PotentialRow>& potential_table() {
  static const std::vector<PotentialRow> rows = [] {
    auto C = ClassLabel::parse;
    const BiPoly zero;
    // Re z in [1/2, 1], Re w in [3/2, 5/2]: clear of z = w, w = 1 and the principal-branch cuts.
    const std::complex<double> zl(0.5, -0.3), zh(1.0, 0.3), wl(1.5, -0.3), wh(2.5, 0.3);
    std::vector<PotentialRow> r = {
        {C("(1,1,1)"), "E16", {P({{1, 2, 1}, {-1, 1, 2}}), P({{1, 0, 2}}), P({{-1, 2, 0}})},
         {T("1/sqrt(zw)", "(pow (prod z w) -1/2)"),
          T("1/sqrt(zw) 1/(sqrt z + sqrt w)^2",
            "(prod (pow (prod z w) -1/2) (pow (sum (pow z 1/2) (pow w 1/2)) -2))"),
          T("1/sqrt(zw) 1/(sqrt z - sqrt w)^2",
            "(prod (pow (prod z w) -1/2) (pow (sum (pow z 1/2) (prod -1 (pow w 1/2))) -2))")},
         "shear by lambda = i of the normal form D = zw(z + w); on the normal form itself only 1/sqrt(zw) "
         "solves the prolongation system",
         zl, zh, wl, wh},
        {C("(11,0,1)"), "E19", {P({{1, 1, 2}, {-1, 1, 0}}), zero, P({{1, 2, 0}})},
         {T("w/sqrt((w+1)(w-1))", "(prod w (pow (prod (aff 0 1 1) (aff 0 1 -1)) -1/2))"),
          T("1/sqrt(z(w+1))", "(pow (prod z (aff 0 1 1)) -1/2)"),
          T("1/sqrt(z(w-1))", "(pow (prod z (aff 0 1 -1)) -1/2)")},
         "conjugate class (1,0,11): D = z(w - 1)(w + 1), shifted normal form with the roots at w = -1, 1",
         zl, zh, wl, wh},
        {C("(2,0,1)"), "E17", {P({{1, 1, 2}}), zero, P({{1, 2, 0}})},
         {T("1/sqrt(zw)", "(pow (prod z w) -1/2)"), T("1/(w sqrt(zw))", "(prod (pow w -1) (pow (prod z w) -1/2))"),
          T("1/w^2", "(pow w -2)")},
         "conjugate normal form (1,0,2)", zl, zh, wl, wh},
        {C("(0,11,0)"), "E1", {P({{1, 2, 0}, {-1, 0, 2}}), P({{2, 0, 1}}), P({{-2, 1, 0}})},
         {T("zw", "(prod z w)"), T("1/x^2", "(pow x -2)"), T("1/y^2", "(pow y -2)")}, "normal form", zl, zh, wl,
         wh},
        {C("(11,0,0)"), "E7", {P({{1, 0, 2}, {-1, 0, 0}}), zero, P({{2, 1, 0}})},
         {T("zw", "(prod z w)"), T("w/sqrt(w^2-1)", "(prod w (pow (aff 0 1 -1) -1/2) (pow (aff 0 1 1) -1/2))"),
          T("(2zw^2-z)/sqrt(w^2-1)",
            "(prod (sum (prod 2 z (pow w 2)) (prod -1 z)) (pow (aff 0 1 -1) -1/2) (pow (aff 0 1 1) -1/2))")},
         "conjugate class (0,0,11): D = w^2 - 1, a03 = 0", zl, zh, wl, wh},
        {C("(2,0,0)"), "E8", {P({{1, 0, 2}}), zero, P({{2, 1, 0}})},
         {T("zw", "(prod z w)"), T("1/w^2", "(pow w -2)"), T("z/w^3", "(prod z (pow w -3))")},
         "conjugate normal form (0,0,2)", zl, zh, wl, wh},
        {C("(1,0,1)"), "E20", {P({{1, 1, 1}}), zero, zero},
         {T("1/sqrt(zw)", "(pow (prod z w) -1/2)"), T("1/sqrt z", "(pow z -1/2)"), T("1/sqrt w", "(pow w -1/2)")},
         "normal form", zl, zh, wl, wh},
        {C("(0,1,0)"), "E2", {P({{1, 1, 0}, {1, 0, 1}}), BiPoly(-1), BiPoly(-1)},
         {T("x^2+4y^2", "(sum (pow x 2) (prod -4 (pow y 2)))",
            "printed x^2 + 4y^2 does not solve the prolongation system; x^2 - 4y^2 is verified instead",
            "(sum (pow x 2) (prod 4 (pow y 2)))"),
          T("1/x^2", "(pow x -2)"), T("y", "y")},
         "corrected normal form A_z = B_w = -1", zl, zh, wl, wh},
        {C("(1,0,0)"), "E11", {P({{1, 0, 1}}), zero, zero},
         {T("z/sqrt w", "(prod z (pow w -1/2))"), T("1/sqrt w", "(pow w -1/2)"), T("z", "z")},
         "conjugate normal form (0,0,1) with a03 = 0", zl, zh, wl, wh},
        {C("(1,0,0)"), "E9", {P({{1, 0, 1}}), zero, BiPoly(1)},
         {T("1/sqrt w", "(pow w -1/2)"), T("x", "x"), T("(z+3w)/sqrt w", "(prod (aff 1 3 0) (pow w -1/2))")},
         "conjugate normal form (0,0,1) with a03 = 1", zl, zh, wl, wh},
        {C("(0,0,0)"), "E3", {BiPoly(1), zero, zero},
         {T("zw", "(prod z w)"), T("z", "z"), T("w", "w")}, "normal form", zl, zh, wl, wh},
        {C("(0,0,0)"), "E10", {BiPoly(1), zero, BiPoly(GaussRat(4, 3))},
         {T("w^3+3zw", "(sum (pow w 3) (prod 3 z w))"), T("w^2+z", "(sum (pow w 2) z)"), T("w", "w")},
         "a03 = 4/3; a shear with lambda^3 = 4/3 reaches the projective normal form (1, 0, 1)", zl, zh, wl, wh},
    };
    return r;
  }();
  return rows;
}

}  // namespace supint
