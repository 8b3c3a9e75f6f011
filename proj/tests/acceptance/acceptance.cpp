// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "supint/classification.hpp"
#include "supint/errors.hpp"
#include "supint/isometry.hpp"
#include "supint/potential.hpp"
#include "supint/potential_table.hpp"
#include "supint/sic.hpp"
#include "supint/solution_family.hpp"
#include "supint_io/commands.hpp"
#include "support.hpp"

using namespace supint;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
  }
  failures += !o.pass;
  std::printf("criterion %d: %s  %.3f s  %s\n", n, o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
  std::fflush(stdout);
}

std::string str(const std::ostringstream& os) { return os.str(); }

bool all_zero(const SicReport& r) {
  return r.cubic_residuals[0].is_zero() && r.cubic_residuals[1].is_zero() && r.quartic_residual.is_zero() &&
         r.ab3_residuals[0].is_zero() && r.ab3_residuals[1].is_zero();
}

bool chain_zero(const TernaryTriple& t) {
  for (const auto& r : derive_d3_chain(t))
    if (!r.is_zero()) return false;
  return true;
}

// The six components and the family that sweeps each of them.
const std::vector<std::pair<std::string, Component>> kComponents = {
    {"(1,1,1)", Component::v1_1_1},   {"(11,0,1)", Component::v11_0_1}, {"(1,0,11)", Component::v1_0_11},
    {"(0,11,0)", Component::v0_11_0}, {"(11,0,0)", Component::v11_0_0}, {"(0,0,11)", Component::v0_0_11}};

Outcome criterion1() {
  const auto rows = io::audit_normal_forms();
  std::ostringstream os;
  bool pass = rows.size() == 19;
  int flagged = 0;
  for (const auto& r : rows) {
    const bool expected_flag = r.e_label == "E2" || r.e_label == "E10";
    if (!r.matches || !r.on_variety || expected_flag != !r.flag.empty()) {
      pass = false;
      os << r.e_label << " " << r.label << " unexpected; ";
    }
    flagged += !r.flag.empty();
  }
  os << rows.size() << " rows, " << flagged << " flagged (E2 printed A_z = B_w = 1 fails; E10 rows need a shear)";
  return {pass, str(os)};
}

Outcome criterion2() {
  std::mt19937_64 rng(2024);
  int bad = 0, oracle_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const Sckt t1 = test::random_tensor(rng, k % 2), t2 = test::random_tensor(rng, k % 3 == 0);
    PlueckerPoint p = [&] {
      try {
        return wedge(t1, t2);
      } catch (const DependentPair&) {
        return wedge(t1, t2 + Sckt{1, 0, 0, 0, 0});
      }
    }();
    const auto m = skew_matrix(p);
    for (int r = 0; r < 5; ++r) bad += !pfaffians(p)[r].is_zero() || !test::pfaffian_oracle(m, r).is_zero();
    for (const auto& res : local_pluecker_residuals(extract(p))) bad += !res.is_zero();
    oracle_bad += std::abs(test::local_residual_oracle(p, test::random_sample(rng), test::random_sample(rng))) > 1e-8;
  }
  std::ostringstream os;
  os << "1000 pairs, " << bad << " nonzero exact residuals, " << oracle_bad << " numeric oracle failures";
  return {bad == 0 && oracle_bad == 0, str(os)};
}

Outcome criterion3() {
  std::mt19937_64 rng(7);
  int on_bad = 0, on_total = 0;
  for (const auto& label : family_labels())
    for (const auto& p : enumerate_family(label, 500, rng())) {
      ++on_total;
      const TernaryTriple t = extract(p);
      const SicReport r = sic_residuals(t);
      on_bad += !(r.on_variety && all_zero(r) && chain_zero(t));
    }
  // Off-variety points: perturbations the numeric oracle certifies as off.
  int off_total = 0, off_missed = 0, attempts = 0;
  while (off_total < 500 && attempts < 5000) {
    ++attempts;
    const auto& labels = family_labels();
    const PlueckerPoint q = perturb(sample_family(labels[attempts % labels.size()], rng), rng);
    const TernaryTriple t = extract(q);
    bool off = false;
    for (int s = 0; s < 4 && !off; ++s) {
      const auto z = test::random_sample(rng), w = test::random_sample(rng);
      if (std::abs(test::local_residual_oracle(q, z, w)) > 1e-8) off = true;
      if (std::abs(t.D.eval(z, w)) > 1e-3)
        for (const auto& x : ic_residuals(t, z, w)) off = off || std::abs(x) > 1e-6;
    }
    if (!off) continue;
    ++off_total;
    const SicReport r = sic_residuals(t);
    off_missed += on_grassmannian(q) && all_zero(r) && chain_zero(t);
  }
  std::ostringstream os;
  os << on_total << " family points (" << on_bad << " with a nonzero residual); " << off_total
     << " certified off-variety perturbations (" << off_missed << " with all residuals zero)";
  return {on_bad == 0 && off_total == 500 && off_missed == 0, str(os)};
}

Outcome criterion4() {
  std::mt19937_64 rng(4);
  int total = 0, bad = 0, floats = 0;
  double worst = 0;
  for (const auto& label : family_labels())
    for (const auto& p : enumerate_family(label, 300, rng())) {
      const BiPoly D = extract(p).D;
      if (D.is_zero()) continue;
      ++total;
      const LineArrangement arr = factor_cubic(D);
      for (const auto& f : arr.factors) bad += f.multiplicity > 2;
      if (!arr.exact) ++floats;
      // Coefficient-wise reconstruction, independent of the arrangement's own residual.
      for (const auto& [e, c] : expand(arr)) {
        const double d = std::abs(c - D.coeff(e.first, e.second).to_complex());
        worst = std::max(worst, d);
      }
      for (const auto& [e, c] : D.terms()) {
        bool seen = false;
        for (const auto& [e2, c2] : expand(arr)) seen = seen || e2 == e;
        bad += !seen;
      }
      if (arr.exact && arr.residual != 0) ++bad;
    }
  // Splits over Q(sqrt q): D = (z + s)^2 - q (w + t)^2 with the slots supplied by lift.
  for (int k = 0; k < 200; ++k) {
    const GaussRat s = test::random_rat(rng), t = test::random_rat(rng);
    const GaussRat q(2 + k % 5, 1 + k % 3);
    const BiPoly zs = BiPoly::z() + BiPoly(s), wt = BiPoly::w() + BiPoly(t);
    const BiPoly D = zs * zs - q * (wt * wt);
    const LiftResult l = lift(D);
    if (l.a30.kind != SlotLift::Kind::unique || l.a03.kind != SlotLift::Kind::unique) continue;
    if (!on_variety(point_from(D, l.a30.value, l.a03.value))) continue;
    ++total;
    const LineArrangement arr = factor_cubic(D);
    for (const auto& f : arr.factors) bad += f.multiplicity > 2;
    if (!arr.exact) ++floats;
    for (int n = 0; n < 3; ++n) {
      const auto z = test::random_sample(rng), w = test::random_sample(rng);
      std::complex<double> v = arr.scalar.to_complex();
      for (const auto& f : arr.factors) v *= std::pow(f.form.approx[0] * z + f.form.approx[1] * w + f.form.approx[2], f.multiplicity);
      worst = std::max(worst, std::abs(v - D.eval(z, w)));
    }
    worst = std::max(worst, arr.residual);
  }
  std::ostringstream os;
  os << total << " polynomials, " << floats << " float splits, worst coefficient residual " << worst;
  return {bad == 0 && worst < 1e-10, str(os)};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int bad = 0, total = 0;
  for (const auto& row : normal_form_table()) {
    const PlueckerPoint base = row.point();
    for (int k = 0; k < 50; ++k) {
      PlanarIsometry g;
      g.c = test::random_rat(rng, 5, 3, k % 2);
      g.d = test::random_rat(rng, 5, 3);
      do g.lambda = test::random_rat(rng, 4, 3, k % 3 == 0);
      while (g.lambda.is_zero());
      const PlueckerPoint p = act(g, base).scaled(GaussRat(k + 2, 3));
      ++total;
      const NormalFormResult nf = normal_form(p);
      bad += class_of(p) != row.label || e_label(p) != row.e_label || nf.e_label != row.e_label;
      if (nf.iso) bad += act(*nf.iso, p) != normal_form_table()[nf.row].point();
    }
  }
  std::ostringstream os;
  os << total << " orbit points over 19 normal forms, " << bad << " label changes";
  return {bad == 0, str(os)};
}

Outcome criterion6() {
  std::ostringstream os;
  bool pass = true;
  std::mt19937_64 rng(6);
  int broken = 0;
  for (const auto& row : potential_table()) {
    const GaussRat z0(3, 4), w0(2);
    const FibreBasis f = solve_fibre_series(row.rep, z0, w0, 8);
    if (f.rank != 4 || !f.consistent()) {
      pass = false;
      os << row.e_label << " rank " << f.rank << "; ";
    }
    // Off-variety perturbation of D with the same A, B.
    for (int attempt = 0; attempt < 20; ++attempt) {
      TernaryTriple t = row.rep;
      t.D += BiPoly::monomial(test::random_rat(rng) + GaussRat(1, 7), attempt % 2, (attempt / 2) % 2);
      if (on_variety(to_point(t)) || t.D.eval(z0, w0).is_zero()) continue;
      const FibreBasis g = solve_fibre_series(t, z0, w0, 8);
      bool at22 = false;
      for (const auto& m : g.mismatches)
        for (const auto& x : m) at22 = at22 || (x.i == 2 && x.j == 2);
      broken += at22;
      if (!at22) {
        pass = false;
        os << row.e_label << " perturbation kept v22; ";
      }
      break;
    }
  }
  os << potential_table().size() << " representatives at order 8, " << broken << " perturbations break v22";
  return {pass && broken == static_cast<int>(potential_table().size()), str(os)};
}

Outcome criterion7() {
  const auto entries = io::audit_potentials(1e-9, 7);
  std::ostringstream os;
  bool pass = entries.size() == 36;
  double worst = 0;
  bool e2_flag = false;
  for (const auto& e : entries) {
    worst = std::max(worst, e.prolongation);
    if (!e.passes) {
      pass = false;
      os << e.e_label << " " << e.printed << " fails; ";
    }
    e2_flag = e2_flag || (e.e_label == "E2" && !e.flag.empty());
  }
  // The worked identities on their own.
  const TernaryTriple e1{test::poly({{1, 2, 0}, {-1, 0, 2}}), test::poly({{2, 0, 1}}), test::poly({{-2, 1, 0}})};
  const auto samples = potential_table().front().samples(30, 9);
  const double zw = prolongation_residual(e1, Expr::parse("(prod z w)"), samples);
  const double x2 = prolongation_residual(e1, Expr::parse("(pow x -2)"), samples);
  const TernaryTriple e16{test::poly({{1, 2, 1}, {1, 1, 2}}), test::poly({{1, 0, 2}}), test::poly({{1, 2, 0}})};
  const double sq = prolongation_residual(e16, Expr::parse("(pow (prod z w) -1/2)"), samples);
  pass = pass && zw < 1e-9 && x2 < 1e-9 && sq < 1e-9 && e2_flag;
  os << entries.size() << " potentials, worst residual " << worst << "; E1 zw " << zw << ", 1/x^2 " << x2
     << "; E16 1/sqrt(zw) " << sq << "; E2 verified as x^2 - 4y^2 (deviation reported)";
  return {pass, str(os)};
}

Outcome criterion8() {
  const Sckt t1{1, 0, 0, 0, 1}, t2{0, 0, 1, 0, 0};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> re_z(0.5, 1.0), re_w(1.5, 2.5), im(-0.3, 0.3), p(-1, 1);
  std::vector<PhasePoint> pts;
  for (int k = 0; k < 50; ++k)
    pts.push_back({{re_z(rng), im(rng)}, {re_w(rng), im(rng)}, {p(rng), p(rng)}, {p(rng), p(rng)}});
  const PoissonReport r = poisson_verify(t1, t2, Expr::parse("(prod z w)"), pts);
  const bool killing = killing_residual(to_killing(t1)).is_zero() && killing_residual(to_killing(t2)).is_zero();
  std::ostringstream os;
  os << "max |{F, H}| = " << r.max() << ", cubic parts " << (r.cubic_zero[0] && r.cubic_zero[1] ? "zero" : "NONZERO");
  return {r.max() < 1e-8 && r.cubic_zero[0] && r.cubic_zero[1] && killing, str(os)};
}

Outcome criterion9() {
  std::mt19937_64 rng(9);
  int bad = 0, total = 0, free_hits = 0;
  for (const auto& [name, comp] : kComponents) {
    const ClassLabel label = ClassLabel::parse(name);
    const bool z_pure = comp == Component::v11_0_0, w_pure = comp == Component::v0_0_11;
    for (const auto& p : enumerate_family(label, 500, rng())) {
      const TernaryTriple t = extract(p);
      if (t.D.is_zero()) continue;
      ++total;
      const LiftResult l = lift(t.D);
      for (const auto* s : {&l.a30, &l.a03}) bad += s->kind == SlotLift::Kind::inconsistent;
      if (l.a30.kind == SlotLift::Kind::unique) bad += l.a30.value != p[Coord::a30];
      if (l.a03.kind == SlotLift::Kind::unique) bad += l.a03.value != p[Coord::a03];
      if (z_pure) {
        bad += l.a30.kind != SlotLift::Kind::free;
        free_hits += l.a30.kind == SlotLift::Kind::free;
      }
      if (w_pure) {
        bad += l.a03.kind != SlotLift::Kind::free;
        free_hits += l.a03.kind == SlotLift::Kind::free;
      }
    }
  }
  // The degenerate points, one on each pure component.
  const PlueckerPoint da = to_point({BiPoly(), BiPoly(1), BiPoly()});
  const PlueckerPoint db = to_point({BiPoly(), BiPoly(), BiPoly(1)});
  const bool degen = sic_residuals(da).degenerate && sic_residuals(db).degenerate && class_of(da).degenerate &&
                     class_of(db).degenerate &&
                     component_of(da).components == std::vector<Component>{Component::v11_0_0} &&
                     component_of(db).components == std::vector<Component>{Component::v0_0_11};
  std::ostringstream os;
  os << total << " points, " << bad << " incoherent lifts, " << free_hits << " free-parameter slots on pure components, "
     << "degenerate points " << (degen ? "assigned to V_(11,0,0) and V_(0,0,11)" : "MISASSIGNED");
  return {bad == 0 && degen && free_hits > 0, str(os)};
}

}  // namespace

int main() {
  report(1, 1, criterion1);
  report(2, 5, criterion2);
  report(3, 10, criterion3);
  report(4, 0, criterion4);
  report(5, 10, criterion5);
  report(6, 0, criterion6);
  report(7, 30, criterion7);
  report(8, 0, criterion8);
  report(9, 0, criterion9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
