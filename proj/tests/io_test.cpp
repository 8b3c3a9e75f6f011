#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "supint/classification.hpp"
#include "supint/errors.hpp"
#include "supint/solution_family.hpp"
#include "supint_io/commands.hpp"
#include "supint_io/report.hpp"
#include "supint_io/svg.hpp"
#include "support.hpp"

using namespace supint;
using namespace supint::io;

namespace {

const char* kE1Pair = R"({"tensors": [{"A_zz": "1", "b_z": "0", "c": "0", "b_w": "0", "A_ww": "1"},
                                       {"A_zz": "0", "b_z": "0", "c": "1", "b_w": "0", "A_ww": "0"}]})";

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Captured run(F f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, RationalAndComplex) {
  EXPECT_EQ(to_json(GaussRat(3, 4)), json("3/4"));
  const GaussRat z = GaussRat(1, 2) + GaussRat(-2) * GaussRat::i();
  EXPECT_EQ(rat_from_json(to_json(z)), z);
  EXPECT_EQ(rat_from_json(json(5)), GaussRat(5));
  EXPECT_THROW(rat_from_json(json("3/0")), ParseError);
  EXPECT_THROW(parse_json("{not json"), ParseError);
}

TEST(Json, PointRoundTripIsByteStable) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 50; ++k) {
    const PlueckerPoint p = wedge(test::random_tensor(rng, true), test::random_tensor(rng, true)).canonical();
    const std::string once = to_json(p).dump();
    const PlueckerPoint back = point_from_json(parse_json(once));
    EXPECT_TRUE(back.same_coords(p));
    EXPECT_EQ(to_json(back).dump(), once);
  }
}

TEST(Json, PolyTensorIsometry) {
  const BiPoly p = test::poly({{3, 2, 1}, {-1, 0, 0}});
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  const Sckt t{1, GaussRat(1, 2), GaussRat::i(), 0, -3};
  EXPECT_EQ(tensor_from_json(to_json(t)), t);
  PlanarIsometry g;
  g.c = GaussRat(2, 3);
  g.lambda = GaussRat::i();
  const PlanarIsometry h = isometry_from_json(to_json(g));
  EXPECT_EQ(h.c, g.c);
  EXPECT_EQ(h.d, g.d);
  EXPECT_EQ(h.lambda, g.lambda);
}

TEST(Json, ReadPointForms) {
  const PlueckerPoint e1 = read_point(parse_json(kE1Pair));
  EXPECT_EQ(e1[Coord::a20], GaussRat(1));
  EXPECT_EQ(read_point(parse_json(R"({"D": {"2,0": "1", "0,2": "-1"}, "A": {"0,1": "2"}, "B": {"1,0": "-2"}})")), e1);
  EXPECT_EQ(read_point(parse_json(R"({"point": [0,"1",0,0,0,0,0,0,"-1",0]})")), e1);
  EXPECT_EQ(read_point(parse_json(R"([0,"1",0,0,0,0,0,0,"-1",0])")), e1);
}

TEST(Report, RoundTrip) {
  const PlueckerPoint p = to_point({test::poly({{1, 2, 1}, {1, 1, 2}}), test::poly({{1, 0, 2}}), test::poly({{1, 2, 0}})});
  const ClassificationReport r = classify_point(p, json::object(), {true, 6});
  EXPECT_EQ(r.label, "(1,1,1)");
  EXPECT_EQ(r.e_label, "E16");
  ASSERT_TRUE(r.fibre);
  EXPECT_EQ(r.fibre->rank, 4);
  EXPECT_EQ(report_from_json(to_json(r)), r);
  EXPECT_EQ(to_json(r)["version"], kReportVersion);
  EXPECT_NE(to_text(r).find("E16"), std::string::npos);
}

TEST(Svg, LineCounts) {
  const LineArrangement e16 = factor_cubic(test::poly({{1, 2, 1}, {1, 1, 2}}));
  EXPECT_EQ(count(arrangement_svg(e16, RealForm::minkowski, "E16"), "stroke=\"black\""), 3);
  const LineArrangement e8 = factor_cubic(test::poly({{1, 2, 0}}));
  EXPECT_EQ(count(arrangement_svg(e8, RealForm::minkowski, "E8"), "stroke=\"black\""), 2);
  // Euclidean slice of z = 0 is the single point x = y = 0.
  const LineArrangement z = factor_cubic(test::poly({{1, 1, 0}}));
  const std::string s = arrangement_svg(z, RealForm::euclidean, "z");
  EXPECT_EQ(count(s, "<circle"), 1);
  EXPECT_NE(s.find("isolated real point"), std::string::npos);
}

TEST(Commands, Wedge) {
  const GlobalOptions g;
  const Captured ok = run([&](auto& o, auto& e) { return cmd_wedge(g, kE1Pair, o, e); });
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(read_point(parse_json(ok.out))[Coord::a02], GaussRat(-1));
  const std::string same = R"({"tensors": [{"A_zz": "1", "b_z": "0", "c": "0", "b_w": "0", "A_ww": "1"},
                                            {"A_zz": "1", "b_z": "0", "c": "0", "b_w": "0", "A_ww": "1"}]})";
  const Captured dep = run([&](auto& o, auto& e) { return cmd_wedge(g, same, o, e); });
  EXPECT_EQ(dep.code, kDependentPair);
  EXPECT_NE(dep.err.find("dependent pair"), std::string::npos);
  const std::string bad = R"({"tensors": [{"A_zz": "3/0", "b_z": "0", "c": "0", "b_w": "0", "A_ww": "1"},
                                           {"A_zz": "1", "b_z": "0", "c": "1", "b_w": "0", "A_ww": "1"}]})";
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_wedge(g, bad, o, e); }).code, kParseError);
}

TEST(Commands, ClassifyExitCodes) {
  const GlobalOptions g;
  const ClassifyOptions opt;
  const Captured off = run([&](auto& o, auto& e) {
    return cmd_classify(g, {R"({"D": {"1,0": "1", "0,1": "1"}, "A": {"0,0": "1"}, "B": {"0,0": "1"}})"}, opt, o, e);
  });
  EXPECT_EQ(off.code, kNotOnVariety);
  EXPECT_NE(off.out.find("\"2\""), std::string::npos);
  const Captured deg = run([&](auto& o, auto& e) { return cmd_classify(g, {R"([0,0,0,0,0,0,0,0,0,1])"}, opt, o, e); });
  EXPECT_EQ(deg.code, kOk);
  EXPECT_EQ(parse_json(deg.out)["label"], "V_0");
}

TEST(Commands, ClassifyBatchInParallel) {
  GlobalOptions g;
  g.jobs = 3;
  std::vector<std::string> inputs;
  for (const auto& p : enumerate_family(ClassLabel::parse("(0,11,0)"), 6, 9)) inputs.push_back(to_json(p).dump());
  const Captured r = run([&](auto& o, auto& e) { return cmd_classify(g, inputs, {}, o, e); });
  EXPECT_EQ(r.code, kOk);
  const json reports = parse_json(r.out);
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& rep : reports) EXPECT_EQ(rep["label"], "(0,11,0)");
}

TEST(Commands, EnumerateRoundTrip) {
  GlobalOptions g;
  g.seed = 12;
  const Captured r = run([&](auto& o, auto& e) { return cmd_enumerate(g, "(0,11,0)", 5, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("seed 12"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const json j = parse_json(line);
    const PlueckerPoint p = read_point(j["point"]);
    EXPECT_TRUE(p[Coord::a12].is_zero() && p[Coord::a21].is_zero() && p[Coord::a11].is_zero());
    const ClassLabel c = class_of(p);
    EXPECT_TRUE(c.degenerate || is_below(c, ClassLabel::parse("(0,11,0)")));
    ++n;
  }
  EXPECT_EQ(n, 5);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_enumerate(g, "(2,0,1)", 5, o, e); }).code, kParseError);
  const Captured none = run([&](auto& o, auto& e) { return cmd_enumerate(g, "(1,1,1)", 0, o, e); });
  EXPECT_EQ(none.code, kOk);
  EXPECT_TRUE(none.out.empty());
}

TEST(Commands, ChecksAndAudit) {
  const GlobalOptions g;
  FibreOptions f;
  f.potentials = {"(pow x -2)"};
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_fibre_check(g, kE1Pair, f, o, e); }).code, kOk);
  f.potentials = {"(pow z 2)"};
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_fibre_check(g, kE1Pair, f, o, e); }).code, kCheckFailed);

  PoissonOptions p;
  p.potential = "(prod z w)";
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_poisson_check(g, kE1Pair, p, o, e); }).code, kOk);
  p.potential = "(pow z 2)";
  EXPECT_EQ(run([&](auto& o, auto& e) { return cmd_poisson_check(g, kE1Pair, p, o, e); }).code, kCheckFailed);

  const Captured audit = run([&](auto& o, auto& e) { return cmd_tables_audit(g, o, e); });
  EXPECT_EQ(audit.code, kOk);
  EXPECT_NE(audit.out.find("E2"), std::string::npos);
}

TEST(Audit, NormalFormsFlagOnlyTheKnownRows) {
  const auto rows = audit_normal_forms();
  EXPECT_EQ(rows.size(), 19u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.matches) << r.e_label;
    EXPECT_TRUE(r.on_variety) << r.e_label;
    const bool known = r.e_label == "E2" || r.e_label == "E10";
    EXPECT_EQ(!r.flag.empty(), known) << r.e_label;
    if (r.e_label == "E2") EXPECT_FALSE(r.printed_on_variety);
  }
}

TEST(Audit, Potentials) {
  const auto entries = audit_potentials(1e-9, 3);
  EXPECT_EQ(entries.size(), 36u);
  int flagged = 0;
  for (const auto& e : entries) {
    EXPECT_TRUE(e.passes) << e.e_label << " " << e.printed;
    flagged += !e.flag.empty();
  }
  EXPECT_GE(flagged, 1);
}
