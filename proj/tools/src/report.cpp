#include "supint_io/report.hpp"

#include <sstream>

#include "supint/classification.hpp"
#include "supint/errors.hpp"
#include "supint/potential.hpp"

namespace supint::io {

namespace {

// First base point off D = 0 from a fixed list.
std::pair<GaussRat, GaussRat> pick_base(const BiPoly& D) {
  static const std::array<std::pair<long, long>, 6> cand = {{{1, 3}, {2, 5}, {3, 7}, {5, 2}, {7, 11}, {13, 4}}};
  for (const auto& [a, b] : cand) {
    const GaussRat z0(a, b), w0(b, a + b);
    if (!D.eval(z0, w0).is_zero()) return {z0, w0};
  }
  throw SingularBase();
}

}  // namespace

ClassificationReport classify_point(const PlueckerPoint& p, const json& input, const ReportOptions& opt) {
  ClassificationReport r;
  r.input = input;
  const PlueckerPoint canon = p.canonical();
  r.point = to_json(canon);
  const SicReport sic = sic_residuals(canon);
  r.sic = to_json(sic);
  r.on_variety = sic.on_variety;
  r.euclidean = real_form(canon, RealForm::euclidean);
  r.minkowski = real_form(canon, RealForm::minkowski);
  if (!r.on_variety) return r;

  r.label = class_of(canon).to_string();
  r.e_label = e_label(canon);
  const TernaryTriple t = extract(canon);
  if (!t.D.is_zero()) {
    const LineArrangement arr = factor_cubic(t.D);
    r.scalar = arr.scalar.to_string();
    for (const auto& f : arr.factors)
      r.factors.push_back({f.form.to_string(), to_string(f.form.orbit), f.multiplicity, f.form.exact.has_value()});
  }
  const ComponentReport comp = component_of(canon);
  for (Component c : comp.components) r.components.push_back(to_string(c));
  r.singular_locus = comp.singular_locus;
  const InvariantPattern pat = invariant_pattern(canon);
  for (Coord c : pat.vanishing) r.vanishing.push_back(coord_name(c));
  for (const auto& rel : pat.relations) r.relations.emplace_back(rel.name, rel.holds);
  for (const auto& l : pat.matching_rows) r.matching_rows.push_back(l.to_string());

  if (opt.normal_form) {
    const NormalFormResult nf = normal_form(canon);
    NormalFormEntry e;
    e.e_label = nf.e_label;
    e.row = nf.row;
    e.deviation = nf.deviation;
    if (nf.status == NormalFormResult::Status::exact && nf.iso) {
      e.status = "exact";
      e.isometry = to_json(*nf.iso);
    } else {
      e.status = "irrational_orbit";
      e.isometry = to_json(nf.float_iso);
    }
    r.normal_form = e;
  }
  if (opt.fibre_order > 0 && !t.D.is_zero()) {
    const auto [z0, w0] = pick_base(t.D);
    const FibreBasis fb = solve_fibre_series(t, z0, w0, std::max(opt.fibre_order, 4));
    FibreEntry f{fb.order, z0.to_string(), w0.to_string(), fb.rank, fb.consistent(), 0};
    for (const auto& m : fb.mismatches) f.mismatches += static_cast<int>(m.size());
    r.fibre = f;
  }
  return r;
}

json to_json(const ClassificationReport& r) {
  json j = {{"version", r.version},       {"input", r.input},
            {"point", r.point},           {"sic", r.sic},
            {"on_variety", r.on_variety}, {"label", r.label},
            {"e_label", r.e_label},       {"scalar", r.scalar},
            {"components", r.components}, {"singular_locus", r.singular_locus},
            {"matching_rows", r.matching_rows},
            {"real_forms", {{"euclidean", r.euclidean}, {"minkowski", r.minkowski}}}};
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"form", f.form}, {"orbit", f.orbit}, {"multiplicity", f.multiplicity}, {"exact", f.exact}});
  j["factors"] = factors;
  json pattern = {{"vanishing", r.vanishing}, {"relations", json::array()}};
  for (const auto& [name, holds] : r.relations) pattern["relations"].push_back({{"name", name}, {"holds", holds}});
  j["invariant_pattern"] = pattern;
  if (r.normal_form) {
    const auto& n = *r.normal_form;
    j["normal_form"] = {{"status", n.status}, {"e_label", n.e_label}, {"row", n.row},
                        {"isometry", n.isometry}, {"deviation", n.deviation}};
  }
  if (r.fibre) {
    const auto& f = *r.fibre;
    j["fibre"] = {{"order", f.order}, {"base", {f.base_z, f.base_w}}, {"rank", f.rank},
                  {"consistent", f.consistent}, {"mismatches", f.mismatches}};
  }
  return j;
}

ClassificationReport report_from_json(const json& j) {
  try {
    ClassificationReport r;
    r.version = j.at("version").get<int>();
    r.input = j.at("input");
    r.point = j.at("point");
    r.sic = j.at("sic");
    r.on_variety = j.at("on_variety").get<bool>();
    r.label = j.at("label").get<std::string>();
    r.e_label = j.at("e_label").get<std::string>();
    r.scalar = j.at("scalar").get<std::string>();
    r.components = j.at("components").get<std::vector<std::string>>();
    r.singular_locus = j.at("singular_locus").get<bool>();
    r.matching_rows = j.at("matching_rows").get<std::vector<std::string>>();
    r.euclidean = j.at("real_forms").at("euclidean").get<bool>();
    r.minkowski = j.at("real_forms").at("minkowski").get<bool>();
    for (const auto& f : j.at("factors"))
      r.factors.push_back({f.at("form").get<std::string>(), f.at("orbit").get<std::string>(),
                           f.at("multiplicity").get<int>(), f.at("exact").get<bool>()});
    const auto& pat = j.at("invariant_pattern");
    r.vanishing = pat.at("vanishing").get<std::vector<std::string>>();
    for (const auto& rel : pat.at("relations"))
      r.relations.emplace_back(rel.at("name").get<std::string>(), rel.at("holds").get<bool>());
    if (j.contains("normal_form")) {
      const auto& n = j.at("normal_form");
      r.normal_form = NormalFormEntry{n.at("status").get<std::string>(), n.at("e_label").get<std::string>(),
                                      n.at("row").get<int>(), n.at("isometry"), n.at("deviation").get<std::string>()};
    }
    if (j.contains("fibre")) {
      const auto& f = j.at("fibre");
      r.fibre = FibreEntry{f.at("order").get<int>(),       f.at("base").at(0).get<std::string>(),
                           f.at("base").at(1).get<std::string>(), f.at("rank").get<int>(),
                           f.at("consistent").get<bool>(), f.at("mismatches").get<int>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "point       " << r.point.dump() << "\n";
  os << "on variety  " << (r.on_variety ? "yes" : "no") << "\n";
  if (!r.on_variety) {
    os << "residuals   " << r.sic.dump() << "\n";
    return os.str();
  }
  os << "class       " << r.label << "  " << r.e_label << "\n";
  if (!r.factors.empty()) {
    os << "D           " << r.scalar;
    for (const auto& f : r.factors) {
      os << " (" << f.form << ")";
      if (f.multiplicity > 1) os << "^" << f.multiplicity;
    }
    os << "\n";
  }
  os << "components ";
  for (const auto& c : r.components) os << " " << c;
  if (r.singular_locus) os << "  [singular locus]";
  os << "\n";
  os << "real forms  euclidean=" << r.euclidean << " minkowski=" << r.minkowski << "\n";
  if (r.normal_form) {
    os << "normal form " << r.normal_form->e_label << " (" << r.normal_form->status << ") via "
       << r.normal_form->isometry.dump() << "\n";
    if (!r.normal_form->deviation.empty()) os << "deviation   " << r.normal_form->deviation << "\n";
  }
  if (r.fibre)
    os << "fibre       order " << r.fibre->order << " at (" << r.fibre->base_z << ", " << r.fibre->base_w
       << "): rank " << r.fibre->rank << ", " << (r.fibre->consistent ? "consistent" : "inconsistent") << "\n";
  return os.str();
}

}  // namespace supint::io
