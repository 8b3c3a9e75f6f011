#include "supint_io/commands.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "supint/errors.hpp"
#include "supint/isometry.hpp"
#include "supint/potential.hpp"
#include "supint/potential_table.hpp"
#include "supint/sic.hpp"
#include "supint/solution_family.hpp"
#include "supint_io/report.hpp"
#include "supint_io/svg.hpp"

namespace supint::io {

namespace {

// Maps library errors to exit codes; the message goes to `err`.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DependentPair& e) {
    err << "error: " << e.what() << "\n";
    return kDependentPair;
  } catch (const NotOnVariety& e) {
    err << "error: " << e.what() << "\n";
    return kNotOnVariety;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

void emit(const GlobalOptions& g, std::ostream& out, const json& j, const std::string& text) {
  if (g.format == "text")
    out << text;
  else
    out << j.dump(2) << "\n";
}

std::pair<GaussRat, GaussRat> parse_base(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("base must be 'z0,w0'");
  return {GaussRat::parse(s.substr(0, comma)), GaussRat::parse(s.substr(comma + 1))};
}

std::pair<GaussRat, GaussRat> default_base(const BiPoly& D) {
  static const std::array<std::pair<long, long>, 6> cand = {{{1, 3}, {2, 5}, {3, 7}, {5, 2}, {7, 11}, {13, 4}}};
  for (const auto& [a, b] : cand) {
    const GaussRat z0(a, b), w0(b, a + b);
    if (!D.eval(z0, w0).is_zero()) return {z0, w0};
  }
  throw SingularBase();
}

std::vector<Sample> samples_near(const GaussRat& z0, const GaussRat& w0, int n, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  std::vector<Sample> out;
  for (int k = 0; k < n; ++k)
    out.push_back({z0.to_complex() + std::complex<double>(u(rng), u(rng)),
                   w0.to_complex() + std::complex<double>(u(rng), u(rng))});
  return out;
}

std::string with_index(const std::string& path, size_t k, size_t n) {
  if (n == 1) return path;
  const auto dot = path.rfind('.');
  const std::string suffix = "_" + std::to_string(k);
  return dot == std::string::npos ? path + suffix : path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

PlueckerPoint read_point(const json& j) {
  if (j.is_array()) return point_from_json(j);
  if (!j.is_object()) throw ParseError("expected a point array or an object");
  if (j.contains("point")) return point_from_json(j.at("point"));
  if (j.contains("tensors")) {
    const auto& ts = j.at("tensors");
    if (!ts.is_array() || ts.size() != 2) throw ParseError("\"tensors\" must hold two tensors");
    return wedge(tensor_from_json(ts[0]), tensor_from_json(ts[1]));
  }
  if (j.contains("t1") && j.contains("t2")) return wedge(tensor_from_json(j.at("t1")), tensor_from_json(j.at("t2")));
  if (j.contains("D")) {
    const TernaryTriple t{poly_from_json(j.at("D")), poly_from_json(j.value("A", json::object())),
                          poly_from_json(j.value("B", json::object()))};
    return to_point(t);
  }
  throw ParseError("no point, tensors or (D, A, B) in the input");
}

int cmd_wedge(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const json j = parse_json(input);
    Sckt t1, t2;
    if (j.is_array() && j.size() == 2) {
      t1 = tensor_from_json(j[0]);
      t2 = tensor_from_json(j[1]);
    } else if (j.is_object() && j.contains("tensors")) {
      const auto& ts = j.at("tensors");
      if (!ts.is_array() || ts.size() != 2) throw ParseError("\"tensors\" must hold two tensors");
      t1 = tensor_from_json(ts[0]);
      t2 = tensor_from_json(ts[1]);
    } else if (j.is_object() && j.contains("t1") && j.contains("t2")) {
      t1 = tensor_from_json(j.at("t1"));
      t2 = tensor_from_json(j.at("t2"));
    } else {
      throw ParseError("expected two tensors");
    }
    const PlueckerPoint p = wedge(t1, t2).canonical();
    emit(g, out, to_json(p), p.to_string() + "\n");
    return static_cast<int>(kOk);
  });
}

int cmd_classify(const GlobalOptions& g, const std::vector<std::string>& inputs, const ClassifyOptions& opt,
                 std::ostream& out, std::ostream& err) {
  struct Outcome {
    int code = kOk;
    std::optional<ClassificationReport> report;
    std::string message;
    std::string svg;
  };
  auto run = [&](const std::string& text) {
    Outcome o;
    std::ostringstream msg;
    o.code = guarded(msg, [&] {
      const json j = parse_json(text);
      const PlueckerPoint p = read_point(j);
      ReportOptions ro{opt.normal_form, opt.fibre_order};
      o.report = classify_point(p, j, ro);
      if (!o.report->on_variety) return static_cast<int>(kNotOnVariety);
      if (!opt.svg_path.empty()) {
        const TernaryTriple t = extract(p);
        const LineArrangement arr = t.D.is_zero() ? LineArrangement{} : factor_cubic(t.D);
        o.svg = arrangement_svg(arr, opt.svg_form, o.report->label + " " + o.report->e_label);
      }
      return static_cast<int>(kOk);
    });
    o.message = msg.str();
    return o;
  };

  std::vector<Outcome> outcomes(inputs.size());
  const size_t jobs = std::max(1, g.jobs);
  for (size_t start = 0; start < inputs.size(); start += jobs) {
    std::vector<std::future<Outcome>> batch;
    for (size_t k = start; k < std::min(inputs.size(), start + jobs); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run, inputs[k]));
    for (size_t k = 0; k < batch.size(); ++k) outcomes[start + k] = batch[k].get();
  }

  int code = kOk;
  json all = json::array();
  std::string text;
  for (size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    err << o.message;
    if (o.code == kNotOnVariety) err << "error: point is not on the variety\n";
    code = std::max(code, o.code);
    if (o.report) {
      all.push_back(to_json(*o.report));
      text += to_text(*o.report);
    }
    if (!o.svg.empty()) {
      const std::string path = with_index(opt.svg_path, k, outcomes.size());
      std::ofstream f(path);
      if (!f) {
        err << "error: cannot write " << path << "\n";
        code = std::max(code, static_cast<int>(kParseError));
      }
      f << o.svg;
    }
  }
  if (!all.empty()) emit(g, out, all.size() == 1 ? all[0] : all, text);
  return code;
}

int cmd_enumerate(const GlobalOptions& g, const std::string& label, int samples, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const ClassLabel c = ClassLabel::parse(label);
    if (!has_family(c)) throw ParseError("class " + c.to_string() + " has no parametrized family");
    err << "enumerate: class " << c.to_string() << " seed " << g.seed << "\n";
    const auto pts = enumerate_family(c, std::max(samples, 0), g.seed);
    for (size_t k = 0; k < pts.size(); ++k) {
      if (!on_variety(pts[k])) throw std::logic_error("sampler produced an off-variety point");
      if (g.format == "text")
        out << pts[k].to_string() << "\n";
      else
        out << json{{"class", c.to_string()}, {"seed", g.seed}, {"index", k}, {"point", to_json(pts[k])}}.dump()
            << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_normal_form(const GlobalOptions& g, const std::string& input, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PlueckerPoint p = read_point(parse_json(input));
    const NormalFormResult nf = normal_form(p);
    json j = {{"label", nf.label.to_string()},
              {"e_label", nf.e_label},
              {"row", nf.row},
              {"status", nf.status == NormalFormResult::Status::exact ? "exact" : "irrational_orbit"},
              {"deviation", nf.deviation}};
    std::ostringstream text;
    text << nf.label.to_string() << " " << nf.e_label;
    if (nf.iso) {
      j["isometry"] = to_json(*nf.iso);
      j["normal_point"] = to_json(act(*nf.iso, p));
      text << " c=" << nf.iso->c << " d=" << nf.iso->d << " lambda=" << nf.iso->lambda;
    } else {
      j["isometry"] = to_json(nf.float_iso);
      text << " (irrational orbit) lambda~" << nf.float_iso.lambda;
    }
    if (nf.scale) j["scale"] = to_json(*nf.scale);
    if (nf.row >= 0) j["row_point"] = to_json(normal_form_table()[nf.row].point());
    text << "\n";
    emit(g, out, j, text.str());
    return static_cast<int>(kOk);
  });
}

int cmd_fibre_check(const GlobalOptions& g, const std::string& input, const FibreOptions& opt, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const PlueckerPoint p = read_point(parse_json(input));
    const TernaryTriple t = extract(p);
    if (t.D.is_zero()) throw DegeneratePoint();
    const auto [z0, w0] = opt.base.empty() ? default_base(t.D) : parse_base(opt.base);
    const FibreBasis fb = solve_fibre_series(t, z0, w0, opt.order);
    json mism = json::array();
    for (int k = 0; k < 4; ++k)
      for (const auto& m : fb.mismatches[k])
        mism.push_back({{"seed", k}, {"i", m.i}, {"j", m.j}, {"from_z", to_json(m.from_z)},
                        {"from_w", to_json(m.from_w)}});
    json j = {{"on_variety", on_variety(p)},
              {"base", {to_json(z0), to_json(w0)}},
              {"order", fb.order},
              {"rank", fb.rank},
              {"consistent", fb.consistent()},
              {"mismatches", mism}};
    std::ostringstream text;
    text << "fibre at (" << z0 << ", " << w0 << ") order " << fb.order << ": rank " << fb.rank << ", "
         << (fb.consistent() ? "consistent" : "inconsistent") << "\n";
    bool pass = fb.consistent() && fb.rank == 4;
    json pots = json::array();
    const auto samples = samples_near(z0, w0, 20, g.seed);
    for (const auto& src : opt.potentials) {
      const Expr V = Expr::parse(src);
      const double series = series_match(fb, V, std::min(fb.order, 6));
      const double prol = prolongation_residual(t, V, samples);
      const bool ok = series < g.tol && prol < g.tol;
      pass = pass && ok;
      pots.push_back({{"potential", V.to_string()}, {"series_match", series}, {"prolongation", prol}, {"pass", ok}});
      text << "  " << V.to_string() << ": series " << series << ", prolongation " << prol
           << (ok ? "  ok" : "  FAIL") << "\n";
    }
    j["potentials"] = pots;
    j["pass"] = pass;
    emit(g, out, j, text.str());
    return static_cast<int>(pass ? kOk : kCheckFailed);
  });
}

int cmd_poisson_check(const GlobalOptions& g, const std::string& input, const PoissonOptions& opt,
                      std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const json j = parse_json(input);
    if (!j.is_object() || !j.contains("tensors") || j.at("tensors").size() != 2)
      throw ParseError("expected {\"tensors\": [t1, t2], \"potential\": ...}");
    const Sckt t1 = tensor_from_json(j.at("tensors")[0]), t2 = tensor_from_json(j.at("tensors")[1]);
    const std::string src = !opt.potential.empty() ? opt.potential : j.value("potential", std::string("0"));
    const Expr V = Expr::parse(src);
    std::mt19937_64 rng(g.seed);
    std::uniform_real_distribution<double> re(0.5, 2.0), im(-0.5, 0.5), mom(-1.0, 1.0);
    std::vector<PhasePoint> ph;
    for (int k = 0; k < opt.samples; ++k)
      ph.push_back({{re(rng), im(rng)}, {re(rng), im(rng)}, {mom(rng), mom(rng)}, {mom(rng), mom(rng)}});
    const std::vector<Sample> pts = [&] {
      std::vector<Sample> s;
      for (const auto& q : ph) s.push_back({q.z, q.w});
      return s;
    }();
    const PoissonReport rep = poisson_verify(t1, t2, V, ph);
    const double bd1 = bd_residual(t1, V, pts), bd2 = bd_residual(t2, V, pts);
    const bool pass = rep.cubic_zero[0] && rep.cubic_zero[1] && rep.max() < std::max(g.tol, 1e-8);
    const json out_j = {{"potential", V.to_string()},
                        {"samples", opt.samples},
                        {"seed", g.seed},
                        {"cubic_zero", rep.cubic_zero},
                        {"linear_max", rep.linear_max},
                        {"bd_residual", {bd1, bd2}},
                        {"pass", pass}};
    std::ostringstream text;
    text << "cubic parts exact zero: " << rep.cubic_zero[0] << " " << rep.cubic_zero[1] << "\n"
         << "max |{F, H}|: " << rep.linear_max[0] << " " << rep.linear_max[1] << (pass ? "  ok" : "  FAIL") << "\n";
    emit(g, out, out_j, text.str());
    return static_cast<int>(pass ? kOk : kCheckFailed);
  });
}

std::vector<NormalFormAuditRow> audit_normal_forms() {
  std::vector<NormalFormAuditRow> rows;
  for (const auto& row : normal_form_table()) {
    NormalFormAuditRow a;
    a.e_label = row.e_label;
    a.label = row.label.to_string();
    const LiftResult l = lift(row.D);
    const GaussRat a30 = row.A.coeff(0, 0), a03 = row.B.coeff(0, 0);
    auto describe = [](const SlotLift& s) {
      return s.kind == SlotLift::Kind::unique ? s.value.to_string() : to_string(s.kind);
    };
    a.lifted_a30 = describe(l.a30);
    a.lifted_a03 = describe(l.a03);
    auto slot_ok = [](const SlotLift& s, const GaussRat& v) {
      return s.kind == SlotLift::Kind::free || (s.kind == SlotLift::Kind::unique && s.value == v);
    };
    a.matches = slot_ok(l.a30, a30) && slot_ok(l.a03, a03) && (!l.product_constraint || (a30 * a03).is_zero());
    a.on_variety = on_variety(row.point());
    if (row.printed) {
      const PlueckerPoint printed = point_from(row.D, row.printed->first.coeff(0, 0), row.printed->second.coeff(0, 0));
      a.printed_on_variety = on_variety(printed);
      a.flag = "printed A_z = " + row.printed->first.to_string() + ", B_w = " + row.printed->second.to_string() +
               "; lift gives a30 = " + a.lifted_a30 + ", a03 = " + a.lifted_a03;
    } else if (!row.note.empty()) {
      a.flag = row.note;
    }
    rows.push_back(std::move(a));
  }
  return rows;
}

std::vector<PotentialAuditEntry> audit_potentials(double tol, unsigned long seed) {
  std::vector<PotentialAuditEntry> out;
  for (const auto& row : potential_table()) {
    const auto samples = row.samples(20, static_cast<unsigned>(seed));
    const FibreBasis fb = solve_fibre_series(row.rep, GaussRat(3, 4), GaussRat(2), 8);
    for (const auto& pot : row.potentials) {
      PotentialAuditEntry e;
      e.e_label = row.e_label;
      e.printed = pot.printed;
      e.prolongation = prolongation_residual(row.rep, pot.expr, samples);
      e.series = series_match(fb, pot.expr, 6);
      e.passes = e.prolongation < tol && e.series < tol;
      if (!pot.deviation.empty()) {
        std::ostringstream s;
        s << pot.deviation;
        if (pot.printed_expr)
          s << " (printed residual " << std::setprecision(3)
            << prolongation_residual(row.rep, *pot.printed_expr, samples) << ")";
        e.flag = s.str();
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

int cmd_tables_audit(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto nf = audit_normal_forms();
    const auto pots = audit_potentials(g.tol, g.seed);
    json j = {{"normal_forms", json::array()}, {"potentials", json::array()}, {"row_points", json::array()}};
    std::ostringstream text;
    text << "normal forms: lift(D) against the table\n";
    bool pass = true;
    for (const auto& a : nf) {
      j["normal_forms"].push_back({{"e_label", a.e_label},
                                   {"class", a.label},
                                   {"a30", a.lifted_a30},
                                   {"a03", a.lifted_a03},
                                   {"matches", a.matches},
                                   {"on_variety", a.on_variety},
                                   {"printed_on_variety", a.printed_on_variety},
                                   {"flag", a.flag}});
      pass = pass && a.matches && a.on_variety;
      text << "  " << std::left << std::setw(10) << a.label << std::setw(5) << a.e_label << " a30=" << std::setw(6)
           << a.lifted_a30 << " a03=" << std::setw(6) << a.lifted_a03 << (a.matches ? " match" : " MISMATCH");
      if (!a.flag.empty()) text << "  [deviation] " << a.flag;
      text << "\n";
    }
    text << "potentials: prolongation residual and series match at (3/4, 2)\n";
    for (const auto& e : pots) {
      j["potentials"].push_back({{"e_label", e.e_label},
                                 {"printed", e.printed},
                                 {"prolongation", e.prolongation},
                                 {"series", e.series},
                                 {"pass", e.passes},
                                 {"flag", e.flag}});
      pass = pass && e.passes;
      text << "  " << std::left << std::setw(5) << e.e_label << std::setw(36) << e.printed << std::setprecision(2)
           << std::scientific << e.prolongation << " " << e.series << std::defaultfloat
           << (e.passes ? " ok" : " FAIL");
      if (!e.flag.empty()) text << "  [deviation] " << e.flag;
      text << "\n";
    }
    text << "row representatives: points fitted from each row's potentials\n";
    for (const auto& row : potential_table()) {
      std::vector<Expr> vs;
      for (const auto& p : row.potentials) vs.push_back(p.expr);
      const PointFit fit = fit_point(vs, row.samples(12, static_cast<unsigned>(g.seed)));
      // Compare projectively with the representative.
      const auto rep = to_complex(row.point().canonical());
      std::complex<double> scale{};
      for (int k = 0; k < 10 && scale == std::complex<double>{}; ++k)
        if (rep[k] != std::complex<double>{}) scale = rep[k] / fit.coords[k];
      double dev = 0;
      for (int k = 0; k < 10; ++k) dev = std::max(dev, std::abs(fit.coords[k] * scale - rep[k]));
      const bool ok = fit.nullity == 1 && dev < 1e-6;
      j["row_points"].push_back({{"e_label", row.e_label}, {"nullity", fit.nullity}, {"deviation", dev},
                                 {"adjustment", row.adjustment}, {"pass", ok}});
      text << "  " << std::left << std::setw(5) << row.e_label << " nullity " << fit.nullity << " deviation "
           << std::setprecision(2) << std::scientific << dev << std::defaultfloat << (ok ? " ok" : " FAIL") << "  ("
           << row.adjustment << ")\n";
    }
    j["pass"] = pass;
    emit(g, out, j, text.str());
    return static_cast<int>(pass ? kOk : kCheckFailed);
  });
}

}  // namespace supint::io
