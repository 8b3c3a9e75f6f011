#include "supint/classification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "supint/errors.hpp"
#include "supint/sic.hpp"

namespace supint {

namespace {

const char* mult_name(Mult m) {
  switch (m) {
    case Mult::none:
      return "0";
    case Mult::one:
      return "1";
    case Mult::two:
      return "2";
    case Mult::one_one:
      return "11";
  }
  return "?";
}

ClassLabel L(const char* text) { return ClassLabel::parse(text); }

// Hasse diagram of the closures of the D-classes, up to conjugation.
const std::multimap<ClassLabel, ClassLabel>& parent_edges() {
  static const std::multimap<ClassLabel, ClassLabel> edges = [] {
    const std::vector<std::pair<const char*, std::vector<const char*>>> base = {
        {"(11,0,0)", {"(1,1,1)", "(11,0,1)", "(0,11,0)"}},
        {"(2,0,1)", {"(1,1,1)", "(11,0,1)"}},
        {"(1,0,1)", {"(11,0,1)", "(1,0,11)"}},
        {"(0,1,0)", {"(1,1,1)", "(0,11,0)"}},
        {"(2,0,0)", {"(11,0,0)", "(2,0,1)"}},
        {"(1,0,0)", {"(11,0,0)", "(1,0,1)", "(0,1,0)", "(1,0,2)"}},
        {"(0,0,0)", {"(2,0,0)", "(1,0,0)", "(0,1,0)"}},
    };
    std::multimap<ClassLabel, ClassLabel> out;
    std::set<std::pair<ClassLabel, ClassLabel>> seen;
    for (const auto& [child, ps] : base) {
      for (const char* p : ps) {
        for (bool conj : {false, true}) {
          ClassLabel c = L(child), q = L(p);
          if (conj) {
            c = c.conjugate();
            q = q.conjugate();
          }
          if (seen.insert({c, q}).second) out.emplace(c, q);
        }
      }
    }
    return out;
  }();
  return edges;
}

// Roots of a monic univariate polynomial of degree <= 2 as linear factors in `var`.
void split_univariate(const UniPoly& u, Var var, LineArrangement& arr) {
  auto form = [&](const GaussRat& shift) {
    return var == Var::z ? LinearForm::from_exact(1, 0, shift) : LinearForm::from_exact(0, 1, shift);
  };
  if (u.degree() <= 0) return;
  if (u.degree() == 1) {
    arr.factors.push_back({form(u.coeff(0)), 1});
    return;
  }
  if (u.degree() > 2) throw NotReducible("content of degree > 2");
  const GaussRat p = u.coeff(1), q = u.coeff(0);
  const GaussRat disc = p * p - GaussRat(4) * q;
  const GaussRat half(1, 2);
  if (disc.is_zero()) {
    arr.factors.push_back({form(p * half), 2});
    return;
  }
  if (auto s = exact_sqrt(disc)) {
    arr.factors.push_back({form((p - *s) * half), 1});
    arr.factors.push_back({form((p + *s) * half), 1});
    return;
  }
  arr.exact = false;
  const std::complex<double> s = std::sqrt(disc.to_complex());
  const std::complex<double> pc = p.to_complex();
  const Orbit o = var == Var::z ? Orbit::z_only : Orbit::w_only;
  for (double sign : {-1.0, 1.0}) {
    const std::complex<double> shift = 0.5 * (pc + sign * s);
    arr.factors.push_back({var == Var::z ? LinearForm::from_float(1.0, 0.0, shift, o)
                                         : LinearForm::from_float(0.0, 1.0, shift, o),
                           1});
  }
}

// Splits a primitive quadratic R with r20 != 0 into two mixed forms with z-coefficient 1;
// R = r20 * f1 * f2. Returns false when no linear split exists.
bool split_mixed_quadratic(const BiPoly& R, LineArrangement& arr, GaussRat& scalar, bool swapped) {
  const GaussRat r20 = R.coeff(2, 0), r11 = R.coeff(1, 1), r02 = R.coeff(0, 2);
  const GaussRat r10 = R.coeff(1, 0), r01 = R.coeff(0, 1), r00 = R.coeff(0, 0);
  const GaussRat four(4), two(2);
  const GaussRat P2 = r11 * r11 - four * r20 * r02;
  const GaussRat D1 = two * r11 * r10 - four * r20 * r01;
  const GaussRat Q2 = r10 * r10 - four * r20 * r00;
  if (D1 * D1 != four * P2 * Q2) return false;
  scalar = r20;
  const GaussRat inv = (two * r20).inverse();

  auto push_exact = [&](const GaussRat& b, const GaussRat& c, int mult) {
    arr.factors.push_back({swapped ? LinearForm::from_exact(b, 1, c) : LinearForm::from_exact(1, b, c), mult});
  };
  if (P2.is_zero() && Q2.is_zero()) {
    push_exact(r11 * inv, r10 * inv, 2);
    return true;
  }
  std::optional<GaussRat> p, q;
  if (!P2.is_zero()) {
    p = exact_sqrt(P2);
    if (p) q = D1 / (two * *p);
  } else {
    p = GaussRat(0);
    q = exact_sqrt(Q2);
  }
  if (p && q) {
    push_exact((r11 - *p) * inv, (r10 - *q) * inv, 1);
    push_exact((r11 + *p) * inv, (r10 + *q) * inv, 1);
    return true;
  }
  arr.exact = false;
  std::complex<double> pf, qf;
  if (!P2.is_zero()) {
    pf = std::sqrt(P2.to_complex());
    qf = D1.to_complex() / (2.0 * pf);
  } else {
    pf = 0.0;
    qf = std::sqrt(Q2.to_complex());
  }
  const std::complex<double> invf = inv.to_complex();
  for (double sign : {-1.0, 1.0}) {
    const std::complex<double> b = (r11.to_complex() + sign * pf) * invf;
    const std::complex<double> c = (r10.to_complex() + sign * qf) * invf;
    arr.factors.push_back({swapped ? LinearForm::from_float(b, 1.0, c, Orbit::mixed)
                                   : LinearForm::from_float(1.0, b, c, Orbit::mixed),
                           1});
  }
  return true;
}

bool form_less(const LineFactor& x, const LineFactor& y) {
  if (x.form.orbit != y.form.orbit) return x.form.orbit < y.form.orbit;
  if (x.form.exact && y.form.exact) {
    const auto& a = *x.form.exact;
    const auto& b = *y.form.exact;
    for (int k = 0; k < 3; ++k) {
      if (lex_less(a[k], b[k])) return true;
      if (lex_less(b[k], a[k])) return false;
    }
    return false;
  }
  for (int k = 0; k < 3; ++k) {
    const auto a = x.form.approx[k], b = y.form.approx[k];
    if (a.real() != b.real()) return a.real() < b.real();
    if (a.imag() != b.imag()) return a.imag() < b.imag();
  }
  return false;
}

BiPoly exact_product(const LineArrangement& arr) {
  BiPoly out(arr.scalar);
  for (const auto& f : arr.factors) {
    const auto& e = *f.form.exact;
    const BiPoly lin = e[0] * BiPoly::z() + e[1] * BiPoly::w() + BiPoly(e[2]);
    out = out * pow(lin, f.multiplicity);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- labels

ClassLabel ClassLabel::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "V_0" || s == "V_empty" || s == "V_∅") return empty_set();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("bad class label '" + std::string(text) + "'");
  std::vector<std::string> parts;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw ParseError("bad class label '" + std::string(text) + "'");
  ClassLabel out;
  for (int k = 0; k < 3; ++k) {
    if (parts[k] == "0") out.m[k] = Mult::none;
    else if (parts[k] == "1") out.m[k] = Mult::one;
    else if (parts[k] == "2") out.m[k] = Mult::two;
    else if (parts[k] == "11") out.m[k] = Mult::one_one;
    else throw ParseError("bad multiplicity '" + parts[k] + "'");
  }
  return out;
}

std::string ClassLabel::to_string() const {
  if (degenerate) return "V_0";
  return std::string("(") + mult_name(m[0]) + "," + mult_name(m[1]) + "," + mult_name(m[2]) + ")";
}

const std::vector<ClassLabel>& known_labels() {
  static const std::vector<ClassLabel> labels = [] {
    std::vector<ClassLabel> out;
    for (const char* s : {"(1,1,1)", "(11,0,1)", "(1,0,11)", "(2,0,1)", "(1,0,2)", "(0,11,0)", "(11,0,0)", "(0,0,11)",
                          "(2,0,0)", "(0,0,2)", "(1,0,1)", "(0,1,0)", "(1,0,0)", "(0,0,1)", "(0,0,0)"})
      out.push_back(L(s));
    return out;
  }();
  return labels;
}

std::vector<ClassLabel> parents(const ClassLabel& c) {
  std::vector<ClassLabel> out;
  const auto [lo, hi] = parent_edges().equal_range(c);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

std::vector<ClassLabel> ancestors(const ClassLabel& c) {
  std::set<ClassLabel> seen;
  std::vector<ClassLabel> stack = parents(c);
  while (!stack.empty()) {
    ClassLabel x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (const auto& p : parents(x)) stack.push_back(p);
  }
  return {seen.begin(), seen.end()};
}

bool is_below(const ClassLabel& a, const ClassLabel& b) {
  if (a == b) return true;
  const auto anc = ancestors(a);
  return std::find(anc.begin(), anc.end(), b) != anc.end();
}

std::string to_string(Orbit o) {
  switch (o) {
    case Orbit::z_only:
      return "z_only";
    case Orbit::mixed:
      return "mixed";
    case Orbit::w_only:
      return "w_only";
    case Orbit::constant:
      return "constant";
  }
  return "?";
}

// ---------------------------------------------------------------- factoring

LinearForm LinearForm::from_exact(const GaussRat& a, const GaussRat& b, const GaussRat& c) {
  LinearForm f;
  f.exact = std::array<GaussRat, 3>{a, b, c};
  f.approx = {a.to_complex(), b.to_complex(), c.to_complex()};
  if (!a.is_zero() && !b.is_zero()) f.orbit = Orbit::mixed;
  else if (!a.is_zero()) f.orbit = Orbit::z_only;
  else if (!b.is_zero()) f.orbit = Orbit::w_only;
  else f.orbit = Orbit::constant;
  return f;
}

LinearForm LinearForm::from_float(std::complex<double> a, std::complex<double> b, std::complex<double> c, Orbit o) {
  LinearForm f;
  f.approx = {a, b, c};
  f.orbit = o;
  return f;
}

std::string LinearForm::to_string() const {
  if (exact) {
    const auto& e = *exact;
    return (e[0] * BiPoly::z() + e[1] * BiPoly::w() + BiPoly(e[2])).to_string();
  }
  std::ostringstream os;
  os.precision(15);
  auto term = [&](std::complex<double> v, const char* var) {
    if (v == std::complex<double>{}) return;
    if (os.tellp() > 0) os << " + ";
    os << "(" << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
    if (*var) os << "*" << var;
  };
  term(approx[0], "z");
  term(approx[1], "w");
  term(approx[2], "");
  return os.str();
}

int LineArrangement::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.multiplicity;
  return d;
}

ClassLabel LineArrangement::label() const {
  ClassLabel out;
  for (int k = 0; k < 3; ++k) {
    const Orbit o = k == 0 ? Orbit::z_only : (k == 1 ? Orbit::mixed : Orbit::w_only);
    int count = 0, total = 0;
    for (const auto& f : factors) {
      if (f.form.orbit != o) continue;
      ++count;
      total += f.multiplicity;
    }
    if (total == 0) out.m[k] = Mult::none;
    else if (total == 1) out.m[k] = Mult::one;
    else if (count == 1) out.m[k] = Mult::two;
    else out.m[k] = Mult::one_one;
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, std::complex<double>>> expand(const LineArrangement& arr) {
  std::map<std::pair<int, int>, std::complex<double>> acc{{{0, 0}, arr.scalar.to_complex()}};
  for (const auto& f : arr.factors) {
    for (int n = 0; n < f.multiplicity; ++n) {
      std::map<std::pair<int, int>, std::complex<double>> next;
      for (const auto& [e, c] : acc) {
        next[{e.first + 1, e.second}] += c * f.form.approx[0];
        next[{e.first, e.second + 1}] += c * f.form.approx[1];
        next[e] += c * f.form.approx[2];
      }
      acc = std::move(next);
    }
  }
  return {acc.begin(), acc.end()};
}

LineArrangement factor_cubic(const BiPoly& D) {
  if (D.is_zero()) throw ZeroPolynomial();
  const UniPoly cz = content_in(D, Var::w);
  const UniPoly cw = content_in(D, Var::z);
  const BiPoly R = divide_by(divide_by(D, cz, Var::z), cw, Var::w);

  LineArrangement arr;
  split_univariate(cz, Var::z, arr);
  split_univariate(cw, Var::w, arr);

  const int td = R.total_degree();
  if (td >= 3) throw NotReducible("cubic part does not split: " + D.to_string());
  if (td == 0) {
    arr.scalar = R.coeff(0, 0);
  } else if (td == 1) {
    const GaussRat a = R.coeff(1, 0);
    if (a.is_zero()) throw NotReducible("unexpected primitive part " + R.to_string());
    arr.scalar = a;
    arr.factors.push_back({LinearForm::from_exact(1, R.coeff(0, 1) / a, R.coeff(0, 0) / a), 1});
  } else {
    bool ok = false;
    if (!R.coeff(2, 0).is_zero()) {
      ok = split_mixed_quadratic(R, arr, arr.scalar, false);
    } else if (!R.coeff(0, 2).is_zero()) {
      ok = split_mixed_quadratic(R.swap_vars(), arr, arr.scalar, true);
    }
    if (!ok) throw NotReducible("quadratic part does not split: " + R.to_string());
  }

  std::sort(arr.factors.begin(), arr.factors.end(), form_less);

  if (arr.exact) {
    if (exact_product(arr) != D) throw std::logic_error("factorization does not reconstruct D");
  } else {
    double worst = 0.0;
    std::map<std::pair<int, int>, std::complex<double>> want;
    for (const auto& [e, c] : D.terms()) want[e] = c.to_complex();
    for (const auto& [e, c] : expand(arr)) {
      auto it = want.find(e);
      const std::complex<double> target = it == want.end() ? std::complex<double>{} : it->second;
      worst = std::max(worst, std::abs(c - target));
    }
    arr.residual = worst;
  }
  return arr;
}

ClassLabel class_of_polynomial(const BiPoly& D) { return factor_cubic(D).label(); }

ClassLabel class_of(const TernaryTriple& t) {
  const SicReport r = sic_residuals(t);
  if (!r.on_variety) throw NotOnVariety();
  if (r.degenerate) return ClassLabel::empty_set();
  return class_of_polynomial(t.D);
}

ClassLabel class_of(const PlueckerPoint& p) { return class_of(extract(p)); }

std::string e_label(const PlueckerPoint& p) {
  const ClassLabel c = class_of(p);
  if (c.degenerate) return "V_0";
  static const std::map<std::string, std::string> fixed = {
      {"(1,1,1)", "E16"}, {"(11,0,1)", "E19"}, {"(1,0,11)", "E19"}, {"(2,0,1)", "E17"},
      {"(1,0,2)", "E17"}, {"(0,11,0)", "E1"},  {"(11,0,0)", "E7"},  {"(0,0,11)", "E7"},
      {"(2,0,0)", "E8"},  {"(0,0,2)", "E8"},   {"(1,0,1)", "E20"},  {"(0,1,0)", "E2"},
  };
  const std::string s = c.to_string();
  if (auto it = fixed.find(s); it != fixed.end()) return it->second;
  // Shared classes: the free slot decides.
  if (s == "(1,0,0)") return p[Coord::a30].is_zero() ? "E11" : "E9";
  if (s == "(0,0,1)") return p[Coord::a03].is_zero() ? "E11" : "E9";
  if (s == "(0,0,0)") return p[Coord::a30].is_zero() && p[Coord::a03].is_zero() ? "E3" : "E10";
  throw std::logic_error("unlabelled class " + s);
}

// ---------------------------------------------------------------- invariants

InvariantPattern invariant_pattern(const PlueckerPoint& p) {
  InvariantPattern out;
  for (Coord c : kCoords)
    if (p[c].is_zero()) out.vanishing.push_back(c);

  auto a = [&](int i, int j) { return p.a(i, j); };
  const GaussRat four(4);
  auto rel = [&](const std::string& name, const GaussRat& lhs, const GaussRat& rhs) {
    out.relations.push_back({name, lhs == rhs});
    return lhs == rhs;
  };
  const bool r201a = rel("4*a21*a01 = a11^2", four * a(2, 1) * a(0, 1), a(1, 1) * a(1, 1));
  const bool r201b = rel("4*a20*a00 = a10^2", four * a(2, 0) * a(0, 0), a(1, 0) * a(1, 0));
  const bool r102a = rel("4*a12*a10 = a11^2", four * a(1, 2) * a(1, 0), a(1, 1) * a(1, 1));
  const bool r102b = rel("4*a02*a00 = a01^2", four * a(0, 2) * a(0, 0), a(0, 1) * a(0, 1));

  auto zero = [&](std::initializer_list<std::pair<int, int>> idx) {
    return std::all_of(idx.begin(), idx.end(), [&](auto ij) { return a(ij.first, ij.second).is_zero(); });
  };
  // Rows constrain the listed D-coefficients; see the (1,0,0)/(0,0,0) note in the docs.
  auto only = [&](auto keep, bool include_slots) {
    for (Coord c : kCoords) {
      const auto [i, j] = coord_index(c);
      const bool slot = c == Coord::a30 || c == Coord::a03;
      if (slot && !include_slots) continue;
      if (!keep(i, j) && !p[c].is_zero()) return false;
    }
    return true;
  };

  struct Row {
    const char* label;
    bool holds;
  };
  const std::vector<Row> rows = {
      {"(1,1,1)", true},
      {"(11,0,1)", zero({{1, 2}, {0, 2}, {0, 3}})},
      {"(2,0,1)", zero({{1, 2}, {0, 2}, {0, 3}}) && r201a && r201b},
      {"(0,11,0)", zero({{1, 2}, {2, 1}, {1, 1}})},
      {"(11,0,0)", only([](int, int j) { return j == 0; }, true)},
      {"(2,0,0)", only([](int, int j) { return j == 0; }, true) && r201b},
      {"(1,0,1)", only([](int i, int j) { return i <= 1 && j <= 1; }, true)},
      {"(0,1,0)", zero({{2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}})},
      {"(1,0,0)", only([](int i, int j) { return i <= 1 && j == 0; }, false)},
      {"(0,0,0)", only([](int i, int j) { return i == 0 && j == 0; }, false)},
  };
  const std::vector<Row> conj_rows = {
      {"(1,0,11)", zero({{2, 1}, {2, 0}, {3, 0}})},
      {"(1,0,2)", zero({{2, 1}, {2, 0}, {3, 0}}) && r102a && r102b},
      {"(0,0,11)", only([](int i, int) { return i == 0; }, true)},
      {"(0,0,2)", only([](int i, int) { return i == 0; }, true) && r102b},
      {"(0,0,1)", only([](int i, int j) { return j <= 1 && i == 0; }, false)},
  };
  for (const auto& rows_ : {rows, conj_rows})
    for (const auto& r : rows_)
      if (r.holds) out.matching_rows.push_back(L(r.label));
  return out;
}

// ---------------------------------------------------------------- components

std::string to_string(Component c) {
  switch (c) {
    case Component::v1_1_1:
      return "V_(1,1,1)";
    case Component::v11_0_1:
      return "V_(11,0,1)";
    case Component::v11_0_0:
      return "V_(11,0,0)";
    case Component::v0_11_0:
      return "V_(0,11,0)";
    case Component::v1_0_11:
      return "V_(1,0,11)";
    case Component::v0_0_11:
      return "V_(0,0,11)";
  }
  return "?";
}

namespace {

bool in_v11_0_0(const PlueckerPoint& p) {
  for (Coord c : kCoords)
    if (coord_index(c).second != 0 && !p[c].is_zero()) return false;
  return true;
}

bool in_v11_0_1(const PlueckerPoint& p) {
  auto a = [&](int i, int j) { return p.a(i, j); };
  if (!a(1, 2).is_zero() || !a(0, 2).is_zero() || !a(0, 3).is_zero()) return false;
  const std::array<GaussRat, 4> top = {a(2, 1), a(1, 1), a(0, 1), a(2, 0)};
  const std::array<GaussRat, 4> bot = {a(2, 0), a(1, 0), a(0, 0), a(3, 0)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (top[i] * bot[j] != top[j] * bot[i]) return false;
  return true;
}

GaussRat det_0_11_0(const PlueckerPoint& p) {
  auto a = [&](int i, int j) { return p.a(i, j); };
  return a(0, 2) * (GaussRat(4) * a(0, 0) * a(2, 0) - a(1, 0) * a(1, 0)) - a(0, 1) * a(0, 1) * a(2, 0);
}

bool in_d0_11_0(const PlueckerPoint& p) {
  return p.a(2, 1).is_zero() && p.a(1, 2).is_zero() && p.a(1, 1).is_zero() && det_0_11_0(p).is_zero();
}

bool in_v0_11_0(const PlueckerPoint& p) {
  if (!in_d0_11_0(p)) return false;
  auto a = [&](int i, int j) { return p.a(i, j); };
  const GaussRat four(4);
  return a(3, 0) * a(0, 2) == a(2, 0) * a(0, 1) && a(0, 3) * a(2, 0) == a(0, 2) * a(1, 0) &&
         a(3, 0) * a(0, 1) == four * a(0, 0) * a(2, 0) - a(1, 0) * a(1, 0) &&
         a(0, 3) * a(1, 0) == four * a(0, 0) * a(0, 2) - a(0, 1) * a(0, 1);
}

bool in_v1_1_1(const PlueckerPoint& p) {
  const BiPoly D = extract(p).D;
  const ClassLabel c = class_of_polynomial(D);
  if (!is_below(c, L("(1,1,1)"))) return false;
  const bool both = D.depends_on(Var::z) && D.depends_on(Var::w);
  return both || D.total_degree() <= 1;
}

}  // namespace

ComponentReport component_of(const PlueckerPoint& p) {
  const SicReport r = sic_residuals(p);
  if (!r.on_variety) throw NotOnVariety();
  ComponentReport out;
  if (r.degenerate) {
    out.components.push_back(p[Coord::a30].is_zero() ? Component::v0_0_11 : Component::v11_0_0);
    return out;
  }
  const PlueckerPoint q = conjugate(p);
  if (in_v1_1_1(p)) out.components.push_back(Component::v1_1_1);
  if (in_v11_0_1(p)) out.components.push_back(Component::v11_0_1);
  if (in_v11_0_0(p)) out.components.push_back(Component::v11_0_0);
  if (in_v0_11_0(p)) out.components.push_back(Component::v0_11_0);
  if (in_v11_0_1(q)) out.components.push_back(Component::v1_0_11);
  if (in_v11_0_0(q)) out.components.push_back(Component::v0_0_11);

  if (in_d0_11_0(p)) {
    // Cofactors of the structurally nonzero entries of the determinantal matrix.
    auto a = [&](int i, int j) { return p.a(i, j); };
    const GaussRat four(4);
    const std::array<GaussRat, 3> row0 = {a(0, 2), a(0, 1), 0};
    const std::array<GaussRat, 3> row1 = {a(0, 1), four * a(0, 0), a(1, 0)};
    const std::array<GaussRat, 3> row2 = {0, a(1, 0), a(2, 0)};
    const std::array<std::array<GaussRat, 3>, 3> m = {row0, row1, row2};
    const std::array<std::pair<int, int>, 7> nonzero = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}};
    bool all = true;
    for (const auto& [r0, c0] : nonzero) {
      std::array<int, 2> rs{}, cs{};
      int nr = 0, nc = 0;
      for (int k = 0; k < 3; ++k) {
        if (k != r0) rs[nr++] = k;
        if (k != c0) cs[nc++] = k;
      }
      const GaussRat minor = m[rs[0]][cs[0]] * m[rs[1]][cs[1]] - m[rs[0]][cs[1]] * m[rs[1]][cs[0]];
      all = all && minor.is_zero();
    }
    out.singular_locus = all;
  }
  return out;
}

PlueckerPoint conjugate(const PlueckerPoint& p) {
  PlueckerPoint::Coords out;
  for (int k = 0; k < 10; ++k) {
    const auto [i, j] = coord_index(kCoords[k]);
    out[k] = p.a(j, i);
  }
  return PlueckerPoint(std::move(out));
}

bool real_form(const PlueckerPoint& p, RealForm which) {
  for (Coord c : kCoords) {
    const auto [i, j] = coord_index(c);
    if (which == RealForm::minkowski) {
      if (!p[c].is_real()) return false;
    } else if (p.a(i, j) != p.a(j, i).conj()) {
      return false;
    }
  }
  return true;
}

}  // namespace supint
