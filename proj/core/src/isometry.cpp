#include "supint/isometry.hpp"

#include <algorithm>
#include <cmath>

#include "supint/errors.hpp"

namespace supint {

namespace {

template <class T>
T ipow(T x, int n) {
  if (n < 0) {
    x = T(1) / x;
    n = -n;
  }
  T r(1);
  for (int k = 0; k < n; ++k) r = r * x;
  return r;
}

constexpr int kBinom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};

template <class T>
std::array<T, 10> act_coords(const BasicIsometry<T>& g, const std::array<T, 10>& a) {
  auto get = [&](int i, int j) { return a[coord_slot(i, j)]; };
  std::array<T, 10> out{};
  for (auto& x : out) x = T(0);
  // D(lambda z + c, w/lambda + d), expanded monomial by monomial.
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      if (i == 2 && j == 2) continue;
      const T coef = get(i, j);
      if (is_zero(coef)) continue;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          const T term = coef * T(kBinom[i][k] * kBinom[j][l]) * ipow(g.lambda, k - l) * ipow(g.c, i - k) *
                         ipow(g.d, j - l);
          out[coord_slot(k, l)] = out[coord_slot(k, l)] + term;
        }
      }
    }
  }
  // Constant terms of lambda^3 A(w/lambda + d) and lambda^-3 B(lambda z + c).
  const T two(2);
  out[coord_slot(3, 0)] =
      ipow(g.lambda, 3) * (get(3, 0) + two * get(2, 0) * g.d + get(2, 1) * g.d * g.d);
  out[coord_slot(0, 3)] =
      ipow(g.lambda, -3) * (get(0, 3) + two * get(0, 2) * g.c + get(1, 2) * g.c * g.c);
  return out;
}

bool nth_root(const GaussRat& x, int n, GaussRat& out) {
  std::optional<GaussRat> r;
  if (n == 2) {
    r = exact_sqrt(x);
  } else if (n == 3) {
    r = exact_cbrt(x);
  } else if (n == 4) {
    if (auto s = exact_sqrt(x)) {
      r = exact_sqrt(*s);
      if (!r) r = exact_sqrt(-*s);
    }
  }
  if (!r) return false;
  out = *r;
  return true;
}

bool nth_root(const std::complex<double>& x, int n, std::complex<double>& out) {
  if (n == 2) out = std::sqrt(x);
  else if (n == 3) out = std::pow(x, 1.0 / 3.0);
  else out = std::sqrt(std::sqrt(x));
  return true;
}

template <class T>
bool quadratic_roots(const T& a, const T& b, const T& c, T& r1, T& r2) {
  T s;
  if (!nth_root(b * b - T(4) * a * c, 2, s)) return false;
  r1 = (-b + s) / (T(2) * a);
  r2 = (-b - s) / (T(2) * a);
  return true;
}

// Reducing isometry for a non-conjugate class label; nullopt when a root leaves Q(i).
// Shifts move the concurrency point / roots of the factors to the origin and -1,
// the shear balances the remaining coefficients against the table row.
template <class T>
std::optional<BasicIsometry<T>> recipe(const std::string& cls, const std::array<T, 10>& coords) {
  auto a = [&](int i, int j) { return coords[coord_slot(i, j)]; };
  BasicIsometry<T> g;
  const T two(2);
  if (cls == "(1,1,1)") {
    // Lines concurrent: c = -a02/a12, d = -a20/a21; then lambda^2 = a12/a21.
    g.c = -a(0, 2) / a(1, 2);
    g.d = -a(2, 0) / a(2, 1);
    if (!nth_root(a(1, 2) / a(2, 1), 2, g.lambda)) return std::nullopt;
  } else if (cls == "(11,0,1)") {
    // w-factor to w = 0; z-roots r1, r2 of a21 z^2 + a11 z + a01 to 0 and -1.
    g.d = -a(2, 0) / a(2, 1);
    T r1, r2;
    if (!quadratic_roots(a(2, 1), a(1, 1), a(0, 1), r1, r2)) return std::nullopt;
    g.c = r1;
    g.lambda = r1 - r2;
  } else if (cls == "(2,0,1)") {
    g.c = -a(1, 1) / (two * a(2, 1));
    g.d = -a(2, 0) / a(2, 1);
  } else if (cls == "(0,11,0)") {
    // Complete both squares, then lambda^4 = -a02/a20.
    g.c = -a(1, 0) / (two * a(2, 0));
    g.d = -a(0, 1) / (two * a(0, 2));
    if (!nth_root(-a(0, 2) / a(2, 0), 4, g.lambda)) return std::nullopt;
  } else if (cls == "(11,0,0)") {
    T r1, r2;
    if (!quadratic_roots(a(2, 0), a(1, 0), a(0, 0), r1, r2)) return std::nullopt;
    g.c = r1;
    g.lambda = r1 - r2;
    g.d = -a(3, 0) / (two * a(2, 0));
  } else if (cls == "(2,0,0)") {
    g.c = -a(1, 0) / (two * a(2, 0));
    g.d = -a(3, 0) / (two * a(2, 0));
  } else if (cls == "(1,0,1)") {
    g.c = -a(0, 1) / a(1, 1);
    g.d = -a(1, 0) / a(1, 1);
  } else if (cls == "(0,1,0)") {
    g.c = -a(0, 0) / a(1, 0);
    if (!nth_root(a(0, 1) / a(1, 0), 2, g.lambda)) return std::nullopt;
  } else if (cls == "(1,0,0)") {
    g.c = -a(0, 0) / a(1, 0);
    if (!is_zero(a(3, 0)) && !nth_root(a(1, 0) / a(3, 0), 2, g.lambda)) return std::nullopt;
  } else if (cls == "(0,0,0)") {
    if (!is_zero(a(3, 0))) {
      if (!nth_root(a(0, 0) / a(3, 0), 3, g.lambda)) return std::nullopt;
    } else if (!is_zero(a(0, 3))) {
      if (!nth_root(a(0, 3) / a(0, 0), 3, g.lambda)) return std::nullopt;
    }
  } else {
    throw std::logic_error("no reduction recipe for " + cls);
  }
  return g;
}

template <class T>
BasicIsometry<T> conjugate_iso(const BasicIsometry<T>& g) {
  return {g.d, g.c, T(1) / g.lambda};
}

template <class T>
std::array<T, 10> conj_coords(const std::array<T, 10>& a) {
  std::array<T, 10> out;
  for (int k = 0; k < 10; ++k) {
    const auto [i, j] = coord_index(kCoords[k]);
    out[k] = a[coord_slot(j, i)];
  }
  return out;
}

template <class T>
std::optional<BasicIsometry<T>> reducing_isometry(const ClassLabel& label, const std::array<T, 10>& a) {
  static const std::vector<std::string> direct = {"(1,1,1)", "(11,0,1)", "(2,0,1)", "(0,11,0)", "(11,0,0)",
                                                  "(2,0,0)", "(1,0,1)",  "(0,1,0)", "(1,0,0)",  "(0,0,0)"};
  const std::string s = label.to_string();
  if (std::find(direct.begin(), direct.end(), s) != direct.end()) return recipe<T>(s, a);
  auto g = recipe<T>(label.conjugate().to_string(), conj_coords(a));
  if (!g) return std::nullopt;
  return conjugate_iso(*g);
}

BiPoly P(std::initializer_list<std::tuple<int, int, int>> terms) {
  BiPoly out;
  for (const auto& [c, i, j] : terms) out += BiPoly::monomial(c, i, j);
  return out;
}

}  // namespace

PlanarIsometry identity_isometry() { return {}; }

PlanarIsometry compose(const PlanarIsometry& g, const PlanarIsometry& h) {
  return {h.lambda * g.c + h.c, g.d / h.lambda + h.d, g.lambda * h.lambda};
}

PlanarIsometry inverse(const PlanarIsometry& g) {
  if (g.lambda.is_zero()) throw std::domain_error("shear parameter must be nonzero");
  return {-g.c / g.lambda, -g.lambda * g.d, g.lambda.inverse()};
}

FloatIsometry to_float(const PlanarIsometry& g) { return {g.c.to_complex(), g.d.to_complex(), g.lambda.to_complex()}; }

PlueckerPoint act(const PlanarIsometry& g, const PlueckerPoint& p) {
  if (g.lambda.is_zero()) throw std::domain_error("shear parameter must be nonzero");
  return PlueckerPoint(act_coords(g, p.coords()));
}

ComplexCoords act(const FloatIsometry& g, const ComplexCoords& p) { return act_coords(g, p); }

ComplexCoords to_complex(const PlueckerPoint& p) {
  ComplexCoords out;
  for (int k = 0; k < 10; ++k) out[k] = p.coords()[k].to_complex();
  return out;
}

PlueckerPoint NormalFormRow::point() const { return point_from(D, A.coeff(0, 0), B.coeff(0, 0)); }

const std::vector<NormalFormRow>& normal_form_table() {
  static const std::vector<NormalFormRow> rows = [] {
    auto C = ClassLabel::parse;
    const BiPoly zero;
    std::vector<NormalFormRow> r = {
        {C("(1,1,1)"), "E16", P({{1, 2, 1}, {1, 1, 2}}), P({{1, 0, 2}}), P({{1, 2, 0}}), {}, ""},
        {C("(11,0,1)"), "E19", P({{1, 2, 1}, {1, 1, 1}}), P({{1, 0, 2}}), zero, {}, ""},
        {C("(1,0,11)"), "E19", P({{1, 1, 2}, {1, 1, 1}}), zero, P({{1, 2, 0}}), {}, ""},
        {C("(2,0,1)"), "E17", P({{1, 2, 1}}), P({{1, 0, 2}}), zero, {}, ""},
        {C("(1,0,2)"), "E17", P({{1, 1, 2}}), zero, P({{1, 2, 0}}), {}, ""},
        {C("(0,11,0)"), "E1", P({{1, 2, 0}, {-1, 0, 2}}), P({{2, 0, 1}}), P({{-2, 1, 0}}), {}, ""},
        {C("(11,0,0)"), "E7", P({{1, 2, 0}, {1, 1, 0}}), P({{2, 0, 1}}), zero, {}, ""},
        {C("(0,0,11)"), "E7", P({{1, 0, 2}, {1, 0, 1}}), zero, P({{2, 1, 0}}), {}, ""},
        {C("(2,0,0)"), "E8", P({{1, 2, 0}}), P({{2, 0, 1}}), zero, {}, ""},
        {C("(0,0,2)"), "E8", P({{1, 0, 2}}), zero, P({{2, 1, 0}}), {}, ""},
        {C("(1,0,1)"), "E20", P({{1, 1, 1}}), zero, zero, {}, ""},
        {C("(0,1,0)"), "E2", P({{1, 1, 0}, {1, 0, 1}}), BiPoly(-1), BiPoly(-1),
         std::make_pair(BiPoly(1), BiPoly(1)),
         "table prints A_z = B_w = 1; the A3/B3 conditions force A_z = B_w = -1 for D = z + w"},
        {C("(1,0,0)"), "E9", P({{1, 1, 0}}), BiPoly(1), zero, {}, ""},
        {C("(1,0,0)"), "E11", P({{1, 1, 0}}), zero, zero, {}, ""},
        {C("(0,0,1)"), "E9", P({{1, 0, 1}}), zero, BiPoly(1), {}, ""},
        {C("(0,0,1)"), "E11", P({{1, 0, 1}}), zero, zero, {}, ""},
        {C("(0,0,0)"), "E10", BiPoly(1), BiPoly(1), zero, {},
         "A_z, B_w are not determined by D; rescaling the constant slot needs a cube root"},
        {C("(0,0,0)"), "E10", BiPoly(1), zero, BiPoly(1), {},
         "A_z, B_w are not determined by D; rescaling the constant slot needs a cube root"},
        {C("(0,0,0)"), "E3", BiPoly(1), zero, zero, {}, ""},
    };
    return r;
  }();
  return rows;
}

NormalFormResult normal_form(const PlueckerPoint& p) {
  NormalFormResult out;
  out.label = class_of(p);
  if (out.label.degenerate) {
    out.iso = identity_isometry();
    out.float_iso = to_float(*out.iso);
    out.e_label = "V_0";
    out.scale = GaussRat(1);
    out.normal_float = to_complex(p);
    return out;
  }
  const auto& rows = normal_form_table();

  if (auto g = reducing_isometry<GaussRat>(out.label, p.coords())) {
    const PlueckerPoint n = act(*g, p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].label != out.label) continue;
      const PlueckerPoint row = rows[k].point();
      if (!(row == n)) continue;
      out.iso = *g;
      out.float_iso = to_float(*g);
      out.row = static_cast<int>(k);
      for (int s = 0; s < 10; ++s) {
        if (row.coords()[s].is_zero()) continue;
        out.scale = n.coords()[s] / row.coords()[s];
        break;
      }
      out.normal_float = to_complex(row);
      break;
    }
    if (out.row < 0) throw std::logic_error("normal form of class " + out.label.to_string() + " matches no table row");
  } else {
    out.status = NormalFormResult::Status::irrational_orbit;
    auto gf = reducing_isometry<std::complex<double>>(out.label, to_complex(p));
    out.float_iso = *gf;
    const ComplexCoords n = act(*gf, to_complex(p));
    double best = 1e300;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].label != out.label) continue;
      const ComplexCoords row = to_complex(rows[k].point());
      int piv = 0;
      for (int s = 0; s < 10; ++s)
        if (std::abs(row[s]) > std::abs(row[piv])) piv = s;
      const std::complex<double> scale = n[piv] / row[piv];
      double err = 0.0, mag = 0.0;
      for (int s = 0; s < 10; ++s) {
        err = std::max(err, std::abs(n[s] - scale * row[s]));
        mag = std::max(mag, std::abs(n[s]));
      }
      if (err / mag < best) {
        best = err / mag;
        out.row = static_cast<int>(k);
        for (int s = 0; s < 10; ++s) out.normal_float[s] = n[s] / scale;
      }
    }
    if (out.row < 0 || best > 1e-8)
      throw std::logic_error("float normal form of class " + out.label.to_string() + " matches no table row");
  }
  out.e_label = rows[out.row].e_label;
  if (rows[out.row].printed) out.deviation = rows[out.row].note;
  return out;
}

}  // namespace supint
