#include "supint/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "supint/errors.hpp"

namespace supint {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(GaussRat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

GaussRat UniPoly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
  std::complex<double> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  const GaussRat inv = c_.back().inverse();
  std::vector<GaussRat> out;
  out.reserve(c_.size());
  for (const auto& a : c_) out.push_back(a * inv);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussRat> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * GaussRat(static_cast<long>(k)));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  std::vector<GaussRat> out;
  for (const auto& a : c_) out.push_back(-a);
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<GaussRat> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(char var) const {
  BiPoly::Terms terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) terms[{static_cast<int>(k), 0}] = c_[k];
  std::string s = BiPoly(terms).to_string();
  if (var != 'z') std::replace(s.begin(), s.end(), 'z', var);
  return s;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussRat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<GaussRat> quo(a.degree() - db + 1);
  const GaussRat lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    const GaussRat f = rem[k] * lead_inv;
    quo[k - db] = f;
    for (int t = 0; t <= db; ++t) rem[k - db + t] -= f * b.coeffs()[t];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(GaussRat constant) {
  if (!constant.is_zero()) c_.emplace(Exponent{0, 0}, std::move(constant));
}

BiPoly::BiPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (e.first < 0 || e.second < 0) throw std::invalid_argument("negative exponent");
    if (!c.is_zero()) c_.emplace(e, std::move(c));
  }
}

BiPoly BiPoly::monomial(const GaussRat& c, int i, int j) {
  Terms t;
  t[{i, j}] = c;
  return BiPoly(std::move(t));
}

BiPoly BiPoly::from_uni(const UniPoly& u, Var var) {
  Terms t;
  for (int k = 0; k <= u.degree(); ++k) {
    if (u.coeff(k).is_zero()) continue;
    t[var == Var::z ? Exponent{k, 0} : Exponent{0, k}] = u.coeff(k);
  }
  return BiPoly(std::move(t));
}

GaussRat BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? GaussRat(0) : it->second;
}

bool BiPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == Exponent{0, 0});
}

int BiPoly::degree(Var var) const {
  int d = -1;
  for (const auto& [e, c] : c_) d = std::max(d, var == Var::z ? e.first : e.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : c_) d = std::max(d, e.first + e.second);
  return d;
}

void BiPoly::add_term(const Exponent& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

GaussRat BiPoly::eval(const GaussRat& z0, const GaussRat& w0) const {
  GaussRat acc;
  for (const auto& [e, c] : c_) acc += c * pow(z0, e.first) * pow(w0, e.second);
  return acc;
}

std::complex<double> BiPoly::eval(std::complex<double> z0, std::complex<double> w0) const {
  // Horner in w over rows that are Horner polynomials in z.
  const int dw = degree(Var::w);
  if (dw < 0) return {};
  std::vector<std::vector<std::complex<double>>> rows(dw + 1);
  for (const auto& [e, c] : c_) {
    auto& row = rows[e.second];
    if (static_cast<int>(row.size()) <= e.first) row.resize(e.first + 1);
    row[e.first] = c.to_complex();
  }
  std::complex<double> acc;
  for (int j = dw; j >= 0; --j) {
    std::complex<double> r;
    for (auto it = rows[j].rbegin(); it != rows[j].rend(); ++it) r = r * z0 + *it;
    acc = acc * w0 + r;
  }
  return acc;
}

std::complex<double> eval_complex(const BiPoly& p, std::complex<double> z0, std::complex<double> w0) {
  return p.eval(z0, w0);
}

BiPoly BiPoly::substitute(const GaussRat& az, const GaussRat& bz, const GaussRat& aw,
                          const GaussRat& bw) const {
  const BiPoly zs = az * z() + BiPoly(bz);
  const BiPoly ws = aw * w() + BiPoly(bw);
  const int dz = std::max(degree(Var::z), 0);
  const int dw = std::max(degree(Var::w), 0);
  std::vector<BiPoly> zp(dz + 1), wp(dw + 1);
  zp[0] = wp[0] = BiPoly(1);
  for (int k = 1; k <= dz; ++k) zp[k] = zp[k - 1] * zs;
  for (int k = 1; k <= dw; ++k) wp[k] = wp[k - 1] * ws;
  BiPoly out;
  for (const auto& [e, c] : c_) out += c * (zp[e.first] * wp[e.second]);
  return out;
}

BiPoly BiPoly::swap_vars() const {
  Terms t;
  for (const auto& [e, c] : c_) t[{e.second, e.first}] = c;
  return BiPoly(std::move(t));
}

UniPoly BiPoly::coeff_in(Var var, int k) const {
  std::vector<GaussRat> out;
  for (const auto& [e, c] : c_) {
    const int here = var == Var::z ? e.first : e.second;
    const int there = var == Var::z ? e.second : e.first;
    if (here != k) continue;
    if (static_cast<int>(out.size()) <= there) out.resize(there + 1);
    out[there] = c;
  }
  return UniPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const GaussRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

BiPoly pow(const BiPoly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  BiPoly out(1);
  for (int k = 0; k < exponent; ++k) out = out * p;
  return out;
}

BiPoly diff(const BiPoly& p, Var var, int order) {
  BiPoly cur = p;
  for (int n = 0; n < order; ++n) {
    BiPoly::Terms t;
    for (const auto& [e, c] : cur.terms()) {
      const int k = var == Var::z ? e.first : e.second;
      if (k == 0) continue;
      const BiPoly::Exponent ne = var == Var::z ? BiPoly::Exponent{k - 1, e.second}
                                                : BiPoly::Exponent{e.first, k - 1};
      t[ne] = c * GaussRat(k);
    }
    cur = BiPoly(std::move(t));
  }
  return cur;
}

UniPoly content_in(const BiPoly& p, Var var) {
  if (p.is_zero()) throw ZeroPolynomial();
  UniPoly g;
  for (int k = 0; k <= p.degree(var); ++k) {
    g = gcd(g, p.coeff_in(var, k));
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly divide_by(const BiPoly& p, const UniPoly& u, Var var_of_u) {
  const Var outer = other(var_of_u);
  BiPoly out;
  for (int k = 0; k <= p.degree(outer); ++k) {
    auto [q, r] = divmod(p.coeff_in(outer, k), u);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    BiPoly part = BiPoly::from_uni(q, var_of_u);
    out += part * BiPoly::monomial(1, outer == Var::z ? k : 0, outer == Var::w ? k : 0);
  }
  return out;
}

namespace {

std::string monomial_string(int i, int j) {
  std::string s;
  auto power = [](const char* v, int k) {
    return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
  };
  if (i > 0) s += power("z", i);
  if (j > 0) s += (s.empty() ? "" : "*") + power("w", j);
  return s;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  // Highest total degree first, z before w.
  std::vector<std::pair<Exponent, GaussRat>> order(c_.begin(), c_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : order) {
    const std::string mono = monomial_string(e.first, e.second);
    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const GaussRat mag = negative ? -c : c;
      if (!(mag.is_one() && !mono.empty())) coef = mag.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (!coef.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

}  // namespace supint
