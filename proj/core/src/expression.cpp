#include "supint/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "supint/errors.hpp"

namespace supint {

struct Expr::Node {
  Kind kind;
  GaussRat value;
  std::vector<Expr> args;
  mpq_class exponent;
};

namespace {

using cd = std::complex<double>;

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

cd eval_power(cd b, const mpq_class& q) {
  if (b == cd{}) {
    if (sgn(q) < 0) throw SingularSample("negative power of zero");
    return sgn(q) == 0 ? cd{1} : cd{};
  }
  if (is_integer(q) && q.get_num().fits_slong_p()) return std::pow(b, static_cast<int>(q.get_num().get_si()));
  return std::exp(q.get_d() * std::log(b));
}

ComplexSeries add(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

ComplexSeries mul(const ComplexSeries& a, const ComplexSeries& b) {
  const int n = a.order();
  ComplexSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (a.at(i, j) == cd{}) continue;
      for (int k = 0; i + k <= n; ++k)
        for (int l = 0; i + j + k + l <= n; ++l) r.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
    }
  return r;
}

// P = F^q from F . E(P) = q P . E(F), E the Euler operator in the shifted variables.
ComplexSeries series_power(const ComplexSeries& f, const mpq_class& q) {
  const int n = f.order();
  if (is_integer(q) && sgn(q) >= 0) {
    ComplexSeries r(n), base = f;
    r.at(0, 0) = 1;
    for (mpz_class e = q.get_num(); e > 0; e /= 2) {
      if (e % 2 == 1) r = mul(r, base);
      if (e > 1) base = mul(base, base);
    }
    return r;
  }
  const cd f0 = f.at(0, 0);
  if (f0 == cd{}) throw SingularSample("power series of a negative or fractional power at a zero of the base");
  const double qd = q.get_d();
  ComplexSeries p(n);
  p.at(0, 0) = eval_power(f0, q);
  for (int d = 1; d <= n; ++d)
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      cd acc{};
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          const int k = a + b;
          if (k == d) continue;
          acc += (qd * (d - k) - k) * f.at(i - a, j - b) * p.at(a, b);
        }
      p.at(i, j) = acc / (static_cast<double>(d) * f0);
    }
  return p;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string token() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(s_.substr(start, pos_ - start));
  }

  GaussRat number() { return GaussRat::parse(token()); }

  mpq_class rational() {
    const GaussRat g = number();
    if (!g.is_real()) fail("exponent must be real");
    return g.re();
  }

  bool peek_close() {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ')';
  }

  void expect_close() {
    if (!peek_close()) fail("expected ')'");
    ++pos_;
  }

  Expr parse_expr() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] != '(') {
      const std::string t = token();
      if (t == "z") return Expr::z();
      if (t == "w") return Expr::w();
      if (t == "x") return Expr::z() + Expr::w();
      if (t == "y") return Expr::z() - Expr::w();
      return Expr(GaussRat::parse(t));
    }
    ++pos_;
    const std::string op = token();
    Expr out;
    if (op == "sum" || op == "prod") {
      std::vector<Expr> items;
      while (!peek_close()) items.push_back(parse_expr());
      if (items.empty()) fail(op + " needs at least one argument");
      out = op == "sum" ? Expr::sum(std::move(items)) : Expr::product(std::move(items));
    } else if (op == "pow") {
      Expr base = parse_expr();
      out = Expr::power(base, rational());
    } else if (op == "aff") {
      const GaussRat a = number(), b = number(), c = number();
      out = Expr::affine(a, b, c);
    } else if (op == "const") {
      out = Expr(number());
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect_close();
    return out;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

Expr::Expr(GaussRat c) : n_(std::make_shared<const Node>(Node{Kind::constant, std::move(c), {}, 0})) {}

Expr Expr::z() {
  static const Expr e(std::make_shared<const Node>(Node{Kind::z, 0, {}, 0}));
  return e;
}

Expr Expr::w() {
  static const Expr e(std::make_shared<const Node>(Node{Kind::w, 0, {}, 0}));
  return e;
}

Expr Expr::affine(const GaussRat& a, const GaussRat& b, const GaussRat& c) {
  return sum({product({Expr(a), z()}), product({Expr(b), w()}), Expr(c)});
}

Expr Expr::from_poly(const BiPoly& p) {
  std::vector<Expr> terms;
  for (const auto& [e, c] : p.terms())
    terms.push_back(product({Expr(c), power(z(), e.first), power(w(), e.second)}));
  return sum(std::move(terms));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  GaussRat constant(0);
  for (auto& t : terms) {
    if (t.kind() == Kind::sum) {
      for (const auto& s : t.args()) {
        if (s.is_constant())
          constant += s.constant_value();
        else
          flat.push_back(s);
      }
    } else if (t.is_constant()) {
      constant += t.constant_value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (!constant.is_zero()) flat.emplace_back(constant);
  if (flat.empty()) return Expr(0);
  if (flat.size() == 1) return flat.front();
  return Expr(std::make_shared<const Node>(Node{Kind::sum, 0, std::move(flat), 0}));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  GaussRat constant(1);
  auto take = [&](const Expr& f) {
    if (f.is_constant())
      constant *= f.constant_value();
    else
      flat.push_back(f);
  };
  for (const auto& f : factors) {
    if (f.kind() == Kind::product)
      for (const auto& g : f.args()) take(g);
    else
      take(f);
  }
  if (constant.is_zero()) return Expr(0);
  if (flat.empty()) return Expr(constant);
  if (!constant.is_one()) flat.insert(flat.begin(), Expr(constant));
  if (flat.size() == 1) return flat.front();
  return Expr(std::make_shared<const Node>(Node{Kind::product, 0, std::move(flat), 0}));
}

Expr Expr::power(const Expr& base, const mpq_class& exponent) {
  if (sgn(exponent) == 0) return Expr(1);
  if (exponent == 1) return base;
  if (base.is_constant() && is_integer(exponent) && exponent.get_num().fits_sint_p()) {
    if (base.is_zero() && sgn(exponent) < 0) throw SingularSample("negative power of zero");
    return Expr(supint::pow(base.constant_value(), static_cast<int>(exponent.get_num().get_si())));
  }
  if (base.is_one()) return Expr(1);
  // (b^p)^q = b^(pq) on the principal branch when q is an integer.
  if (base.kind() == Kind::power && is_integer(exponent)) {
    const mpq_class e = base.exponent() * exponent;
    return power(base.args().front(), e);
  }
  return Expr(std::make_shared<const Node>(Node{Kind::power, 0, {base}, exponent}));
}

Expr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

Expr::Kind Expr::kind() const { return n_->kind; }
const GaussRat& Expr::constant_value() const { return n_->value; }
const std::vector<Expr>& Expr::args() const { return n_->args; }
const mpq_class& Expr::exponent() const { return n_->exponent; }

Expr Expr::diff(Var v, int order) const {
  if (order <= 0) return *this;
  if (order > 1) return diff(v).diff(v, order - 1);
  switch (kind()) {
    case Kind::constant:
      return Expr(0);
    case Kind::z:
      return Expr(v == Var::z ? 1 : 0);
    case Kind::w:
      return Expr(v == Var::w ? 1 : 0);
    case Kind::sum: {
      std::vector<Expr> out;
      for (const auto& a : args()) out.push_back(a.diff(v));
      return sum(std::move(out));
    }
    case Kind::product: {
      std::vector<Expr> out;
      const auto& fs = args();
      for (size_t k = 0; k < fs.size(); ++k) {
        std::vector<Expr> term = fs;
        term[k] = fs[k].diff(v);
        out.push_back(product(std::move(term)));
      }
      return sum(std::move(out));
    }
    case Kind::power: {
      const Expr& b = args().front();
      const mpq_class q = exponent();
      return product({Expr(GaussRat(q)), power(b, q - 1), b.diff(v)});
    }
  }
  return Expr(0);
}

std::complex<double> Expr::eval(cd z0, cd w0) const {
  cd out;
  switch (kind()) {
    case Kind::constant:
      return constant_value().to_complex();
    case Kind::z:
      return z0;
    case Kind::w:
      return w0;
    case Kind::sum:
      out = 0;
      for (const auto& a : args()) out += a.eval(z0, w0);
      break;
    case Kind::product:
      out = 1;
      for (const auto& a : args()) out *= a.eval(z0, w0);
      break;
    case Kind::power:
      out = eval_power(args().front().eval(z0, w0), exponent());
      break;
  }
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) throw SingularSample("non-finite value");
  return out;
}

ComplexSeries Expr::taylor(cd z0, cd w0, int order) const {
  ComplexSeries r(order);
  switch (kind()) {
    case Kind::constant:
      r.at(0, 0) = constant_value().to_complex();
      return r;
    case Kind::z:
      r.at(0, 0) = z0;
      if (order >= 1) r.at(1, 0) = 1;
      return r;
    case Kind::w:
      r.at(0, 0) = w0;
      if (order >= 1) r.at(0, 1) = 1;
      return r;
    case Kind::sum:
      for (const auto& a : args()) r = add(r, a.taylor(z0, w0, order));
      return r;
    case Kind::product:
      r.at(0, 0) = 1;
      for (const auto& a : args()) r = mul(r, a.taylor(z0, w0, order));
      return r;
    case Kind::power:
      return series_power(args().front().taylor(z0, w0, order), exponent());
  }
  return r;
}

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::constant:
      return constant_value().to_string();
    case Kind::z:
      return "z";
    case Kind::w:
      return "w";
    case Kind::sum:
    case Kind::product: {
      std::string s = kind() == Kind::sum ? "(sum" : "(prod";
      for (const auto& a : args()) s += " " + a.to_string();
      return s + ")";
    }
    case Kind::power:
      return "(pow " + args().front().to_string() + " " + exponent().get_str() + ")";
  }
  return {};
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::product({a, Expr::power(b, -1)}); }
Expr Expr::operator-() const { return product({Expr(-1), *this}); }

Expr pow(const Expr& base, const mpq_class& exponent) { return Expr::power(base, exponent); }
Expr sqrt(const Expr& base) { return Expr::power(base, mpq_class(1, 2)); }

}  // namespace supint
