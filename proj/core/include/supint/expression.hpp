#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "supint/gauss_rat.hpp"
#include "supint/poly.hpp"

namespace supint {

/// Truncated double power series in (z - z0, w - w0), coefficients c(i, j) for i + j <= order.
template <class T>
class BasicSeries {
 public:
  BasicSeries() = default;
  explicit BasicSeries(int order) : order_(order), c_((order + 1) * (order + 1), T(0)) {}

  int order() const { return order_; }
  T& at(int i, int j) { return c_[i * (order_ + 1) + j]; }
  const T& at(int i, int j) const { return c_[i * (order_ + 1) + j]; }

 private:
  int order_ = -1;
  std::vector<T> c_;
};

using ComplexSeries = BasicSeries<std::complex<double>>;
using ExactSeries = BasicSeries<GaussRat>;

/// Immutable expression tree for potentials. Constructors simplify locally
/// (constant folding, flattening, dropping neutral elements).
class Expr {
 public:
  enum class Kind { constant, z, w, sum, product, power };

  Expr() : Expr(GaussRat(0)) {}
  Expr(GaussRat c);  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr z();
  static Expr w();
  /// a z + b w + c
  static Expr affine(const GaussRat& a, const GaussRat& b, const GaussRat& c);
  static Expr from_poly(const BiPoly& p);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(const Expr& base, const mpq_class& exponent);

  /// Prefix grammar, see docs/expression_grammar.md. Throws ParseError.
  static Expr parse(std::string_view text);

  Kind kind() const;
  const GaussRat& constant_value() const;  // Kind::constant
  const std::vector<Expr>& args() const;   // sum, product, power (base first)
  const mpq_class& exponent() const;       // Kind::power

  bool is_constant() const { return kind() == Kind::constant; }
  bool is_zero() const { return is_constant() && constant_value().is_zero(); }
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  Expr diff(Var v, int order = 1) const;

  /// Principal branch for non-integer powers. Throws SingularSample on a
  /// negative power of zero or a non-finite value.
  std::complex<double> eval(std::complex<double> z0, std::complex<double> w0) const;

  /// Taylor coefficients at (z0, w0) through total degree `order`.
  ComplexSeries taylor(std::complex<double> z0, std::complex<double> w0, int order) const;

  /// Prefix form accepted by parse().
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

using PotentialExpression = Expr;

Expr pow(const Expr& base, const mpq_class& exponent);
Expr sqrt(const Expr& base);

}  // namespace supint
