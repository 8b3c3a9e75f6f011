#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supint/gauss_rat.hpp"

namespace supint {

enum class Var { z, w };

inline Var other(Var v) { return v == Var::z ? Var::w : Var::z; }

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussRat> coeffs);
  UniPoly(GaussRat constant);  // NOLINT(google-explicit-constructor)

  static UniPoly x() { return UniPoly(std::vector<GaussRat>{0, 1}); }

  const std::vector<GaussRat>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  GaussRat coeff(int k) const;
  GaussRat leading() const { return c_.empty() ? GaussRat(0) : c_.back(); }

  GaussRat eval(const GaussRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  UniPoly monic() const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Sparse polynomial sum c_ij z^i w^j over the Gaussian rationals.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, GaussRat>;

  BiPoly() = default;
  BiPoly(GaussRat constant);  // NOLINT(google-explicit-constructor)
  BiPoly(int constant) : BiPoly(GaussRat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit BiPoly(Terms terms);

  static BiPoly z() { return monomial(1, 1, 0); }
  static BiPoly w() { return monomial(1, 0, 1); }
  static BiPoly monomial(const GaussRat& c, int i, int j);
  /// Embeds a univariate polynomial as a polynomial in the given variable.
  static BiPoly from_uni(const UniPoly& u, Var var);

  const Terms& terms() const { return c_; }
  GaussRat coeff(int i, int j) const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int degree(Var var) const;
  int total_degree() const;
  bool depends_on(Var var) const { return degree(var) > 0; }

  GaussRat eval(const GaussRat& z0, const GaussRat& w0) const;
  std::complex<double> eval(std::complex<double> z0, std::complex<double> w0) const;

  /// p(az*z + bz, aw*w + bw).
  BiPoly substitute(const GaussRat& az, const GaussRat& bz, const GaussRat& aw,
                    const GaussRat& bw) const;
  BiPoly swap_vars() const;
  /// Coefficient of var^k, as a polynomial in the other variable.
  UniPoly coeff_in(Var var, int k) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const GaussRat& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const GaussRat& s) { return a *= s; }
  friend BiPoly operator*(const GaussRat& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Human-readable form such as "z^2*w - 3/2*z + i".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const GaussRat& c);
  Terms c_;
};

BiPoly pow(const BiPoly& p, int exponent);
BiPoly diff(const BiPoly& p, Var var, int order = 1);

/// Gcd of the coefficients of p viewed as a polynomial in var; the result
/// is a monic polynomial in the other variable. Throws ZeroPolynomial.
UniPoly content_in(const BiPoly& p, Var var);

/// Exact division of p by a polynomial u in the variable other(var);
/// throws std::domain_error when the remainder is nonzero.
BiPoly divide_by(const BiPoly& p, const UniPoly& u, Var var_of_u);

std::complex<double> eval_complex(const BiPoly& p, std::complex<double> z0, std::complex<double> w0);

}  // namespace supint
