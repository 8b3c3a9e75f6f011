#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supint {

/// Exact complex rational re + i*im. Every coefficient in the library lives
/// here; complex doubles appear only as an evaluation backend.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit GaussRat(mpq_class re, mpq_class im = 0);
  GaussRat(long num, long den);

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  /// Accepts "p", "p/q", and complex forms "a+bi", "a-b/ci", "bi", "i".
  /// Throws ParseError on malformed input or a zero denominator.
  static GaussRat parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |x|^2, always a non-negative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "p/q" for reals, "a+bi" otherwise; parse(to_string()) round-trips.
  std::string to_string() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Lexicographic on (re, im); used only for deterministic ordering.
  friend bool lex_less(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& x) {
    return os << x.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

GaussRat pow(GaussRat base, int exponent);

/// A square root in Q(i) when one exists.
std::optional<GaussRat> exact_sqrt(const GaussRat& x);
/// A cube root in Q(i) when one exists.
std::optional<GaussRat> exact_cbrt(const GaussRat& x);

inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }

}  // namespace supint
