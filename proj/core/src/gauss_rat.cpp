#include "supint/gauss_rat.hpp"

#include <array>
#include <cctype>
#include <cmath>

#include "supint/errors.hpp"

namespace supint {

namespace {

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '/') {
      if (seen_slash || !digits_before) throw ParseError("malformed rational '" + std::string(text) + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  mpq_class value;
  if (seen_slash) {
    const auto slash = body.find('/');
    mpz_class num(body.substr(0, slash), 10);
    mpz_class den(body.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(num, den);
    value.canonicalize();
  } else {
    value = mpq_class(mpz_class(body, 10));
  }
  return value;
}

std::string rational_string(const mpq_class& q) { return q.get_str(10); }

// Square root of a Gaussian integer u + iv, if it is a perfect square.
std::optional<std::array<mpz_class, 2>> gaussian_integer_sqrt(const mpz_class& u, const mpz_class& v) {
  if (u == 0 && v == 0) return std::array<mpz_class, 2>{0, 0};
  const mpz_class n = u * u + v * v;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  const mpz_class x2_twice = u + s;
  const mpz_class y2_twice = s - u;
  if (mpz_odd_p(x2_twice.get_mpz_t()) || mpz_odd_p(y2_twice.get_mpz_t())) return std::nullopt;
  const mpz_class x2 = x2_twice / 2;
  const mpz_class y2 = y2_twice / 2;
  if (!mpz_perfect_square_p(x2.get_mpz_t()) || !mpz_perfect_square_p(y2.get_mpz_t())) return std::nullopt;
  mpz_class x, y;
  mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
  mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
  if (v < 0) y = -y;
  if (x * x - y * y != u || 2 * x * y != v) return std::nullopt;
  return std::array<mpz_class, 2>{x, y};
}

// Cube root of a Gaussian integer u + iv. The norm fixes x^2 + y^2 exactly;
// a double-precision guess selects x, which is then verified exactly.
std::optional<std::array<mpz_class, 2>> gaussian_integer_cbrt(const mpz_class& u, const mpz_class& v) {
  if (u == 0 && v == 0) return std::array<mpz_class, 2>{0, 0};
  const mpz_class n = u * u + v * v;
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  const std::complex<double> m(u.get_d(), v.get_d());
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 3; ++k) {
    const std::complex<double> guess =
        std::polar(std::cbrt(std::abs(m)), (std::arg(m) + 2.0 * pi * k) / 3.0);
    for (double dx : {0.0, -1.0, 1.0}) {
      for (double dy : {0.0, -1.0, 1.0}) {
        const double gx = std::round(guess.real()) + dx;
        const double gy = std::round(guess.imag()) + dy;
        if (!std::isfinite(gx) || !std::isfinite(gy) || std::abs(gx) > 9.0e15 || std::abs(gy) > 9.0e15)
          return std::nullopt;
        const mpz_class x(gx), y(gy);
        if (x * x + y * y != r) continue;
        if (x * x * x - 3 * x * y * y == u && 3 * x * x * y - y * y * y == v)
          return std::array<mpz_class, 2>{x, y};
      }
    }
  }
  return std::nullopt;
}

// Writes x = N / d with N a Gaussian integer and d a positive integer.
void split_common_denominator(const GaussRat& x, mpz_class& nre, mpz_class& nim, mpz_class& d) {
  mpz_lcm(d.get_mpz_t(), x.re().get_den_mpz_t(), x.im().get_den_mpz_t());
  nre = x.re().get_num() * (d / x.re().get_den());
  nim = x.im().get_num() * (d / x.im().get_den());
}

}  // namespace

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRat::GaussRat(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

GaussRat GaussRat::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty number");
  if (s.back() != 'i') return GaussRat(parse_rational(s));

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1;
  } else if (imag_part == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_part);
  }
  mpq_class re = real_part.empty() ? mpq_class(0) : parse_rational(real_part);
  return GaussRat(re, im);
}

GaussRat GaussRat::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in GaussRat");
  return GaussRat(re_ / n, -im_ / n);
}

std::string GaussRat::to_string() const {
  if (is_real()) return rational_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_string(re_);
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += rational_string(im_) + "i";
  }
  return out;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in GaussRat");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRat pow(GaussRat base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GaussRat result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::optional<GaussRat> exact_sqrt(const GaussRat& x) {
  if (x.is_zero()) return GaussRat(0);
  mpz_class nre, nim, d;
  split_common_denominator(x, nre, nim, d);
  const auto root = gaussian_integer_sqrt(nre * d, nim * d);
  if (!root) return std::nullopt;
  return GaussRat(mpq_class((*root)[0], d), mpq_class((*root)[1], d));
}

std::optional<GaussRat> exact_cbrt(const GaussRat& x) {
  if (x.is_zero()) return GaussRat(0);
  mpz_class nre, nim, d;
  split_common_denominator(x, nre, nim, d);
  const mpz_class d2 = d * d;
  const auto root = gaussian_integer_cbrt(nre * d2, nim * d2);
  if (!root) return std::nullopt;
  return GaussRat(mpq_class((*root)[0], d), mpq_class((*root)[1], d));
}

}  // namespace supint
