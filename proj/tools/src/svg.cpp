#include "supint_io/svg.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace supint::io {

namespace {

using cd = std::complex<double>;

constexpr double kHalf = 3.0;  // viewport [-3, 3]^2
constexpr double kPx = 400.0;

double sx(double x) { return (x + kHalf) / (2 * kHalf) * kPx; }
double sy(double y) { return (kHalf - y) / (2 * kHalf) * kPx; }

struct RealLine {
  // p x + q y + r = 0
  double p, q, r;
};

// Clips p x + q y + r = 0 to the viewport.
bool clip(const RealLine& l, double& x0, double& y0, double& x1, double& y1) {
  if (std::abs(l.q) > std::abs(l.p)) {
    x0 = -kHalf;
    x1 = kHalf;
    y0 = -(l.p * x0 + l.r) / l.q;
    y1 = -(l.p * x1 + l.r) / l.q;
  } else {
    if (l.p == 0) return false;
    y0 = -kHalf;
    y1 = kHalf;
    x0 = -(l.q * y0 + l.r) / l.p;
    x1 = -(l.q * y1 + l.r) / l.p;
  }
  return true;
}

}  // namespace

std::string arrangement_svg(const LineArrangement& arr, RealForm form, const std::string& title) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kPx << "\" height=\"" << kPx + 40
     << "\" viewBox=\"0 0 " << kPx << " " << kPx + 40 << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kPx << "\" height=\"" << kPx
     << "\" fill=\"white\" stroke=\"#999\"/>\n";
  os << "  <line x1=\"" << sx(-kHalf) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(kHalf) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#ddd\"/>\n";
  os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(-kHalf) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(kHalf)
     << "\" stroke=\"#ddd\"/>\n";
  os << "  <text x=\"6\" y=\"" << kPx + 16 << "\" font-size=\"12\">" << title << " ("
     << (form == RealForm::euclidean ? "euclidean: z = x+iy, w = x-iy" : "minkowski: z = x, w = y")
     << ")</text>\n";
  int note = 0;
  for (const auto& f : arr.factors) {
    const auto& c = f.form.approx;  // a z + b w + c
    // Substitute the real slice: a z + b w + c = (alpha x + beta y + gamma) with complex alpha, beta, gamma.
    cd alpha, beta;
    if (form == RealForm::euclidean) {
      alpha = c[0] + c[1];
      beta = cd(0, 1) * (c[0] - c[1]);
    } else {
      alpha = c[0];
      beta = c[1];
    }
    const cd gamma = c[2];
    const RealLine re{alpha.real(), beta.real(), gamma.real()};
    const RealLine im{alpha.imag(), beta.imag(), gamma.imag()};
    const double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma), 1e-300});
    const double det = re.p * im.q - re.q * im.p;
    auto proportional = [&](const RealLine& a, const RealLine& b) {
      return std::abs(a.p * b.q - a.q * b.p) + std::abs(a.p * b.r - a.r * b.p) + std::abs(a.q * b.r - a.r * b.q) <=
             1e-12 * scale * scale;
    };
    const bool re_zero = std::abs(re.p) + std::abs(re.q) <= 1e-12 * scale;
    const bool im_zero = std::abs(im.p) + std::abs(im.q) <= 1e-12 * scale;
    std::string style = "stroke=\"black\" stroke-width=\"1.5\"";
    RealLine draw = re_zero ? im : re;
    std::string label = f.form.to_string();
    if (!re_zero && !im_zero && !proportional(re, im)) {
      if (std::abs(det) > 1e-12 * scale * scale) {
        // One real point only.
        const double x = (re.q * im.r - im.q * re.r) / det;
        const double y = (im.p * re.r - re.p * im.r) / det;
        os << "  <circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"black\"/>\n";
        label += ": isolated real point";
      } else {
        label += ": no real points";
      }
      style = "stroke=\"#666\" stroke-width=\"1\" stroke-dasharray=\"6,4\"";
    } else if (re_zero && im_zero) {
      continue;  // constant factor
    }
    double x0, y0, x1, y1;
    if (clip(draw, x0, y0, x1, y1)) {
      const int strokes = f.multiplicity >= 2 ? 2 : 1;
      const double n = std::hypot(draw.p, draw.q);
      for (int s = 0; s < strokes; ++s) {
        // Contiguous parallel strokes, offset 1.5 px along the normal.
        const double off = strokes == 2 ? (s == 0 ? -1.5 : 1.5) : 0.0;
        const double ox = off * draw.p / n, oy = -off * draw.q / n;
        os << "  <line x1=\"" << sx(x0) + ox << "\" y1=\"" << sy(y0) + oy << "\" x2=\"" << sx(x1) + ox
           << "\" y2=\"" << sy(y1) + oy << "\" " << style << "/>\n";
      }
    }
    os << "  <text x=\"6\" y=\"" << 14 + 14 * note++ << "\" font-size=\"11\">" << label
       << (f.multiplicity > 1 ? " (double)" : "") << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace supint::io
