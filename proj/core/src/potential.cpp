#include "supint/potential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "supint/errors.hpp"

namespace supint {

namespace {

using cd = std::complex<double>;

const GaussRat kThreeHalves(3, 2);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> x, wt;
  explicit GaussLegendre(int n) : x(n), wt(n) {
    for (int i = 0; i < n; ++i) {
      double r = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = r;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * r * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (r * p1 - p0) / (r * r - 1);
        const double dr = p1 / dp;
        r -= dr;
        if (std::abs(dr) < 1e-16) break;
      }
      x[i] = r;
      wt[i] = 2 / ((1 - r * r) * dp * dp);
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre gl(10);
  return gl;
}

cd eval_checked(const Expr& e, const Sample& s) {
  try {
    return e.eval(s.z, s.w);
  } catch (const SingularSample& ex) {
    throw PathThroughSingularity(std::string("path meets a singularity: ") + ex.what());
  }
}

struct OneForm {
  Expr fz, fw;
  cd along(const Sample& a, const Sample& b, double s) const {
    const Sample p{a.z + s * (b.z - a.z), a.w + s * (b.w - a.w)};
    return eval_checked(fz, p) * (b.z - a.z) + eval_checked(fw, p) * (b.w - a.w);
  }
  cd rule_on(const Sample& a, const Sample& b, double s0, double s1) const {
    const auto& gl = rule();
    cd acc{};
    const double h = (s1 - s0) / 2, m = (s1 + s0) / 2;
    for (size_t k = 0; k < gl.x.size(); ++k) acc += gl.wt[k] * along(a, b, m + h * gl.x[k]);
    return acc * h;
  }
  cd adaptive(const Sample& a, const Sample& b, double s0, double s1, cd whole, double tol, int depth) const {
    const double sm = (s0 + s1) / 2;
    const cd left = rule_on(a, b, s0, sm), right = rule_on(a, b, sm, s1);
    if (std::abs(left + right - whole) <= tol * std::max(1.0, std::abs(whole)) || depth > 40) return left + right;
    return adaptive(a, b, s0, sm, left, tol, depth + 1) + adaptive(a, b, sm, s1, right, tol, depth + 1);
  }
  cd integrate(const Sample& a, const Sample& b, double tol) const {
    return adaptive(a, b, 0, 1, rule_on(a, b, 0, 1), tol, 0);
  }
};

OneForm one_form(const Sckt& t, const Expr& V) {
  const auto f = companion_form(t, V);
  return {f[0], f[1]};
}

int exact_rank(std::vector<std::vector<GaussRat>> m) {
  int rank = 0;
  const size_t cols = m.empty() ? 0 : m.front().size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const GaussRat inv = m[rank][c].inverse();
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c].is_zero()) continue;
      const GaussRat f = m[r][c] * inv;
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

cd RationalEntry::eval(cd z0, cd w0) const {
  const cd d = eval_complex(den, z0, w0);
  if (d == cd{}) throw SingularSample("sample lies on D = 0");
  return eval_complex(num, z0, w0) / d;
}

CMatrix c_matrix(const TernaryTriple& t) {
  if (t.D.is_zero()) throw DegeneratePoint();
  return {{-diff(t.D, Var::z), t.D}, {t.A, t.D}, {t.B, t.D}, {-diff(t.D, Var::w), t.D}};
}

double prolongation_residual(const TernaryTriple& t, const Expr& V, const std::vector<Sample>& samples) {
  const CMatrix c = c_matrix(t);
  const Expr Vz = V.diff(Var::z), Vw = V.diff(Var::w);
  const Expr Vzz = Vz.diff(Var::z), Vww = Vw.diff(Var::w);
  double worst = 0;
  for (const auto& s : samples) {
    const cd c11 = c.c11.eval(s.z, s.w), c12 = c.c12.eval(s.z, s.w);
    const cd c21 = c.c21.eval(s.z, s.w), c22 = c.c22.eval(s.z, s.w);
    const cd vz = Vz.eval(s.z, s.w), vw = Vw.eval(s.z, s.w);
    const cd r1 = Vzz.eval(s.z, s.w) - 1.5 * (c11 * vz + c12 * vw);
    const cd r2 = Vww.eval(s.z, s.w) - 1.5 * (c21 * vz + c22 * vw);
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
  }
  return worst;
}

bool FibreBasis::consistent() const {
  return std::all_of(mismatches.begin(), mismatches.end(), [](const auto& m) { return m.empty(); });
}

ExactSeries solve_series(const TernaryTriple& t, const GaussRat& z0, const GaussRat& w0, int order,
                         const std::array<GaussRat, 4>& seeds, std::vector<SeriesMismatch>* mismatches) {
  // Shift the base point to the origin; both equations are multiplied through by D.
  const BiPoly D = t.D.substitute(1, z0, 1, w0);
  const BiPoly A = t.A.substitute(1, z0, 1, w0);
  const BiPoly B = t.B.substitute(1, z0, 1, w0);
  const BiPoly Dz = diff(D, Var::z), Dw = diff(D, Var::w);
  const GaussRat d00 = D.coeff(0, 0);
  if (d00.is_zero()) throw SingularBase();
  const GaussRat d00_inv = d00.inverse();

  ExactSeries v(order);
  v.at(0, 0) = seeds[0];
  if (order >= 1) {
    v.at(1, 0) = seeds[1];
    v.at(0, 1) = seeds[2];
  }
  if (order >= 2) v.at(1, 1) = seeds[3];

  auto get = [&](int i, int j) { return (i < 0 || j < 0) ? GaussRat(0) : v.at(i, j); };

  // Coefficient of s^m t^n in D V_zz = (3/2)(-D_z V_z + A V_w), solved for v_{m+2,n}.
  auto from_z = [&](int m, int n) {
    GaussRat rhs(0);
    for (const auto& [e, c] : Dz.terms())
      rhs -= c * GaussRat(m - e.first + 1) * get(m - e.first + 1, n - e.second);
    for (const auto& [e, c] : A.terms())
      rhs += c * GaussRat(n - e.second + 1) * get(m - e.first, n - e.second + 1);
    rhs *= kThreeHalves;
    for (const auto& [e, c] : D.terms()) {
      if (e.first == 0 && e.second == 0) continue;
      const int i = m - e.first + 2;
      rhs -= c * GaussRat(i * (i - 1)) * get(i, n - e.second);
    }
    return rhs * d00_inv / GaussRat((m + 2) * (m + 1));
  };
  // Coefficient of s^m t^n in D V_ww = (3/2)(B V_z - D_w V_w), solved for v_{m,n+2}.
  auto from_w = [&](int m, int n) {
    GaussRat rhs(0);
    for (const auto& [e, c] : B.terms())
      rhs += c * GaussRat(m - e.first + 1) * get(m - e.first + 1, n - e.second);
    for (const auto& [e, c] : Dw.terms())
      rhs -= c * GaussRat(n - e.second + 1) * get(m - e.first, n - e.second + 1);
    rhs *= kThreeHalves;
    for (const auto& [e, c] : D.terms()) {
      if (e.first == 0 && e.second == 0) continue;
      const int j = n - e.second + 2;
      rhs -= c * GaussRat(j * (j - 1)) * get(m - e.first, j);
    }
    return rhs * d00_inv / GaussRat((n + 2) * (n + 1));
  };

  for (int d = 2; d <= order; ++d) {
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      if (i >= 2 && j >= 2) {
        const GaussRat a = from_z(i - 2, j), b = from_w(i, j - 2);
        if (a != b && mismatches) mismatches->push_back({i, j, a, b});
        v.at(i, j) = a;
      } else if (i >= 2) {
        v.at(i, j) = from_z(i - 2, j);
      } else if (j >= 2) {
        v.at(i, j) = from_w(i, j - 2);
      }
    }
  }
  return v;
}

FibreBasis solve_fibre_series(const TernaryTriple& t, const GaussRat& z0, const GaussRat& w0, int order) {
  if (order < 4) throw std::invalid_argument("series order must be at least 4");
  FibreBasis f;
  f.z0 = z0;
  f.w0 = w0;
  f.order = order;
  std::vector<std::vector<GaussRat>> rows;
  for (int k = 0; k < 4; ++k) {
    std::array<GaussRat, 4> seeds{0, 0, 0, 0};
    seeds[k] = 1;
    f.basis[k] = solve_series(t, z0, w0, order, seeds, &f.mismatches[k]);
    std::vector<GaussRat> row;
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j) row.push_back(f.basis[k].at(i, j));
    rows.push_back(std::move(row));
  }
  f.rank = exact_rank(std::move(rows));
  return f;
}

double series_match(const FibreBasis& fibre, const Expr& V, int order) {
  order = std::min(order, fibre.order);
  const ComplexSeries s = V.taylor(fibre.z0.to_complex(), fibre.w0.to_complex(), order);
  const std::array<cd, 4> seeds = {s.at(0, 0), s.at(1, 0), s.at(0, 1), s.at(1, 1)};
  double worst = 0, scale = 1;
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) {
      cd fit{};
      for (int k = 0; k < 4; ++k) fit += seeds[k] * fibre.basis[k].at(i, j).to_complex();
      worst = std::max(worst, std::abs(fit - s.at(i, j)));
      scale = std::max(scale, std::abs(s.at(i, j)));
    }
  return worst / scale;
}

double bd_residual(const Sckt& t, const Expr& V, const std::vector<Sample>& samples) {
  const ScktField f = to_field(t);
  const Expr Lzz = Expr::from_poly(f.L_zz), Lww = Expr::from_poly(f.L_ww);
  const Expr lz = Expr::from_poly(f.lambda_z), lw = Expr::from_poly(f.lambda_w);
  const Expr Vz = V.diff(Var::z), Vw = V.diff(Var::w);
  const Expr r = Lww * Vz.diff(Var::z) - Lzz * Vw.diff(Var::w) - Expr(kThreeHalves) * (lz * Vw - lw * Vz);
  double worst = 0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(r.eval(s.z, s.w)));
  return worst;
}

std::array<Expr, 2> companion_form(const Sckt& t, const Expr& V) {
  const KillingTensorField k = to_killing(t);
  const Expr Kzz = Expr::from_poly(k.K_zz), Kzw = Expr::from_poly(k.K_zw), Kww = Expr::from_poly(k.K_ww);
  const Expr Vz = V.diff(Var::z), Vw = V.diff(Var::w);
  return {Kzw * Vz + Kzz * Vw, Kww * Vz + Kzw * Vw};
}

CompanionResult recover_companion_potential(const Sckt& t, const Expr& V, const std::vector<Sample>& path,
                                            double tol) {
  const OneForm form = one_form(t, V);
  const Expr curl = form.fw.diff(Var::z) - form.fz.diff(Var::w);
  CompanionResult out;
  if (path.empty()) return out;
  out.values.push_back(0);
  out.closedness = std::abs(eval_checked(curl, path.front()));
  for (size_t k = 1; k < path.size(); ++k) {
    const Sample& a = path[k - 1];
    const Sample& b = path[k];
    out.values.push_back(out.values.back() + form.integrate(a, b, tol));
    const Sample mid{(a.z + b.z) / 2.0, (a.w + b.w) / 2.0};
    out.closedness = std::max({out.closedness, std::abs(eval_checked(curl, mid)), std::abs(eval_checked(curl, b))});
  }
  return out;
}

double loop_defect(const Sckt& t, const Expr& V, const std::vector<Sample>& loop, double tol) {
  if (loop.size() < 2) return 0;
  const OneForm form = one_form(t, V);
  cd acc{};
  for (size_t k = 0; k < loop.size(); ++k) acc += form.integrate(loop[k], loop[(k + 1) % loop.size()], tol);
  return std::abs(acc);
}

double PoissonReport::max() const { return std::max(linear_max[0], linear_max[1]); }

PoissonReport poisson_verify(const Sckt& t1, const Sckt& t2, const Expr& V, const std::vector<PhasePoint>& samples,
                             double step) {
  PoissonReport rep;
  const std::array<const Sckt*, 2> ts = {&t1, &t2};
  const Expr Vz = V.diff(Var::z), Vw = V.diff(Var::w);
  for (int a = 0; a < 2; ++a) {
    const KillingTensorField k = to_killing(*ts[a]);
    rep.cubic_zero[a] = killing_residual(k).is_zero();
    const OneForm form = one_form(*ts[a], V);
    if (samples.empty()) continue;
    // V^(alpha)(q): integral of K dV from a fixed reference along z first, then along w.
    // Finite differences of this function see the curl of K dV when it is not closed.
    const Sample ref{samples.front().z - 0.25, samples.front().w - 0.25};
    auto companion = [&](cd z, cd w) {
      const Sample corner{z, ref.w};
      return form.integrate(ref, corner, 1e-14) + form.integrate(corner, {z, w}, 1e-14);
    };
    for (const auto& q : samples) {
      auto grad = [&](cd dz, cd dw) {
        std::array<cd, 4> f;
        const std::array<double, 4> ks = {-2, -1, 1, 2};
        for (int i = 0; i < 4; ++i) f[i] = companion(q.z + ks[i] * step * dz, q.w + ks[i] * step * dw);
        return (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * step);
      };
      const cd gz = grad(1, 0), gw = grad(0, 1);
      const cd kzz = eval_complex(k.K_zz, q.z, q.w), kzw = eval_complex(k.K_zw, q.z, q.w);
      const cd kww = eval_complex(k.K_ww, q.z, q.w);
      const cd vz = Vz.eval(q.z, q.w), vw = Vw.eval(q.z, q.w);
      // Raised indices: K^zz = K_ww, K^zw = K_zw, K^ww = K_zz.
      const cd kv = -2.0 * (kww * q.p_z * vz + kzw * (q.p_w * vz + q.p_z * vw) + kzz * q.p_w * vw);
      const cd vg = 2.0 * (q.p_w * gz + q.p_z * gw);
      rep.linear_max[a] = std::max(rep.linear_max[a], std::abs(kv + vg));
    }
  }
  return rep;
}

PointFit fit_point(const std::vector<Expr>& potentials, const std::vector<Sample>& samples, double tol) {
  using Mat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;
  const int rows = static_cast<int>(2 * potentials.size() * samples.size());
  Mat m = Mat::Zero(rows, 10);
  int r = 0;
  for (const auto& V : potentials) {
    const Expr Vz = V.diff(Var::z), Vw = V.diff(Var::w);
    const Expr Vzz = Vz.diff(Var::z), Vww = Vw.diff(Var::w);
    for (const auto& s : samples) {
      const cd vz = Vz.eval(s.z, s.w), vw = Vw.eval(s.z, s.w);
      const cd vzz = Vzz.eval(s.z, s.w), vww = Vww.eval(s.z, s.w);
      // D V_zz + (3/2) D_z V_z - (3/2) A V_w = 0 and D V_ww + (3/2) D_w V_w - (3/2) B V_z = 0.
      for (int k = 0; k < 10; ++k) {
        const auto [i, j] = coord_index(kCoords[k]);
        if (i <= 2 && j <= 2) {
          const cd mono = std::pow(s.z, i) * std::pow(s.w, j);
          const cd mz = i ? double(i) * std::pow(s.z, i - 1) * std::pow(s.w, j) : cd{};
          const cd mw = j ? double(j) * std::pow(s.z, i) * std::pow(s.w, j - 1) : cd{};
          m(r, k) += mono * vzz + 1.5 * mz * vz;
          m(r + 1, k) += mono * vww + 1.5 * mw * vw;
        }
      }
      auto col = [](Coord c) { return static_cast<int>(c); };
      m(r, col(Coord::a21)) -= 1.5 * s.w * s.w * vw;
      m(r, col(Coord::a20)) -= 1.5 * 2.0 * s.w * vw;
      m(r, col(Coord::a30)) -= 1.5 * vw;
      m(r + 1, col(Coord::a12)) -= 1.5 * s.z * s.z * vz;
      m(r + 1, col(Coord::a02)) -= 1.5 * 2.0 * s.z * vz;
      m(r + 1, col(Coord::a03)) -= 1.5 * vz;
      r += 2;
    }
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  PointFit fit;
  const auto& sv = svd.singularValues();
  for (int k = 0; k < sv.size(); ++k) fit.singular_values.push_back(sv(k));
  while (fit.singular_values.size() < 10) fit.singular_values.push_back(0);
  const double top = fit.singular_values.front();
  for (double s : fit.singular_values)
    if (s <= tol * top) ++fit.nullity;
  const auto v = svd.matrixV().col(9);
  int big = 0;
  for (int k = 1; k < 10; ++k)
    if (std::abs(v(k)) > std::abs(v(big)) * (1 + 1e-9)) big = k;
  for (int k = 0; k < 10; ++k) fit.coords[k] = v(k) / v(big);
  return fit;
}

}  // namespace supint
