#include "supint/pluecker.hpp"

#include <algorithm>

#include "supint/errors.hpp"

namespace supint {

namespace {

// Entry (r, s) of the skew matrix holding each coordinate, r < s.
constexpr std::array<std::pair<int, int>, 10> kSlot = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

constexpr std::array<std::pair<int, int>, 10> kIndex = {{
    {3, 0}, {2, 0}, {1, 0}, {0, 0}, {2, 1}, {1, 1}, {0, 1}, {1, 2}, {0, 2}, {0, 3},
}};

}  // namespace

int coord_slot(int i, int j) {
  for (int k = 0; k < 10; ++k)
    if (kIndex[k].first == i && kIndex[k].second == j) return k;
  return -1;
}

std::string coord_name(Coord c) {
  const auto [i, j] = coord_index(c);
  return "a" + std::to_string(i) + std::to_string(j);
}

std::pair<int, int> coord_index(Coord c) { return kIndex[static_cast<int>(c)]; }

PlueckerPoint::PlueckerPoint(Coords a) : a_(std::move(a)) {
  if (std::all_of(a_.begin(), a_.end(), [](const GaussRat& x) { return x.is_zero(); }))
    throw InvalidPoint("all Pluecker coordinates vanish");
}

GaussRat PlueckerPoint::a(int i, int j) const {
  const int k = coord_slot(i, j);
  return k < 0 ? GaussRat(0) : a_[k];
}

PlueckerPoint PlueckerPoint::canonical() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return scaled(x.inverse());
  return *this;
}

PlueckerPoint PlueckerPoint::scaled(const GaussRat& s) const {
  if (s.is_zero()) throw InvalidPoint("scaling a point by zero");
  Coords out = a_;
  for (auto& x : out) x *= s;
  return PlueckerPoint(std::move(out));
}

bool operator==(const PlueckerPoint& p, const PlueckerPoint& q) {
  return p.canonical().same_coords(q.canonical());
}

std::string PlueckerPoint::to_string() const {
  std::string s = "[";
  for (int k = 0; k < 10; ++k) {
    if (k) s += ", ";
    s += a_[k].to_string();
  }
  return s + "]";
}

PlueckerPoint wedge(const Sckt& t1, const Sckt& t2) {
  const auto v1 = t1.vec();
  const auto v2 = t2.vec();
  PlueckerPoint::Coords a;
  bool any = false;
  for (int k = 0; k < 10; ++k) {
    const auto [r, s] = kSlot[k];
    a[k] = v1[r] * v2[s] - v1[s] * v2[r];
    any = any || !a[k].is_zero();
  }
  if (!any) throw DependentPair();
  return PlueckerPoint(std::move(a));
}

std::array<std::array<GaussRat, 5>, 5> skew_matrix(const PlueckerPoint& p) {
  std::array<std::array<GaussRat, 5>, 5> m{};
  for (int k = 0; k < 10; ++k) {
    const auto [r, s] = kSlot[k];
    m[r][s] = p.coords()[k];
    m[s][r] = -p.coords()[k];
  }
  return m;
}

std::array<GaussRat, 5> pfaffians(const PlueckerPoint& p) {
  const auto m = skew_matrix(p);
  std::array<GaussRat, 5> out;
  for (int omit = 0; omit < 5; ++omit) {
    std::array<int, 4> idx{};
    int n = 0;
    for (int k = 0; k < 5; ++k)
      if (k != omit) idx[n++] = k;
    const auto [a, b, c, d] = idx;
    out[omit] = m[a][b] * m[c][d] - m[a][c] * m[b][d] + m[a][d] * m[b][c];
  }
  return out;
}

bool on_grassmannian(const PlueckerPoint& p) {
  const auto pf = pfaffians(p);
  return std::all_of(pf.begin(), pf.end(), [](const GaussRat& x) { return x.is_zero(); });
}

TernaryTriple extract(const PlueckerPoint& p) {
  TernaryTriple t;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (i + j < 4) t.D += BiPoly::monomial(p.a(i, j), i, j);
  const GaussRat two(2);
  t.A = BiPoly::monomial(p.a(2, 1), 0, 2) + BiPoly::monomial(two * p.a(2, 0), 0, 1) + BiPoly(p.a(3, 0));
  t.B = BiPoly::monomial(p.a(1, 2), 2, 0) + BiPoly::monomial(two * p.a(0, 2), 1, 0) + BiPoly(p.a(0, 3));
  return t;
}

PlueckerPoint point_from(const BiPoly& D, const GaussRat& a30, const GaussRat& a03) {
  PlueckerPoint::Coords a;
  for (const auto& [e, c] : D.terms()) {
    const int k = coord_slot(e.first, e.second);
    if (k < 0 || e.first > 2 || e.second > 2)
      throw InvalidPoint("D has a monomial outside the Pluecker shape: " + D.to_string());
    a[k] = c;
  }
  a[static_cast<int>(Coord::a30)] = a30;
  a[static_cast<int>(Coord::a03)] = a03;
  return PlueckerPoint(std::move(a));
}

PlueckerPoint to_point(const TernaryTriple& t) {
  if (t.A.depends_on(Var::z) || t.A.degree(Var::w) > 2 || t.B.depends_on(Var::w) || t.B.degree(Var::z) > 2)
    throw InvalidPoint("A_z must be a quadratic in w and B_w a quadratic in z");
  const GaussRat two(2);
  const bool consistent = t.A.coeff(0, 2) == t.D.coeff(2, 1) && t.A.coeff(0, 1) == two * t.D.coeff(2, 0) &&
                          t.B.coeff(2, 0) == t.D.coeff(1, 2) && t.B.coeff(1, 0) == two * t.D.coeff(0, 2);
  if (!consistent) throw InvalidPoint("A_z/B_w are inconsistent with the coefficients of D");
  return point_from(t.D, t.A.coeff(0, 0), t.B.coeff(0, 0));
}

std::array<BiPoly, 5> local_pluecker_residuals(const TernaryTriple& t) {
  const BiPoly& D = t.D;
  const BiPoly Dz = diff(D, Var::z), Dw = diff(D, Var::w);
  const BiPoly Dzz = diff(Dz, Var::z), Dzw = diff(Dz, Var::w), Dww = diff(Dw, Var::w);
  const BiPoly Dzzw = diff(Dzz, Var::w), Dwwz = diff(Dww, Var::z);
  return {
      t.A * t.B - (Dz * Dw - D * Dzw),
      t.A * Dww - (Dw * Dzz - D * Dzzw),
      t.A * Dwwz - (Dzz * Dzw - Dz * Dzzw),
      t.B * Dzz - (Dz * Dww - D * Dwwz),
      t.B * Dzzw - (Dzw * Dww - Dw * Dwwz),
  };
}

}  // namespace supint
