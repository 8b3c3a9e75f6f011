#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <random>

#include "supint/killing.hpp"
#include "supint/pluecker.hpp"
#include "supint/poly.hpp"

namespace supint::test {

using cd = std::complex<double>;

// Sum of c z^i w^j from {c, i, j} triples.
inline BiPoly poly(std::initializer_list<std::array<long, 3>> terms) {
  BiPoly p;
  for (const auto& [c, i, j] : terms) p += BiPoly::monomial(GaussRat(c), static_cast<int>(i), static_cast<int>(j));
  return p;
}

inline GaussRat random_rat(std::mt19937_64& rng, int max_num = 7, int max_den = 5, bool gaussian = false) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  GaussRat x(num(rng), den(rng));
  if (gaussian) x += GaussRat(num(rng), den(rng)) * GaussRat::i();
  return x;
}

inline Sckt random_tensor(std::mt19937_64& rng, bool gaussian = false) {
  std::array<GaussRat, 5> v;
  for (auto& x : v) x = random_rat(rng, 7, 5, gaussian);
  return Sckt::from_vec(v);
}

inline PlueckerPoint random_point(std::mt19937_64& rng) {
  PlueckerPoint::Coords a;
  for (auto& x : a) x = random_rat(rng);
  if (a[3].is_zero()) a[3] = 1;
  return PlueckerPoint(a);
}

inline cd random_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  return {u(rng), u(rng)};
}

// A_z B_w - (D_z D_w - D D_zw) at a sample, from the ten coordinates with derivatives
// written out by hand.
inline cd local_residual_oracle(const PlueckerPoint& p, cd z, cd w) {
  auto a = [&](int i, int j) { return p.a(i, j).to_complex(); };
  cd D = 0, Dz = 0, Dw = 0, Dzw = 0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      if (i == 2 && j == 2) continue;
      const cd c = a(i, j);
      D += c * std::pow(z, i) * std::pow(w, j);
      if (i) Dz += c * double(i) * std::pow(z, i - 1) * std::pow(w, j);
      if (j) Dw += c * double(j) * std::pow(z, i) * std::pow(w, j - 1);
      if (i && j) Dzw += c * double(i * j) * std::pow(z, i - 1) * std::pow(w, j - 1);
    }
  const cd A = a(2, 1) * w * w + 2.0 * a(2, 0) * w + a(3, 0);
  const cd B = a(1, 2) * z * z + 2.0 * a(0, 2) * z + a(0, 3);
  return A * B - (Dz * Dw - D * Dzw);
}

// Pfaffian of the 4x4 skew matrix obtained by dropping row/column k, from the raw entries.
inline GaussRat pfaffian_oracle(const std::array<std::array<GaussRat, 5>, 5>& m, int k) {
  std::array<int, 4> r{};
  int n = 0;
  for (int s = 0; s < 5; ++s)
    if (s != k) r[n++] = s;
  return m[r[0]][r[1]] * m[r[2]][r[3]] - m[r[0]][r[2]] * m[r[1]][r[3]] + m[r[0]][r[3]] * m[r[1]][r[2]];
}

}  // namespace supint::test
