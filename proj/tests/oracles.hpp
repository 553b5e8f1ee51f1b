#pragma once

// Test-only reference computations. None of these call into the library's
// root enumeration or search code; they recompute from first principles.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "catsys/root_system.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline std::vector<catsys::AdeType> types_up_to_rank8() {
  using catsys::AdeType;
  using catsys::Family;
  std::vector<AdeType> out;
  for (int n = 1; n <= 8; ++n) out.push_back(AdeType::make(Family::A, n));
  for (int n = 4; n <= 8; ++n) out.push_back(AdeType::make(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(AdeType::make(Family::E, n));
  return out;
}

inline std::size_t formula_root_count(const catsys::AdeType& t) {
  const std::size_t n = t.size();
  switch (t.family()) {
    case catsys::Family::A: return n * (n + 1) / 2;
    case catsys::Family::D: return n * (n - 1);
    case catsys::Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

/// Cartan matrix written out by hand for E_n (Bourbaki labels).
inline std::vector<std::vector<int>> e_cartan(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  link(1, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(2, 4);
  if (n >= 7) link(6, 7);
  if (n >= 8) link(7, 8);
  return c;
}

/// Vectors alpha >= 0 with each coefficient <= box and alpha^T C alpha = 2.
/// Every positive root of E_n has coefficients at most 6.
inline std::size_t count_norm2_vectors(const std::vector<std::vector<int>>& c, int box) {
  const std::size_t n = c.size();
  std::vector<int> a(n, 0);
  std::size_t count = 0;
  for (;;) {
    std::size_t k = 0;
    while (k < n && a[k] == box) a[k++] = 0;
    if (k == n) break;
    ++a[k];
    int q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += a[i] * c[i][j] * a[j];
    if (q == 2) ++count;
  }
  return count;
}

/// Number of permutations of {0..m-1} with exactly k inversions, for every k.
/// The Weyl group of A_{m-1} is S_m and Coxeter length is the inversion count.
inline std::vector<std::size_t> inversion_distribution(std::size_t m) {
  std::vector<std::size_t> dist{1};
  for (std::size_t j = 1; j <= m; ++j) {  // Mahonian recurrence: multiply by 1 + q + ... + q^{j-1}
    std::vector<std::size_t> next(dist.size() + j - 1, 0);
    for (std::size_t a = 0; a < dist.size(); ++a)
      for (std::size_t b = 0; b < j; ++b) next[a + b] += dist[a];
    dist = std::move(next);
  }
  return dist;
}

/// |W(A_n)| = (n+1)!, |W(D_n)| = 2^{n-1} n!
inline std::size_t weyl_order(const catsys::AdeType& t) {
  std::size_t f = 1;
  const std::size_t n = t.size();
  switch (t.family()) {
    case catsys::Family::A:
      for (std::size_t k = 2; k <= n + 1; ++k) f *= k;
      return f;
    case catsys::Family::D:
      for (std::size_t k = 2; k <= n; ++k) f *= k;
      return f << (n - 1);
    case catsys::Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
  }
  return 0;
}

/// A_2 ratio computed directly: Delta^+ = {e1, e2, e1+e2}, h/n = 3/2.
inline double a2_ratio(Complex z1, Complex z2) {
  const double sys = std::min(std::abs(z1), std::abs(z2));
  const double vol = (std::norm(z1) + std::norm(z2) + std::norm(z1 + z2)) / 3.0;
  return sys * sys / vol;
}

struct GridBest {
  double ratio = 0;
  double phi1 = 0;
  double phi2 = 0;
  double log_r = 0;
};

/// Dense grid over (phi_1, phi_2, log r_2/r_1) with |Z_1| = 1. Phases run over
/// [delta, 1] so the semi-closed heart boundary is included.
inline GridBest a2_grid_search(std::size_t phase_steps = 400, std::size_t log_steps = 81, double log_range = 2.0,
                               double delta = 1e-4) {
  GridBest best;
  const double pi = 3.14159265358979323846;
  std::vector<double> phis(phase_steps + 1);
  for (std::size_t k = 0; k <= phase_steps; ++k)
    phis[k] = delta + (1.0 - delta) * static_cast<double>(k) / static_cast<double>(phase_steps);
  for (std::size_t l = 0; l < log_steps; ++l) {
    const double lr = -log_range + 2 * log_range * static_cast<double>(l) / static_cast<double>(log_steps - 1);
    const double r2 = std::exp(lr);
    for (const double p1 : phis) {
      const Complex z1 = std::polar(1.0, pi * p1);
      for (const double p2 : phis) {
        const double r = a2_ratio(z1, std::polar(r2, pi * p2));
        if (r > best.ratio) best = {r, p1, p2, lr};
      }
    }
  }
  return best;
}

}  // namespace oracle
