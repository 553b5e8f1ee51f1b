#include "catsys/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "catsys/errors.hpp"

namespace catsys {

namespace {

void require_vertex(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) {
    std::ostringstream os;
    os << "vertex index " << i + 1 << " out of range 1.." << rs.rank();
    throw ValidationError(os.str());
  }
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

CentralCharge act_scaling(const CentralCharge& z, Complex zeta) {
  const Complex factor = std::exp(Complex(0, -std::numbers::pi) * zeta);
  CentralCharge out = z;
  for (auto& v : out.values) v *= factor;
  return out;
}

ClassVector reflect_class(const RootSystem& rs, std::size_t i, const ClassVector& alpha) {
  require_vertex(rs, i);
  if (alpha.size() != rs.rank()) throw ValidationError("class vector length does not match rank");
  int p = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) p += rs.cartan(i, j) * alpha[j];
  ClassVector out = alpha;
  out[i] -= p;
  return out;
}

CentralCharge reflect_charge(const RootSystem& rs, std::size_t i, const CentralCharge& z) {
  require_vertex(rs, i);
  if (z.size() != rs.rank()) throw ValidationError("central charge length does not match rank");
  CentralCharge out = z;
  for (std::size_t j = 0; j < z.size(); ++j) out.values[j] = z.values[j] - static_cast<double>(rs.cartan(i, j)) * z.values[i];
  return out;
}

HeartState HeartState::canonical(std::size_t n) {
  HeartState h;
  h.simples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) h.simples.push_back(simple_root(n, i));
  return h;
}

HeartState simple_tilt(const RootSystem& rs, const HeartState& h, std::size_t k, TiltDirection dir) {
  if (k >= h.simples.size()) {
    std::ostringstream os;
    os << "tilt position " << k + 1 << " out of range 1.." << h.simples.size();
    throw ValidationError(os.str());
  }
  const ClassVector& s = h.simples[k];
  HeartState out;
  out.simples.reserve(h.simples.size());
  for (std::size_t m = 0; m < h.simples.size(); ++m) {
    ClassVector v = h.simples[m];
    if (m == k) {
      for (int& c : v) c = -c;
    } else {
      const int d = std::max(0, -rs.pairing(v, s));
      if (d != 0)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += d * s[t];
    }
    out.simples.push_back(std::move(v));
  }
  out.word = h.word;
  out.word.push_back({k, dir});
  return out;
}

long long determinant(const std::vector<ClassVector>& columns) {
  const std::size_t n = columns.size();
  if (n == 0) return 1;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n) throw ValidationError("determinant: matrix is not square");
    for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c][r];
  }
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_valid_heart(const RootSystem& rs, const HeartState& h) {
  if (h.simples.size() != rs.rank()) return false;
  if (std::llabs(determinant(h.simples)) != 1) return false;
  for (const auto& v : h.simples) {
    if (rs.find_positive_root(v) != RootSystem::npos) continue;
    ClassVector neg = v;
    for (int& c : neg) c = -c;
    if (rs.find_positive_root(neg) == RootSystem::npos) return false;
  }
  return true;
}

bool EquivarianceReport::pass() const {
  return max_sys_scaling_err <= tolerance::kCrossFormula && max_vol_scaling_err <= tolerance::kCrossFormula &&
         max_vol_reflect_err <= tolerance::kCrossFormula && max_ratio_scaling_err <= tolerance::kSlack;
}

EquivarianceReport verify_action_equivariance(const RootSystem& rs, const CentralCharge& z, Complex zeta,
                                              std::size_t trials) {
  if (z.is_zero()) throw ValidationError("the zero central charge has no systole");
  EquivarianceReport rep;
  const double sys_mult = std::exp(std::numbers::pi * zeta.imag());
  const double vol_mult = std::exp(2 * std::numbers::pi * zeta.imag());

  // Each trial walks one step along the reflection orbit of z so that the
  // checks see different charges of the same volume.
  CentralCharge cur = z;
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
    if (t > 0) cur = reflect_charge(rs, (t - 1) % rs.rank(), cur);
    const double sys = systole_upper(rs, cur);
    const double vol = volume_roots(rs, cur);
    const CentralCharge scaled = act_scaling(cur, zeta);
    const double sys_s = systole_upper(rs, scaled);
    const double vol_s = volume_roots(rs, scaled);
    rep.max_sys_scaling_err = std::max(rep.max_sys_scaling_err, rel_err(sys_s, sys_mult * sys));
    rep.max_vol_scaling_err = std::max(rep.max_vol_scaling_err, rel_err(vol_s, vol_mult * vol));
    rep.max_ratio_scaling_err = std::max(rep.max_ratio_scaling_err, rel_err(sys_s * sys_s / vol_s, sys * sys / vol));
    for (std::size_t i = 0; i < rs.rank(); ++i)
      rep.max_vol_reflect_err = std::max(rep.max_vol_reflect_err, rel_err(volume_roots(rs, reflect_charge(rs, i, cur)), vol));
    rep.checks += 3 + rs.rank();
  }
  return rep;
}

}  // namespace catsys
