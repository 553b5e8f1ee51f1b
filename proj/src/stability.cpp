#include "catsys/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "catsys/errors.hpp"

namespace catsys {

namespace {

void require_length(const RootSystem& rs, const CentralCharge& z) {
  if (z.size() != rs.rank()) {
    std::ostringstream os;
    os << "central charge has " << z.size() << " entries but " << rs.ade.name() << " has rank "
       << rs.rank();
    throw ValidationError(os.str());
  }
}

void require_nonzero(const CentralCharge& z) {
  if (z.is_zero()) throw ValidationError("the zero central charge has no systole");
}

}  // namespace

bool CentralCharge::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](Complex c) { return c == Complex{}; });
}

Complex evaluate_charge(const RootSystem& rs, const CentralCharge& z, const ClassVector& alpha) {
  require_length(rs, z);
  if (alpha.size() != rs.rank()) throw ValidationError("class vector length does not match rank");
  Complex acc{};
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) acc += static_cast<double>(alpha[i]) * z.values[i];
  return acc;
}

double volume_basis(const RootSystem& rs, const CentralCharge& z) {
  require_length(rs, z);
  const std::size_t n = rs.rank();
  Complex acc{};
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double chi = rs.cartan_inv_real(i, j);
      const Complex term = chi * z.values[i] * std::conj(z.values[j]);
      acc += term;
      scale += std::abs(term);
    }
  }
  const double tol = tolerance::kCrossFormula * std::max(1.0, scale);
  if (std::abs(acc.imag()) > tol || acc.real() < -tol) {
    std::ostringstream os;
    os.precision(17);
    os << "volume form is not real and nonnegative: " << acc.real() << " + " << acc.imag() << "i";
    throw PropertyViolation(os.str());
  }
  return std::abs(acc);
}

double volume_roots(const RootSystem& rs, const CentralCharge& z) {
  require_length(rs, z);
  double acc = 0;
  for (const auto& alpha : rs.positive_roots) acc += std::norm(evaluate_charge(rs, z, alpha));
  return acc / rs.coxeter;
}

double systole_upper(const RootSystem& rs, const CentralCharge& z) {
  require_length(rs, z);
  require_nonzero(z);
  double best = std::numeric_limits<double>::infinity();
  for (const Complex c : z.values) best = std::min(best, std::abs(c));
  return best;
}

double systole_lower(const RootSystem& rs, const CentralCharge& z) {
  require_length(rs, z);
  require_nonzero(z);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& alpha : rs.positive_roots) best = std::min(best, std::abs(evaluate_charge(rs, z, alpha)));
  return best;
}

bool SystolicReport::holds() const { return slack >= -tolerance::kSlack * volume; }

SystolicReport check_inequality(const RootSystem& rs, const CentralCharge& z) {
  SystolicReport r;
  r.sys_upper = systole_upper(rs, z);
  r.sys_lower = systole_lower(rs, z);
  r.volume = volume_roots(rs, z);
  r.bound = Rational(rs.coxeter, static_cast<int>(rs.rank()));
  r.ratio_upper = r.sys_upper * r.sys_upper / r.volume;
  r.slack = r.bound.convert_to<double>() * r.volume - r.sys_upper * r.sys_upper;
  return r;
}

bool heart_membership(const CentralCharge& z) {
  return std::all_of(z.values.begin(), z.values.end(),
                     [](Complex c) { return c.imag() > 0 || (c.imag() == 0 && c.real() < 0); });
}

double phase(Complex z) {
  if (z.imag() == 0 && z.real() < 0) return 1.0;
  return std::arg(z) / std::numbers::pi;
}

}  // namespace catsys
