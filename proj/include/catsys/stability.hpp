#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "catsys/root_system.hpp"

namespace catsys {

using Complex = std::complex<double>;

/// Central charge on K_0 = Z^n, stored by its values Z(S_i) on the simples.
struct CentralCharge {
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  bool is_zero() const;

  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

namespace tolerance {
/// Relative tolerance for comparing two formulas for the same quantity.
inline constexpr double kCrossFormula = 1e-9;
/// Relative tolerance on inequality slack.
inline constexpr double kSlack = 1e-12;
}  // namespace tolerance

/// Sum_i c_i(alpha) Z_i. Throws ValidationError on length mismatch.
Complex evaluate_charge(const RootSystem& rs, const CentralCharge& z, const ClassVector& alpha);

/// |Sum_{i,j} chi^{ij} Z_i conj(Z_j)| using the inverse Cartan matrix.
/// Throws PropertyViolation if the inner sum is not real and nonnegative to
/// kCrossFormula relative.
double volume_basis(const RootSystem& rs, const CentralCharge& z);

/// (1/h) Sum_{alpha in Delta^+} |Z(alpha)|^2.
double volume_roots(const RootSystem& rs, const CentralCharge& z);

/// min_i |Z_i|: the simples of the canonical heart are stable, so this
/// bounds the systole from above. Rejects the zero charge.
double systole_upper(const RootSystem& rs, const CentralCharge& z);

/// min over Delta^+ of |Z(alpha)|. Rejects the zero charge.
double systole_lower(const RootSystem& rs, const CentralCharge& z);

struct SystolicReport {
  double sys_lower = 0;
  double sys_upper = 0;
  double volume = 0;
  double ratio_upper = 0;  // sys_upper^2 / volume
  Rational bound;          // h/n
  double slack = 0;        // bound * volume - sys_upper^2

  /// slack >= -kSlack * volume
  bool holds() const;
};

SystolicReport check_inequality(const RootSystem& rs, const CentralCharge& z);

/// True iff every Z_i lies in the semi-closed upper half plane
/// {r e^{i pi phi} : r > 0, phi in (0, 1]}.
bool heart_membership(const CentralCharge& z);

/// Phase in (0, 1] of a value in the upper half plane (arg / pi, with the
/// negative real axis mapped to 1).
double phase(Complex z);

}  // namespace catsys
