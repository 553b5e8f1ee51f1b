#pragma once

#include <cstddef>
#include <vector>

#include "catsys/root_system.hpp"
#include "catsys/stability.hpp"

namespace catsys {

/// C-action on central charges: Z -> exp(-i pi zeta) Z. The accompanying
/// shift of the slicing carries no K-theoretic content and is not tracked.
CentralCharge act_scaling(const CentralCharge& z, Complex zeta);

/// K-theory shadow of the spherical twist at vertex i (0-based):
/// s_i(a) = a - <e_i, a> e_i.
ClassVector reflect_class(const RootSystem& rs, std::size_t i, const ClassVector& alpha);

/// Z o s_i, i.e. Z'_j = Z(s_i(e_j)) = Z_j - C_ij Z_i.
CentralCharge reflect_charge(const RootSystem& rs, std::size_t i, const CentralCharge& z);

enum class TiltDirection { Forward, Backward };

struct TiltStep {
  std::size_t position = 0;  // 0-based index into HeartState::simples
  TiltDirection direction = TiltDirection::Forward;

  friend bool operator==(const TiltStep&, const TiltStep&) = default;
};

/// Classes of the simples of a heart reached from the canonical heart by
/// simple tilts, plus the tilt word that produced it.
struct HeartState {
  std::vector<ClassVector> simples;
  std::vector<TiltStep> word;

  static HeartState canonical(std::size_t n);
};

/// Forward or backward simple tilt at the simple in slot k, at class level.
/// The tilted simple s becomes -s; every other simple m becomes m + d s with
/// d = max(0, -<m, s>) = dim Hom(M, S[1]). The backward formula has the same
/// class-level shape because Hom(M, S[1]) and Hom(S[-1], M) have equal
/// dimension in a 2-CY category.
HeartState simple_tilt(const RootSystem& rs, const HeartState& h, std::size_t k, TiltDirection dir);

/// Exact integer determinant (Bareiss).
long long determinant(const std::vector<ClassVector>& columns);

/// Checks |det| = 1 and that every simple is plus or minus a positive root.
bool is_valid_heart(const RootSystem& rs, const HeartState& h);

struct EquivarianceReport {
  double max_sys_scaling_err = 0;   // relative error of sys multiplier exp(pi Im zeta)
  double max_vol_scaling_err = 0;   // relative error of vol multiplier exp(2 pi Im zeta)
  double max_vol_reflect_err = 0;   // relative change of vol under reflect_charge
  double max_ratio_scaling_err = 0; // relative change of sys^2/vol under act_scaling
  std::size_t checks = 0;

  bool pass() const;
};

/// Evaluates the sys/vol equivariance identities at Z under act_scaling(., zeta)
/// and under reflect_charge at every vertex, repeated `trials` times along the
/// orbit Z, Z.zeta, Z.zeta^2, ... Rejects the zero charge.
EquivarianceReport verify_action_equivariance(const RootSystem& rs, const CentralCharge& z, Complex zeta,
                                              std::size_t trials = 1);

}  // namespace catsys
