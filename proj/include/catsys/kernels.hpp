#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "catsys/stability.hpp"

namespace catsys {

/// Every batch kernel has a serial reference path and an OpenMP path. The two
/// must produce identical output; the serial path is what the tests trust.
enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). Exceptions thrown by body are captured and
/// the one from the lowest index is rethrown after the loop.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

struct RatioSample {
  double sys_upper = 0;
  double volume = 0;
  double ratio = 0;  // sys_upper^2 / volume
};

RatioSample evaluate_ratio(const RootSystem& rs, const CentralCharge& z);

std::vector<RatioSample> evaluate_ratios(const RootSystem& rs, std::span<const CentralCharge> charges,
                                         Execution exec = Execution::Parallel);

/// |volume_basis - volume_roots| / max(1, volume_roots) per charge.
std::vector<double> volume_gaps(const RootSystem& rs, std::span<const CentralCharge> charges,
                                Execution exec = Execution::Parallel);

}  // namespace catsys
