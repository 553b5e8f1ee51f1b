#include "catsys/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <omp.h>

namespace catsys {

void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::size_t first_index = n;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(catsys_for_each_index)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

RatioSample evaluate_ratio(const RootSystem& rs, const CentralCharge& z) {
  RatioSample s;
  s.sys_upper = systole_upper(rs, z);
  s.volume = volume_roots(rs, z);
  s.ratio = s.sys_upper * s.sys_upper / s.volume;
  return s;
}

std::vector<RatioSample> evaluate_ratios(const RootSystem& rs, std::span<const CentralCharge> charges,
                                         Execution exec) {
  std::vector<RatioSample> out(charges.size());
  for_each_index(charges.size(), exec, [&](std::size_t i) { out[i] = evaluate_ratio(rs, charges[i]); });
  return out;
}

std::vector<double> volume_gaps(const RootSystem& rs, std::span<const CentralCharge> charges, Execution exec) {
  std::vector<double> out(charges.size());
  for_each_index(charges.size(), exec, [&](std::size_t i) {
    const double by_roots = volume_roots(rs, charges[i]);
    const double by_basis = volume_basis(rs, charges[i]);
    out[i] = std::abs(by_basis - by_roots) / std::max(1.0, by_roots);
  });
  return out;
}

}  // namespace catsys
