#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "catsys/kernels.hpp"
#include "catsys/root_system.hpp"
#include "catsys/stability.hpp"

namespace catsys {

struct SearchConfig {
  std::size_t sample_count = 10000;
  std::uint64_t seed = 0;
  std::size_t restarts = 20;
  double step_init = 0.25;
  double step_min = 1e-10;
  std::size_t max_iters = 20000;  // objective evaluations per restart

  /// Throws ValidationError unless all counts >= 1 and 0 < step_min < step_init.
  void validate() const;
};

struct HistogramBin {
  double lo = 0;
  double hi = 0;
  std::size_t count = 0;
};

struct SampleRecord {
  std::size_t index = 0;
  double ratio = 0;
  double sys_upper = 0;
  double sys_lower = 0;
  double volume = 0;
};

struct SearchResult {
  Rational bound;  // h/n
  double best_ratio = 0;
  CentralCharge best_charge;
  std::size_t samples_violating = 0;
  std::size_t evaluations = 0;
  std::vector<HistogramBin> histogram;
  std::vector<SampleRecord> samples;  // only filled when requested

  friend bool operator==(const SearchResult&, const SearchResult&);
};

inline constexpr std::size_t kHistogramBins = 20;
/// Phases are kept in [kPhaseClamp, 1 - kPhaseClamp] during optimisation.
inline constexpr double kPhaseClamp = 1e-7;
/// log-modulus range of the sampling measure.
inline constexpr double kLogModulusRange = 3.0;

/// True iff sys^2 > bound * vol * (1 + kSlack).
bool violates_bound(const RootSystem& rs, const RatioSample& s);

/// The charge for sample `index`: Z_i = r_i exp(i pi phi_i), phi_i uniform
/// in (0, 1), log r_i uniform in [-3, 3]. Depends only on (n, seed, index).
CentralCharge draw_charge(std::size_t n, std::uint64_t seed, std::size_t index);

/// Draws cfg.sample_count heart-compatible charges and records
/// sys_upper^2 / vol for each. Serial and parallel runs agree bit for bit.
SearchResult sample_ratios(const RootSystem& rs, const SearchConfig& cfg, Execution exec = Execution::Parallel,
                           bool keep_samples = false);

/// Random-restart compass search over (phases, log moduli) maximising
/// sys_upper^2 / vol. The best charge is returned rescaled to volume 1.
SearchResult optimize_ratio(const RootSystem& rs, const SearchConfig& cfg, Execution exec = Execution::Parallel);

/// index,ratio,sys_upper,sys_lower,volume with 17 significant digits.
std::string samples_to_csv(const std::vector<SampleRecord>& samples);

}  // namespace catsys
