#include "catsys/ratio_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "catsys/errors.hpp"
#include "catsys/rng.hpp"

namespace catsys {

void SearchConfig::validate() const {
  if (sample_count < 1 || restarts < 1 || max_iters < 1)
    throw ValidationError("search counts (samples, restarts, max_iters) must be at least 1");
  if (!(step_min > 0) || !(step_init > step_min))
    throw ValidationError("search steps must satisfy 0 < step_min < step_init");
}

bool operator==(const SearchResult& a, const SearchResult& b) {
  auto same_bins = [](const std::vector<HistogramBin>& x, const std::vector<HistogramBin>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const HistogramBin& p, const HistogramBin& q) {
      return p.lo == q.lo && p.hi == q.hi && p.count == q.count;
    });
  };
  auto same_samples = [](const std::vector<SampleRecord>& x, const std::vector<SampleRecord>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const SampleRecord& p, const SampleRecord& q) {
      return p.index == q.index && p.ratio == q.ratio && p.sys_upper == q.sys_upper && p.sys_lower == q.sys_lower &&
             p.volume == q.volume;
    });
  };
  return a.bound == b.bound && a.best_ratio == b.best_ratio && a.best_charge == b.best_charge &&
         a.samples_violating == b.samples_violating && a.evaluations == b.evaluations &&
         same_bins(a.histogram, b.histogram) && same_samples(a.samples, b.samples);
}

bool violates_bound(const RootSystem& rs, const RatioSample& s) {
  const double bound = static_cast<double>(rs.coxeter) / static_cast<double>(rs.rank());
  return s.sys_upper * s.sys_upper > bound * s.volume * (1 + tolerance::kSlack);
}

CentralCharge draw_charge(std::size_t n, std::uint64_t seed, std::size_t index) {
  StreamRng rng(seed, index);
  CentralCharge z;
  z.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = rng.open01();
    const double log_r = rng.uniform(-kLogModulusRange, kLogModulusRange);
    z.values.push_back(std::polar(std::exp(log_r), std::numbers::pi * phi));
  }
  return z;
}

namespace {

std::vector<HistogramBin> empty_histogram(double bound) {
  std::vector<HistogramBin> bins(kHistogramBins);
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    bins[b].lo = bound * static_cast<double>(b) / kHistogramBins;
    bins[b].hi = bound * static_cast<double>(b + 1) / kHistogramBins;
  }
  return bins;
}

void add_to_histogram(std::vector<HistogramBin>& bins, double bound, double ratio) {
  auto b = static_cast<std::size_t>(std::max(0.0, ratio / bound * kHistogramBins));
  bins[std::min(b, kHistogramBins - 1)].count++;
}

}  // namespace

SearchResult sample_ratios(const RootSystem& rs, const SearchConfig& cfg, Execution exec, bool keep_samples) {
  cfg.validate();
  const std::size_t n = rs.rank();
  const std::size_t count = cfg.sample_count;

  std::vector<RatioSample> per_sample(count);
  std::vector<double> lower(keep_samples ? count : 0);
  for_each_index(count, exec, [&](std::size_t k) {
    const CentralCharge z = draw_charge(n, cfg.seed, k);
    per_sample[k] = evaluate_ratio(rs, z);
    if (keep_samples) lower[k] = systole_lower(rs, z);
  });

  // Sequential merge keeps the result independent of the execution policy.
  SearchResult res;
  res.bound = Rational(rs.coxeter, static_cast<int>(n));
  const double bound = res.bound.convert_to<double>();
  res.histogram = empty_histogram(bound);
  res.evaluations = count;
  std::size_t best = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const RatioSample& s = per_sample[k];
    if (s.ratio > per_sample[best].ratio) best = k;
    if (violates_bound(rs, s)) ++res.samples_violating;
    add_to_histogram(res.histogram, bound, s.ratio);
    if (keep_samples) res.samples.push_back({k, s.ratio, s.sys_upper, lower[k], s.volume});
  }
  res.best_ratio = per_sample[best].ratio;
  res.best_charge = draw_charge(n, cfg.seed, best);
  return res;
}

namespace {

// Search coordinates: phases phi_0..phi_{n-1}, then log moduli of Z_1..Z_{n-1}
// (|Z_0| = 1 fixes the scale; the ratio is scale invariant).
CentralCharge charge_at(const std::vector<double>& x, std::size_t n) {
  CentralCharge z;
  z.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double log_r = i == 0 ? 0.0 : x[n + i - 1];
    z.values[i] = std::polar(std::exp(log_r), std::numbers::pi * x[i]);
  }
  return z;
}

double clamp_coordinate(double v, std::size_t c, std::size_t n) {
  if (c < n) return std::clamp(v, kPhaseClamp, 1.0 - kPhaseClamp);
  return std::clamp(v, -2 * kLogModulusRange, 2 * kLogModulusRange);
}

struct RestartOutcome {
  double ratio = -1;
  std::vector<double> x;
  std::size_t evaluations = 0;
};

RestartOutcome compass_search(const RootSystem& rs, const SearchConfig& cfg, std::size_t restart) {
  const std::size_t n = rs.rank();
  const std::size_t dims = 2 * n - 1;
  StreamRng rng(cfg.seed ^ 0xa5a5a5a5a5a5a5a5ULL, restart);

  RestartOutcome out;
  out.x.resize(dims);
  for (std::size_t c = 0; c < dims; ++c)
    out.x[c] = c < n ? rng.uniform(kPhaseClamp, 1.0 - kPhaseClamp) : rng.uniform(-1.0, 1.0);
  auto objective = [&](const std::vector<double>& x) {
    ++out.evaluations;
    return evaluate_ratio(rs, charge_at(x, n)).ratio;
  };
  out.ratio = objective(out.x);

  double step = cfg.step_init;
  std::vector<double> trial;
  while (step >= cfg.step_min && out.evaluations < cfg.max_iters) {
    bool improved = false;
    for (std::size_t c = 0; c < dims && !improved && out.evaluations < cfg.max_iters; ++c) {
      for (const double dir : {+1.0, -1.0}) {
        trial = out.x;
        trial[c] = clamp_coordinate(trial[c] + dir * step, c, n);
        if (trial[c] == out.x[c]) continue;
        const double f = objective(trial);
        if (f > out.ratio) {
          out.ratio = f;
          out.x.swap(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return out;
}

}  // namespace

SearchResult optimize_ratio(const RootSystem& rs, const SearchConfig& cfg, Execution exec) {
  cfg.validate();
  const std::size_t n = rs.rank();
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  for_each_index(cfg.restarts, exec, [&](std::size_t r) { outcomes[r] = compass_search(rs, cfg, r); });

  SearchResult res;
  res.bound = Rational(rs.coxeter, static_cast<int>(n));
  const double bound = res.bound.convert_to<double>();
  res.histogram = empty_histogram(bound);
  std::size_t best = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    res.evaluations += outcomes[r].evaluations;
    if (outcomes[r].ratio > outcomes[best].ratio) best = r;
    add_to_histogram(res.histogram, bound, outcomes[r].ratio);
    const CentralCharge z = charge_at(outcomes[r].x, n);
    if (violates_bound(rs, evaluate_ratio(rs, z))) ++res.samples_violating;
  }
  res.best_ratio = outcomes[best].ratio;

  CentralCharge z = charge_at(outcomes[best].x, n);
  const double scale = 1.0 / std::sqrt(volume_roots(rs, z));
  for (auto& v : z.values) v *= scale;
  res.best_charge = std::move(z);
  return res;
}

std::string samples_to_csv(const std::vector<SampleRecord>& samples) {
  std::string out = "index,ratio,sys_upper,sys_lower,volume\n";
  char buf[160];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", s.index, s.ratio, s.sys_upper, s.sys_lower,
                  s.volume);
    out += buf;
  }
  return out;
}

}  // namespace catsys
