#include "catsys/milnor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "catsys/errors.hpp"
#include "catsys/rng.hpp"

namespace catsys {

namespace {

constexpr double kDistinctTol = 1e-12;
constexpr double kCollinearTol = 1e-9;

double triangle_area(Complex a, Complex b, Complex c) { return std::abs(std::imag((b - a) * std::conj(c - a))) / 2; }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); }

}  // namespace

double PointConfiguration::scale() const {
  double s = 0;
  for (const Complex z : points) s = std::max(s, std::abs(z));
  return s;
}

PointConfiguration validate_configuration(std::span<const Complex> raw,
                                          std::optional<std::vector<std::size_t>> ordering) {
  const std::size_t m = raw.size();
  if (m < 2) throw ValidationError("a configuration needs at least 2 points");

  Complex centroid{};
  for (const Complex z : raw) centroid += z;
  centroid /= static_cast<double>(m);
  std::vector<Complex> centred(raw.begin(), raw.end());
  for (auto& z : centred) z -= centroid;

  std::vector<std::size_t> order(m);
  if (ordering) {
    order = *ordering;
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    bool is_perm = check.size() == m;
    for (std::size_t k = 0; is_perm && k < m; ++k) is_perm = check[k] == k;
    if (!is_perm) throw ValidationError("ordering is not a permutation of 0.." + std::to_string(m - 1));
  } else {
    for (std::size_t k = 0; k < m; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (centred[a].real() != centred[b].real()) return centred[a].real() < centred[b].real();
      return centred[a].imag() < centred[b].imag();
    });
  }

  PointConfiguration p;
  p.ordering = order;
  p.points.reserve(m);
  for (const std::size_t k : order) p.points.push_back(centred[k]);

  const double scale = p.scale();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!(std::abs(centred[a] - centred[b]) > kDistinctTol * scale)) {
        std::ostringstream os;
        os << "points " << a << " and " << b << " coincide";
        throw ValidationError(os.str());
      }
    }
  }

  const double area_tol = kCollinearTol * scale * scale;
  for (std::size_t a = 0; a < m && p.general_position; ++a)
    for (std::size_t b = a + 1; b < m && p.general_position; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        if (triangle_area(p.points[a], p.points[b], p.points[c]) <= area_tol) {
          p.general_position = false;
          break;
        }
  return p;
}

SegmentLengths segment_lengths(const PointConfiguration& p) {
  const std::size_t n = p.rank();
  SegmentLengths l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) l(i, j) = std::abs(p.points[j + 1] - p.points[i]);
  return l;
}

double geometric_systole(const PointConfiguration& p) {
  const auto l = segment_lengths(p);
  return std::numbers::pi * *std::min_element(l.values().begin(), l.values().end());
}

double geometric_volume(const PointConfiguration& p) {
  const auto l = segment_lengths(p);
  double acc = 0;
  for (const double v : l.values()) acc += v * v;
  return std::numbers::pi * std::numbers::pi / static_cast<double>(p.rank() + 1) * acc;
}

CentralCharge induced_charge(const PointConfiguration& p) {
  CentralCharge z;
  z.values.reserve(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) z.values.push_back(p.points[i + 1] - p.points[i]);
  return z;
}

bool CorrespondenceReport::systole_matches() const { return systole_rel_err <= tolerance::kCrossFormula; }
bool CorrespondenceReport::volume_matches() const { return volume_rel_err <= tolerance::kCrossFormula; }
bool CorrespondenceReport::inequality_holds() const {
  const double n = static_cast<double>(rank);
  return geometric_systole * geometric_systole <= (n + 1) / n * geometric_volume * (1 + tolerance::kSlack);
}

namespace {

CorrespondenceReport correspond(const RootSystem& an, const PointConfiguration& p) {
  const double pi = std::numbers::pi;
  CorrespondenceReport r;
  r.rank = p.rank();
  r.general_position = p.general_position;
  r.geometric_systole = geometric_systole(p);
  r.geometric_volume = geometric_volume(p);
  const CentralCharge z = induced_charge(p);
  r.categorical_systole = systole_lower(an, z);
  r.categorical_volume = volume_roots(an, z);
  r.systole_rel_err = rel_diff(r.geometric_systole, pi * r.categorical_systole);
  r.volume_rel_err = rel_diff(r.geometric_volume, pi * pi * r.categorical_volume);
  const double n = static_cast<double>(r.rank);
  r.geometric_slack = (n + 1) / n * r.geometric_volume - r.geometric_systole * r.geometric_systole;
  return r;
}

}  // namespace

CorrespondenceReport verify_correspondence(const PointConfiguration& p) {
  const RootSystem an = build_root_system(AdeType::make(Family::A, static_cast<int>(p.rank())));
  return correspond(an, p);
}

std::vector<CorrespondenceReport> verify_correspondence_batch(std::span<const PointConfiguration> configs,
                                                              Execution exec) {
  std::map<std::size_t, RootSystem> systems;  // one A_n per rank present, built before the parallel loop
  for (const auto& p : configs)
    if (!systems.contains(p.rank()))
      systems.emplace(p.rank(), build_root_system(AdeType::make(Family::A, static_cast<int>(p.rank()))));

  std::vector<CorrespondenceReport> out(configs.size());
  for_each_index(configs.size(), exec, [&](std::size_t k) { out[k] = correspond(systems.at(configs[k].rank()), configs[k]); });
  return out;
}

std::vector<Complex> centered_polynomial_roots(std::span<const Complex> coeffs) {
  const std::size_t n = coeffs.size();
  if (n < 1) throw ValidationError("polynomial needs at least one coefficient a_1");
  const std::size_t deg = n + 1;

  // c[k] is the coefficient of z^k in the monic polynomial; c[deg] = 1, c[n] = 0.
  std::vector<Complex> c(deg + 1, Complex{});
  c[deg] = 1;
  for (std::size_t k = 1; k <= n; ++k) c[n - k] = coeffs[k - 1];

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t r = 1; r < deg; ++r) companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r - 1)) = 1;
  for (std::size_t r = 0; r < deg; ++r) companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(deg - 1)) = -c[r];

  // value and derivative
  auto horner = [&](Complex z) {
    Complex val = c[deg], der{};
    for (std::size_t t = deg; t-- > 0;) {
      der = der * z + val;
      val = val * z + c[t];
    }
    return std::pair{val, der};
  };

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ValidationError("companion eigenvalue solve did not converge");

  std::vector<Complex> roots;
  roots.reserve(deg);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    Complex z = solver.eigenvalues()(k);
    auto [val, der] = horner(z);
    for (int it = 0; it < 3 && der != Complex{}; ++it) {
      const Complex next = z - val / der;
      const auto [next_val, next_der] = horner(next);
      if (!(std::abs(next_val) < std::abs(val))) break;
      z = next;
      val = next_val;
      der = next_der;
    }
    roots.push_back(z);
  }
  return roots;
}

PointConfiguration random_configuration(std::size_t n, std::uint64_t seed, std::size_t index) {
  StreamRng rng(seed, index);
  for (;;) {
    std::vector<Complex> pts(n + 1);
    for (auto& z : pts) z = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    try {
      PointConfiguration p = validate_configuration(pts);
      if (p.general_position) return p;
    } catch (const ValidationError&) {
      // coincident draw; try again
    }
  }
}

}  // namespace catsys
