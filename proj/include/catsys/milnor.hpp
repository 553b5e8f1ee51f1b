#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "catsys/kernels.hpp"
#include "catsys/stability.hpp"

namespace catsys {

/// n+1 distinct points in C with centroid 0, i.e. the zero set of a monic
/// centred polynomial of degree n+1 with simple zeros.
///
/// `points` are stored already permuted into the chosen labeling
/// zeta_1..zeta_{n+1}; points[k] == recentred raw[ordering[k]].
struct PointConfiguration {
  std::vector<Complex> points;
  std::vector<std::size_t> ordering;
  bool general_position = true;  // no three points collinear

  std::size_t rank() const { return points.size() - 1; }
  double scale() const;  // max modulus
};

/// Recentres, orders, checks distinctness and computes the general-position
/// flag. Without an explicit ordering the points are sorted by (re, im).
/// Throws ValidationError on fewer than 2 points, a bad permutation, or a
/// coincident pair (the message names both indices).
PointConfiguration validate_configuration(std::span<const Complex> raw,
                                          std::optional<std::vector<std::size_t>> ordering = std::nullopt);

/// Upper-triangular l_ij = |zeta_{j+1} - zeta_i| for 0 <= i <= j < n.
class SegmentLengths {
 public:
  explicit SegmentLengths(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {}

  std::size_t rank() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[offset(i, j)]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[offset(i, j)]; }
  const std::vector<double>& values() const { return data_; }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const { return i * n_ - i * (i - 1) / 2 + (j - i); }
  std::size_t n_;
  std::vector<double> data_;
};

SegmentLengths segment_lengths(const PointConfiguration& p);

/// pi * min l_ij
double geometric_systole(const PointConfiguration& p);

/// (pi^2 / (n+1)) * sum l_ij^2
double geometric_volume(const PointConfiguration& p);

/// Z_i = zeta_{i+1} - zeta_i, so |Z(e_i + ... + e_j)| = l_ij by telescoping.
CentralCharge induced_charge(const PointConfiguration& p);

struct CorrespondenceReport {
  std::size_t rank = 0;
  double geometric_systole = 0;
  double categorical_systole = 0;  // systole_lower(A_n, induced_charge)
  double geometric_volume = 0;
  double categorical_volume = 0;   // volume_roots(A_n, induced_charge)
  double systole_rel_err = 0;      // |sys_geo - pi sys_cat| / sys_geo
  double volume_rel_err = 0;       // |vol_geo - pi^2 vol_cat| / vol_geo
  double geometric_slack = 0;      // ((n+1)/n) vol - sys^2
  bool general_position = true;

  bool systole_matches() const;
  bool volume_matches() const;
  bool inequality_holds() const;  // sys^2 <= ((n+1)/n) vol (1 + 1e-12)
  bool pass() const { return systole_matches() && volume_matches() && inequality_holds(); }
};

CorrespondenceReport verify_correspondence(const PointConfiguration& p);

std::vector<CorrespondenceReport> verify_correspondence_batch(std::span<const PointConfiguration> configs,
                                                              Execution exec = Execution::Parallel);

/// Roots of z^{n+1} + a_1 z^{n-1} + ... + a_n (coefficients a_1..a_n) via
/// companion-matrix eigenvalues followed by Newton polishing.
std::vector<Complex> centered_polynomial_roots(std::span<const Complex> coeffs);

/// Random configuration of n+1 points uniform in the unit square, drawn from
/// the (seed, index) stream, redrawn until in general position.
PointConfiguration random_configuration(std::size_t n, std::uint64_t seed, std::size_t index);

}  // namespace catsys
