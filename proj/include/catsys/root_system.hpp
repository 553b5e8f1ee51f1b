#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catsys/matrix.hpp"

namespace catsys {

enum class Family { A, D, E };

/// Simply-laced Dynkin type. Construct through make() so the rank
/// restrictions (A >= 1, D >= 4, E in {6,7,8}, A/D <= kMaxRank) hold.
class AdeType {
 public:
  static constexpr int kMaxRank = 32;

  static AdeType make(Family family, int rank);
  /// Accepts "A3", "d5", "E8".
  static AdeType parse(std::string_view text);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t size() const { return static_cast<std::size_t>(rank_); }

  /// Coxeter number: n+1, 2(n-1), 12, 18, 30.
  int coxeter_number() const;

  std::string name() const;

  friend bool operator==(const AdeType&, const AdeType&) = default;

 private:
  AdeType(Family f, int n) : family_(f), rank_(n) {}
  Family family_;
  int rank_;
};

char family_letter(Family f);
Family parse_family(std::string_view text);

/// Integer class in K_0 written in the basis of simples [S_1], ..., [S_n].
/// Also used for signed classes (negative roots, tilted simples).
using ClassVector = std::vector<int>;

/// Immutable root-system data for one ADE type.
///
/// Vertex labels (0-based here, 1-based in printed output):
///   A_n   chain 1-2-...-n
///   D_n   chain 1-...-(n-1), with n attached to n-2
///   E_6,7,8  Bourbaki: chain 1-3-4-5-6(-7-8), with 2 attached to 4
///
/// Positive roots are sorted by height, then lexicographically descending,
/// so the simples e_1..e_n come first in label order.
struct RootSystem {
  AdeType ade;
  IntMatrix cartan;
  RationalMatrix cartan_inv;
  Matrix<double> cartan_inv_real;  // cartan_inv rounded to double
  int coxeter = 0;
  std::vector<ClassVector> positive_roots;

  std::size_t rank() const { return ade.size(); }

  /// Symmetric Cartan pairing a^T C b.
  int pairing(const ClassVector& a, const ClassVector& b) const;

  /// Index of alpha within positive_roots, or npos.
  std::size_t find_positive_root(const ClassVector& alpha) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Edges of the Dynkin diagram under the labeling documented above, 0-based.
std::vector<std::pair<int, int>> dynkin_edges(const AdeType& ade);

IntMatrix cartan_matrix(const AdeType& ade);

RootSystem build_root_system(const AdeType& ade);

RationalMatrix inverse_cartan(const RootSystem& rs);

/// |Delta^+| obtained by reflection-closure enumeration.
std::size_t count_positive_roots(const AdeType& ade);

/// The closed form n*h/2 (n(n+1)/2 for A_n, n(n-1) for D_n, 36/63/120 for E).
std::size_t closed_form_root_count(const AdeType& ade);

/// Unit vector e_i of length n.
ClassVector simple_root(std::size_t n, std::size_t i);

struct IdentityMismatch {
  std::size_t i = 0;  // 0-based, i <= j
  std::size_t j = 0;
  Rational inverse_entry;  // chi^{ij}
  Rational root_sum;       // (1/h) sum_M c_i(M) c_j(M)
};

struct IdentityReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<IdentityMismatch> failures;
};

/// Checks chi^{ij} = (1/h) sum_{M in Delta^+} c_i(M) c_j(M) for all i <= j
/// in exact arithmetic. Uses rs.coxeter as given, so a tampered RootSystem
/// produces a failing report rather than an exception.
IdentityReport verify_volume_identity(const RootSystem& rs);

std::string to_string(const Rational& q);
std::string to_string(const ClassVector& v);

}  // namespace catsys
