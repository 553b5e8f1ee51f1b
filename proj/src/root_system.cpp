#include "catsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "catsys/errors.hpp"

namespace catsys {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'D': return Family::D;
      case 'E': return Family::E;
      default: break;
    }
  }
  throw ValidationError("unknown ADE family '" + std::string(text) + "' (expected A, D or E)");
}

AdeType AdeType::make(Family family, int rank) {
  const std::string label = std::string(1, family_letter(family)) + std::to_string(rank);
  switch (family) {
    case Family::A:
      if (rank < 1 || rank > kMaxRank)
        throw ValidationError("invalid type " + label + ": A_n needs 1 <= n <= 32");
      break;
    case Family::D:
      if (rank < 4 || rank > kMaxRank)
        throw ValidationError("invalid type " + label + ": D_n needs 4 <= n <= 32");
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        throw ValidationError("invalid type " + label + ": E_n needs n in {6, 7, 8}");
      break;
  }
  return AdeType(family, rank);
}

AdeType AdeType::parse(std::string_view text) {
  if (text.size() < 2) throw ValidationError("cannot parse ADE type '" + std::string(text) + "'");
  const Family f = parse_family(text.substr(0, 1));
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ValidationError("cannot parse ADE rank in '" + std::string(text) + "'");
  return make(f, rank);
}

int AdeType::coxeter_number() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::D: return 2 * (rank_ - 1);
    case Family::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  return 0;
}

std::string AdeType::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::vector<std::pair<int, int>> dynkin_edges(const AdeType& ade) {
  const int n = ade.rank();
  std::vector<std::pair<int, int>> edges;
  switch (ade.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      // chain 1..n-1, fork vertex n hangs off n-2
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7-8), 2-4
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      for (int i = 5; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

IntMatrix cartan_matrix(const AdeType& ade) {
  const std::size_t n = ade.size();
  IntMatrix c(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  for (const auto& [a, b] : dynkin_edges(ade)) {
    c(a, b) = -1;
    c(b, a) = -1;
  }
  return c;
}

ClassVector simple_root(std::size_t n, std::size_t i) {
  ClassVector e(n, 0);
  e.at(i) = 1;
  return e;
}

int RootSystem::pairing(const ClassVector& a, const ClassVector& b) const {
  const std::size_t n = rank();
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    int row = 0;
    for (std::size_t j = 0; j < n; ++j) row += cartan(i, j) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

std::size_t RootSystem::find_positive_root(const ClassVector& alpha) const {
  const auto it = std::find(positive_roots.begin(), positive_roots.end(), alpha);
  return it == positive_roots.end() ? npos : static_cast<std::size_t>(it - positive_roots.begin());
}

namespace {

int height(const ClassVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Closure of the simples under s_i(a) = a - <a, e_i> e_i, keeping only
// nonnegative results. Finite type guarantees termination.
std::vector<ClassVector> enumerate_positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::set<ClassVector> seen;
  std::deque<ClassVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = simple_root(n, i);
    seen.insert(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    const ClassVector alpha = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < n; ++j) p += cartan(i, j) * alpha[j];
      if (p == 0) continue;
      ClassVector beta = alpha;
      beta[i] -= p;
      if (beta[i] < 0) continue;
      if (seen.insert(beta).second) frontier.push_back(std::move(beta));
    }
  }
  std::vector<ClassVector> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const ClassVector& a, const ClassVector& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return roots;
}

}  // namespace

RootSystem build_root_system(const AdeType& ade) {
  RootSystem rs{ade, cartan_matrix(ade), {}, {}, ade.coxeter_number(), {}};
  rs.cartan_inv = invert(to_rational(rs.cartan));
  const std::size_t n = rs.rank();
  rs.cartan_inv_real = Matrix<double>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan_inv_real(i, j) = rs.cartan_inv(i, j).convert_to<double>();
  rs.positive_roots = enumerate_positive_roots(rs.cartan);
  return rs;
}

RationalMatrix inverse_cartan(const RootSystem& rs) { return rs.cartan_inv; }

std::size_t count_positive_roots(const AdeType& ade) {
  return enumerate_positive_roots(cartan_matrix(ade)).size();
}

std::size_t closed_form_root_count(const AdeType& ade) {
  return ade.size() * static_cast<std::size_t>(ade.coxeter_number()) / 2;
}

IdentityReport verify_volume_identity(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  IdentityReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      long long sum = 0;
      for (const auto& m : rs.positive_roots) sum += static_cast<long long>(m[i]) * m[j];
      const Rational rhs(sum, rs.coxeter);
      ++report.pairs_checked;
      if (rhs != rs.cartan_inv(i, j)) {
        report.pass = false;
        report.failures.push_back({i, j, rs.cartan_inv(i, j), rhs});
      }
    }
  }
  return report;
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const ClassVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace catsys
