#include <doctest.h>

#include <cmath>

#include "catsys/errors.hpp"
#include "catsys/rng.hpp"
#include "catsys/symmetry.hpp"
#include "oracles.hpp"

using namespace catsys;

TEST_CASE("reflect_class on A2") {
  const RootSystem rs = build_root_system(AdeType::make(Family::A, 2));
  CHECK(reflect_class(rs, 0, {1, 0}) == ClassVector{-1, 0});
  CHECK(reflect_class(rs, 0, {0, 1}) == ClassVector{1, 1});
  CHECK(reflect_class(rs, 1, {1, 1}) == ClassVector{1, 0});
  CHECK_THROWS_AS(reflect_class(rs, 2, {1, 0}), ValidationError);
}

TEST_CASE("reflect_charge is Z composed with s_i") {
  for (const auto& t : oracle::types_up_to_rank8()) {
    const RootSystem rs = build_root_system(t);
    StreamRng rng(5, t.size());
    CentralCharge z;
    for (std::size_t i = 0; i < rs.rank(); ++i) z.values.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const CentralCharge r = reflect_charge(rs, i, z);
      for (const auto& alpha : rs.positive_roots) {
        const Complex want = evaluate_charge(rs, z, reflect_class(rs, i, alpha));
        CHECK(std::abs(evaluate_charge(rs, r, alpha) - want) <= 1e-12 * (1 + std::abs(want)));
      }
      CHECK(volume_roots(rs, r) == doctest::Approx(volume_roots(rs, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("act_scaling") {
  const CentralCharge z{{{1, 0}, {0, 2}}};
  const CentralCharge rot = act_scaling(z, {0.5, 0});  // multiply by -i
  CHECK(std::abs(rot.values[0] - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(rot.values[1] - Complex(2, 0)) < 1e-15);
  const CentralCharge grown = act_scaling(z, {0, 1});
  CHECK(std::abs(grown.values[0]) == doctest::Approx(std::exp(3.14159265358979323846)));
}

TEST_CASE("simple tilt on A2") {
  const RootSystem rs = build_root_system(AdeType::make(Family::A, 2));
  const HeartState h = simple_tilt(rs, HeartState::canonical(2), 0, TiltDirection::Forward);
  CHECK(h.simples == std::vector<ClassVector>{{-1, 0}, {1, 1}});
  CHECK(h.word.size() == 1);
  CHECK(is_valid_heart(rs, h));
  const HeartState back = simple_tilt(rs, h, 0, TiltDirection::Backward);
  CHECK(back.simples == HeartState::canonical(2).simples);
  CHECK_THROWS_AS(simple_tilt(rs, h, 2, TiltDirection::Forward), ValidationError);
}

TEST_CASE("tilting at a slot acts as right multiplication by a simple reflection") {
  // The simples of every reachable heart are w(e_1), ..., w(e_n) for some
  // Weyl element w, and tilting at slot k replaces w by w s_k.
  const RootSystem rs = build_root_system(AdeType::make(Family::D, 5));
  const std::size_t n = rs.rank();
  HeartState h = HeartState::canonical(n);
  std::vector<std::size_t> word;
  for (std::size_t step = 0; step < 12; ++step) {
    StreamRng rng(13, step);
    const std::size_t k = rng.next() % n;
    h = simple_tilt(rs, h, k, TiltDirection::Forward);
    word.push_back(k);
    for (std::size_t j = 0; j < n; ++j) {
      // w = s_{k1} s_{k2} ... s_{kt}, applied right to left
      ClassVector u = simple_root(n, j);
      for (std::size_t t = word.size(); t-- > 0;) u = reflect_class(rs, word[t], u);
      CHECK(h.simples[j] == u);
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant({{1, 0}, {0, 1}}) == 1);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 1}, {4, 2}}) == 0);
  CHECK(determinant({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("equivariance report") {
  const RootSystem rs = build_root_system(AdeType::make(Family::E, 6));
  CentralCharge z;
  for (int i = 0; i < 6; ++i) z.values.emplace_back(0.3 * i - 1, 0.2 + 0.1 * i);
  const EquivarianceReport r = verify_action_equivariance(rs, z, {0.3, -0.7}, 4);
  CHECK(r.pass());
  CHECK(r.checks > 0);
  CHECK_THROWS_AS(verify_action_equivariance(rs, CentralCharge{std::vector<Complex>(6)}, {0, 0}), ValidationError);
}
