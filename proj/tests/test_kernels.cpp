#include <doctest.h>

#include <stdexcept>

#include "catsys/kernels.hpp"
#include "catsys/ratio_search.hpp"
#include "catsys/rng.hpp"

using namespace catsys;

TEST_CASE("stream rng depends only on (seed, index)") {
  StreamRng a(7, 3), b(7, 3), c(7, 4);
  for (int k = 0; k < 10; ++k) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  StreamRng d(1, 0);
  for (int k = 0; k < 10000; ++k) {
    const double u = d.open01();
    CHECK((u > 0 && u < 1));
  }
}

TEST_CASE("for_each_index visits every index once") {
  for (const Execution exec : {Execution::Serial, Execution::Parallel}) {
    std::vector<int> hits(1000, 0);
    for_each_index(hits.size(), exec, [&](std::size_t i) { ++hits[i]; });
    for (const int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("for_each_index rethrows the lowest failing index") {
  for (const Execution exec : {Execution::Serial, Execution::Parallel}) {
    try {
      for_each_index(500, exec, [](std::size_t i) {
        if (i % 100 == 37) throw std::runtime_error(std::to_string(i));
      });
      FAIL("no throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "37");
    }
  }
}

TEST_CASE("batch kernels: serial and parallel are identical") {
  const RootSystem rs = build_root_system(AdeType::make(Family::E, 7));
  std::vector<CentralCharge> charges;
  for (std::size_t k = 0; k < 2000; ++k) charges.push_back(draw_charge(7, 5, k));
  const auto rs_serial = evaluate_ratios(rs, charges, Execution::Serial);
  const auto rs_par = evaluate_ratios(rs, charges, Execution::Parallel);
  const auto gs = volume_gaps(rs, charges, Execution::Serial);
  const auto gp = volume_gaps(rs, charges, Execution::Parallel);
  for (std::size_t k = 0; k < charges.size(); ++k) {
    CHECK(rs_serial[k].ratio == rs_par[k].ratio);
    CHECK(rs_serial[k].volume == rs_par[k].volume);
    CHECK(gs[k] == gp[k]);
    CHECK(gs[k] <= 1e-9);
    const RatioSample one = evaluate_ratio(rs, charges[k]);
    CHECK(one.ratio == rs_serial[k].ratio);
  }
}
