#include <doctest.h>

#include <set>

#include "catsys/errors.hpp"
#include "catsys/exchange_graph.hpp"
#include "oracles.hpp"

using namespace catsys;

namespace {

RootSystem rs_of(Family f, int n) { return build_root_system(AdeType::make(f, n)); }

}  // namespace

TEST_CASE("A1 graph") {
  const ExchangeGraph g = exchange_graph(rs_of(Family::A, 1), 4);
  CHECK(g.nodes.size() == 2);
  CHECK(g.closed());
  CHECK(g.nodes[1].simples == std::vector<ClassVector>{{-1}});
  CHECK(g.edges.size() == 4);
}

TEST_CASE("A2 depth 1 has three class-level nodes") {
  // Forward and backward tilts at the same slot give the same classes, so
  // depth one reaches only s_1 and s_2.
  const ExchangeGraph g = exchange_graph(rs_of(Family::A, 2), 1);
  CHECK(g.nodes.size() == 3);
  CHECK_FALSE(g.closed());
  CHECK(g.out_degrees()[0] == 4);
}

TEST_CASE("node counts by depth match Weyl length counts for A_n") {
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs = rs_of(Family::A, n);
    const auto dist = oracle::inversion_distribution(static_cast<std::size_t>(n) + 1);
    std::size_t cumulative = 0;
    for (std::size_t d = 1; d < dist.size(); ++d) {
      cumulative = 0;
      for (std::size_t k = 0; k <= d; ++k) cumulative += dist[k];
      const ExchangeGraph g = exchange_graph(rs, d);
      CHECK(g.nodes.size() == cumulative);
      for (std::size_t k = 0; k < g.nodes.size(); ++k) CHECK(g.nodes[k].word.size() == g.depth[k]);
    }
  }
}

TEST_CASE("closed graphs") {
  struct Case {
    Family f;
    int n;
    std::size_t depth;
  };
  for (const auto& c : {Case{Family::A, 2, 3}, Case{Family::A, 3, 6}, Case{Family::D, 4, 12}}) {
    const RootSystem rs = rs_of(c.f, c.n);
    const ExchangeGraph g = exchange_graph(rs, c.depth);
    CHECK(g.closed());
    CHECK(g.nodes.size() == oracle::weyl_order(rs.ade));
    std::set<std::vector<ClassVector>> distinct;
    for (const auto& h : g.nodes) {
      CHECK(is_valid_heart(rs, h));
      distinct.insert(h.simples);
    }
    CHECK(distinct.size() == g.nodes.size());
    // one step short of the diameter still misses the longest element
    CHECK(exchange_graph(rs, c.depth - 1).nodes.size() == g.nodes.size() - 1);
  }
}

TEST_CASE("non-frontier nodes always have out-degree 2n") {
  const RootSystem rs = rs_of(Family::E, 6);
  const ExchangeGraph g = exchange_graph(rs, 3);
  const auto deg = g.out_degrees();
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    if (g.depth[k] < g.max_depth) CHECK(deg[k] == 12);
}

TEST_CASE("serializations") {
  const ExchangeGraph g = exchange_graph(rs_of(Family::A, 2), 1);
  const std::string dot = to_dot(g);
  CHECK(dot.find("n0 -> n1 [label=\"F:1\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [label=\"B:1\"]") != std::string::npos);
  const nlohmann::json j = to_json(g);
  CHECK(j["class_level"] == true);
  CHECK(j["node_count"] == 3);
  CHECK(j["adjacency"][0].size() == 4);
  CHECK(j["nodes"][2]["label"] == "(1,1),(0,-1)");
  CHECK(edge_label({2, TiltDirection::Backward}) == "B:3");
  CHECK_THROWS_AS(exchange_graph(rs_of(Family::A, 2), 0), ValidationError);
}
