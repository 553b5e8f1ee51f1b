#include "catsys/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "catsys/errors.hpp"

namespace catsys {

std::vector<std::size_t> ExchangeGraph::out_degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& e : edges) ++deg[e.from];
  return deg;
}

bool ExchangeGraph::closed() const {
  const auto deg = out_degrees();
  return std::all_of(deg.begin(), deg.end(), [this](std::size_t d) { return d == 2 * rank; });
}

ExchangeGraph exchange_graph(const RootSystem& rs, std::size_t max_depth) {
  if (max_depth < 1) throw ValidationError("exchange graph depth must be at least 1");
  const std::size_t n = rs.rank();
  ExchangeGraph g;
  g.rank = n;
  g.max_depth = max_depth;

  std::map<std::vector<ClassVector>, std::size_t> index;
  g.nodes.push_back(HeartState::canonical(n));
  g.depth.push_back(0);
  index.emplace(g.nodes.front().simples, 0);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const bool frontier = g.depth[cur] >= max_depth;
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto dir : {TiltDirection::Forward, TiltDirection::Backward}) {
        HeartState next = simple_tilt(rs, g.nodes[cur], k, dir);
        if (frontier) {
          // Nodes at the cap only link back into what is already known.
          if (const auto it = index.find(next.simples); it != index.end()) g.edges.push_back({cur, it->second, {k, dir}});
          continue;
        }
        auto [it, inserted] = index.emplace(next.simples, g.nodes.size());
        if (inserted) {
          g.depth.push_back(g.depth[cur] + 1);
          g.nodes.push_back(std::move(next));
          queue.push_back(it->second);
        }
        g.edges.push_back({cur, it->second, {k, dir}});
      }
    }
  }
  return g;
}

std::string edge_label(const TiltStep& step) {
  return std::string(step.direction == TiltDirection::Forward ? "F:" : "B:") + std::to_string(step.position + 1);
}

namespace {

std::string tuple_label(const HeartState& h) {
  std::string out;
  for (std::size_t k = 0; k < h.simples.size(); ++k) {
    if (k) out += ',';
    out += to_string(h.simples[k]);
  }
  return out;
}

}  // namespace

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph exchange_graph {\n"
     << "  // class-level: nodes are simples-tuples in K_0, not hearts\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    os << "  n" << v << " [label=\"" << tuple_label(g.nodes[v]) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << edge_label(e.step) << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const ExchangeGraph& g) {
  const auto deg = g.out_degrees();
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    nodes.push_back({{"id", v}, {"depth", g.depth[v]}, {"out_degree", deg[v]}, {"label", tuple_label(g.nodes[v])}, {"simples", g.nodes[v].simples}});
  }
  nlohmann::json adjacency = nlohmann::json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) adjacency.push_back(nlohmann::json::array());
  for (const auto& e : g.edges) adjacency[e.from].push_back({{"to", e.to}, {"label", edge_label(e.step)}});
  return {{"class_level", true},
          {"rank", g.rank},
          {"max_depth", g.max_depth},
          {"node_count", g.nodes.size()},
          {"edge_count", g.edges.size()},
          {"closed", g.closed()},
          {"nodes", nodes},
          {"adjacency", adjacency}};
}

}  // namespace catsys
