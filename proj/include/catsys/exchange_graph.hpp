#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "catsys/symmetry.hpp"

namespace catsys {

/// Class-level exchange graph of hearts reachable by simple tilts.
///
/// Nodes are distinct simples-tuples in BFS discovery order (node 0 is the
/// canonical heart). Tilts are tried position by position, forward before
/// backward, so node ids are deterministic. Nodes below the depth cap carry
/// all 2n tilt edges, including parallel edges that land on the same tuple.
/// Nodes at the cap keep only the edges whose target is already a node, so
/// once the cap reaches the diameter every node has out-degree 2n.
struct ExchangeGraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    TiltStep step;
  };

  std::size_t rank = 0;
  std::size_t max_depth = 0;
  std::vector<HeartState> nodes;   // word = BFS-tree path from the canonical heart
  std::vector<std::size_t> depth;  // BFS depth of each node
  std::vector<Edge> edges;

  std::vector<std::size_t> out_degrees() const;
  /// Every node has out-degree 2n (no tilt leaves the node set).
  bool closed() const;
};

ExchangeGraph exchange_graph(const RootSystem& rs, std::size_t max_depth);

/// "F:k" / "B:k" with k 1-based.
std::string edge_label(const TiltStep& step);

/// Graphviz DOT. Node labels are the simples as comma-separated integer
/// vectors, e.g. "(-1,0),(1,1)".
std::string to_dot(const ExchangeGraph& g);

/// {"class_level": true, "nodes": [...], "adjacency": [[{"to":..,"label":..}, ...], ...]}
nlohmann::json to_json(const ExchangeGraph& g);

}  // namespace catsys
