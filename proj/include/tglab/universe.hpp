#pragma once

#include <vector>

#include "tglab/graph.hpp"

namespace tglab {

/// A finite, exhaustively enumerable family of graphs up to isomorphism.
struct GraphUniverse {
  Alphabet alphabet;
  int max_nodes = 0;
  int max_edges = 0;
};

/// Node-count ceiling for enumerate_graphs: 6 unless the TGLAB_MAX_NODES
/// environment variable raises it. Enumeration cost is exponential, so the
/// guard keeps accidental huge universes from hanging the process.
int enumeration_node_limit();

/// Every graph within the bounds, exactly once up to isomorphism, in a
/// deterministic order (by node count, then edge count, then canonical
/// encoding).
std::vector<Graph> enumerate_graphs(const GraphUniverse& u);

}  // namespace tglab
