#include "tglab/core.hpp"

#include <optional>

#include "tglab/hom.hpp"

namespace tglab {

namespace {

// First non-surjective endomorphism in search order, if any.
std::optional<Morphism> proper_retraction(const Graph& g) {
  std::optional<Morphism> found;
  for_each_hom(g, g, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    Morphism m{g, g, nm, em};
    if (surjective(m)) return true;
    found = std::move(m);
    return false;
  });
  return found;
}

// Co-restricts an endomorphism to its image subgraph.
Morphism corestrict(const Morphism& endo, const Graph& image) {
  Morphism m{endo.dom, image, {}, {}};
  m.node_map.reserve(endo.node_map.size());
  m.edge_map.reserve(endo.edge_map.size());
  for (int v : endo.node_map) m.node_map.push_back(image.node_index(endo.cod.node_id(v)));
  for (int e : endo.edge_map) m.edge_map.push_back(image.edge_index(endo.cod.edge_id(e)));
  return m;
}

}  // namespace

CoreResult core(const Graph& g) {
  Graph current = g;
  Morphism retraction = identity_morphism(g);
  for (;;) {
    std::optional<Morphism> endo = proper_retraction(current);
    if (!endo) break;
    std::vector<bool> node_hit(current.node_count(), false);
    std::vector<bool> edge_hit(current.edge_count(), false);
    for (int v : endo->node_map) node_hit[v] = true;
    for (int e : endo->edge_map) edge_hit[e] = true;
    std::vector<int> nodes, edges;
    for (int v = 0; v < current.node_count(); ++v)
      if (node_hit[v]) nodes.push_back(v);
    for (int e = 0; e < current.edge_count(); ++e)
      if (edge_hit[e]) edges.push_back(e);
    Graph image = subgraph(current, nodes, edges);
    retraction = compose(corestrict(*endo, image), retraction);
    current = std::move(image);
  }

  Morphism inclusion{current, g, {}, {}};
  for (int v = 0; v < current.node_count(); ++v)
    inclusion.node_map.push_back(g.node_index(current.node_id(v)));
  for (int e = 0; e < current.edge_count(); ++e)
    inclusion.edge_map.push_back(g.edge_index(current.edge_id(e)));
  return {current, retraction, inclusion};
}

}  // namespace tglab
