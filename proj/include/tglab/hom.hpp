#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tglab/graph.hpp"

namespace tglab {

/// Called once per homomorphism found; return false to stop the search.
using HomVisitor =
    std::function<bool(const std::vector<int>& node_map, const std::vector<int>& edge_map)>;

/// Backtracking search over all homomorphisms dom -> cod. Nodes are assigned
/// in descending-degree order; each edge is branched over its candidate
/// images as soon as both endpoints are placed, which prunes by the label
/// incidence of already-assigned neighbours. Enumeration order is
/// deterministic. Labels are matched by name, so the two graphs may declare
/// different alphabets.
void for_each_hom(const Graph& dom, const Graph& cod, const HomVisitor& visit);

std::vector<Morphism> enumerate_homs(const Graph& dom, const Graph& cod);
std::optional<Morphism> find_hom(const Graph& dom, const Graph& cod);
bool hom_exists(const Graph& dom, const Graph& cod);
long long count_homs(const Graph& dom, const Graph& cod);

/// G -> H and H -> G.
bool hom_equivalent(const Graph& g, const Graph& h);

}  // namespace tglab
