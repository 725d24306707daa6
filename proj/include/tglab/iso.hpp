#pragma once

#include <string>

#include "tglab/graph.hpp"

namespace tglab {

/// Canonical encoding, identical for isomorphic graphs. Computed by
/// exhaustive permutation over nodes, pre-partitioned by a degree/label
/// signature so most permutations are never tried. Intended for small
/// graphs (the enumeration universes stay below a handful of nodes).
std::string canonical_encoding(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace tglab
