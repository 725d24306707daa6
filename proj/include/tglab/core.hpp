#pragma once

#include "tglab/graph.hpp"

namespace tglab {

struct CoreResult {
  Graph core;           // subgraph of the input, original ids preserved
  Morphism retraction;  // input -> core
  Morphism inclusion;   // core -> input
};

/// Smallest retract: repeatedly finds a non-surjective endomorphism,
/// restricts to its image, and stops at the fixpoint. The result is unique
/// up to isomorphism across hom-equivalent inputs.
CoreResult core(const Graph& g);

}  // namespace tglab
