#pragma once

#include "tglab/graph.hpp"

namespace tglab {

/// Final object: one node with a loop per alphabet label. Every graph over
/// the same alphabet has a morphism into it.
Graph flower(const Alphabet& alphabet);

struct ProductResult {
  Graph graph;
  Morphism proj1;
  Morphism proj2;
};

/// Categorical product: node pairs, and one edge per label-equal edge pair
/// with componentwise endpoints. Requires a shared alphabet.
ProductResult product(const Graph& g1, const Graph& g2);

struct CoproductResult {
  Graph graph;
  Morphism inj1;
  Morphism inj2;
};

/// Disjoint union with injective injections. Requires a shared alphabet.
CoproductResult coproduct(const Graph& g1, const Graph& g2);

struct PushoutResult {
  Graph graph;
  Morphism from_cod_f;  // f.cod -> graph
  Morphism from_cod_g;  // g.cod -> graph
};

/// Pushout of f : A -> B and g : A -> C (common domain A): the disjoint
/// union of B and C quotiented by the least equivalence identifying f(a)
/// with g(a) for every item a of A.
PushoutResult pushout(const Morphism& f, const Morphism& g);

}  // namespace tglab
