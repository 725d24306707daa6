#pragma once

#include <optional>

#include "tglab/graph.hpp"
#include "tglab/universe.hpp"

namespace tglab {

/// L(T) = all graphs with a morphism into T.
struct TypeGraphSpec {
  Graph type_graph;
};

/// L_R(R) = all graphs R has no morphism into.
struct RestrictionGraphSpec {
  Graph restriction_graph;
};

/// Witnessing morphism G -> T when G is in the language.
std::optional<Morphism> tg_membership(const Graph& g, const TypeGraphSpec& t);
bool tg_member(const Graph& g, const TypeGraphSpec& t);

/// Always false: the empty graph inhabits every type graph language.
bool tg_empty(const TypeGraphSpec& t);

struct TgInclusion {
  bool included = false;
  std::optional<Morphism> witness;       // T1 -> T2 when included
  std::optional<Graph> counterexample;   // T1 itself otherwise
};
TgInclusion tg_included(const TypeGraphSpec& t1, const TypeGraphSpec& t2);

/// Morphism R -> G when G is NOT in the language (the blocking occurrence).
std::optional<Morphism> rg_blocking_hom(const Graph& g, const RestrictionGraphSpec& r);
bool rg_member(const Graph& g, const RestrictionGraphSpec& r);

/// True exactly for the empty restriction graph.
bool rg_empty(const RestrictionGraphSpec& r);

struct RgInclusion {
  bool included = false;
  std::optional<Morphism> witness;      // R1 -> R2 when included
  std::optional<Graph> counterexample;  // R2: in L_R(R1) but not in L_R(R2)
};
RgInclusion rg_included(const RestrictionGraphSpec& r1, const RestrictionGraphSpec& r2);

struct DualityVerdict {
  bool consistent = false;
  std::optional<Graph> counterexample;
};

/// Checks "G -> T iff R does not map into G" for every graph of the
/// universe. Bounded evidence only: `consistent` means no counterexample
/// within the bounds, not a proof.
DualityVerdict duality_check_bounded(const Graph& r, const Graph& t, const GraphUniverse& u);

/// Whether core(r) is a tree (connected, no loops or parallel/antiparallel
/// edge pairs, undirected-acyclic). Signals whether a dual type graph can
/// exist at all; the empty graph is not a tree. Pure predicate, reports
/// nothing about the (out-of-scope) dual construction.
bool core_is_tree(const Graph& r);

}  // namespace tglab
